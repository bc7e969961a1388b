#include <doctest.h>

#include "naive_kl.hpp"

#include "twklv/hecke.hpp"

using namespace twklv;

namespace {

LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }

std::vector<int> word_of(const std::string& label) {
  std::vector<int> w;
  for (std::size_t i = 0; i < label.size(); ++i)
    if (label[i] == 's') w.push_back(label[i + 1] - '0');
  return w;
}

void compare_with_oracle(const char* type, const oracle::PermCoxeter& W) {
  auto fs = make_folded(type, "()");
  const PolyMatrix kl = hecke_kl(fs);
  const auto table = oracle::kl_table(W);
  REQUIRE(W.size() == fs->size());
  for (std::size_t y = 0; y < fs->size(); ++y)
    for (std::size_t w = 0; w < fs->size(); ++w) {
      const auto& p = table[W.from_word(word_of(fs->label(y)))][W.from_word(word_of(fs->label(w)))];
      std::vector<LaurentPoly::Term> t;
      for (std::size_t k = 0; k < p.size(); ++k) t.push_back({static_cast<int>(k), p[k]});
      CAPTURE(fs->label(y));
      CAPTURE(fs->label(w));
      CHECK(kl(y, w) == LaurentPoly::from_terms(t));
    }
}

}  // namespace

TEST_CASE("multiplication") {
  auto fs = make_folded("A3", "(1 3)");
  HeckeAlgebra H(fs);
  const std::size_t g = fs->index_of_label("s1s3");
  const std::size_t s2 = fs->index_of_label("s2");
  SUBCASE("quadratic relation") {
    HeckeElt expect = HeckeElt::basis(0, P("u^2"));
    expect.add(g, P("u^2-1"));
    CHECK(H.mul(HeckeElt::basis(g), HeckeElt::basis(g)) == expect);
  }
  SUBCASE("unit") {
    for (std::size_t w = 0; w < fs->size(); ++w) CHECK(H.mul(HeckeElt::basis(0), HeckeElt::basis(w)) == HeckeElt::basis(w));
  }
  SUBCASE("lengths add") {
    CHECK(H.mul(HeckeElt::basis(s2), HeckeElt::basis(g)) == HeckeElt::basis(fs->index_of_label("s2s1s3")));
  }
}

TEST_CASE("bar involution") {
  auto fs = make_folded("A2", "(1 2)");
  HeckeAlgebra H(fs);
  CHECK(H.bar(HeckeElt::basis(0)) == HeckeElt::basis(0));
  HeckeElt expect = HeckeElt::basis(1, P("u^-3"));
  expect.add(0, P("u^-3-1"));
  CHECK(H.bar(HeckeElt::basis(1)) == expect);
  CHECK(H.bar(HeckeElt::basis(1, P("u"))) == H.bar(HeckeElt::basis(1)).scaled(P("u^-1")));
  CHECK(H.duality(HeckeElt::basis(0)) == HeckeElt::basis(0, P("u^-3")));
}

TEST_CASE("bar is an involutive ring map") {
  for (auto [type, sigma] : {std::pair{"A3", "(1 3)"}, {"B2", "()"}, {"A3", "()"}, {"A4", "(1 4)(2 3)"}}) {
    CAPTURE(type);
    auto fs = make_folded(type, sigma);
    HeckeAlgebra H(fs);
    for (std::size_t w = 0; w < fs->size(); ++w) {
      HeckeElt h = HeckeElt::basis(w, P("u^2-3"));
      h.add(0, P("u^-1"));
      CHECK(H.bar(H.bar(h)) == h);
    }
    std::vector<std::size_t> gens;
    for (const auto& g : fs->generators()) gens.push_back(fs->index_of(g.element));
    for (std::size_t a : gens)
      for (std::size_t b : gens) {
        const auto ab = H.mul(HeckeElt::basis(a), HeckeElt::basis(b));
        CHECK(H.bar(ab) == H.mul(H.bar_of_basis(a), H.bar_of_basis(b)));
      }
  }
}

TEST_CASE("twisted KL polynomials") {
  SUBCASE("folded A2") {
    const auto kl = hecke_kl(make_folded("A2", "(1 2)"));
    CHECK(kl(0, 1) == LaurentPoly(1));
  }
  SUBCASE("classical A3 entry") {
    auto fs = make_folded("A3", "()");
    const auto kl = hecke_kl(fs);
    CHECK(kl(fs->index_of_label("s2"), fs->index_of_label("s2s1s3s2")) == P("u+1"));
  }
  SUBCASE("unit diagonal and Bruhat support") {
    for (auto [type, sigma] : {std::pair{"A3", "(1 3)"}, {"A4", "(1 4)(2 3)"}, {"D4", "(3 4)"}, {"B3", "()"}}) {
      CAPTURE(type);
      auto fs = make_folded(type, sigma);
      const auto kl = hecke_kl(fs);
      const WeylGroup& W = fs->base();
      for (std::size_t w = 0; w < fs->size(); ++w) {
        CHECK(kl(w, w) == LaurentPoly(1));
        for (std::size_t y = 0; y < fs->size(); ++y)
          if (!W.bruhat_leq(fs->element(y), fs->element(w))) CHECK(kl(y, w).is_zero());
      }
    }
  }
  SUBCASE("folded A3: values from B2 unequal parameters") {
    auto fs = make_folded("A3", "(1 3)");
    const auto kl = hecke_kl(fs);
    for (std::size_t y = 0; y < fs->size(); ++y)
      for (std::size_t w = 0; w < fs->size(); ++w)
        if (!kl(y, w).is_zero()) CHECK(kl(y, w).is_polynomial());
  }
}

TEST_CASE("classical reduction against the naive oracle") {
  compare_with_oracle("A2", oracle::PermCoxeter::type_a(2));
  compare_with_oracle("B2", oracle::PermCoxeter::type_b(2));
  compare_with_oracle("A3", oracle::PermCoxeter::type_a(3));
  compare_with_oracle("B3", oracle::PermCoxeter::type_b(3));
}

TEST_CASE("oracle sanity") {
  const auto W = oracle::PermCoxeter::type_a(3);
  CHECK(W.size() == 24);
  CHECK(oracle::PermCoxeter::type_b(3).size() == 48);
  const auto t = oracle::kl_table(W);
  CHECK(oracle::poly_str(t[W.from_word({2})][W.from_word({2, 1, 3, 2})]) == "1q^1 + 1");
}
