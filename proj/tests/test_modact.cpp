#include <doctest.h>

#include "patterns.hpp"

#include "twklv/errors.hpp"
#include "twklv/hecke.hpp"
#include "twklv/module_action.hpp"

#include <sstream>

using namespace twklv;
using namespace twklv::testing;

namespace {

LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }

MElt vec(const ParamDatum& d, std::initializer_list<std::pair<const char*, const char*>> terms) {
  MElt x;
  for (auto [id, c] : terms) x.add(d.require_param(id), P(c));
  return x;
}

MElt scale(const MElt& x, const LaurentPoly& c) {
  MElt out;
  for (const auto& [p, v] : x.terms()) out.add(p, v * c);
  return out;
}

void check_eigen(const ParamDatum& d, const MElt& v, const LaurentPoly& lambda) {
  const PolyMatrix m = generator_matrix(d, 0);
  CHECK(apply_matrix(m, v) == scale(v, lambda));
}

int rank_mod(std::vector<std::vector<long long>> a, long long p) {
  int r = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < static_cast<int>(rows); ++c) {
    std::size_t piv = static_cast<std::size_t>(r);
    while (piv < rows && a[piv][c] % p == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[static_cast<std::size_t>(r)]);
    long long inv = 1, base = ((a[static_cast<std::size_t>(r)][c] % p) + p) % p;
    for (long long e = p - 2; e; e >>= 1, base = base * base % p)
      if (e & 1) inv = inv * base % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == static_cast<std::size_t>(r)) continue;
      const long long f = ((a[i][c] % p) + p) % p * inv % p;
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = ((a[i][j] - f * a[static_cast<std::size_t>(r)][j]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

}  // namespace

TEST_CASE("a2-c generator matrix") {
  const auto d = builtin_datum("a2-c");
  const PolyMatrix m = generator_matrix(d, 0);
  CHECK(m(0, 0) == P("u"));
  CHECK(m(1, 0) == P("u+1"));
  CHECK(m(0, 1) == P("u^3-u"));
  CHECK(m(1, 1) == P("u^3-u-1"));
}

TEST_CASE("a1a1-sc sign local system column") {
  const auto d = builtin_datum("a1a1-sc");
  const auto col = generator_matrix(d, 0).column(3);
  CHECK(col == std::vector<LaurentPoly>{0, 0, 0, -1});
}

TEST_CASE("regular module column") {
  const auto d = hecke_case_datum(*make_folded("A2", "(1 2)"));
  CHECK(generator_matrix(d, 0).column(0) == std::vector<LaurentPoly>{0, 1});
}

TEST_CASE("act_word") {
  const auto d = builtin_datum("a2-c");
  const MElt aL = MElt::basis(0);
  CHECK(act_word(d, std::vector<std::string>{}, aL) == aL);
  const MElt t = act_word(d, std::vector<std::string>{"sts"}, aL);
  CHECK(t == vec(d, {{"L", "u"}, {"L'", "u+1"}}));
  MElt expect = scale(t, P("u^3-1"));
  expect.add(0, P("u^3"));
  CHECK(act_word(d, std::vector<std::string>{"sts", "sts"}, aL) == expect);

  std::ostringstream os;
  write_melt(os, d, t);
  CHECK(os.str() == "L\tu\nL'\tu+1\n");
}

TEST_CASE("act_word applies the first generator first") {
  auto fs = make_folded("A3", "(1 3)");
  const auto d = hecke_case_datum(*fs);
  // T_{s2} applied after T_{s1s3}: a_e -> a_{s1s3} -> a_{s2s1s3}
  const MElt x = act_word(d, std::vector<std::string>{"s1s3", "s2"}, MElt::basis(0));
  CHECK(x == MElt::basis(fs->index_of_label("s2s1s3")));
}

TEST_CASE("regular module agrees with Hecke multiplication") {
  auto fs = make_folded("A3", "(1 3)");
  HeckeAlgebra H(fs);
  const auto d = hecke_case_datum(*fs);
  for (std::size_t g = 0; g < fs->generators().size(); ++g) {
    const std::size_t tg = fs->index_of(fs->generators()[g].element);
    for (std::size_t w = 0; w < fs->size(); ++w) {
      const HeckeElt prod = H.mul(HeckeElt::basis(tg), HeckeElt::basis(w));
      const MElt act = act_word(d, std::vector<std::string>{d.generators[g].id}, MElt::basis(w));
      MElt conv;
      for (const auto& [k, c] : prod.terms()) conv.add(k, c);
      CHECK(act == conv);
    }
  }
}

TEST_CASE("quadratic relation") {
  for (const auto& name : builtin_names()) CHECK(quadratic_check(builtin_datum(name)).ok());
  for (auto [type, sigma] : {std::pair{"A3", "(1 3)"}, {"A2", "(1 2)"}, {"B2", "()"}})
    CHECK(quadratic_check(hecke_case_datum(*make_folded(type, sigma))).ok());

  // a 2I22+ whose Cayley targets are both plain real: the sign partner is gone
  auto d = i22();
  d.set_status("g", "L1'", GeneratorStatus{Kind::SR2Minus, {}, {"L"}, Role::None});
  d.set_status("g", "L2'", GeneratorStatus{Kind::SR2Minus, {}, {"L"}, Role::None});
  const auto rep = quadratic_check(d);
  CHECK_FALSE(rep.ok());
  CHECK(rep.str().find("quadratic relation: fail") == 0);
}

TEST_CASE("eigenspaces of the case patterns") {
  const LaurentPoly m1 = -1;
  SUBCASE("complex, m = 1, 2, 3") {
    for (int m : {1, 2, 3}) {
      const auto d = complex_pair(m);
      check_eigen(d, vec(d, {{"L", "1"}, {"L'", "1"}}), LaurentPoly::u(m));
      MElt v = vec(d, {{"L'", "-1"}});
      v.add(0, LaurentPoly::u(m));
      check_eigen(d, v, m1);
    }
  }
  SUBCASE("1I1 / 1R1") {
    const auto d = i1_r1();
    check_eigen(d, vec(d, {{"L1", "1"}, {"L2", "1"}, {"L'", "1"}}), P("u"));
    check_eigen(d, vec(d, {{"L1", "u-1"}, {"L'", "-1"}}), m1);
    check_eigen(d, vec(d, {{"L2", "u-1"}, {"L'", "-1"}}), m1);
  }
  SUBCASE("1I2 / 1R2") {
    const auto d = i2_r2();
    check_eigen(d, vec(d, {{"L", "1"}, {"L1'", "1"}}), P("u"));
    check_eigen(d, vec(d, {{"L", "1"}, {"L2'", "1"}}), P("u"));
    check_eigen(d, vec(d, {{"L", "u-1"}, {"L1'", "-1"}, {"L2'", "-1"}}), m1);
  }
  SUBCASE("2SI / 2SR") {
    const auto d = semi2();
    check_eigen(d, vec(d, {{"L", "1"}, {"L'", "1"}}), P("u^2"));
    check_eigen(d, vec(d, {{"L", "u^2-u"}, {"L'", "-u-1"}}), m1);
  }
  SUBCASE("2I11 / 2R11") {
    const auto d = i11();
    check_eigen(d, vec(d, {{"L1", "1"}, {"L2", "1"}, {"L'", "1"}}), P("u^2"));
    check_eigen(d, vec(d, {{"L1", "u^2-1"}, {"L'", "-1"}}), m1);
    check_eigen(d, vec(d, {{"L2", "u^2-1"}, {"L'", "-1"}}), m1);
  }
  SUBCASE("2I22 / 2R22") {
    const auto d = i22();
    check_eigen(d, vec(d, {{"L", "1"}, {"L1'", "1"}}), P("u^2"));
    check_eigen(d, vec(d, {{"L", "1"}, {"L2'", "1"}}), P("u^2"));
    check_eigen(d, vec(d, {{"L", "u^2-1"}, {"L1'", "-1"}, {"L2'", "-1"}}), m1);
  }
  SUBCASE("2I12 / 2R21") {
    const auto d = i12();
    check_eigen(d, vec(d, {{"L1", "1"}, {"L2", "1"}, {"L1'", "1"}}), P("u^2"));
    check_eigen(d, vec(d, {{"L1", "1"}, {"L2", "-1"}, {"L2'", "1"}}), P("u^2"));
    check_eigen(d, vec(d, {{"L1", "u^2-1"}, {"L1'", "-1"}, {"L2'", "-1"}}), m1);
    check_eigen(d, vec(d, {{"L2", "u^2-1"}, {"L1'", "-1"}, {"L2'", "1"}}), m1);
  }
  SUBCASE("3SI / 3R and 3I / 3SR") {
    for (const auto& d : {three(Kind::SI3Plus, Kind::R3Minus), three(Kind::I3Plus, Kind::SR3Minus)}) {
      check_eigen(d, vec(d, {{"L", "1"}, {"L'", "1"}}), P("u^3"));
      check_eigen(d, vec(d, {{"L", "u^2-u"}, {"L'", "-1"}}), m1);
    }
  }
  SUBCASE("one-dimensional cases") {
    check_eigen(single(Kind::RNP1Plus, 1), MElt::basis(0), m1);
    check_eigen(single(Kind::I1_2sPlus, 1), MElt::basis(0), m1);
    check_eigen(single(Kind::R1sMinus, 1), MElt::basis(0), P("u"));
    check_eigen(single(Kind::IC1Minus, 1), MElt::basis(0), P("u"));
    check_eigen(single(Kind::RNP2Plus, 2), MElt::basis(0), m1);
    check_eigen(single(Kind::IC2Minus, 2), MElt::basis(0), P("u^2"));
    check_eigen(single(Kind::RNP3Plus, 3), MElt::basis(0), m1);
    check_eigen(single(Kind::IC3Minus, 3), MElt::basis(0), P("u^3"));
  }
}

TEST_CASE("generator matrices are diagonalisable at integer points") {
  std::vector<ParamDatum> data{i1_r1(), i2_r2(), semi2(), i11(), i22(), i12(), three(Kind::I3Plus, Kind::SR3Minus)};
  for (const auto& name : builtin_names()) data.push_back(builtin_datum(name));
  const long long p = 1000003;
  for (const auto& d : data) {
    CAPTURE(d.name);
    const PolyMatrix m = generator_matrix(d, 0);
    const int mm = d.generators[0].m;
    for (long long q : {2, 3, 5, 7}) {
      long long qm = 1;
      for (int i = 0; i < mm; ++i) qm *= q;
      const std::size_t n = m.size();
      std::vector<std::vector<long long>> plus(n, std::vector<long long>(n)), minus = plus;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const auto v = eval_at(m(i, j), q);
          const auto x = static_cast<long long>(numerator(v));
          plus[i][j] = x + (i == j ? 1 : 0);
          minus[i][j] = x - (i == j ? qm : 0);
        }
      CHECK(rank_mod(plus, p) + rank_mod(minus, p) == static_cast<int>(n));
    }
  }
}

TEST_CASE("blocks") {
  const auto blocks = generator_blocks(builtin_datum("a1a1-sc"), 0);
  CHECK(blocks.size() == 2);
  for (const auto& b : blocks) CHECK(b.size() <= 4);
}

TEST_CASE("matrix errors") {
  auto d = complex_pair(1);
  d.statuses[0][1].reset();
  CHECK_THROWS_AS(generator_matrix(d, 0), MissingStatus);
  auto e = complex_pair(1);
  e.statuses[0][0]->cross = "nowhere";
  CHECK_THROWS_AS(generator_matrix(e, 0), DanglingReference);
}
