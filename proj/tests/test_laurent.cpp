#include <doctest.h>

#include "twklv/errors.hpp"
#include "twklv/laurent.hpp"
#include "twklv/polymatrix.hpp"
#include "twklv/tsv.hpp"

#include <limits>
#include <random>
#include <sstream>

using namespace twklv;

namespace {

LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }

LaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> n_terms(0, 4), exp(-4, 4), coeff(-5, 5);
  std::vector<LaurentPoly::Term> t;
  for (int i = n_terms(rng); i > 0; --i) t.push_back({exp(rng), coeff(rng)});
  return LaurentPoly::from_terms(t);
}

}  // namespace

TEST_CASE("products") {
  CHECK((P("u+1") * P("u-1")) == P("u^2-1"));
  CHECK((P("u^-1+1") * LaurentPoly::u()) == P("u+1"));
  CHECK((LaurentPoly() * P("u^3-u")).is_zero());
}

TEST_CASE("bar") {
  CHECK(P("u^2+u").bar() == P("u^-2+u^-1"));
  CHECK(LaurentPoly(1).bar() == LaurentPoly(1));
  CHECK(P("u-1").bar() == P("u^-1-1"));
}

TEST_CASE("exact division") {
  CHECK(exact_div(P("u^2-1"), P("u+1")) == P("u-1"));
  CHECK(exact_div(P("u^3-u"), P("u+1")) == P("u^2-u"));
  CHECK_THROWS_AS(exact_div(P("u^2+1"), P("u+1")), NotDivisible);
  CHECK(exact_div(P("u^-3-u^-1"), P("u^-1")) == P("u^-2-1"));
}

TEST_CASE("evaluation") {
  CHECK(eval_at(P("u^2-1"), 3) == 8);
  CHECK(eval_at(P("u^-1"), 2) == Rational(1, 2));
  CHECK(eval_at(P("u^3-u-1"), 3) == 23);
}

TEST_CASE("canonical text") {
  CHECK(P("u^2+u+1").str() == "u^2+u+1");
  CHECK(P("-1-u^-2").str() == "-1-u^-2");
  CHECK(P("-1").str() == "-1");
  CHECK(LaurentPoly().str() == "0");
  CHECK(P("2u^3 - u + 4").str() == "2u^3-u+4");
  CHECK(P("-u").str() == "-u");
  CHECK(P("u^-2-1").str() == "-1+u^-2");
  CHECK(P("3*u^-1").str() == "3u^-1");
  CHECK_THROWS_AS(P(""), ParseError);
  CHECK_THROWS_AS(P("u^"), ParseError);
  CHECK_THROWS_AS(P("x+1"), ParseError);
}

TEST_CASE("ring identities on random polynomials") {
  std::mt19937 rng(20261015);
  for (int i = 0; i < 300; ++i) {
    const auto a = random_poly(rng), b = random_poly(rng);
    CHECK(a.bar().bar() == a);
    CHECK((a * b).bar() == a.bar() * b.bar());
    CHECK(LaurentPoly::parse(a.str()) == a);
    if (!b.is_zero()) CHECK(exact_div(a * b, b) == a);
    for (int q : {2, 3, -5}) CHECK(eval_at(a * b, q) == eval_at(a, q) * eval_at(b, q));
  }
}

TEST_CASE("overflow is detected") {
  const auto big = LaurentPoly(std::numeric_limits<std::int64_t>::max());
  CHECK_THROWS_AS(big + 1, Overflow);
  CHECK_THROWS_AS(big * 2, Overflow);
  CHECK_THROWS_AS(LaurentPoly::parse("99999999999999999999"), Overflow);
}

TEST_CASE("matrix tsv round trip") {
  PolyMatrix m({"L", "L'"});
  m(0, 0) = 1;
  m(0, 1) = P("u^-2-1");
  m(1, 1) = P("u^-2");
  std::ostringstream os;
  write_tsv(os, m);
  CHECK(os.str() == "\tL\tL'\nL\t1\t-1+u^-2\nL'\t0\tu^-2\n");
  std::istringstream is(os.str());
  const PolyMatrix back = read_tsv(is);
  CHECK(back == m);
  CHECK(back.labels() == m.labels());
  CHECK((m * PolyMatrix::identity(m.labels())) == m);
}
