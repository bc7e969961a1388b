#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace twklv {

using Rational = boost::multiprecision::cpp_rational;

// Laurent polynomial in u with int64 coefficients. Terms are kept sorted by
// increasing exponent with no zero coefficients, so equality is structural.
// Every arithmetic step is overflow checked and throws Overflow.
class LaurentPoly {
 public:
  using Coeff = std::int64_t;
  struct Term {
    int exp;
    Coeff coeff;
    bool operator==(const Term&) const = default;
  };

  LaurentPoly() = default;
  LaurentPoly(Coeff c);  // NOLINT: constants convert implicitly
  LaurentPoly(int c) : LaurentPoly(static_cast<Coeff>(c)) {}

  static LaurentPoly monomial(Coeff c, int exp);
  static LaurentPoly u(int exp = 1) { return monomial(1, exp); }
  // builds from (exponent, coefficient) pairs in any order, merging repeats
  static LaurentPoly from_terms(std::vector<Term> terms);
  static LaurentPoly parse(std::string_view text);

  bool is_zero() const { return terms_.empty(); }
  int min_exp() const;  // requires non-zero
  int max_exp() const;  // requires non-zero
  Coeff coeff(int exp) const;
  std::span<const Term> terms() const { return terms_; }
  bool is_polynomial() const { return is_zero() || min_exp() >= 0; }

  LaurentPoly bar() const;          // u -> u^-1
  LaurentPoly shifted(int k) const;  // multiply by u^k

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  bool operator==(const LaurentPoly&) const = default;

  std::string str() const;

 private:
  explicit LaurentPoly(std::vector<Term> sorted) : terms_(std::move(sorted)) {}
  std::vector<Term> terms_;
};

// Exact quotient a / b in Z[u, u^-1]; throws NotDivisible when it is not exact.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

// Value at an integer q != 0.
Rational eval_at(const LaurentPoly& p, std::int64_t q);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

namespace checked {
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t sub(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
}  // namespace checked

}  // namespace twklv
