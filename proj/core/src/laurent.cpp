#include "twklv/laurent.hpp"

#include "twklv/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <ostream>
#include <sstream>

namespace twklv {

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow("integer overflow in addition");
  return r;
}

std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow("integer overflow in subtraction");
  return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow("integer overflow in multiplication");
  return r;
}

}  // namespace checked

LaurentPoly::LaurentPoly(Coeff c) {
  if (c != 0) terms_.push_back({0, c});
}

LaurentPoly LaurentPoly::monomial(Coeff c, int exp) {
  if (c == 0) return {};
  return LaurentPoly(std::vector<Term>{{exp, c}});
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
  std::vector<Term> out;
  for (const Term& t : terms) {
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coeff = checked::add(out.back().coeff, t.coeff);
    } else {
      out.push_back(t);
    }
    if (out.back().coeff == 0) out.pop_back();
  }
  return LaurentPoly(std::move(out));
}

int LaurentPoly::min_exp() const {
  if (terms_.empty()) throw std::logic_error("min_exp of zero polynomial");
  return terms_.front().exp;
}

int LaurentPoly::max_exp() const {
  if (terms_.empty()) throw std::logic_error("max_exp of zero polynomial");
  return terms_.back().exp;
}

LaurentPoly::Coeff LaurentPoly::coeff(int exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const Term& t, int e) { return t.exp < e; });
  return (it != terms_.end() && it->exp == exp) ? it->coeff : 0;
}

LaurentPoly LaurentPoly::bar() const {
  std::vector<Term> out(terms_.rbegin(), terms_.rend());
  for (Term& t : out) t.exp = -t.exp;
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::shifted(int k) const {
  std::vector<Term> out = terms_;
  for (Term& t : out) t.exp += k;
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::operator-() const {
  std::vector<Term> out = terms_;
  for (Term& t : out) t.coeff = checked::sub(0, t.coeff);
  return LaurentPoly(std::move(out));
}

namespace {

template <typename Op>
std::vector<LaurentPoly::Term> merge(std::span<const LaurentPoly::Term> a,
                                     std::span<const LaurentPoly::Term> b, Op op) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exp < b[j].exp)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].exp < a[i].exp) {
      out.push_back({b[j].exp, op(0, b[j].coeff)});
      ++j;
    } else {
      std::int64_t c = op(a[i].coeff, b[j].coeff);
      if (c != 0) out.push_back({a[i].exp, c});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  terms_ = merge(terms_, o.terms_, checked::add);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  terms_ = merge(terms_, o.terms_, checked::sub);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const long lo = static_cast<long>(a.min_exp()) + b.min_exp();
  const long hi = static_cast<long>(a.max_exp()) + b.max_exp();
  std::vector<LaurentPoly::Term> out;
  if (hi - lo < 4096) {
    std::vector<std::int64_t> acc(static_cast<std::size_t>(hi - lo + 1), 0);
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) {
        auto& slot = acc[static_cast<std::size_t>(s.exp + t.exp - lo)];
        slot = checked::add(slot, checked::mul(s.coeff, t.coeff));
      }
    for (std::size_t k = 0; k < acc.size(); ++k)
      if (acc[k] != 0) out.push_back({static_cast<int>(lo + static_cast<long>(k)), acc[k]});
  } else {
    std::map<int, std::int64_t> acc;
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) {
        auto& slot = acc[s.exp + t.exp];
        slot = checked::add(slot, checked::mul(s.coeff, t.coeff));
      }
    for (auto [e, c] : acc)
      if (c != 0) out.push_back({e, c});
  }
  return LaurentPoly(std::move(out));
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw NotDivisible("division by zero polynomial");
  if (a.is_zero()) return {};
  const int lowest = a.min_exp() - b.min_exp();
  const int b_top = b.max_exp();
  const auto b_lead = b.coeff(b_top);
  LaurentPoly rest = a;
  std::vector<LaurentPoly::Term> quotient;
  while (!rest.is_zero()) {
    const int top = rest.max_exp();
    const int k = top - b_top;
    const auto c = rest.coeff(top);
    if (k < lowest || c % b_lead != 0) {
      throw NotDivisible("(" + a.str() + ") is not divisible by (" + b.str() + ")");
    }
    const auto qc = c / b_lead;
    quotient.push_back({k, qc});
    rest -= LaurentPoly::monomial(qc, k) * b;
  }
  return LaurentPoly::from_terms(std::move(quotient));
}

Rational eval_at(const LaurentPoly& p, std::int64_t q) {
  if (q == 0) throw std::invalid_argument("eval_at: q must be non-zero");
  Rational sum = 0;
  const Rational base = q;
  for (const auto& t : p.terms()) {
    Rational power = 1;
    const int n = t.exp < 0 ? -t.exp : t.exp;
    for (int i = 0; i < n; ++i) power *= base;
    if (t.exp < 0) power = 1 / power;
    sum += Rational(t.coeff) * power;
  }
  return sum;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto c = it->coeff;
    // magnitude printed as unsigned so INT64_MIN survives
    const bool neg = c < 0;
    const auto mag = neg ? static_cast<std::uint64_t>(0) - static_cast<std::uint64_t>(c)
                         : static_cast<std::uint64_t>(c);
    if (neg) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    first = false;
    if (it->exp == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << 'u';
    if (it->exp != 1) os << '^' << it->exp;
  }
  return os.str();
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw ParseError("empty polynomial");

  std::vector<Term> terms;
  std::size_t i = 0;
  auto read_int = [&](std::int64_t& out) {
    const std::size_t start = i;
    std::int64_t v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = checked::add(checked::mul(v, 10), s[i] - '0');
      ++i;
    }
    if (i == start) return false;
    out = v;
    return true;
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!terms.empty()) {
      throw ParseError("expected '+' or '-' in '" + s + "'");
    }
    std::int64_t coeff = 1;
    const bool has_coeff = read_int(coeff);
    if (has_coeff && i < s.size() && s[i] == '*') ++i;
    int exp = 0;
    if (i < s.size() && s[i] == 'u') {
      ++i;
      exp = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        int esign = 1;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
          esign = s[i] == '-' ? -1 : 1;
          ++i;
        }
        std::int64_t e = 0;
        if (!read_int(e) || e > 1'000'000) throw ParseError("bad exponent in '" + s + "'");
        exp = esign * static_cast<int>(e);
      }
    } else if (!has_coeff) {
      throw ParseError("bad term in '" + s + "'");
    }
    terms.push_back({exp, sign * coeff});
  }
  return from_terms(std::move(terms));
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

}  // namespace twklv
