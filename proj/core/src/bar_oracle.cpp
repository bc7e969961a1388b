#include "twklv/bar.hpp"

#include "twklv/errors.hpp"
#include "twklv/module_action.hpp"

#include <algorithm>
#include <map>

namespace twklv {

namespace {

constexpr std::uint64_t kPrime = 2147483647;  // 2^31 - 1

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) { return a * b % kPrime; }
std::uint64_t addmod(std::uint64_t a, std::uint64_t b) { return (a + b) % kPrime; }
std::uint64_t submod(std::uint64_t a, std::uint64_t b) { return (a + kPrime - b) % kPrime; }

std::uint64_t powmod(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  b %= kPrime;
  while (e) {
    if (e & 1) r = mulmod(r, b);
    b = mulmod(b, b);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a) { return powmod(a, kPrime - 2); }

std::uint64_t reduce(std::int64_t c) {
  const std::int64_t r = c % static_cast<std::int64_t>(kPrime);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(kPrime) : r);
}

std::uint64_t eval_mod(const LaurentPoly& p, std::uint64_t t, std::uint64_t tinv) {
  std::uint64_t s = 0;
  for (const auto& term : p.terms()) {
    const std::uint64_t base = term.exp >= 0 ? t : tinv;
    const auto e = static_cast<std::uint64_t>(term.exp >= 0 ? term.exp : -term.exp);
    s = addmod(s, mulmod(reduce(term.coeff), powmod(base, e)));
  }
  return s;
}

// Row-echelon form built one equation at a time; rows are augmented with the
// right-hand side in the last slot.
class ModElimination {
 public:
  explicit ModElimination(std::size_t nvars) : n_(nvars), pivot_of_(nvars, -1) {}

  // returns false when the equation contradicts earlier ones
  bool add(std::vector<std::uint64_t> row) {
    for (std::size_t c = 0; c < n_; ++c) {
      if (row[c] == 0 || pivot_of_[c] < 0) continue;
      const auto& p = rows_[static_cast<std::size_t>(pivot_of_[c])];
      const std::uint64_t f = row[c];
      for (std::size_t j = c; j <= n_; ++j)
        if (p[j]) row[j] = submod(row[j], mulmod(f, p[j]));
    }
    std::size_t lead = 0;
    while (lead < n_ && row[lead] == 0) ++lead;
    if (lead == n_) return row[n_] == 0;
    const std::uint64_t inv = invmod(row[lead]);
    for (std::size_t j = lead; j <= n_; ++j) row[j] = mulmod(row[j], inv);
    pivot_of_[lead] = static_cast<long>(rows_.size());
    rows_.push_back(std::move(row));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

  std::vector<std::uint64_t> solve() const {
    std::vector<std::uint64_t> x(n_, 0);
    for (std::size_t c = n_; c-- > 0;) {
      const auto& p = rows_[static_cast<std::size_t>(pivot_of_[c])];
      std::uint64_t v = p[n_];
      for (std::size_t j = c + 1; j < n_; ++j)
        if (p[j]) v = submod(v, mulmod(p[j], x[j]));
      x[c] = v;
    }
    return x;
  }

 private:
  std::size_t n_;
  std::vector<long> pivot_of_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

// Newton interpolation through (xs[k], ys[k]); returns monomial coefficients.
std::vector<std::uint64_t> interpolate_mod(const std::vector<std::uint64_t>& xs, const std::vector<std::uint64_t>& ys) {
  const std::size_t k = xs.size();
  std::vector<std::uint64_t> dd = ys;
  for (std::size_t level = 1; level < k; ++level)
    for (std::size_t i = k - 1; i >= level; --i)
      dd[i] = mulmod(submod(dd[i], dd[i - 1]), invmod(submod(xs[i], xs[i - level])));
  std::vector<std::uint64_t> poly(k, 0);
  for (std::size_t i = k; i-- > 0;) {
    // poly = poly * (x - xs[i]) + dd[i]
    std::vector<std::uint64_t> next(k, 0);
    for (std::size_t j = 0; j + 1 < k; ++j) {
      next[j + 1] = addmod(next[j + 1], poly[j]);
      next[j] = submod(next[j], mulmod(poly[j], xs[i]));
    }
    next[0] = addmod(next[0], dd[i]);
    poly = std::move(next);
  }
  return poly;
}

struct Unknown {
  std::size_t row, col;
  int lo, hi;  // exponent window
};

}  // namespace

BarMatrix bar_matrix_oracle(const ParamDatum& d) {
  const std::size_t n = d.parameters.size();
  const auto len = d.lengths();
  const auto ids = d.param_ids();
  const auto allowed = d.support_restrictions();
  std::vector<PolyMatrix> mats;
  for (std::size_t g = 0; g < d.generators.size(); ++g) mats.push_back(generator_matrix(d, g));

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  std::vector<Unknown> unknowns;
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) {
      if (len[r] >= len[c]) continue;
      if (allowed[c] && !std::binary_search(allowed[c]->begin(), allowed[c]->end(), r)) continue;
      index.emplace(std::make_pair(r, c), unknowns.size());
      unknowns.push_back({r, c, 0, 0});
    }
  const std::size_t nv = unknowns.size();

  // Specialises the system at u = t and returns the solution, or nothing
  // when the specialised system is rank deficient.
  auto solve_at = [&](std::uint64_t t) -> std::optional<std::vector<std::uint64_t>> {
    const std::uint64_t ti = invmod(t);
    ModElimination elim(nv);
    std::vector<std::uint64_t> diag(n);
    for (std::size_t k = 0; k < n; ++k) diag[k] = eval_mod(LaurentPoly::u(-len[k]), t, ti);
    for (std::size_t g = 0; g < mats.size(); ++g) {
      const int m = d.generators[g].m;
      const std::uint64_t tm = eval_mod(LaurentPoly::u(-m), t, ti);
      std::vector<std::uint64_t> A(n * n), B(n * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const std::uint64_t mij = eval_mod(mats[g](i, j), t, ti);
          A[i * n + j] = addmod(mulmod(tm, mij), i == j ? submod(tm, 1) : 0);
          B[i * n + j] = eval_mod(mats[g](i, j), ti, t);
        }
      // (R B - A R)_{i,L} = 0
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t L = 0; L < n; ++L) {
          std::vector<std::uint64_t> row(nv + 1, 0);
          std::uint64_t constant = 0;
          bool any = false;
          for (std::size_t j = 0; j < n; ++j) {
            const std::uint64_t b = B[j * n + L];
            if (!b) continue;
            if (i == j) {
              constant = addmod(constant, mulmod(diag[i], b));
            } else if (auto it = index.find({i, j}); it != index.end()) {
              row[it->second] = addmod(row[it->second], b);
              any = true;
            }
          }
          for (std::size_t k = 0; k < n; ++k) {
            const std::uint64_t a = A[i * n + k];
            if (!a) continue;
            if (k == L) {
              constant = submod(constant, mulmod(a, diag[k]));
            } else if (auto it = index.find({k, L}); it != index.end()) {
              row[it->second] = submod(row[it->second], a);
              any = true;
            }
          }
          if (!any && constant == 0) continue;
          row[nv] = submod(0, constant);
          if (!elim.add(std::move(row)))
            throw InconsistentDatum("bar constraints are inconsistent at u = " + std::to_string(t));
        }
    }
    if (elim.rank() < nv) return std::nullopt;
    return elim.solve();
  };

  int extra = 0;
  for (int attempt = 0; attempt < 4; ++attempt, extra = extra == 0 ? 1 : 2 * extra) {
    std::size_t width = 1;
    for (auto& uk : unknowns) {
      uk.lo = -len[uk.col] - extra;
      uk.hi = -len[uk.row] + extra;
      width = std::max(width, static_cast<std::size_t>(uk.hi - uk.lo + 1));
    }
    const std::size_t needed = width + 2;  // two spare points confirm the degree bound

    std::vector<std::uint64_t> xs;
    std::vector<std::vector<std::uint64_t>> sols;
    int deficient = 0;
    for (std::uint64_t t = 2; xs.size() < needed; ++t) {
      auto s = solve_at(t);
      if (!s) {
        if (++deficient >= 3 && xs.empty())
          throw Underdetermined("bar constraints do not determine the bar matrix (rank deficient at every sample)");
        continue;
      }
      xs.push_back(t);
      sols.push_back(std::move(*s));
    }

    PolyMatrix R(ids);
    for (std::size_t k = 0; k < n; ++k) R(k, k) = LaurentPoly::u(-len[k]);
    bool fits = true;
    for (std::size_t v = 0; v < nv && fits; ++v) {
      const auto& uk = unknowns[v];
      const std::size_t w = static_cast<std::size_t>(uk.hi - uk.lo + 1);
      // values of u^{-lo} rho(u), a polynomial of degree < w
      std::vector<std::uint64_t> px(xs.begin(), xs.begin() + static_cast<long>(w));
      std::vector<std::uint64_t> py;
      for (std::size_t k = 0; k < w; ++k) {
        const std::uint64_t shift = uk.lo <= 0 ? powmod(xs[k], static_cast<std::uint64_t>(-uk.lo))
                                               : invmod(powmod(xs[k], static_cast<std::uint64_t>(uk.lo)));
        py.push_back(mulmod(sols[k][v], shift));
      }
      const auto coeffs = interpolate_mod(px, py);
      std::vector<LaurentPoly::Term> terms;
      for (std::size_t e = 0; e < coeffs.size(); ++e) {
        if (!coeffs[e]) continue;
        const std::int64_t c = coeffs[e] > kPrime / 2 ? static_cast<std::int64_t>(coeffs[e]) - static_cast<std::int64_t>(kPrime)
                                                      : static_cast<std::int64_t>(coeffs[e]);
        terms.push_back({uk.lo + static_cast<int>(e), c});
      }
      const LaurentPoly value = LaurentPoly::from_terms(terms);
      for (std::size_t k = w; k < xs.size() && fits; ++k)
        fits = eval_mod(value, xs[k], invmod(xs[k])) == sols[k][v];
      R(uk.row, uk.col) = value;
    }
    if (!fits) continue;
    if (check_bar_constraints(d, R).ok()) {
      return {R, {"oracle: " + std::to_string(nv) + " unknowns, " + std::to_string(xs.size()) +
                  " specialisations, exponent margin " + std::to_string(extra)}};
    }
  }
  throw InterpolationMismatch("bar matrix oracle: interpolation did not reproduce a symbolic solution");
}

}  // namespace twklv
