#include "twklv/linsolve.hpp"

#include "twklv/errors.hpp"

#include <utility>

namespace twklv {

namespace {

std::size_t weight(const LaurentPoly& p) {
  if (p.is_zero()) return static_cast<std::size_t>(-1);
  return static_cast<std::size_t>(p.max_exp() - p.min_exp()) * 4 + p.terms().size();
}

}  // namespace

std::vector<LaurentPoly> solve_laurent_system(std::vector<std::vector<LaurentPoly>> a, std::vector<LaurentPoly> b) {
  const std::size_t rows = a.size();
  const std::size_t n = rows == 0 ? 0 : a[0].size();
  if (b.size() != rows) throw std::invalid_argument("solve_laurent_system: size mismatch");
  for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
  if (n == 0) {
    for (const auto& row : a)
      if (!row.back().is_zero()) throw InconsistentDatum("linear system has no solution");
    return {};
  }
  if (rows < n) throw Underdetermined("linear system has fewer equations than unknowns");

  LaurentPoly prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    // lightest non-zero pivot keeps intermediate entries small
    std::size_t best = rows;
    for (std::size_t r = k; r < rows; ++r)
      if (!a[r][k].is_zero() && (best == rows || weight(a[r][k]) < weight(a[best][k]))) best = r;
    if (best == rows) throw Underdetermined("linear system is rank deficient at unknown " + std::to_string(k));
    std::swap(a[k], a[best]);
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        LaurentPoly v = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        a[i][j] = exact_div(v, prev);
      }
      a[i][k] = LaurentPoly{};
    }
    prev = a[k][k];
  }
  for (std::size_t r = n; r < rows; ++r)
    if (!a[r][n].is_zero()) throw InconsistentDatum("linear system has no solution");

  std::vector<LaurentPoly> x(n);
  for (std::size_t k = n; k-- > 0;) {
    LaurentPoly rhs = a[k][n];
    for (std::size_t j = k + 1; j < n; ++j)
      if (!a[k][j].is_zero()) rhs -= a[k][j] * x[j];
    try {
      x[k] = exact_div(rhs, a[k][k]);
    } catch (const NotDivisible&) {
      throw NotDivisible("solution entry " + std::to_string(k) + " is not a Laurent polynomial");
    }
  }
  return x;
}

}  // namespace twklv
