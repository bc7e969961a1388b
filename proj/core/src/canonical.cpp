#include "twklv/bar.hpp"

#include "twklv/errors.hpp"

#include <algorithm>
#include <numeric>

namespace twklv {

PolyMatrix canonical_basis(const PolyMatrix& rho, std::span<const int> lengths) {
  const std::size_t n = rho.size();
  if (lengths.size() != n) throw std::invalid_argument("canonical_basis: lengths do not match matrix");
  std::vector<std::size_t> by_length(n);
  std::iota(by_length.begin(), by_length.end(), 0);
  std::stable_sort(by_length.begin(), by_length.end(),
                   [&](std::size_t a, std::size_t b) { return lengths[a] > lengths[b]; });

  PolyMatrix p(rho.labels());
  for (std::size_t L = 0; L < n; ++L) {
    p(L, L) = 1;
    const int lL = lengths[L];
    for (std::size_t L2 : by_length) {
      const int delta = lL - lengths[L2];
      if (delta <= 0) continue;
      // gamma = u^{l(L)} sum_{L' != L2} P_{L',L}(u^-1) rho_{L2,L'}
      LaurentPoly gamma;
      for (std::size_t L1 = 0; L1 < n; ++L1) {
        if (L1 == L2 || p(L1, L).is_zero() || rho(L2, L1).is_zero()) continue;
        gamma += p(L1, L).bar() * rho(L2, L1);
      }
      gamma = gamma.shifted(lL);
      // P - u^delta P(u^-1) = gamma with 2 deg P < delta
      std::vector<LaurentPoly::Term> low;
      for (const auto& t : gamma.terms()) {
        if (t.exp >= 0 && 2 * t.exp < delta) low.push_back(t);
      }
      const LaurentPoly value = LaurentPoly::from_terms(low);
      const LaurentPoly mirror = value - value.bar().shifted(delta);
      if (mirror != gamma)
        throw NotSelfDualConsistent("no self-dual solution for P_{" + rho.labels()[L2] + ", " + rho.labels()[L] +
                                    "}: gamma = " + gamma.str());
      p(L2, L) = value;
    }
  }
  return p;
}

CheckReport check_canonical_basis(const PolyMatrix& rho, const PolyMatrix& p, std::span<const int> lengths) {
  CheckReport rep;
  const std::size_t n = rho.size();
  const auto& ids = rho.labels();
  if (p.size() != n || lengths.size() != n) {
    rep.failures.push_back("size mismatch");
    return rep;
  }
  // R * bar(P) = P * diag(u^{-l})
  const PolyMatrix lhs = rho * p.bar();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const LaurentPoly rhs = p(r, c).shifted(-lengths[c]);
      if (lhs(r, c) != rhs) rep.failures.push_back("self-duality fails at (" + ids[r] + ", " + ids[c] + ")");
      const LaurentPoly& e = p(r, c);
      if (r == c) {
        if (e != LaurentPoly(1)) rep.failures.push_back("diagonal entry at " + ids[c] + " is not 1");
        continue;
      }
      if (e.is_zero()) continue;
      const int delta = lengths[c] - lengths[r];
      if (delta <= 0) rep.failures.push_back("entry (" + ids[r] + ", " + ids[c] + ") violates length triangularity");
      if (!e.is_polynomial()) rep.failures.push_back("entry (" + ids[r] + ", " + ids[c] + ") is not in Z[u]");
      if (2 * e.max_exp() > delta - 1)
        rep.failures.push_back("entry (" + ids[r] + ", " + ids[c] + ") exceeds the degree bound");
    }
  return rep;
}

}  // namespace twklv
