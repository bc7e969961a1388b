#pragma once

#include "twklv/datum.hpp"
#include "twklv/polymatrix.hpp"

#include <span>
#include <string>
#include <vector>

namespace twklv {

// R(L', L) = rho_{L', L}, so that D(a_L) = sum over L' of rho_{L', L} a_{L'}.
struct BarMatrix {
  PolyMatrix rho;
  std::vector<std::string> log;  // how each column was obtained
};

// Length strata upward: single-column solves from one generator identity
// where possible, otherwise a joint linear solve per stratum.
BarMatrix bar_matrix(const ParamDatum& d);

// Independent path: the full constraint system is specialised at integer
// points modulo a large prime, solved there, interpolated, then verified
// symbolically.
BarMatrix bar_matrix_oracle(const ParamDatum& d);

// Column L holds P_{L'', L} for all L''. Throws NotSelfDualConsistent.
PolyMatrix canonical_basis(const PolyMatrix& rho, std::span<const int> lengths);

PolyMatrix klv_table(const ParamDatum& d);

struct CheckReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  std::string str(std::string_view title) const;
};

// Diagonal, length triangularity and commutation with every generator.
CheckReport check_bar_constraints(const ParamDatum& d, const PolyMatrix& rho);
// The constraints above plus R * bar(R) = I.
CheckReport check_bar_matrix(const ParamDatum& d, const PolyMatrix& rho);

// Self-duality, triangularity, degree bounds, unit diagonal, entries in Z[u].
CheckReport check_canonical_basis(const PolyMatrix& rho, const PolyMatrix& p, std::span<const int> lengths);

}  // namespace twklv
