#pragma once

#include "twklv/laurent.hpp"

#include <vector>

namespace twklv {

// Solves A x = b for the unique x over the fraction field of Z[u, u^-1]
// by fraction-free (Bareiss) elimination, then checks that every entry of x
// is a Laurent polynomial.
//   Underdetermined   - rank of A below the number of unknowns
//   InconsistentDatum - no solution
//   NotDivisible      - the solution is not Laurent
std::vector<LaurentPoly> solve_laurent_system(std::vector<std::vector<LaurentPoly>> a, std::vector<LaurentPoly> b);

}  // namespace twklv
