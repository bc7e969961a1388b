#pragma once

#include "twklv/polymatrix.hpp"

#include <iosfwd>

namespace twklv {

// Header row is an empty cell followed by the column labels; each following
// row starts with its row label.
void write_tsv(std::ostream& os, const PolyMatrix& m);
PolyMatrix read_tsv(std::istream& is);

}  // namespace twklv
