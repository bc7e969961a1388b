#include "twklv/tsv.hpp"

#include "twklv/errors.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace twklv {

void write_tsv(std::ostream& os, const PolyMatrix& m) {
  for (const auto& l : m.labels()) os << '\t' << l;
  os << '\n';
  for (std::size_t r = 0; r < m.size(); ++r) {
    os << m.labels()[r];
    for (std::size_t c = 0; c < m.size(); ++c) os << '\t' << m(r, c).str();
    os << '\n';
  }
}

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, '\t')) cells.push_back(cell);
  if (!line.empty() && line.back() == '\t') cells.emplace_back();
  return cells;
}

}  // namespace

PolyMatrix read_tsv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw ParseError("empty table");
  auto header = split_tabs(line);
  if (header.empty() || !header[0].empty()) throw ParseError("table header must start with an empty cell");
  std::vector<std::string> labels(header.begin() + 1, header.end());
  PolyMatrix m(labels);
  for (std::size_t r = 0; r < labels.size(); ++r) {
    if (!std::getline(is, line)) throw ParseError("table has too few rows");
    auto cells = split_tabs(line);
    if (cells.size() != labels.size() + 1 || cells[0] != labels[r])
      throw ParseError("malformed table row " + std::to_string(r + 1));
    for (std::size_t c = 0; c < labels.size(); ++c) m(r, c) = LaurentPoly::parse(cells[c + 1]);
  }
  return m;
}

}  // namespace twklv
