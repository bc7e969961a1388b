#pragma once

#include "twklv/datum.hpp"
#include "twklv/laurent.hpp"
#include "twklv/polymatrix.hpp"

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace twklv {

// Element of the module: coefficients keyed by parameter position.
class MElt {
 public:
  MElt() = default;
  static MElt basis(std::size_t p, LaurentPoly c = 1);
  static MElt from_dense(const std::vector<LaurentPoly>& v);

  const std::map<std::size_t, LaurentPoly>& terms() const { return terms_; }
  LaurentPoly coeff(std::size_t p) const;
  void add(std::size_t p, const LaurentPoly& c);
  std::vector<LaurentPoly> dense(std::size_t n) const;
  bool operator==(const MElt&) const = default;

 private:
  std::map<std::size_t, LaurentPoly> terms_;
};

// Image T_g a_p for a given status record. The datum provides the parameter
// positions referenced by the payload.
std::vector<LaurentPoly> status_column(const ParamDatum& d, std::size_t g, std::size_t p, const GeneratorStatus& st);

// Column p is T_g a_p. Throws MissingStatus or DanglingReference.
PolyMatrix generator_matrix(const ParamDatum& d, std::size_t g);

// Orbits of the parameter set under the cross/Cayley references of g.
std::vector<std::vector<std::size_t>> generator_blocks(const ParamDatum& d, std::size_t g);

// Applies the generators of `word` in list order, first element first.
MElt act_word(const ParamDatum& d, std::span<const std::string> word, const MElt& x);
MElt apply_matrix(const PolyMatrix& m, const MElt& x);

struct QuadraticFailure {
  std::string generator;
  std::string row, col;
  LaurentPoly entry;
};

struct QuadraticReport {
  std::vector<QuadraticFailure> failures;
  bool ok() const { return failures.empty(); }
  std::string str() const;
};

// (M_g + I)(M_g - u^m I) == 0 for every generator.
QuadraticReport quadratic_check(const ParamDatum& d);

void write_melt(std::ostream& os, const ParamDatum& d, const MElt& x);

}  // namespace twklv
