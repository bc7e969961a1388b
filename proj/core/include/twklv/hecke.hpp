#pragma once

#include "twklv/coxeter.hpp"
#include "twklv/laurent.hpp"
#include "twklv/polymatrix.hpp"

#include <map>
#include <memory>

namespace twklv {

// Element of the folded Hecke algebra as a sparse sum over the standard
// basis T_w, keyed by position in FoldedSystem order.
class HeckeElt {
 public:
  HeckeElt() = default;
  static HeckeElt basis(std::size_t w, LaurentPoly c = 1);

  const std::map<std::size_t, LaurentPoly>& terms() const { return terms_; }
  LaurentPoly coeff(std::size_t w) const;
  void add(std::size_t w, const LaurentPoly& c);

  HeckeElt& operator+=(const HeckeElt& o);
  HeckeElt& operator-=(const HeckeElt& o);
  HeckeElt scaled(const LaurentPoly& c) const;
  bool operator==(const HeckeElt&) const = default;

 private:
  std::map<std::size_t, LaurentPoly> terms_;
};

class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(std::shared_ptr<const FoldedSystem> fs);

  const FoldedSystem& system() const { return *fs_; }

  // T_g * h for a folded generator g
  HeckeElt left_mul_generator(std::size_t g, const HeckeElt& h) const;
  HeckeElt mul(const HeckeElt& a, const HeckeElt& b) const;
  HeckeElt bar(const HeckeElt& h) const;
  // u^{-nu} bar(h) with nu the length of the longest element
  HeckeElt duality(const HeckeElt& h) const;
  const HeckeElt& bar_of_basis(std::size_t w) const { return bar_basis_[w]; }

  // column w holds the coefficients of bar(T_w)
  PolyMatrix bar_matrix() const;
  std::vector<std::string> labels() const;

 private:
  std::shared_ptr<const FoldedSystem> fs_;
  std::vector<HeckeElt> bar_basis_;
};

// Twisted Kazhdan-Lusztig polynomials: entry (y, w) is P^sigma_{y,w}.
PolyMatrix hecke_kl(std::shared_ptr<const FoldedSystem> fs);

// Convenience: builds the folded system for a named Cartan type and a sigma
// in cycle notation.
std::shared_ptr<const FoldedSystem> make_folded(std::string_view cartan_name, std::string_view sigma);

}  // namespace twklv
