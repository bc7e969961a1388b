#include "twklv/hecke.hpp"

#include "twklv/bar.hpp"

namespace twklv {

HeckeElt HeckeElt::basis(std::size_t w, LaurentPoly c) {
  HeckeElt h;
  h.add(w, c);
  return h;
}

LaurentPoly HeckeElt::coeff(std::size_t w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

void HeckeElt::add(std::size_t w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

HeckeElt HeckeElt::scaled(const LaurentPoly& c) const {
  HeckeElt out;
  for (const auto& [w, x] : terms_) out.add(w, x * c);
  return out;
}

HeckeAlgebra::HeckeAlgebra(std::shared_ptr<const FoldedSystem> fs) : fs_(std::move(fs)) {
  // bar(T_w) = bar(T_g) bar(T_w') for w = g w' with l(w) = l(w') + m
  bar_basis_.resize(fs_->size());
  bar_basis_[0] = HeckeElt::basis(0);
  for (std::size_t w = 1; w < fs_->size(); ++w) {
    const std::size_t g = fs_->reduced_word(w).front();
    const std::size_t rest = fs_->left_mul(g, w);
    const int m = fs_->generator_m(g);
    const HeckeElt& x = bar_basis_[rest];
    HeckeElt out = left_mul_generator(g, x).scaled(LaurentPoly::u(-m));
    out += x.scaled(LaurentPoly::u(-m) - 1);
    bar_basis_[w] = std::move(out);
  }
}

HeckeElt HeckeAlgebra::left_mul_generator(std::size_t g, const HeckeElt& h) const {
  const int m = fs_->generator_m(g);
  const LaurentPoly um = LaurentPoly::u(m);
  HeckeElt out;
  for (const auto& [w, c] : h.terms()) {
    const std::size_t gw = fs_->left_mul(g, w);
    if (fs_->length(gw) > fs_->length(w)) {
      out.add(gw, c);
    } else {
      out.add(gw, c * um);
      out.add(w, c * (um - 1));
    }
  }
  return out;
}

HeckeElt HeckeAlgebra::mul(const HeckeElt& a, const HeckeElt& b) const {
  HeckeElt out;
  for (const auto& [w, c] : a.terms()) {
    HeckeElt x = b;
    const auto& word = fs_->reduced_word(w);
    for (auto it = word.rbegin(); it != word.rend(); ++it) x = left_mul_generator(*it, x);
    out += x.scaled(c);
  }
  return out;
}

HeckeElt HeckeAlgebra::bar(const HeckeElt& h) const {
  HeckeElt out;
  for (const auto& [w, c] : h.terms()) out += bar_basis_[w].scaled(c.bar());
  return out;
}

HeckeElt HeckeAlgebra::duality(const HeckeElt& h) const {
  return bar(h).scaled(LaurentPoly::u(-fs_->base().length(fs_->base().longest())));
}

std::vector<std::string> HeckeAlgebra::labels() const {
  std::vector<std::string> out;
  for (std::size_t w = 0; w < fs_->size(); ++w) out.push_back(fs_->label(w));
  return out;
}

PolyMatrix HeckeAlgebra::bar_matrix() const {
  PolyMatrix r(labels());
  for (std::size_t w = 0; w < fs_->size(); ++w)
    for (const auto& [y, c] : bar_basis_[w].terms()) r(y, w) = c;
  return r;
}

PolyMatrix hecke_kl(std::shared_ptr<const FoldedSystem> fs) {
  std::vector<int> lengths;
  for (std::size_t w = 0; w < fs->size(); ++w) lengths.push_back(fs->length(w));
  HeckeAlgebra h(std::move(fs));
  return canonical_basis(h.bar_matrix(), lengths);
}

std::shared_ptr<const FoldedSystem> make_folded(std::string_view cartan_name, std::string_view sigma) {
  auto cartan = cartan_from_name(cartan_name);
  const std::size_t rank = cartan.size();
  WeylGroup w(std::move(cartan));
  return std::make_shared<const FoldedSystem>(std::move(w), parse_sigma(sigma, rank));
}

}  // namespace twklv
