#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace twklv {

using CartanMatrix = std::vector<std::vector<int>>;

// "A2", "B2", "G2", "D4", "E6", products like "A1xA1" or "A2xB2".
CartanMatrix cartan_from_name(std::string_view name);

// Finite Weyl group realised on its root system. Roots are integer vectors
// in simple-root coordinates and group elements are permutations of the root
// list. Elements are numbered in breadth-first order, so index 0 is the
// identity and lengths are non-decreasing along the numbering.
class WeylGroup {
 public:
  using Elt = std::uint32_t;

  explicit WeylGroup(CartanMatrix cartan, std::size_t max_order = 400000);

  std::size_t rank() const { return cartan_.size(); }
  const CartanMatrix& cartan() const { return cartan_; }
  std::size_t order() const { return length_.size(); }
  std::size_t num_positive_roots() const { return num_positive_; }
  const std::vector<std::vector<int>>& roots() const { return roots_; }
  std::size_t root_index(const std::vector<int>& root) const;
  bool is_positive_root(std::size_t k) const { return positive_[k]; }

  Elt identity() const { return 0; }
  Elt simple(int i) const { return left_[static_cast<std::size_t>(i)]; }
  Elt longest() const { return longest_; }

  int length(Elt w) const { return length_[w]; }
  Elt left_mul_simple(int i, Elt w) const { return left_[w * rank() + static_cast<std::size_t>(i)]; }
  Elt right_mul_simple(Elt w, int i) const { return right_[w * rank() + static_cast<std::size_t>(i)]; }
  Elt mul(Elt a, Elt b) const;
  Elt inverse(Elt w) const;
  Elt from_word(std::span<const int> word) const;  // product s_{w0} s_{w1} ...
  std::vector<int> reduced_word(Elt w) const;      // lexicographically first, 0-based

  bool bruhat_leq(Elt y, Elt w) const;

  // image of root k under w
  std::size_t act(Elt w, std::size_t k) const { return perms_[w * roots_.size() + k]; }
  std::span<const std::uint8_t> root_permutation(Elt w) const {
    return {perms_.data() + w * roots_.size(), roots_.size()};
  }
  // element determined by images of the simple roots
  Elt find(const std::vector<std::uint8_t>& simple_images) const;

 private:
  std::string key_of(std::span<const std::uint8_t> perm) const;

  CartanMatrix cartan_;
  std::vector<std::vector<int>> roots_;
  std::vector<bool> positive_;
  std::size_t num_positive_ = 0;
  std::vector<std::size_t> simple_root_;   // index of alpha_i in roots_
  std::vector<std::uint8_t> perms_;        // order x |roots|
  std::vector<int> length_;
  std::vector<Elt> left_, right_;          // order x rank
  std::unordered_map<std::string, Elt> index_;
  Elt longest_ = 0;
};

// Parses an involution written in 1-based cycle notation, e.g. "(1 3)" or
// "(1 3)(2 4)"; "" and "()" give the identity. Returns a 0-based permutation.
std::vector<int> parse_sigma(std::string_view text, std::size_t rank);
std::string sigma_to_string(const std::vector<int>& sigma);

struct FoldedGenerator {
  std::vector<int> orbit;  // simple reflections in the sigma-orbit, increasing
  int m = 1;               // length of w_omega in W
  WeylGroup::Elt element = 0;
  std::string label;       // reduced word of w_omega, e.g. "s1s3" or "s1s2s1"
};

// The fixed subgroup W^sigma with its Coxeter generators w_omega. Elements
// are ordered by length, then by the lexicographically first folded reduced
// word, and are addressed by their position in that order.
class FoldedSystem {
 public:
  FoldedSystem(WeylGroup base, std::vector<int> sigma);

  const WeylGroup& base() const { return base_; }
  const std::vector<int>& sigma() const { return sigma_; }
  const std::vector<FoldedGenerator>& generators() const { return gens_; }
  std::size_t size() const { return elements_.size(); }
  WeylGroup::Elt element(std::size_t idx) const { return elements_[idx]; }
  std::size_t index_of(WeylGroup::Elt w) const;  // throws if w is not sigma-fixed
  bool is_fixed(WeylGroup::Elt w) const;

  int length(std::size_t idx) const { return base_.length(elements_[idx]); }
  int generator_m(std::size_t g) const { return gens_[g].m; }
  std::size_t left_mul(std::size_t g, std::size_t idx) const { return left_[idx * gens_.size() + g]; }
  const std::vector<std::size_t>& reduced_word(std::size_t idx) const { return words_[idx]; }
  const std::string& label(std::size_t idx) const { return labels_[idx]; }
  std::size_t index_of_label(std::string_view label) const;
  int max_length() const;

 private:
  WeylGroup base_;
  std::vector<int> sigma_;
  std::vector<FoldedGenerator> gens_;
  std::vector<WeylGroup::Elt> elements_;
  std::vector<std::vector<std::size_t>> words_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> left_;
  std::unordered_map<WeylGroup::Elt, std::size_t> position_;
};

}  // namespace twklv
