#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace twklv {

// GF(p^n) with log/antilog tables. An element is encoded as the integer
// sum d_i p^i of its coordinates d_i in the polynomial basis, so 0 and 1 are
// the field's zero and one, and 0..p-1 is the prime field.
class GaloisField {
 public:
  using Elt = std::uint32_t;

  GaloisField(std::uint32_t p, std::uint32_t n);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return n_; }
  std::uint32_t size() const { return size_; }

  Elt add(Elt a, Elt b) const;
  Elt sub(Elt a, Elt b) const;
  Elt neg(Elt a) const { return sub(0, a); }
  Elt mul(Elt a, Elt b) const;
  Elt inv(Elt a) const;  // throws on zero
  Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
  Elt pow(Elt a, std::uint64_t k) const;
  Elt from_int(long v) const;  // image of an integer in the prime field
  // a^(p^k)
  Elt frobenius(Elt a, std::uint32_t k = 1) const;
  Elt primitive() const { return exp_[1]; }
  // true when a lies in the subfield with `order` elements
  bool in_subfield(Elt a, std::uint32_t order) const { return pow(a, order) == a; }

 private:
  std::uint32_t p_, n_, size_;
  std::vector<Elt> exp_;            // exp_[k] = g^k, length 2(size-1)
  std::vector<std::uint32_t> log_;  // log_[a] for a != 0
};

// (p, n) with q = p^n, or nothing when q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);

}  // namespace twklv
