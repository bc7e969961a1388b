#include "twklv/galois_field.hpp"

#include <stdexcept>

namespace twklv {

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) return std::make_pair(static_cast<std::uint32_t>(q), 1u);
  std::uint32_t n = 0;
  while (q % p == 0) {
    q /= p;
    ++n;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(static_cast<std::uint32_t>(p), n);
}

namespace {

// polynomial arithmetic over F_p on coefficient vectors (low degree first)
using Poly = std::vector<std::uint32_t>;

// x * a mod f, where f is monic of degree n and a has degree < n
Poly times_x(const Poly& a, const Poly& f, std::uint32_t p) {
  const std::size_t n = a.size();
  Poly out(n, 0);
  const std::uint32_t top = a[n - 1];
  for (std::size_t i = n - 1; i > 0; --i) out[i] = a[i - 1];
  out[0] = 0;
  // x^n = -(f_0 + ... + f_{n-1} x^{n-1})
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::uint32_t>((out[i] + (p - f[i]) * static_cast<std::uint64_t>(top)) % p);
  return out;
}

std::uint32_t encode(const Poly& a, std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t i = a.size(); i-- > 0;) v = v * p + a[i];
  return v;
}

}  // namespace

GaloisField::GaloisField(std::uint32_t p, std::uint32_t n) : p_(p), n_(n), size_(1) {
  if (p < 2 || n < 1) throw std::invalid_argument("GaloisField: bad parameters");
  for (std::uint32_t i = 0; i < n; ++i) size_ *= p;
  const std::uint32_t order = size_ - 1;
  // search monic f of degree n (low coefficients enumerated) whose root x
  // has multiplicative order p^n - 1
  std::uint32_t tail_count = 1;
  for (std::uint32_t i = 0; i < n; ++i) tail_count *= p;
  for (std::uint32_t tail = 1; tail < tail_count; ++tail) {
    Poly f(n, 0);
    std::uint32_t t = tail;
    for (std::uint32_t i = 0; i < n; ++i) {
      f[i] = t % p;
      t /= p;
    }
    if (f[0] == 0) continue;
    Poly a(n, 0);
    a[0] = 1;
    std::vector<Elt> exps;
    exps.reserve(order);
    std::vector<std::uint32_t> logs(size_, 0);
    std::vector<bool> seen(size_, false);
    bool primitive = true;
    for (std::uint32_t k = 0; k < order; ++k) {
      const Elt e = encode(a, p);
      if (e == 0 || seen[e]) {
        primitive = false;
        break;
      }
      seen[e] = true;
      exps.push_back(e);
      logs[e] = k;
      a = n == 1 ? Poly{static_cast<std::uint32_t>((static_cast<std::uint64_t>(a[0]) * ((p - f[0]) % p)) % p)}
                 : times_x(a, f, p);
    }
    if (!primitive || encode(a, p) != 1) continue;
    exp_.resize(2 * static_cast<std::size_t>(order));
    for (std::size_t k = 0; k < exp_.size(); ++k) exp_[k] = exps[k % order];
    log_ = std::move(logs);
    return;
  }
  throw std::logic_error("no primitive polynomial found");
}

GaloisField::Elt GaloisField::add(Elt a, Elt b) const {
  if (n_ == 1) return (a + b) % p_;
  Elt out = 0, scale = 1;
  while (a || b) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

GaloisField::Elt GaloisField::sub(Elt a, Elt b) const {
  if (n_ == 1) return (a + p_ - b) % p_;
  Elt out = 0, scale = 1;
  while (a || b) {
    out += ((a % p_ + p_ - b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

GaloisField::Elt GaloisField::mul(Elt a, Elt b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[log_[a] + log_[b]];
}

GaloisField::Elt GaloisField::inv(Elt a) const {
  if (a == 0) throw std::domain_error("inverse of zero in finite field");
  const std::uint32_t order = size_ - 1;
  return exp_[(order - log_[a]) % order];
}

GaloisField::Elt GaloisField::pow(Elt a, std::uint64_t k) const {
  if (k == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t order = size_ - 1;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (k % order)) % order];
}

GaloisField::Elt GaloisField::from_int(long v) const {
  const long r = v % static_cast<long>(p_);
  return static_cast<Elt>(r < 0 ? r + static_cast<long>(p_) : r);
}

GaloisField::Elt GaloisField::frobenius(Elt a, std::uint32_t k) const {
  std::uint64_t e = 1;
  for (std::uint32_t i = 0; i < k % n_; ++i) e *= p_;
  return pow(a, e);
}

}  // namespace twklv
