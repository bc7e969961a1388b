#include "twklv/polymatrix.hpp"

#include <stdexcept>

namespace twklv {

PolyMatrix::PolyMatrix(std::vector<std::string> labels)
    : labels_(std::move(labels)), data_(labels_.size() * labels_.size()) {}

PolyMatrix PolyMatrix::identity(std::vector<std::string> labels) {
  PolyMatrix m(std::move(labels));
  for (std::size_t i = 0; i < m.size(); ++i) m(i, i) = 1;
  return m;
}

std::vector<LaurentPoly> PolyMatrix::column(std::size_t c) const {
  std::vector<LaurentPoly> v(size());
  for (std::size_t r = 0; r < size(); ++r) v[r] = (*this)(r, c);
  return v;
}

void PolyMatrix::set_column(std::size_t c, const std::vector<LaurentPoly>& v) {
  if (v.size() != size()) throw std::invalid_argument("set_column: size mismatch");
  for (std::size_t r = 0; r < size(); ++r) (*this)(r, c) = v[r];
}

PolyMatrix PolyMatrix::bar() const {
  PolyMatrix out(labels_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k].bar();
  return out;
}

PolyMatrix PolyMatrix::scaled(const LaurentPoly& s) const {
  PolyMatrix out(labels_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] * s;
  return out;
}

bool PolyMatrix::is_zero() const {
  for (const auto& e : data_)
    if (!e.is_zero()) return false;
  return true;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (size() != o.size()) throw std::invalid_argument("PolyMatrix product: size mismatch");
  const std::size_t n = size();
  PolyMatrix out(labels_);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const auto& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const auto& b = o(k, j);
        if (!b.is_zero()) out(i, j) += a * b;
      }
    }
  return out;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
  if (size() != o.size()) throw std::invalid_argument("PolyMatrix sum: size mismatch");
  PolyMatrix out = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] += o.data_[k];
  return out;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
  if (size() != o.size()) throw std::invalid_argument("PolyMatrix difference: size mismatch");
  PolyMatrix out = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] -= o.data_[k];
  return out;
}

}  // namespace twklv
