#pragma once

#include "twklv/laurent.hpp"

#include <string>
#include <vector>

namespace twklv {

// Square matrix of Laurent polynomials whose rows and columns share one list
// of labels (parameter ids or group element labels).
class PolyMatrix {
 public:
  PolyMatrix() = default;
  explicit PolyMatrix(std::vector<std::string> labels);
  static PolyMatrix identity(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  LaurentPoly& operator()(std::size_t r, std::size_t c) { return data_[r * size() + c]; }
  const LaurentPoly& operator()(std::size_t r, std::size_t c) const { return data_[r * size() + c]; }

  std::vector<LaurentPoly> column(std::size_t c) const;
  void set_column(std::size_t c, const std::vector<LaurentPoly>& v);

  PolyMatrix bar() const;
  PolyMatrix scaled(const LaurentPoly& s) const;
  bool is_zero() const;

  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix operator+(const PolyMatrix& o) const;
  PolyMatrix operator-(const PolyMatrix& o) const;
  // entries only; labels are not compared
  bool operator==(const PolyMatrix& o) const { return data_ == o.data_; }

 private:
  std::vector<std::string> labels_;
  std::vector<LaurentPoly> data_;
};

}  // namespace twklv
