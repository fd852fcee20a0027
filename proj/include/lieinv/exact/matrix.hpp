#pragma once

#include <span>
#include <string>
#include <vector>

#include "lieinv/exact/multipoly.hpp"
#include "lieinv/exact/rational.hpp"

namespace lieinv {

/// Row-major dense matrix.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T()) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  Matrix transposed() const {
    Matrix out(cols_, rows_, rows_ * cols_ ? data_.front() : T());
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    }
    return out;
  }

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RatMatrix = Matrix<Rational>;

/// Matrix of polynomials sharing one variable count.
class PolyMatrix : public Matrix<MultiPoly> {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
      : Matrix<MultiPoly>(rows, cols, MultiPoly(nvars)), nvars_(nvars) {}

  std::size_t nvars() const { return nvars_; }

  /// Throws DimensionError if some entry has a different variable count.
  void check_uniform() const;

  RatMatrix evaluate(std::span<const Rational> point) const;

  /// Matrix-vector product, entries must share the variable count.
  std::vector<MultiPoly> apply(const std::vector<MultiPoly>& v) const;

  bool is_skew_symmetric() const;

 private:
  std::size_t nvars_ = 0;
};

RatMatrix identity_matrix(std::size_t n);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatVector operator*(const RatMatrix& a, const RatVector& v);

}  // namespace lieinv
