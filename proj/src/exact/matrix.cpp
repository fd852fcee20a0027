#include "lieinv/exact/matrix.hpp"

namespace lieinv {

void PolyMatrix::check_uniform() const {
  for (std::size_t i = 0; i < rows(); ++i) {
    for (const auto& p : row(i)) {
      if (p.nvars() != nvars_) throw DimensionError("polynomial matrix entries disagree on variable count");
    }
  }
}

RatMatrix PolyMatrix::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw DimensionError("evaluation point length does not match variable count");
  RatMatrix out(rows(), cols());
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) out(i, j) = (*this)(i, j).evaluate(point);
  }
  return out;
}

std::vector<MultiPoly> PolyMatrix::apply(const std::vector<MultiPoly>& v) const {
  if (v.size() != cols()) throw DimensionError("vector length does not match matrix columns");
  std::vector<MultiPoly> out(rows(), MultiPoly(nvars_));
  for (std::size_t i = 0; i < rows(); ++i) {
    std::vector<MultiPoly::Term> acc;
    for (std::size_t j = 0; j < cols(); ++j) {
      const auto& a = (*this)(i, j);
      if (a.is_zero() || v[j].is_zero()) continue;
      auto prod = a * v[j];
      acc.insert(acc.end(), prod.terms().begin(), prod.terms().end());
    }
    out[i] = MultiPoly::from_terms(nvars_, std::move(acc));
  }
  return out;
}

bool PolyMatrix::is_skew_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = i; j < cols(); ++j) {
      if (!((*this)(i, j) == -(*this)(j, i))) return false;
    }
  }
  return true;
}

RatMatrix identity_matrix(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
  RatMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!is_zero(b(k, j))) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

RatVector operator*(const RatMatrix& a, const RatVector& v) {
  if (a.cols() != v.size()) throw DimensionError("matrix-vector shape mismatch");
  RatVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!is_zero(v[j]) && !is_zero(a(i, j))) out[i] += a(i, j) * v[j];
    }
  }
  return out;
}

}  // namespace lieinv
