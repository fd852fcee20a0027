#include "lieinv/lie/subspace.hpp"

#include "lieinv/exact/linalg.hpp"

#include <stdexcept>

namespace lieinv {

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<RatVector>& vectors) {
  Subspace s(ambient_dim);
  if (vectors.empty()) return s;
  RatMatrix m(vectors.size(), ambient_dim);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient_dim) throw DimensionError("vector length does not match ambient dimension");
    for (std::size_t j = 0; j < ambient_dim; ++j) m(i, j) = vectors[i][j];
  }
  Echelon e = rref(std::move(m));
  s.pivots_ = e.pivots;
  for (std::size_t k = 0; k < e.rank(); ++k) {
    auto row = e.reduced.row(k);
    s.basis_.emplace_back(row.begin(), row.end());
  }
  return s;
}

Subspace Subspace::whole(std::size_t ambient_dim) {
  std::vector<std::size_t> all(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) all[i] = i;
  return coordinate(ambient_dim, all);
}

Subspace Subspace::coordinate(std::size_t ambient_dim, const std::vector<std::size_t>& indices) {
  std::vector<RatVector> vs;
  for (auto i : indices) {
    if (i >= ambient_dim) throw std::out_of_range("coordinate index out of range");
    RatVector v(ambient_dim);
    v[i] = 1;
    vs.push_back(std::move(v));
  }
  return span(ambient_dim, vs);
}

std::optional<RatVector> Subspace::coordinates(const RatVector& v) const {
  if (v.size() != ambient_) throw DimensionError("vector length does not match ambient dimension");
  // In RREF the coordinate on basis k is the entry at pivot k.
  RatVector coords(basis_.size());
  RatVector rest = v;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    coords[k] = v[pivots_[k]];
    if (is_zero(coords[k])) continue;
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (!is_zero(basis_[k][j])) rest[j] -= coords[k] * basis_[k][j];
    }
  }
  if (!is_zero(rest)) return std::nullopt;
  return coords;
}

bool Subspace::contains(const RatVector& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("subspaces live in different ambient spaces");
  for (const auto& b : other.basis_) {
    if (!contains(b)) return false;
  }
  return true;
}

std::optional<std::vector<std::size_t>> Subspace::aligned_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (j != pivots_[k] && !is_zero(basis_[k][j])) return std::nullopt;
    }
    out.push_back(pivots_[k]);
  }
  return out;
}

BasisFrame::BasisFrame(std::size_t ambient_dim, std::vector<RatVector> basis)
    : basis_(std::move(basis)), span_(Subspace::span(ambient_dim, basis_)) {
  const std::size_t m = basis_.size();
  if (span_.dim() != m) throw std::invalid_argument("frame vectors are linearly dependent");
  // t(k, i): echelon coordinate k of basis vector i; invert it once.
  RatMatrix t(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    const RatVector c = *span_.coordinates(basis_[i]);
    for (std::size_t k = 0; k < m; ++k) t(k, i) = c[k];
  }
  to_frame_ = *inverse(t);
}

std::optional<RatVector> BasisFrame::coordinates(const RatVector& v) const {
  auto c = span_.coordinates(v);
  if (!c) return std::nullopt;
  return to_frame_ * *c;
}

RatVector BasisFrame::combine(const RatVector& coords) const {
  if (coords.size() != basis_.size()) throw DimensionError("coordinate length does not match frame dimension");
  RatVector v(ambient_dim());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (is_zero(coords[i])) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] += coords[i] * basis_[i][j];
  }
  return v;
}

Subspace operator+(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("subspaces live in different ambient spaces");
  std::vector<RatVector> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient_dim(), all);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("subspaces live in different ambient spaces");
  const std::size_t n = a.ambient_dim();
  if (a.dim() == 0 || b.dim() == 0) return Subspace(n);
  // Solve sum_i s_i a_i - sum_j t_j b_j = 0.
  RatMatrix m(n, a.dim() + b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t r = 0; r < n; ++r) m(r, i) = a.basis()[i][r];
  }
  for (std::size_t j = 0; j < b.dim(); ++j) {
    for (std::size_t r = 0; r < n; ++r) m(r, a.dim() + j) = -b.basis()[j][r];
  }
  std::vector<RatVector> vs;
  for (const auto& k : rat_kernel(m).basis) {
    RatVector v(n);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (is_zero(k[i])) continue;
      for (std::size_t r = 0; r < n; ++r) v[r] += k[i] * a.basis()[i][r];
    }
    vs.push_back(std::move(v));
  }
  return Subspace::span(n, vs);
}

Subspace kernel_subspace(const RatMatrix& m) { return Subspace::span(m.cols(), rat_kernel(m).basis); }

}  // namespace lieinv
