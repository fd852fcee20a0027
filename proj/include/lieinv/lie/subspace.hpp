#pragma once

#include <optional>
#include <vector>

#include "lieinv/exact/matrix.hpp"

namespace lieinv {

/// Linear subspace of Q^n held as a reduced row-echelon basis, so two
/// subspaces are equal exactly when their bases are.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}
  /// Span of arbitrary (possibly dependent) vectors.
  static Subspace span(std::size_t ambient_dim, const std::vector<RatVector>& vectors);
  static Subspace whole(std::size_t ambient_dim);
  /// Span of the given coordinate axes.
  static Subspace coordinate(std::size_t ambient_dim, const std::vector<std::size_t>& indices);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<RatVector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const RatVector& v) const;
  /// Coordinates against basis(), or nullopt when v is outside.
  std::optional<RatVector> coordinates(const RatVector& v) const;
  bool contains(const Subspace& other) const;

  /// Coordinate indices i with e_i in the subspace when the subspace is
  /// spanned by such axes; nullopt otherwise.
  std::optional<std::vector<std::size_t>> aligned_indices() const;

  bool operator==(const Subspace& other) const = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<RatVector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Coordinates against a fixed, not necessarily echelon, basis.
class BasisFrame {
 public:
  BasisFrame() = default;
  /// Throws std::invalid_argument when the vectors are dependent.
  BasisFrame(std::size_t ambient_dim, std::vector<RatVector> basis);

  std::size_t dim() const { return basis_.size(); }
  std::size_t ambient_dim() const { return span_.ambient_dim(); }
  const std::vector<RatVector>& basis() const { return basis_; }
  const Subspace& span() const { return span_; }

  std::optional<RatVector> coordinates(const RatVector& v) const;
  RatVector combine(const RatVector& coords) const;

 private:
  std::vector<RatVector> basis_;
  Subspace span_;
  RatMatrix to_frame_;  // echelon coordinates -> frame coordinates
};

Subspace operator+(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// Null space of a matrix as a Subspace of Q^cols.
Subspace kernel_subspace(const RatMatrix& m);

}  // namespace lieinv
