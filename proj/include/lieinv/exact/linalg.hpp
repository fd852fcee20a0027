#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "lieinv/exact/matrix.hpp"

namespace lieinv {

// Exact linear algebra over the rationals.

struct Echelon {
  RatMatrix reduced;                 // reduced row-echelon form, zero rows last
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

Echelon rref(RatMatrix m);
std::size_t rank(const RatMatrix& m);

struct RatKernel {
  std::size_t rank = 0;
  /// One vector per free column: 1 at that column, zero at the other free columns.
  std::vector<RatVector> basis;
};

RatKernel rat_kernel(const RatMatrix& m);

/// Particular solution of a x = b with all free variables set to zero, or
/// nullopt when the system is inconsistent.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);

Rational determinant(RatMatrix m);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

/// Coefficients c0..cn of det(X*I - m), constant term first.
std::vector<Rational> characteristic_polynomial(const RatMatrix& m);

struct Eigenspace {
  Rational value;
  std::vector<RatVector> basis;
};

/// Eigenspaces of a matrix that is diagonalizable over the rationals, in
/// increasing eigenvalue order. Throws std::domain_error otherwise.
std::vector<Eigenspace> rational_eigenspaces(const RatMatrix& m);

/// Rank of the Jacobian matrix (d p_i / d x_j) evaluated at `point`.
std::size_t jacobian_rank(const std::vector<MultiPoly>& polys, std::span<const Rational> point);

/// Incremental row reduction for large sparse systems.
///
/// Rows are kept with a unit leading coefficient; `add_row` reports whether
/// the row was independent of those already present.
class SparseEchelon {
 public:
  using Row = std::vector<std::pair<std::size_t, Rational>>;  // sorted by column

  explicit SparseEchelon(std::size_t ncols) : ncols_(ncols) {}

  bool add_row(Row row);
  bool add_dense_row(const RatVector& row);
  std::size_t rank() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }

  /// Fully reduced rows ordered by pivot column.
  std::vector<Row> reduced_rows() const;
  std::vector<std::size_t> pivots() const;
  /// Kernel basis, one vector per free column (same convention as rat_kernel).
  std::vector<RatVector> kernel() const;

 private:
  std::size_t ncols_;
  std::map<std::size_t, Row> rows_;  // pivot column -> row
};

}  // namespace lieinv
