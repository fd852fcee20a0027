#pragma once

#include <span>
#include <vector>

#include "lieinv/exact/matrix.hpp"

namespace lieinv {

// Fraction-free linear algebra over Q[x1..xn].

using PolyVector = std::vector<MultiPoly>;

/// Determinant by Bareiss elimination; every intermediate division is exact.
/// Pivots are chosen as the lowest-total-degree (then fewest-term) nonzero
/// entry of the current column.
MultiPoly bareiss_det(const PolyMatrix& m);

struct PolyKernel {
  std::size_t rank = 0;  // rank over the fraction field
  std::vector<PolyVector> basis;
};

/// Rank and kernel over the fraction field by fraction-free elimination with
/// full pivoting on the lowest-degree entry. Kernel vectors are polynomial,
/// content 1 and sign-normalized; their count is cols - rank.
PolyKernel frf_kernel(const PolyMatrix& m);

/// Clears denominators, divides by the rational content and makes the
/// leading coefficient of the first nonzero entry positive.
PolyVector normalize_vector(PolyVector v);

/// Number of vectors in `vectors` that are linearly independent after
/// evaluation at `point` (a lower bound for their rank over the fraction field).
std::size_t rank_at_point(const std::vector<PolyVector>& vectors, std::span<const Rational> point);

/// All kernel vectors of m whose entries are homogeneous of degree `degree`,
/// solved by undetermined coefficients. Requires the nonzero entries of m to
/// be homogeneous of one common degree.
std::vector<PolyVector> homogeneous_kernel(const PolyMatrix& m, unsigned degree);

struct DegreeCappedKernel {
  std::vector<PolyVector> vectors;  // independent at the probe point
  std::vector<unsigned> degrees;    // entry degree of each vector
  bool reached_target = false;
};

/// Greedy search, degree 0 upwards to `max_degree`, for kernel vectors that
/// stay independent at `probe`. Stops once `target` vectors are found.
DegreeCappedKernel kernel_up_to_degree(const PolyMatrix& m, unsigned max_degree, std::span<const Rational> probe,
                                       std::size_t target);

}  // namespace lieinv
