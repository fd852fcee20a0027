#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lieinv/lie/algebra.hpp"
#include "lieinv/lie/subspace.hpp"

namespace lieinv {

/// Degrees of a basis under a diagonal derivation (e.g. ad h).
struct Grading {
  RatVector degrees;

  /// First stored bracket [x_i, x_j] with a component x_k of the wrong
  /// degree, as (i, j, k); nullopt when degrees are additive.
  std::optional<std::array<std::size_t, 3>> first_violation(const LieAlgebra& alg) const;
  bool is_valid(const LieAlgebra& alg) const { return !first_violation(alg); }
};

/// Basis triples i < j < k violating the Jacobi identity.
std::vector<std::array<std::size_t, 3>> jacobi_check(const LieAlgebra& alg, std::size_t max_reported = 64);

RatMatrix ad_matrix(const Element& v);
/// (ad v)^n == 0 with n the algebra dimension.
bool is_ad_nilpotent(const Element& v);
bool is_nilpotent_matrix(const RatMatrix& m);

Subspace centralizer(const Element& v);
/// Common centralizer of every vector in `s`.
Subspace centralizer(const LieAlgebra& alg, const Subspace& s);
Subspace center(const LieAlgebra& alg);
Subspace derived(const LieAlgebra& alg);

Rational killing(const Element& a, const Element& b);
/// Restriction of the Killing form to bases of two subspaces.
RatMatrix killing_pairing(const LieAlgebra& alg, const std::vector<RatVector>& left,
                          const std::vector<RatVector>& right);
bool is_unimodular(const LieAlgebra& alg);

/// Degrees of a diagonal ad v. Throws std::domain_error naming the first
/// basis vector that ad v does not map to a multiple of itself.
Grading grading_from(const Element& v);

/// Whether [a, b] lies in span(s) for all a, b in s.
bool is_subalgebra(const LieAlgebra& alg, const Subspace& s);

/// The algebra induced on span(basis) in the given basis order. Throws
/// std::domain_error if the span is not closed under the bracket.
LieAlgebra subalgebra_from_basis(const LieAlgebra& alg, const std::vector<RatVector>& basis,
                                 std::vector<std::string> names = {});

struct AdEigenspace {
  Rational value;
  std::vector<RatVector> basis;  // ambient vectors, reduced echelon form
};

/// Eigenspaces of ad x on span(basis), increasing. Throws
/// std::invalid_argument when the span is not ad x-stable and
/// std::domain_error when ad x is not diagonalizable over Q on it.
std::vector<AdEigenspace> ad_eigenspaces(const LieAlgebra& alg, const RatVector& x, const std::vector<RatVector>& basis);

}  // namespace lieinv
