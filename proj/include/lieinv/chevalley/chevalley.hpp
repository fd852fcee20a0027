#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lieinv/chevalley/root_system.hpp"
#include "lieinv/lie/ops.hpp"

namespace lieinv {

/// Simple Lie algebra in a Chevalley basis: positive root vectors, negative
/// root vectors, then the simple coroots h_1..h_r.
struct ChevalleyAlgebra {
  LieAlgebra algebra;
  RootSystem roots;
  std::vector<Root> labels;  // root of each basis vector, zero for the coroots

  std::size_t positive_vector(std::size_t k) const { return k; }
  std::size_t negative_vector(std::size_t k) const { return roots.num_positive() + k; }
  /// Indices of the coroot basis vectors.
  std::vector<std::size_t> cartan_indices() const;
};

/// Structure constants N_{a,b} follow the extraspecial-pair convention with
/// N = p + 1 on extraspecial pairs. Jacobi is verified before returning.
ChevalleyAlgebra build_simple(char type, std::size_t rank);

class NotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using ElementFilter = std::function<bool(const Element&)>;

/// First e = sum of at most `max_support` distinct positive root vectors
/// (supports enumerated by size, then lexicographically in root order) with
/// dim g(e) == target and, when given, accepted by `filter`.
Element find_orbit_rep(const ChevalleyAlgebra& g, std::size_t target_centralizer_dim, std::size_t max_support,
                       const ElementFilter& filter = {});

struct Sl2Triple {
  Element e, h, f;
};

/// Violated triple invariants, empty when (e, h, f) is an sl2-triple with e, f
/// ad-nilpotent and ad h diagonalizable with integer eigenvalues.
std::vector<std::string> sl2_triple_violations(const Sl2Triple& t);

/// h is the echelon-canonical solution in [e, g] of [h, e] = 2e, then f
/// solves [e, f] = h, [h, f] = -2f. Throws std::invalid_argument for e = 0 or
/// e not ad-nilpotent, std::domain_error when no triple is found.
Sl2Triple jacobson_morozov(const Element& e);

/// l = g(e) ∩ g(f).
Subspace reductive_factor(const Sl2Triple& t);
/// Span of the strictly positive degree basis vectors.
Subspace nilradical_u(const LieAlgebra& ge, const Grading& grading);

/// g(e) in a joint eigenbasis of ad h and ad t, where t is a fixed element of
/// the reductive factor.
struct GradedCentralizer {
  Sl2Triple triple;
  Subspace ge, gf, l;
  std::optional<RatVector> torus;  // ambient coordinates
  std::vector<RatVector> basis;    // ambient vectors, ordered by (h-degree, t-weight)
  LieAlgebra algebra;              // induced on `basis`
  Grading grading;                 // ad h degrees on `basis`
  RatVector t_weights;             // ad t eigenvalues on `basis` (zero without a torus)
};

/// Torus of l: l ∩ span(cartan) when that is one-dimensional, rescaled so its
/// weights on g(e) are coprime integers with the first nonzero one negative.
std::optional<RatVector> reductive_torus(const ChevalleyAlgebra& g, const Sl2Triple& t, const Subspace& l,
                                         const Subspace& ge);

GradedCentralizer graded_centralizer(const ChevalleyAlgebra& g, const Sl2Triple& t);

/// ad h eigenvalues on g(e), sorted, with multiplicity.
std::vector<Rational> ad_spectrum_on(const Element& h, const Subspace& s);

}  // namespace lieinv
