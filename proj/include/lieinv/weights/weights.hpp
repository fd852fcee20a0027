#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <json.hpp>

#include "lieinv/exact/poly_linalg.hpp"
#include "lieinv/lie/ops.hpp"

namespace lieinv {

/// Commuting elements of l, in ambient coordinates.
struct Torus {
  std::vector<RatVector> basis;
};

using Weight = RatVector;  // coordinates against the torus basis

/// Simultaneous ad t eigenspaces of g(e) and, when supplied, g(f), as ambient
/// vectors.
struct WeightDecomp {
  LieAlgebra ambient;
  Torus torus;
  std::vector<Weight> weights;  // all weights of g(e), increasing
  std::map<Weight, std::vector<RatVector>> E;
  std::optional<std::map<Weight, std::vector<RatVector>>> F;

  std::size_t dim_e(const Weight& w) const;
  std::size_t dim_f(const Weight& w) const;
  Weight zero() const { return Weight(torus.basis.size()); }
  /// E_0 = a(e) and F_0 = a(f).
  const std::vector<RatVector>& a_e() const;
  std::vector<RatVector> a_f() const;
  std::vector<Weight> nonzero_weights() const;
  /// Weights where dim E_w = dim E_-w = dim F_w = dim F_-w fails (F terms
  /// only when g(f) was supplied).
  std::vector<Weight> symmetry_violations() const;
};

/// Throws std::invalid_argument when the torus elements do not commute or a
/// subspace is not t-stable, std::domain_error when ad t is not diagonalizable
/// over Q on it.
WeightDecomp weight_decomposition(const LieAlgebra& ambient, const Subspace& ge, const std::optional<Subspace>& gf,
                                  const Torus& t);
/// Same, but a g(e) basis of joint eigenvectors is kept in the given order,
/// which fixes the rows and columns of M_lambda (principal minors depend on
/// it). Other bases fall back to echelon bases per weight space.
WeightDecomp weight_decomposition(const LieAlgebra& ambient, const std::vector<RatVector>& ge_basis,
                                  const std::optional<Subspace>& gf, const Torus& t);

/// Matrix of brackets [left_i, right_j], each written in the `target` basis as
/// a linear polynomial in variables y1..ym dual to it. Throws std::domain_error
/// when a bracket leaves span(target).
PolyMatrix bracket_pairing_matrix(const LieAlgebra& ambient, const std::vector<RatVector>& left,
                                  const std::vector<RatVector>& right, const std::vector<RatVector>& target);

/// M_lambda over the a(e) variables, rows E_lambda and columns E_-lambda.
PolyMatrix m_lambda(const WeightDecomp& d, const Weight& lambda);
MultiPoly delta_lambda(const WeightDecomp& d, const Weight& lambda);
/// Product of delta_lambda over all nonzero weights.
MultiPoly delta(const WeightDecomp& d);

/// Indices of the first nonzero principal minor, searching sizes from the
/// largest down and subsets in lexicographic order.
std::optional<std::vector<std::size_t>> nonzero_principal_minor(const PolyMatrix& m);

struct DeltaEntry {
  Weight weight;
  PolyMatrix m;
  MultiPoly delta;
  bool nonzero = false;
  std::optional<std::vector<std::size_t>> principal_minor;  // only searched when delta vanishes
};

struct DeltaReport {
  std::vector<DeltaEntry> entries;  // nonzero weights, increasing
  MultiPoly delta;
  bool nonzero = false;
  nlohmann::json to_json() const;
};

DeltaReport delta_report(const WeightDecomp& d);

/// Basis of g(e) with ad h degrees, in ambient coordinates.
struct GradedBasis {
  std::vector<RatVector> vectors;
  RatVector degrees;
};

struct HypothesisReport {
  Rational d = 0;
  std::size_t top_kernel_dim = 0;
  bool top_centralizes_t = true;
  bool t_in_center_of_l = false;
  bool t_is_center_of_l = false;
  std::size_t rank_l = 0;
  bool hypotheses = false;
  bool boundary_case = false;  // top kernel of dimension exactly 3
  bool generic_stabilizer_nilpotent = false;
  bool semi_invariants_exist = false;
  nlohmann::json to_json() const;
};

/// Hypotheses and conclusions of the top-eigenvalue criterion: the top ad h
/// eigenspace has dimension at most 3 and does not centralize t (and t is
/// central in l when it has dimension 3). Nilpotent generic stabilizers follow
/// when l has rank 1, semi-invariants when t is the center of l.
HypothesisReport check_c3cn2(const GradedBasis& ge, const Subspace& l, const WeightDecomp& d,
                             std::uint64_t seed = 20240917);

struct IndexDropReport {
  std::array<bool, 4> conditions{};
  std::vector<Weight> top_weights;  // nonzero t-weights in the top ad h eigenspace
  std::map<Weight, std::vector<std::size_t>> principal_minors;
  bool holds = false;  // all four conditions
  std::optional<std::size_t> index_ae, index_ge;
  std::optional<bool> index_consistent;  // index(g(e)) <= index(a(e)) when both are known
  nlohmann::json to_json() const;
};

/// Conditions 1-4 under which a(e) has index at least that of g(e).
IndexDropReport check_l3cn2(const GradedBasis& ge, const Subspace& l, const WeightDecomp& d,
                            std::optional<std::size_t> index_ae = {}, std::optional<std::size_t> index_ge = {});

/// a = centralizer of t in the ambient algebra, with a(e) = a ∩ g(e) and
/// a(f) = a ∩ g(f) as subalgebras.
struct TorusCentralizer {
  Subspace a, a_e;
  std::optional<Subspace> a_f;
  LieAlgebra a_algebra, a_e_algebra;
};

TorusCentralizer torus_centralizer(const LieAlgebra& ambient, const Torus& t, const Subspace& ge,
                                   const std::optional<Subspace>& gf = {});

nlohmann::json weights_to_json(const WeightDecomp& d);

}  // namespace lieinv
