#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "lieinv/exact/poly_linalg.hpp"
#include "lieinv/lie/ops.hpp"

namespace lieinv {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20240917;
inline constexpr long kPointBound = 999;
inline constexpr int kGenericRetries = 20;

/// Integer point with coordinates uniform in [-bound, bound]. Uses plain
/// modular reduction so the sequence is identical across standard libraries.
RatVector random_point(Rng& rng, std::size_t n, long bound = kPointBound);

/// A(i, j) = [x_j, x_i] as a linear polynomial in x1..xn. Skew-symmetry is
/// checked; a violation throws std::logic_error.
PolyMatrix coadjoint_matrix(const LieAlgebra& alg);

/// [x_j, p] in S(g): sum over l of dp/dx_l times [x_j, x_l].
MultiPoly adjoint_action(const LieAlgebra& alg, std::size_t j, const MultiPoly& p);

/// p = sum_i v_i x_i.
MultiPoly contract(const PolyVector& v);

bool is_invariant(const LieAlgebra& alg, const MultiPoly& p);
/// Scalars w_j with [x_j, p] = w_j p for every j, or nullopt.
std::optional<RatVector> is_semi_invariant(const LieAlgebra& alg, const MultiPoly& p);

/// Whether every variable of p has its (0-based) index in `indices`.
bool support_in_subspace(const MultiPoly& p, const std::vector<std::size_t>& indices);
/// Same, for a subspace spanned by coordinate axes; any other subspace
/// throws std::invalid_argument.
bool support_in_subspace(const MultiPoly& p, const Subspace& s);

struct IndexCertificate {
  std::size_t index = 0;
  RatVector witness_point;
  std::size_t witness_rank = 0;
  std::vector<PolyVector> kernel_vectors;
  std::vector<unsigned> kernel_degrees;
  std::uint64_t seed = 0;
  int attempts = 0;
  std::string kernel_source;  // "supplied" or "degree-search"

  nlohmann::json to_json() const;
};

class CertificationError : public std::runtime_error {
 public:
  CertificationError(const std::string& what, std::size_t rank_lower, std::size_t rank_upper)
      : std::runtime_error(what), rank_lower(rank_lower), rank_upper(rank_upper) {}
  std::size_t rank_lower;  // best witness rank found
  std::size_t rank_upper;  // n minus the most independent kernel vectors found
};

/// Index with a two-sided certificate: a point where A has rank r, and
/// n - r symbolic kernel vectors (A v = 0 identically) independent at that
/// point. Kernel vectors come from `supplied` when given, else from a
/// degree-capped undetermined-coefficient search.
IndexCertificate certify_index(const LieAlgebra& alg, std::uint64_t seed = kDefaultSeed,
                               const std::vector<PolyVector>* supplied = nullptr, unsigned max_degree = 4);

struct StabilizerSample {
  RatVector point;
  Subspace stabilizer;
  bool all_nilpotent = false;
  std::optional<bool> contained_in_u;  // set when u-indices are given
};

/// ker A(point); nilpotency is tested on the echelon basis and on
/// `random_combinations` random integer combinations drawn from rng.
StabilizerSample stabilizer_at(const LieAlgebra& alg, const RatVector& point, Rng& rng,
                               const std::optional<std::vector<std::size_t>>& u_indices = std::nullopt,
                               int random_combinations = 5);

/// span of the gradients of `invariants` at point == stabilizer of point.
bool gradient_span_check(const LieAlgebra& alg, const std::vector<MultiPoly>& invariants, const RatVector& point);

struct G0Result {
  Subspace g0;
  bool proper = false;
};

/// g_u + [g, g] + g(point).
G0Result g0_subspace(const LieAlgebra& alg, const Subspace& g_u, const RatVector& point);

}  // namespace lieinv
