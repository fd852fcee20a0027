#include "lieinv/coadjoint/coadjoint.hpp"

#include <algorithm>

#include "lieinv/exact/linalg.hpp"
#include "lieinv/lie/io.hpp"

namespace lieinv {

RatVector random_point(Rng& rng, std::size_t n, long bound) {
  RatVector p(n);
  const auto span = static_cast<std::uint64_t>(2 * bound + 1);
  for (auto& x : p) x = static_cast<long>(rng() % span) - bound;
  return p;
}

namespace {

MultiPoly linear_form(std::size_t n, const SparseVector& v) {
  std::vector<MultiPoly::Term> terms;
  for (const auto& [k, c] : v) terms.push_back({Monomial::unit(n, k), c});
  return MultiPoly::from_terms(n, std::move(terms));
}

unsigned vector_degree(const PolyVector& v) {
  int d = 0;
  for (const auto& p : v) d = std::max(d, p.total_degree());
  return static_cast<unsigned>(d);
}

}  // namespace

PolyMatrix coadjoint_matrix(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  PolyMatrix a(n, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = linear_form(n, alg.basis_bracket(j, i));
  }
  if (!a.is_skew_symmetric()) throw std::logic_error("coadjoint matrix is not skew-symmetric");
  return a;
}

MultiPoly adjoint_action(const LieAlgebra& alg, std::size_t j, const MultiPoly& p) {
  const std::size_t n = alg.dim();
  if (p.nvars() != n) throw DimensionError("polynomial variable count does not match algebra dimension");
  std::vector<MultiPoly::Term> acc;
  for (std::size_t l : p.support()) {
    const auto& br = alg.basis_bracket(j, l);
    if (br.empty()) continue;
    const MultiPoly prod = p.derivative(l) * linear_form(n, br);
    acc.insert(acc.end(), prod.terms().begin(), prod.terms().end());
  }
  return MultiPoly::from_terms(n, std::move(acc));
}

MultiPoly contract(const PolyVector& v) {
  const std::size_t n = v.size();
  std::vector<MultiPoly::Term> acc;
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i].nvars() != n) throw DimensionError("kernel vector entries must use one variable per coordinate");
    const MultiPoly prod = v[i] * MultiPoly::variable(n, i);
    acc.insert(acc.end(), prod.terms().begin(), prod.terms().end());
  }
  return MultiPoly::from_terms(n, std::move(acc));
}

bool is_invariant(const LieAlgebra& alg, const MultiPoly& p) {
  for (std::size_t j = 0; j < alg.dim(); ++j) {
    if (!adjoint_action(alg, j, p).is_zero()) return false;
  }
  return true;
}

std::optional<RatVector> is_semi_invariant(const LieAlgebra& alg, const MultiPoly& p) {
  RatVector w(alg.dim());
  if (p.is_zero()) return w;
  const auto& lead = p.leading_term();
  for (std::size_t j = 0; j < alg.dim(); ++j) {
    const MultiPoly q = adjoint_action(alg, j, p);
    w[j] = q.coefficient(lead.mono) / lead.coeff;
    if (!(q == p * w[j])) return std::nullopt;
  }
  return w;
}

bool support_in_subspace(const MultiPoly& p, const std::vector<std::size_t>& indices) {
  for (std::size_t v : p.support()) {
    if (std::find(indices.begin(), indices.end(), v) == indices.end()) return false;
  }
  return true;
}

bool support_in_subspace(const MultiPoly& p, const Subspace& s) {
  auto idx = s.aligned_indices();
  if (!idx) throw std::invalid_argument("subspace is not spanned by basis vectors");
  return support_in_subspace(p, *idx);
}

nlohmann::json IndexCertificate::to_json() const {
  nlohmann::json vecs = nlohmann::json::array();
  for (const auto& v : kernel_vectors) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& p : v) entries.push_back(to_string(p));
    vecs.push_back(std::move(entries));
  }
  return {{"index", index},
          {"witness_point", vector_to_json(witness_point)},
          {"witness_rank", witness_rank},
          {"kernel_vectors", std::move(vecs)},
          {"kernel_degrees", kernel_degrees},
          {"kernel_source", kernel_source},
          {"attempts", attempts},
          {"seed", seed}};
}

IndexCertificate certify_index(const LieAlgebra& alg, std::uint64_t seed, const std::vector<PolyVector>* supplied,
                               unsigned max_degree) {
  const std::size_t n = alg.dim();
  const PolyMatrix a = coadjoint_matrix(alg);
  std::vector<PolyVector> verified;
  if (supplied) {
    for (const auto& v : *supplied) {
      if (v.size() != n) throw DimensionError("kernel vector length does not match algebra dimension");
      const auto av = a.apply(v);
      if (!std::all_of(av.begin(), av.end(), [](const MultiPoly& p) { return p.is_zero(); })) {
        throw std::invalid_argument("supplied vector is not in the kernel of the coadjoint matrix");
      }
      verified.push_back(v);
    }
  }

  Rng rng(seed);
  std::size_t best_rank = 0, best_kernel = 0;
  for (int attempt = 1; attempt <= kGenericRetries; ++attempt) {
    IndexCertificate cert;
    cert.seed = seed;
    cert.attempts = attempt;
    cert.witness_point = random_point(rng, n);
    cert.witness_rank = rank(a.evaluate(cert.witness_point));
    best_rank = std::max(best_rank, cert.witness_rank);
    const std::size_t target = n - cert.witness_rank;
    if (supplied) {
      cert.kernel_source = "supplied";
      SparseEchelon ech(n);
      for (const auto& v : verified) {
        RatVector val;
        for (const auto& p : v) val.push_back(p.evaluate(cert.witness_point));
        if (ech.add_dense_row(val)) {
          cert.kernel_vectors.push_back(v);
          cert.kernel_degrees.push_back(vector_degree(v));
        }
        if (cert.kernel_vectors.size() == target) break;
      }
    } else {
      cert.kernel_source = "degree-search";
      auto found = kernel_up_to_degree(a, max_degree, cert.witness_point, target);
      cert.kernel_vectors = std::move(found.vectors);
      cert.kernel_degrees = std::move(found.degrees);
    }
    best_kernel = std::max(best_kernel, cert.kernel_vectors.size());
    if (cert.kernel_vectors.size() == target) {
      cert.index = target;
      return cert;
    }
  }
  throw CertificationError("index certification failed: witness rank and kernel vectors do not meet", best_rank,
                           n - best_kernel);
}

StabilizerSample stabilizer_at(const LieAlgebra& alg, const RatVector& point, Rng& rng,
                               const std::optional<std::vector<std::size_t>>& u_indices, int random_combinations) {
  const std::size_t n = alg.dim();
  if (point.size() != n) throw DimensionError("point length does not match algebra dimension");
  StabilizerSample s;
  s.point = point;
  s.stabilizer = kernel_subspace(coadjoint_matrix(alg).evaluate(point));
  s.all_nilpotent = true;
  for (const auto& b : s.stabilizer.basis()) {
    if (!is_nilpotent_matrix(alg.ad(b))) s.all_nilpotent = false;
  }
  for (int c = 0; c < random_combinations && s.stabilizer.dim() > 0; ++c) {
    const RatVector coeffs = random_point(rng, s.stabilizer.dim());
    RatVector v(n);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      for (std::size_t j = 0; j < n; ++j) v[j] += coeffs[k] * s.stabilizer.basis()[k][j];
    }
    if (!is_nilpotent_matrix(alg.ad(v))) s.all_nilpotent = false;
  }
  if (u_indices) s.contained_in_u = Subspace::coordinate(n, *u_indices).contains(s.stabilizer);
  return s;
}

bool gradient_span_check(const LieAlgebra& alg, const std::vector<MultiPoly>& invariants, const RatVector& point) {
  const std::size_t n = alg.dim();
  std::vector<RatVector> grads;
  for (const auto& p : invariants) {
    RatVector g(n);
    for (std::size_t l = 0; l < n; ++l) g[l] = p.derivative(l).evaluate(point);
    grads.push_back(std::move(g));
  }
  return Subspace::span(n, grads) == kernel_subspace(coadjoint_matrix(alg).evaluate(point));
}

G0Result g0_subspace(const LieAlgebra& alg, const Subspace& g_u, const RatVector& point) {
  const Subspace stab = kernel_subspace(coadjoint_matrix(alg).evaluate(point));
  G0Result r;
  r.g0 = g_u + derived(alg) + stab;
  r.proper = r.g0.dim() < alg.dim();
  return r;
}

}  // namespace lieinv
