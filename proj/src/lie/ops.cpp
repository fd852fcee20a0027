#include "lieinv/lie/ops.hpp"

#include <stdexcept>

#include "lieinv/exact/linalg.hpp"

namespace lieinv {

namespace {

// Accumulates c * [x_a, v] into out for a sparse v.
void add_bracket_with(const LieAlgebra& alg, std::size_t a, const SparseVector& v, const Rational& c,
                      RatVector& out) {
  for (const auto& [b, cb] : v) {
    for (const auto& [k, ck] : alg.basis_bracket(a, b)) out[k] += c * cb * ck;
  }
}

}  // namespace

std::optional<std::array<std::size_t, 3>> Grading::first_violation(const LieAlgebra& alg) const {
  if (degrees.size() != alg.dim()) throw DimensionError("grading length does not match algebra dimension");
  for (const auto& [key, v] : alg.table()) {
    const Rational target = degrees[key.first] + degrees[key.second];
    for (const auto& [k, c] : v) {
      if (degrees[k] != target) return std::array<std::size_t, 3>{key.first, key.second, k};
    }
  }
  return std::nullopt;
}

std::vector<std::array<std::size_t, 3>> jacobi_check(const LieAlgebra& alg, std::size_t max_reported) {
  const std::size_t n = alg.dim();
  std::vector<std::array<std::size_t, 3>> bad;
  RatVector acc(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        // [x_i,[x_j,x_k]] + [x_j,[x_k,x_i]] + [x_k,[x_i,x_j]]
        std::fill(acc.begin(), acc.end(), Rational(0));
        add_bracket_with(alg, i, alg.basis_bracket(j, k), 1, acc);
        add_bracket_with(alg, j, alg.basis_bracket(k, i), 1, acc);
        add_bracket_with(alg, k, alg.basis_bracket(i, j), 1, acc);
        if (!is_zero(acc)) {
          bad.push_back({i, j, k});
          if (bad.size() >= max_reported) return bad;
        }
      }
    }
  }
  return bad;
}

RatMatrix ad_matrix(const Element& v) { return v.algebra().ad(v.coeffs()); }

bool is_nilpotent_matrix(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionError("nilpotency of a non-square matrix");
  // Repeated squaring: m^(2^k) with 2^k >= n.
  RatMatrix p = m;
  for (std::size_t power = 1; power < m.rows(); power *= 2) {
    p = p * p;
    bool all_zero = true;
    for (std::size_t i = 0; i < p.rows() && all_zero; ++i) all_zero = is_zero(RatVector(p.row(i).begin(), p.row(i).end()));
    if (all_zero) return true;
  }
  for (std::size_t i = 0; i < p.rows(); ++i) {
    for (const auto& x : p.row(i)) {
      if (!is_zero(x)) return false;
    }
  }
  return true;
}

bool is_ad_nilpotent(const Element& v) { return is_nilpotent_matrix(ad_matrix(v)); }

Subspace centralizer(const Element& v) { return kernel_subspace(ad_matrix(v)); }

Subspace centralizer(const LieAlgebra& alg, const Subspace& s) {
  const std::size_t n = alg.dim();
  if (s.ambient_dim() != n) throw DimensionError("subspace does not live in this algebra");
  if (s.dim() == 0) return Subspace::whole(n);
  RatMatrix stacked(n * s.dim(), n);
  for (std::size_t b = 0; b < s.dim(); ++b) {
    RatMatrix a = alg.ad(s.basis()[b]);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) stacked(b * n + i, j) = a(i, j);
    }
  }
  return kernel_subspace(stacked);
}

Subspace center(const LieAlgebra& alg) { return centralizer(alg, Subspace::whole(alg.dim())); }

Subspace derived(const LieAlgebra& alg) {
  std::vector<RatVector> vs;
  for (const auto& [key, v] : alg.table()) {
    RatVector d(alg.dim());
    for (const auto& [k, c] : v) d[k] = c;
    vs.push_back(std::move(d));
  }
  return Subspace::span(alg.dim(), vs);
}

Rational killing(const Element& a, const Element& b) {
  if (!(a.algebra() == b.algebra())) throw AlgebraMismatch("elements belong to different algebras");
  const RatVector kb = a.algebra().killing_gram() * b.coeffs();
  Rational s = 0;
  for (std::size_t i = 0; i < kb.size(); ++i) s += a.coeffs()[i] * kb[i];
  return s;
}

RatMatrix killing_pairing(const LieAlgebra& alg, const std::vector<RatVector>& left,
                          const std::vector<RatVector>& right) {
  const RatMatrix& k = alg.killing_gram();
  RatMatrix out(left.size(), right.size());
  for (std::size_t j = 0; j < right.size(); ++j) {
    const RatVector kr = k * right[j];
    for (std::size_t i = 0; i < left.size(); ++i) {
      Rational s = 0;
      for (std::size_t t = 0; t < kr.size(); ++t) {
        if (!is_zero(left[i][t])) s += left[i][t] * kr[t];
      }
      out(i, j) = s;
    }
  }
  return out;
}

bool is_unimodular(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i) {
    // trace ad x_i = sum_j c_ij^j
    Rational tr = 0;
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [k, c] : alg.basis_bracket(i, j)) {
        if (k == j) tr += c;
      }
    }
    if (!is_zero(tr)) return false;
  }
  return true;
}

Grading grading_from(const Element& v) {
  const RatMatrix a = ad_matrix(v);
  const std::size_t n = a.rows();
  Grading g;
  g.degrees.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i != j && !is_zero(a(i, j))) {
        throw std::domain_error("ad does not act diagonally on basis vector " + v.algebra().names()[j]);
      }
    }
    g.degrees[j] = a(j, j);
  }
  if (auto bad = g.first_violation(v.algebra())) {
    throw std::logic_error("grading from a derivation is not additive");
  }
  return g;
}

bool is_subalgebra(const LieAlgebra& alg, const Subspace& s) {
  for (std::size_t a = 0; a < s.dim(); ++a) {
    for (std::size_t b = a + 1; b < s.dim(); ++b) {
      if (!s.contains(alg.bracket(s.basis()[a], s.basis()[b]))) return false;
    }
  }
  return true;
}

LieAlgebra subalgebra_from_basis(const LieAlgebra& alg, const std::vector<RatVector>& basis,
                                 std::vector<std::string> names) {
  const std::size_t m = basis.size();
  if (names.empty()) {
    for (std::size_t i = 0; i < m; ++i) names.push_back("y" + std::to_string(i + 1));
  }
  if (names.size() != m) throw DimensionError("name count does not match basis size");
  BasisFrame frame(alg.dim(), basis);
  LieAlgebra::BracketTable table;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      auto coords = frame.coordinates(alg.bracket(basis[a], basis[b]));
      if (!coords) {
        throw std::domain_error("span is not closed under the bracket: [" + names[a] + ", " + names[b] + "]");
      }
      SparseVector v;
      for (std::size_t k = 0; k < m; ++k) {
        if (!is_zero((*coords)[k])) v.emplace_back(k, (*coords)[k]);
      }
      if (!v.empty()) table.emplace(std::make_pair(a, b), std::move(v));
    }
  }
  return LieAlgebra(std::move(names), table);
}

std::vector<AdEigenspace> ad_eigenspaces(const LieAlgebra& alg, const RatVector& x, const std::vector<RatVector>& basis) {
  if (basis.empty()) return {};
  BasisFrame frame(alg.dim(), basis);
  RatMatrix m(frame.dim(), frame.dim());
  for (std::size_t j = 0; j < frame.dim(); ++j) {
    auto c = frame.coordinates(alg.bracket(x, frame.basis()[j]));
    if (!c) throw std::invalid_argument("subspace is not stable under ad x");
    for (std::size_t i = 0; i < frame.dim(); ++i) m(i, j) = (*c)[i];
  }
  std::vector<AdEigenspace> out;
  for (const auto& es : rational_eigenspaces(m)) {
    std::vector<RatVector> amb;
    for (const auto& v : es.basis) amb.push_back(frame.combine(v));
    out.push_back({es.value, Subspace::span(alg.dim(), amb).basis()});
  }
  return out;
}

}  // namespace lieinv
