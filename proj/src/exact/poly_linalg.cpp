#include "lieinv/exact/poly_linalg.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <unordered_map>

#include "lieinv/exact/linalg.hpp"

namespace lieinv {

namespace {

// Cheaper pivots keep the intermediate minors small.
bool better_pivot(const MultiPoly& a, const MultiPoly& b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  return a.size() < b.size();
}

}  // namespace

MultiPoly bareiss_det(const PolyMatrix& input) {
  if (!input.is_square()) throw DimensionError("determinant of a non-square matrix");
  input.check_uniform();
  const std::size_t n = input.rows();
  const std::size_t nv = input.nvars();
  if (n == 0) return MultiPoly::constant(nv, 1);
  PolyMatrix m = input;
  MultiPoly prev = MultiPoly::constant(nv, 1);
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::optional<std::size_t> piv;
    for (std::size_t i = k; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      if (!piv || better_pivot(m(i, k), m(*piv, k))) piv = i;
    }
    if (!piv) return MultiPoly(nv);
    if (*piv != k) {
      m.swap_rows(*piv, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly num = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = num.exact_divide(prev);
      }
    }
    prev = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

PolyVector normalize_vector(PolyVector v) {
  std::vector<Rational> coeffs;
  for (const auto& p : v) {
    for (const auto& t : p.terms()) coeffs.push_back(t.coeff);
  }
  if (coeffs.empty()) return v;
  Rational scale = 1 / content(coeffs);
  for (const auto& p : v) {
    if (p.is_zero()) continue;
    if (p.leading_term().coeff < 0) scale = -scale;
    break;
  }
  for (auto& p : v) p *= scale;
  return v;
}

PolyKernel frf_kernel(const PolyMatrix& input) {
  input.check_uniform();
  const std::size_t rows = input.rows();
  const std::size_t cols = input.cols();
  const std::size_t nv = input.nvars();
  PolyMatrix m = input;
  std::vector<std::size_t> perm(cols);
  std::iota(perm.begin(), perm.end(), 0);
  MultiPoly prev = MultiPoly::constant(nv, 1);
  std::size_t r = 0;
  for (; r < std::min(rows, cols); ++r) {
    // Full pivoting over the trailing block.
    std::optional<std::pair<std::size_t, std::size_t>> piv;
    for (std::size_t i = r; i < rows; ++i) {
      for (std::size_t j = r; j < cols; ++j) {
        if (m(i, j).is_zero()) continue;
        if (!piv || better_pivot(m(i, j), m(piv->first, piv->second))) piv = {{i, j}};
      }
    }
    if (!piv) break;
    m.swap_rows(piv->first, r);
    if (piv->second != r) {
      for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, piv->second), m(i, r));
      std::swap(perm[piv->second], perm[r]);
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = r + 1; j < cols; ++j) {
        MultiPoly num = m(r, r) * m(i, j) - m(i, r) * m(r, j);
        m(i, j) = num.exact_divide(prev);
      }
      m(i, r) = MultiPoly(nv);
    }
    prev = m(r, r);
  }

  PolyKernel out;
  out.rank = r;
  // Row k of the eliminated matrix holds (k+1)-minors; with D the last pivot,
  // D*x is polynomial and each back-substitution division is exact.
  const MultiPoly& d = prev;
  for (std::size_t f = r; f < cols; ++f) {
    std::vector<MultiPoly> x(r, MultiPoly(nv));
    for (std::size_t i = r; i-- > 0;) {
      MultiPoly acc = -(d * m(i, f));
      for (std::size_t j = i + 1; j < r; ++j) {
        if (!m(i, j).is_zero()) acc -= m(i, j) * x[j];
      }
      x[i] = acc.exact_divide(m(i, i));
    }
    PolyVector v(cols, MultiPoly(nv));
    for (std::size_t i = 0; i < r; ++i) v[perm[i]] = std::move(x[i]);
    v[perm[f]] = d;
    out.basis.push_back(normalize_vector(std::move(v)));
  }
  return out;
}

std::size_t rank_at_point(const std::vector<PolyVector>& vectors, std::span<const Rational> point) {
  if (vectors.empty()) return 0;
  SparseEchelon ech(vectors.front().size());
  for (const auto& v : vectors) {
    RatVector val;
    val.reserve(v.size());
    for (const auto& p : v) val.push_back(p.evaluate(point));
    ech.add_dense_row(val);
  }
  return ech.rank();
}

namespace {

// All exponent vectors of total degree d in n variables, in decreasing grlex order.
std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  std::vector<std::uint16_t> e(n, 0);
  auto rec = [&](auto&& self, std::size_t var, unsigned left) -> void {
    if (var + 1 == n) {
      e[var] = static_cast<std::uint16_t>(left);
      out.emplace_back(e);
      return;
    }
    for (unsigned k = left + 1; k-- > 0;) {
      e[var] = static_cast<std::uint16_t>(k);
      self(self, var + 1, left - k);
    }
    e[var] = 0;
  };
  if (n == 0) {
    if (d == 0) out.emplace_back(std::vector<std::uint16_t>{});
    return out;
  }
  rec(rec, 0, d);
  return out;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

int common_entry_degree(const PolyMatrix& m) {
  int deg = -1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (const auto& p : m.row(i)) {
      if (p.is_zero()) continue;
      if (!p.is_homogeneous()) throw std::invalid_argument("matrix entries must be homogeneous");
      if (deg >= 0 && p.total_degree() != deg) throw std::invalid_argument("matrix entries must share one degree");
      deg = p.total_degree();
    }
  }
  return deg;
}

}  // namespace

std::vector<PolyVector> homogeneous_kernel(const PolyMatrix& m, unsigned degree) {
  m.check_uniform();
  const std::size_t nv = m.nvars();
  const std::size_t cols = m.cols();
  common_entry_degree(m);
  const auto monos = monomials_of_degree(nv, degree);
  const std::size_t nm = monos.size();
  std::unordered_map<Monomial, std::size_t, MonomialHash> mono_index;
  for (std::size_t k = 0; k < nm; ++k) mono_index.emplace(monos[k], k);

  // Unknown (j, k): coefficient of monos[k] in entry j. Equation (i, M): the
  // coefficient of M in row i of m*v.
  const std::size_t nunknowns = cols * nm;
  std::vector<std::unordered_map<Monomial, std::size_t, MonomialHash>> eq_index(m.rows());
  std::vector<SparseEchelon::Row> equations;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::unordered_map<std::size_t, std::unordered_map<std::size_t, Rational>> acc;
    for (std::size_t j = 0; j < cols; ++j) {
      for (const auto& t : m(i, j).terms()) {
        for (std::size_t k = 0; k < nm; ++k) {
          Monomial prod = t.mono * monos[k];
          auto [it, inserted] = eq_index[i].try_emplace(prod, equations.size());
          if (inserted) equations.emplace_back();
          acc[it->second][j * nm + k] += t.coeff;
        }
      }
    }
    for (auto& [eq, entries] : acc) {
      for (auto& [u, c] : entries) {
        if (!is_zero(c)) equations[eq].emplace_back(u, std::move(c));
      }
      std::sort(equations[eq].begin(), equations[eq].end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
    }
  }

  UnionFind uf(nunknowns);
  for (const auto& eq : equations) {
    for (std::size_t t = 1; t < eq.size(); ++t) uf.unite(eq.front().first, eq[t].first);
  }
  // Group unknowns and equations by component, in order of smallest unknown.
  std::unordered_map<std::size_t, std::vector<std::size_t>> comp_unknowns;
  std::vector<std::size_t> comp_order;
  for (std::size_t u = 0; u < nunknowns; ++u) {
    const std::size_t root = uf.find(u);
    auto& bucket = comp_unknowns[root];
    if (bucket.empty()) comp_order.push_back(root);
    bucket.push_back(u);
  }
  std::unordered_map<std::size_t, std::vector<std::size_t>> comp_equations;
  for (std::size_t e = 0; e < equations.size(); ++e) {
    if (!equations[e].empty()) comp_equations[uf.find(equations[e].front().first)].push_back(e);
  }

  std::vector<PolyVector> out;
  for (std::size_t root : comp_order) {
    const auto& unknowns = comp_unknowns[root];
    std::unordered_map<std::size_t, std::size_t> local;
    for (std::size_t a = 0; a < unknowns.size(); ++a) local.emplace(unknowns[a], a);
    SparseEchelon ech(unknowns.size());
    for (std::size_t e : comp_equations[root]) {
      SparseEchelon::Row row;
      row.reserve(equations[e].size());
      for (const auto& [u, c] : equations[e]) row.emplace_back(local.at(u), c);
      ech.add_row(std::move(row));
    }
    for (const auto& kv : ech.kernel()) {
      std::vector<std::vector<MultiPoly::Term>> entries(cols);
      for (std::size_t a = 0; a < unknowns.size(); ++a) {
        if (is_zero(kv[a])) continue;
        entries[unknowns[a] / nm].push_back({monos[unknowns[a] % nm], kv[a]});
      }
      PolyVector v;
      v.reserve(cols);
      for (auto& e : entries) v.push_back(MultiPoly::from_terms(nv, std::move(e)));
      out.push_back(normalize_vector(std::move(v)));
    }
  }
  return out;
}

DegreeCappedKernel kernel_up_to_degree(const PolyMatrix& m, unsigned max_degree, std::span<const Rational> probe,
                                       std::size_t target) {
  if (probe.size() != m.nvars()) throw DimensionError("probe point length does not match variable count");
  DegreeCappedKernel out;
  SparseEchelon ech(m.cols());
  if (target == 0) {
    out.reached_target = true;
    return out;
  }
  for (unsigned d = 0; d <= max_degree; ++d) {
    for (auto& v : homogeneous_kernel(m, d)) {
      RatVector val;
      val.reserve(v.size());
      for (const auto& p : v) val.push_back(p.evaluate(probe));
      if (!ech.add_dense_row(val)) continue;
      out.vectors.push_back(std::move(v));
      out.degrees.push_back(d);
      if (out.vectors.size() == target) {
        out.reached_target = true;
        return out;
      }
    }
  }
  return out;
}

}  // namespace lieinv
