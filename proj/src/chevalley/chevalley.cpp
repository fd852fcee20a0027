#include "lieinv/chevalley/chevalley.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "lieinv/exact/linalg.hpp"

namespace lieinv {

namespace {

bool is_positive(const Root& r) {
  for (int c : r) {
    if (c != 0) return c > 0;
  }
  return false;
}

bool is_zero_root(const Root& r) {
  return std::all_of(r.begin(), r.end(), [](int c) { return c == 0; });
}

std::string root_digits(const Root& r) {
  std::string s;
  for (int c : r) s += std::to_string(std::abs(c));
  return s;
}

// N_{a,b} with [e_a, e_b] = N_{a,b} e_{a+b}, memoized.
class StructureConstants {
 public:
  explicit StructureConstants(const RootSystem& rs) : rs_(rs) {}

  Rational operator()(const Root& a, const Root& b) {
    const Root s = a + b;
    if (is_zero_root(s) || !rs_.is_root(s)) return 0;
    auto key = std::make_pair(a, b);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Rational n = compute(a, b, s);
    memo_.emplace(std::move(key), n);
    return n;
  }

 private:
  Rational norm(const Root& r) const { return rs_.inner(r, r); }

  Rational compute(const Root& a, const Root& b, const Root& s) {
    const bool pa = is_positive(a), pb = is_positive(b);
    if (!pa && !pb) return -(*this)(-a, -b);
    if (pa != pb) {
      // a + b + c = 0: N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b).
      const Root c = -s;
      if (is_positive(c) == pb) return norm(c) / norm(a) * (*this)(b, c);
      return norm(c) / norm(b) * (*this)(c, a);
    }
    if (rs_.positive_index(a) > rs_.positive_index(b)) return -(*this)(b, a);
    const Root gamma = extraspecial(s);
    if (a == gamma) {
      int p = 0;
      for (Root d = b - a; rs_.is_root(d); d = d - a) ++p;
      return p + 1;
    }
    const Root delta = s - gamma;
    Rational sum = 0;
    if (const Root d = b - gamma; rs_.is_root(d)) sum += (*this)(b, -gamma) * (*this)(a, -delta) / norm(d);
    if (const Root d = a - gamma; rs_.is_root(d)) sum += (*this)(-gamma, a) * (*this)(b, -delta) / norm(d);
    return norm(s) / (*this)(gamma, delta) * sum;
  }

  // Smallest positive root gamma with s - gamma a positive root.
  Root extraspecial(const Root& s) const {
    for (const auto& g : rs_.positive_roots()) {
      if (rs_.positive_index(s - g) >= 0) return g;
    }
    throw std::logic_error("simple root has no extraspecial pair");
  }

  const RootSystem& rs_;
  std::map<std::pair<Root, Root>, Rational> memo_;
};

}  // namespace

std::vector<std::size_t> ChevalleyAlgebra::cartan_indices() const {
  std::vector<std::size_t> out(roots.rank());
  std::iota(out.begin(), out.end(), 2 * roots.num_positive());
  return out;
}

ChevalleyAlgebra build_simple(char type, std::size_t rank) {
  RootSystem rs(type, rank);
  const std::size_t np = rs.num_positive();
  const std::size_t n = 2 * np + rank;
  std::vector<Root> labels;
  std::vector<std::string> names;
  for (const auto& r : rs.positive_roots()) {
    labels.push_back(r);
    names.push_back("e" + root_digits(r));
  }
  for (const auto& r : rs.positive_roots()) {
    labels.push_back(-r);
    names.push_back("f" + root_digits(r));
  }
  for (std::size_t k = 0; k < rank; ++k) {
    labels.emplace_back(rank, 0);
    names.push_back("h" + std::to_string(k + 1));
  }
  auto vector_index = [&](const Root& r) -> std::size_t {
    int k = rs.positive_index(r);
    return k >= 0 ? static_cast<std::size_t>(k) : np + static_cast<std::size_t>(rs.positive_index(-r));
  };

  StructureConstants N(rs);
  LieAlgebra::BracketTable table;
  for (std::size_t i = 0; i < 2 * np; ++i) {
    const Root& a = labels[i];
    for (std::size_t j = i + 1; j < 2 * np; ++j) {
      const Root& b = labels[j];
      const Root s = a + b;
      if (is_zero_root(s)) {
        // [e_a, e_-a] = h_a = sum_k c_k (alpha_k, alpha_k)/(a, a) h_k
        SparseVector h;
        const Rational aa = rs.inner(a, a);
        for (std::size_t k = 0; k < rank; ++k) {
          if (a[k] != 0) h.emplace_back(2 * np + k, a[k] * rs.gram()(k, k) / aa);
        }
        table[{i, j}] = h;
      } else if (rs.is_root(s)) {
        table[{i, j}] = {{vector_index(s), N(a, b)}};
      }
    }
    for (std::size_t k = 0; k < rank; ++k) {
      Root ak(rank, 0);
      ak[k] = 1;
      const Rational c = rs.pairing(a, ak);
      if (c != 0) table[{i, 2 * np + k}] = {{i, -c}};
    }
  }
  ChevalleyAlgebra out{LieAlgebra(names, table), rs, labels};
  if (out.algebra.dim() != n || !jacobi_check(out.algebra, 1).empty()) {
    throw std::logic_error("Chevalley construction failed the Jacobi identity for " + rs.name());
  }
  return out;
}

Element find_orbit_rep(const ChevalleyAlgebra& g, std::size_t target, std::size_t max_support,
                       const ElementFilter& filter) {
  const std::size_t np = g.roots.num_positive();
  const std::size_t n = g.algebra.dim();
  for (std::size_t size = 1; size <= std::min(max_support, np); ++size) {
    std::vector<std::size_t> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      RatVector v(n);
      for (std::size_t k : pick) v[g.positive_vector(k)] = 1;
      Element e(g.algebra, v);
      if (n - rank(ad_matrix(e)) == target && (!filter || filter(e))) return e;
      // next combination in lexicographic order
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == np - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw NotFound("no sum of at most " + std::to_string(max_support) + " positive root vectors has a centralizer of dimension " +
                 std::to_string(target));
}

std::vector<std::string> sl2_triple_violations(const Sl2Triple& t) {
  std::vector<std::string> out;
  if (!(bracket(t.h, t.e) == t.e * 2)) out.push_back("[h,e] != 2e");
  if (!(bracket(t.h, t.f) == t.f * -2)) out.push_back("[h,f] != -2f");
  if (!(bracket(t.e, t.f) == t.h)) out.push_back("[e,f] != h");
  if (!is_ad_nilpotent(t.e)) out.push_back("e not ad-nilpotent");
  if (!is_ad_nilpotent(t.f)) out.push_back("f not ad-nilpotent");
  try {
    for (const auto& es : rational_eigenspaces(ad_matrix(t.h))) {
      if (es.value.get_den() != 1) {
        out.push_back("ad h has a non-integer eigenvalue");
        break;
      }
    }
  } catch (const std::domain_error&) {
    out.push_back("ad h not diagonalizable over Q");
  }
  return out;
}

Sl2Triple jacobson_morozov(const Element& e) {
  if (e.is_zero()) throw std::invalid_argument("Jacobson-Morozov needs a nonzero element");
  if (!is_ad_nilpotent(e)) throw std::invalid_argument("Jacobson-Morozov needs an ad-nilpotent element");
  const auto& alg = e.algebra();
  const std::size_t n = alg.dim();
  const RatMatrix m = ad_matrix(e);
  RatVector rhs(n);
  for (std::size_t i = 0; i < n; ++i) rhs[i] = -2 * e.coeffs()[i];
  auto y = solve(m * m, rhs);
  if (!y) throw std::domain_error("no h in [e, g] with [h, e] = 2e");
  Element h(alg, m * *y);

  RatMatrix stacked(2 * n, n);
  const RatMatrix adh = ad_matrix(h);
  RatVector target(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      stacked(i, j) = m(i, j);
      stacked(n + i, j) = adh(i, j) + (i == j ? 2 : 0);
    }
    target[i] = h.coeffs()[i];
  }
  auto f = solve(stacked, target);
  if (!f) throw std::domain_error("no f completing the sl2-triple");
  Sl2Triple t{e, h, Element(alg, *f)};
  if (auto bad = sl2_triple_violations(t); !bad.empty()) throw std::domain_error("invalid sl2-triple: " + bad.front());
  return t;
}

Subspace reductive_factor(const Sl2Triple& t) { return intersect(centralizer(t.e), centralizer(t.f)); }

Subspace nilradical_u(const LieAlgebra& ge, const Grading& grading) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < ge.dim(); ++i) {
    if (grading.degrees.at(i) > 0) idx.push_back(i);
  }
  return Subspace::coordinate(ge.dim(), idx);
}

std::vector<Rational> ad_spectrum_on(const Element& h, const Subspace& s) {
  std::vector<Rational> out;
  for (const auto& p : ad_eigenspaces(h.algebra(), h.coeffs(), s.basis())) {
    out.insert(out.end(), p.basis.size(), p.value);
  }
  return out;
}

std::optional<RatVector> reductive_torus(const ChevalleyAlgebra& g, const Sl2Triple&, const Subspace& l,
                                         const Subspace& ge) {
  const std::size_t n = g.algebra.dim();
  Subspace t = intersect(l, Subspace::coordinate(n, g.cartan_indices()));
  if (t.dim() != 1) return std::nullopt;
  RatVector v = t.basis().front();
  // Scale so the weights on g(e) are coprime integers.
  Integer den = 1, num = 0;
  for (const auto& p : ad_eigenspaces(g.algebra, v, ge.basis())) {
    den = lcm(den, Integer(p.value.get_den()));
  }
  for (const auto& p : ad_eigenspaces(g.algebra, v, ge.basis())) {
    num = gcd(num, Integer(p.value.get_num() * (den / p.value.get_den())));
  }
  if (num == 0) return std::nullopt;
  const Rational scale = Rational(den) / Rational(num);
  for (auto& x : v) x *= scale;
  return v;
}

GradedCentralizer graded_centralizer(const ChevalleyAlgebra& g, const Sl2Triple& t) {
  GradedCentralizer out{t, centralizer(t.e), centralizer(t.f), {}, {}, {}, {}, {}, {}};
  out.l = intersect(out.ge, out.gf);
  out.torus = reductive_torus(g, t, out.l, out.ge);
  std::vector<Rational> degrees, weights;
  for (const auto& hp : ad_eigenspaces(g.algebra, t.h.coeffs(), out.ge.basis())) {
    if (!out.torus) {
      for (const auto& v : hp.basis) {
        out.basis.push_back(v);
        degrees.push_back(hp.value);
        weights.push_back(0);
      }
      continue;
    }
    for (const auto& tp : ad_eigenspaces(g.algebra, *out.torus, hp.basis)) {
      for (const auto& v : tp.basis) {
        out.basis.push_back(v);
        degrees.push_back(hp.value);
        weights.push_back(tp.value);
      }
    }
  }
  out.algebra = subalgebra_from_basis(g.algebra, out.basis);
  out.grading = Grading{degrees};
  out.t_weights = weights;
  return out;
}

}  // namespace lieinv
