// Acceptance run: one PASS/FAIL line per criterion, each against its time
// budget. Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "lieinv/app/fixture.hpp"
#include "lieinv/app/pipeline.hpp"
#include "lieinv/exact/linalg.hpp"

using namespace lieinv;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int n, const char* title, double budget_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (o.ok && secs > budget_s) {
    o.ok = false;
    o.detail = "over budget";
  }
  if (!o.ok) ++failures;
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2fs of %.0fs", secs, budget_s);
  std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << n << ": " << title << " (" << timing << ")";
  if (!o.detail.empty()) std::cout << ": " << o.detail;
  std::cout << std::endl;
}

const CentralizerFixture& fixture() {
  static const CentralizerFixture fx = load_fixture(default_fixture_path());
  return fx;
}

const F4Example& f4() {
  static const F4Example ex = build_f4_example();
  return ex;
}

Rational small(Rng& rng, long bound) { return Rational(static_cast<long>(rng() % (2 * bound + 1)) - bound); }

// Laplace expansion along the first row: the oracle for Bareiss.
MultiPoly cofactor_det(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return MultiPoly::constant(m.nvars(), 1);
  if (n == 1) return m(0, 0);
  MultiPoly sum(m.nvars());
  for (std::size_t j = 0; j < n; ++j) {
    PolyMatrix minor(n - 1, n - 1, m.nvars());
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t c = 0, cc = 0; c < n; ++c) {
        if (c != j) minor(r - 1, cc++) = m(r, c);
      }
    }
    const MultiPoly term = m(0, j) * cofactor_det(minor);
    if (j % 2) sum -= term;
    else sum += term;
  }
  return sum;
}

MultiPoly random_poly(Rng& rng, std::size_t nvars, unsigned max_degree, std::size_t terms) {
  std::vector<MultiPoly::Term> ts;
  for (std::size_t t = 0; t < terms; ++t) {
    std::vector<std::uint16_t> exps(nvars, 0);
    const unsigned deg = rng() % (max_degree + 1);
    for (unsigned d = 0; d < deg; ++d) ++exps[rng() % nvars];
    ts.push_back({Monomial(exps), small(rng, 5)});
  }
  return MultiPoly::from_terms(nvars, std::move(ts));
}

// Random antisymmetric structure constants; Jacobi is not needed for the
// coadjoint matrix to be skew.
LieAlgebra random_table(Rng& rng, std::size_t n) {
  LieAlgebra::BracketTable t;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      SparseVector v;
      for (std::size_t k = 0; k < n; ++k) {
        if (rng() % 3 == 0) {
          Rational c = small(rng, 3);
          if (c != 0) v.emplace_back(k, c);
        }
      }
      if (!v.empty()) t[{i, j}] = v;
    }
  }
  return LieAlgebra(n, t);
}

bool skew(const PolyMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!(a(i, j) == -a(j, i))) return false;
    }
  }
  return true;
}

RatMatrix random_invertible(Rng& rng, std::size_t n) {
  for (;;) {
    RatMatrix p(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) p(i, j) = small(rng, 4);
    }
    if (determinant(p) != 0) return p;
  }
}

std::vector<RatVector> transform(const std::vector<RatVector>& basis, const RatMatrix& p) {
  std::vector<RatVector> out;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    RatVector v(basis[0].size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t k = 0; k < v.size(); ++k) v[k] += p(i, j) * basis[i][k];
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace

int main() {
  criterion(1, "fixture integrity", 5, [] {
    Outcome o;
    const auto& fx = fixture();
    const LieAlgebra& g = fx.algebra;
    o.require(g.dim() == 16, "dimension " + std::to_string(g.dim()));
    o.require(jacobi_check(g).empty(), "Jacobi violated");
    o.require(fx.grading && fx.grading->is_valid(g), "grading not additive");
    const Subspace z = center(g);
    o.require(z.dim() == 1, "center of dimension " + std::to_string(z.dim()));
    o.require(is_unimodular(g), "not unimodular");
    // trace ad x_i recomputed directly from the table
    for (std::size_t i = 0; i < g.dim(); ++i) {
      Rational tr = 0;
      for (std::size_t j = 0; j < g.dim(); ++j) {
        for (const auto& [k, c] : g.basis_bracket(i, j)) {
          if (k == j) tr += c;
        }
      }
      o.require(tr == 0, "trace ad x" + std::to_string(i + 1) + " nonzero");
    }
    return o;
  });

  criterion(2, "displayed invariant annihilated by all 16 basis elements", 5, [] {
    Outcome o;
    const auto& fx = fixture();
    const LieAlgebra& g = fx.algebra;
    const std::size_t n = g.dim();
    for (std::size_t j = 0; j < n; ++j) {
      MultiPoly acc(n);
      for (std::size_t l = 0; l < n; ++l) {
        MultiPoly br(n);
        for (const auto& [k, c] : g.basis_bracket(j, l)) br += MultiPoly::variable(n, k, c);
        acc += fx.displayed_p.derivative(l) * br;
      }
      o.require(acc.is_zero(), "[x" + std::to_string(j + 1) + ", p] != 0");
    }
    o.require(!fx.displayed_p.is_zero(), "p is zero");
    return o;
  });

  criterion(3, "certified index 4 of the fixture", 60, [] {
    Outcome o;
    const auto& fx = fixture();
    const auto k = fx.k();
    const IndexCertificate c = certify_index(fx.algebra, kDefaultSeed, &k);
    o.require(c.index == 4, "index " + std::to_string(c.index));
    o.require(c.witness_rank == 12, "witness rank " + std::to_string(c.witness_rank));
    o.require(c.kernel_vectors.size() == 4, "kernel vectors " + std::to_string(c.kernel_vectors.size()));
    const PolyMatrix a = coadjoint_matrix(fx.algebra);
    for (const auto& v : c.kernel_vectors) {
      for (const auto& entry : a.apply(v)) o.require(entry.is_zero(), "A v != 0");
    }
    o.require(rank(a.evaluate(c.witness_point)) == 12, "witness rank not reproduced");
    o.require(rank_at_point(c.kernel_vectors, c.witness_point) == 4, "kernel vectors dependent at witness");
    return o;
  });

  criterion(4, "stabilizers at 10 seeded points", 30, [] {
    Outcome o;
    const auto& fx = fixture();
    Rng rng(kDefaultSeed);
    for (int i = 0; i < 10; ++i) {
      const RatVector pt = random_point(rng, fx.algebra.dim());
      const StabilizerSample s = stabilizer_at(fx.algebra, pt, rng, fx.u_indices, 5);
      o.require(s.stabilizer.dim() == 4, "stabilizer of dimension " + std::to_string(s.stabilizer.dim()));
      o.require(s.all_nilpotent, "non-nilpotent stabilizer element");
      o.require(s.contained_in_u && !*s.contained_in_u, "stabilizer inside g_u");
    }
    return o;
  });

  criterion(5, "F4 pipeline", 600, [] {
    Outcome o;
    const ChevalleyAlgebra g = build_simple('F', 4);
    o.require(g.algebra.dim() == 52 && g.roots.num_positive() == 24, "F4 shape");
    o.require(jacobi_check(g.algebra, 1).empty(), "F4 Jacobi");
    const auto& ex = f4();
    std::size_t support = 0;
    for (const auto& c : ex.e.coeffs()) support += c != 0;
    o.require(support == 3, "e has support " + std::to_string(support));
    o.require(centralizer(ex.e).dim() == 16, "dim g(e) != 16");
    o.require(sl2_triple_violations(ex.gc.triple).empty(), "sl2 triple");
    const auto spec = ad_spectrum_on(ex.gc.triple.h, ex.gc.ge);
    std::map<Rational, int> mult;
    for (const auto& s : spec) ++mult[s];
    const std::map<Rational, int> want{{0, 3}, {1, 4}, {2, 2}, {3, 2}, {4, 3}, {5, 2}};
    o.require(mult == want, "ad h spectrum on g(e)");
    const Subspace u = nilradical_u(ex.gc.algebra, ex.gc.grading);
    o.require(ex.gc.l.dim() == 3, "dim l = " + std::to_string(ex.gc.l.dim()));
    o.require(u.dim() == 13, "dim u = " + std::to_string(u.dim()));
    o.require(determinant(killing_pairing(g.algebra, ex.gc.ge.basis(), ex.gc.gf.basis())) != 0,
              "Killing pairing of g(e) and g(f) degenerate");
    return o;
  });

  criterion(6, "F4 torus weights and hypothesis check", 60, [] {
    Outcome o;
    const auto& ex = f4();
    o.require(ex.weights.F.has_value(), "g(f) weights missing");
    o.require(ex.weights.symmetry_violations().empty(), "four-fold weight symmetry");
    for (const auto& w : ex.weights.nonzero_weights()) {
      Weight neg = w;
      for (auto& c : neg) c = -c;
      o.require(ex.weights.dim_e(w) == ex.weights.dim_e(neg) && ex.weights.dim_e(w) == ex.weights.dim_f(w) &&
                    ex.weights.dim_f(w) == ex.weights.dim_f(neg),
                "dimension mismatch at a weight");
    }
    const GradedBasis gb{ex.gc.basis, ex.gc.grading.degrees};
    const IndexDropReport l3 = check_l3cn2(gb, ex.gc.l, ex.weights);
    o.require(!l3.top_weights.empty(), "no top weights");
    for (const auto& w : l3.top_weights) o.require(delta_lambda(ex.weights, w).is_zero(), "top delta nonzero");
    const HypothesisReport h = check_c3cn2(gb, ex.gc.l, ex.weights, kDefaultSeed);
    o.require(h.d == 5, "d != 5");
    o.require(h.top_kernel_dim == 2, "top dimension " + std::to_string(h.top_kernel_dim));
    o.require(!h.top_centralizes_t, "top eigenspace centralizes t");
    o.require(h.rank_l == 1, "rank l = " + std::to_string(h.rank_l));
    o.require(h.generic_stabilizer_nilpotent, "gsn false");
    return o;
  });

  criterion(7, "Jacobian rank and gradient span", 30, [] {
    Outcome o;
    const auto& fx = fixture();
    const auto inv = fx.invariants();
    Rng rng(kDefaultSeed);
    for (int i = 0; i < 10; ++i) {
      const RatVector pt = random_point(rng, fx.algebra.dim());
      o.require(jacobian_rank(inv, pt) == 4, "Jacobian rank");
      o.require(gradient_span_check(fx.algebra, inv, pt), "gradient span differs from stabilizer");
    }
    return o;
  });

  criterion(8, "property suites", 120, [] {
    Outcome o;
    Rng rng(kDefaultSeed);

    for (int i = 0; i < 200; ++i) {
      const std::size_t n = 1 + rng() % 4;
      PolyMatrix m(n, n, 3);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) m(r, c) = random_poly(rng, 3, 2, 1 + rng() % 3);
      }
      if (i % 10 == 0 && n > 1) {
        for (std::size_t c = 0; c < n; ++c) m(n - 1, c) = m(0, c) * Rational(2);
      }
      o.require(bareiss_det(m) == cofactor_det(m), "Bareiss differs from cofactor expansion");
    }

    std::vector<PolyMatrix> kernels{coadjoint_matrix(fixture().algebra), coadjoint_matrix(f4().gc.algebra)};
    for (int i = 0; i < 20; ++i) {
      const std::size_t rows = 2 + rng() % 3;
      PolyMatrix m(rows, rows + 1 + rng() % 2, 3);
      for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = random_poly(rng, 3, 1, 2);
      }
      kernels.push_back(m);
    }
    for (const auto& m : kernels) {
      const PolyKernel k = frf_kernel(m);
      o.require(k.basis.size() == m.cols() - k.rank, "kernel size");
      for (const auto& v : k.basis) {
        for (const auto& e : m.apply(v)) o.require(e.is_zero(), "kernel vector not annihilated");
      }
    }

    for (const LieAlgebra& alg : {build_simple('F', 4).algebra, build_simple('B', 3).algebra, f4().gc.algebra}) {
      for (int i = 0; i < 34; ++i) {
        auto rand_elem = [&] { return Element(alg, random_point(rng, alg.dim(), 5)); };
        const Element x = rand_elem(), y = rand_elem(), z = rand_elem();
        o.require(killing(bracket(x, y), z) + killing(y, bracket(x, z)) == 0, "Killing form not invariant");
      }
    }

    int changes = 0;
    for (const WeightDecomp* base : {&f4().weights}) {
      for (const auto& w : base->nonzero_weights()) {
        if (delta_lambda(*base, w).is_zero()) continue;
        Weight neg = w;
        for (auto& c : neg) c = -c;
        for (int rep = 0; rep < 6 && changes < 50; ++rep, ++changes) {
          WeightDecomp d = *base;
          const RatMatrix p = random_invertible(rng, d.E.at(w).size());
          const RatMatrix q = random_invertible(rng, d.E.at(neg).size());
          d.E[w] = transform(d.E.at(w), p);
          d.E[neg] = transform(d.E.at(neg), q);
          o.require(delta_lambda(d, w) == delta_lambda(*base, w) * (determinant(p) * determinant(q)),
                    "delta not covariant");
        }
      }
    }
    {
      const WeightDecomp fd = weight_decomposition(
          fixture().algebra, Subspace::whole(16), std::nullopt,
          Torus{{[] {
            RatVector t(16);
            t[fixture().torus.at(0)] = 1;
            return t;
          }()}});
      for (const auto& w : fd.nonzero_weights()) {
        if (delta_lambda(fd, w).is_zero()) continue;
        Weight neg = w;
        for (auto& c : neg) c = -c;
        for (int rep = 0; rep < 10 && changes < 50; ++rep, ++changes) {
          WeightDecomp d = fd;
          const RatMatrix p = random_invertible(rng, d.E.at(w).size());
          const RatMatrix q = random_invertible(rng, d.E.at(neg).size());
          d.E[w] = transform(d.E.at(w), p);
          d.E[neg] = transform(d.E.at(neg), q);
          o.require(delta_lambda(d, w) == delta_lambda(fd, w) * (determinant(p) * determinant(q)),
                    "delta not covariant");
        }
      }
    }
    o.require(changes == 50, "only " + std::to_string(changes) + " basis changes");

    std::vector<LieAlgebra> algs{fixture().algebra, f4().gc.algebra, build_simple('A', 1).algebra,
                                 build_simple('G', 2).algebra};
    for (int i = 0; i < 10; ++i) algs.push_back(random_table(rng, 3 + rng() % 6));
    for (const auto& alg : algs) {
      const PolyMatrix a = coadjoint_matrix(alg);
      o.require(skew(a) && a.is_skew_symmetric(), "coadjoint matrix not skew");
    }
    return o;
  });

  std::cout << (failures ? "acceptance: FAIL" : "acceptance: all criteria passed") << std::endl;
  return failures ? 1 : 0;
}
