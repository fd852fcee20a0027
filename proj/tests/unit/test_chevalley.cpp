#include <gtest/gtest.h>

#include <map>
#include <set>

#include "lieinv/chevalley/chevalley.hpp"
#include "lieinv/exact/linalg.hpp"

using namespace lieinv;

namespace {

// Positive roots by closing the simple roots under the simple reflections
// s_i(r) = r - <r, alpha_i^vee> alpha_i, using only the Cartan matrix.
std::size_t reflection_closure_positive(const Matrix<int>& cartan) {
  const std::size_t n = cartan.rows();
  std::set<Root> all;
  std::vector<Root> todo;
  for (std::size_t i = 0; i < n; ++i) {
    Root r(n, 0);
    r[i] = 1;
    todo.push_back(r);
  }
  while (!todo.empty()) {
    Root r = todo.back();
    todo.pop_back();
    if (!all.insert(r).second) continue;
    for (std::size_t i = 0; i < n; ++i) {
      int c = 0;
      for (std::size_t j = 0; j < n; ++j) c += r[j] * cartan(j, i);
      Root s = r;
      s[i] -= c;
      if (!all.count(s)) todo.push_back(s);
    }
  }
  return all.size() / 2;
}

const ChevalleyAlgebra& f4() {
  static const ChevalleyAlgebra g = build_simple('F', 4);
  return g;
}

bool reductive_dim_3(const Element& e) { return reductive_factor(jacobson_morozov(e)).dim() == 3; }

std::map<Rational, int> multiset(const std::vector<Rational>& xs) {
  std::map<Rational, int> m;
  for (const auto& x : xs) ++m[x];
  return m;
}

}  // namespace

TEST(RootSystem, CountsMatchReflectionClosure) {
  const std::vector<std::tuple<char, std::size_t, std::size_t>> cases{
      {'A', 1, 1}, {'A', 4, 10}, {'B', 2, 4},  {'B', 3, 9},   {'C', 3, 9},   {'C', 4, 16}, {'D', 4, 12},
      {'D', 5, 20}, {'E', 6, 36}, {'E', 7, 63}, {'E', 8, 120}, {'F', 4, 24}, {'G', 2, 6}};
  for (auto [type, rank, count] : cases) {
    RootSystem rs(type, rank);
    EXPECT_EQ(rs.num_positive(), count) << rs.name();
    EXPECT_EQ(reflection_closure_positive(rs.cartan_matrix()), count) << rs.name();
  }
}

TEST(RootSystem, OrderIsHeightThenLex) {
  RootSystem rs('F', 4);
  const auto& pr = rs.positive_roots();
  for (std::size_t k = 1; k < pr.size(); ++k) {
    EXPECT_TRUE(height(pr[k - 1]) < height(pr[k]) || (height(pr[k - 1]) == height(pr[k]) && pr[k - 1] < pr[k]));
  }
  EXPECT_EQ(pr.back(), (Root{2, 3, 4, 2}));
  EXPECT_EQ(rs.cartan_matrix()(1, 2), -2);
  EXPECT_EQ(rs.cartan_matrix()(2, 1), -1);
}

TEST(RootSystem, RejectsInvalidTypes) {
  EXPECT_THROW(RootSystem('Z', 9), std::invalid_argument);
  EXPECT_THROW(RootSystem('E', 5), std::invalid_argument);
  EXPECT_THROW(RootSystem('F', 3), std::invalid_argument);
  EXPECT_THROW(RootSystem('A', 0), std::invalid_argument);
  EXPECT_THROW(build_simple('G', 3), std::invalid_argument);
}

TEST(BuildSimple, Sl2Relations) {
  auto g = build_simple('A', 1);
  ASSERT_EQ(g.algebra.dim(), 3u);
  Element e = Element::basis(g.algebra, 0), f = Element::basis(g.algebra, 1), h = Element::basis(g.algebra, 2);
  EXPECT_EQ(bracket(e, f), h);
  EXPECT_EQ(bracket(h, e), e * 2);
  EXPECT_EQ(bracket(h, f), f * -2);
}

TEST(BuildSimple, AllSmallTypesAreJacobiClean) {
  for (auto [type, rank] : std::vector<std::pair<char, std::size_t>>{{'A', 3}, {'B', 3}, {'C', 3}, {'D', 4}, {'G', 2}}) {
    auto g = build_simple(type, rank);
    EXPECT_EQ(g.algebra.dim(), 2 * g.roots.num_positive() + rank);
    EXPECT_TRUE(jacobi_check(g.algebra).empty()) << g.roots.name();
  }
}

TEST(BuildSimple, F4AndE7) {
  const auto& g = f4();
  EXPECT_EQ(g.algebra.dim(), 52u);
  EXPECT_EQ(g.roots.num_positive(), 24u);
  EXPECT_TRUE(jacobi_check(g.algebra).empty());
  auto e7 = build_simple('E', 7);
  EXPECT_EQ(e7.algebra.dim(), 133u);
  EXPECT_EQ(e7.roots.num_positive(), 63u);
}

TEST(BuildSimple, RootSpacesAndCartanAction) {
  const auto& g = f4();
  const std::size_t np = g.roots.num_positive();
  const auto cartan = g.cartan_indices();
  const Subspace h = Subspace::coordinate(52, cartan);
  for (std::size_t k = 0; k < np; ++k) {
    Element ea = Element::basis(g.algebra, g.positive_vector(k)), fa = Element::basis(g.algebra, g.negative_vector(k));
    EXPECT_TRUE(h.contains(bracket(ea, fa).coeffs()));
    for (std::size_t i = 0; i < cartan.size(); ++i) {
      Root ai(4, 0);
      ai[i] = 1;
      EXPECT_EQ(bracket(Element::basis(g.algebra, cartan[i]), ea), ea * g.roots.pairing(g.labels[k], ai));
    }
  }
  // Root-vector brackets are +-(p + 1) multiples of a root vector.
  for (std::size_t i = 0; i < 2 * np; ++i) {
    for (std::size_t j = 0; j < 2 * np; ++j) {
      const auto& b = g.algebra.basis_bracket(i, j);
      if (b.size() != 1 || b.front().first >= 2 * np) continue;
      Rational c = abs(b.front().second);
      EXPECT_TRUE(c == 1 || c == 2 || c == 3);
    }
  }
}

TEST(FindOrbitRep, Examples) {
  auto sl2 = build_simple('A', 1);
  Element e = find_orbit_rep(sl2, 1, 1);
  EXPECT_EQ(e, Element::basis(sl2.algebra, 0));
  EXPECT_THROW(find_orbit_rep(f4(), 52, 3), NotFound);
  Element first = find_orbit_rep(f4(), 16, 3);
  EXPECT_EQ(centralizer(first).dim(), 16u);
  Element rep = find_orbit_rep(f4(), 16, 3, reductive_dim_3);
  EXPECT_EQ(centralizer(rep).dim(), 16u);
  int support = 0;
  for (const auto& c : rep.coeffs()) support += c != 0;
  EXPECT_LE(support, 3);
}

TEST(JacobsonMorozov, Sl2AndErrors) {
  auto sl2 = build_simple('A', 1);
  auto t = jacobson_morozov(Element::basis(sl2.algebra, 0));
  EXPECT_EQ(t.h, Element::basis(sl2.algebra, 2));
  EXPECT_EQ(t.f, Element::basis(sl2.algebra, 1));
  EXPECT_THROW(jacobson_morozov(Element::zero(sl2.algebra)), std::invalid_argument);
  EXPECT_THROW(jacobson_morozov(Element::basis(sl2.algebra, 2)), std::invalid_argument);
  EXPECT_FALSE(sl2_triple_violations({t.e, t.h * 2, t.f}).empty());
}

TEST(ReductiveFactor, Sl2Regular) {
  auto sl2 = build_simple('A', 1);
  auto t = jacobson_morozov(Element::basis(sl2.algebra, 0));
  EXPECT_EQ(reductive_factor(t).dim(), 0u);
  auto ge = subalgebra_from_basis(sl2.algebra, centralizer(t.e).basis());
  Grading gr{{2}};
  EXPECT_EQ(nilradical_u(ge, gr).dim(), 1u);
}

TEST(GradedCentralizer, F4Example) {
  const auto& g = f4();
  auto t = jacobson_morozov(find_orbit_rep(g, 16, 3, reductive_dim_3));
  EXPECT_TRUE(sl2_triple_violations(t).empty());
  auto gc = graded_centralizer(g, t);
  ASSERT_EQ(gc.ge.dim(), 16u);
  EXPECT_EQ(multiset(ad_spectrum_on(t.h, gc.ge)),
            (std::map<Rational, int>{{0, 3}, {1, 4}, {2, 2}, {3, 2}, {4, 3}, {5, 2}}));
  EXPECT_EQ(multiset(gc.grading.degrees), multiset(ad_spectrum_on(t.h, gc.ge)));
  EXPECT_TRUE(gc.grading.is_valid(gc.algebra));
  EXPECT_EQ(gc.l.dim(), 3u);
  EXPECT_EQ(nilradical_u(gc.algebra, gc.grading).dim(), 13u);
  ASSERT_TRUE(gc.torus.has_value());
  EXPECT_TRUE(gc.l.contains(*gc.torus));
  EXPECT_EQ(multiset(gc.t_weights),
            (std::map<Rational, int>{{-3, 1}, {-2, 2}, {-1, 3}, {0, 4}, {1, 3}, {2, 2}, {3, 1}}));
  RatMatrix k = killing_pairing(g.algebra, gc.ge.basis(), gc.gf.basis());
  EXPECT_NE(determinant(k), 0);
}
