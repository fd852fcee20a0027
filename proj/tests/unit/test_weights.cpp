#include <gtest/gtest.h>

#include <random>

#include "lieinv/app/fixture.hpp"
#include "lieinv/chevalley/chevalley.hpp"
#include "lieinv/exact/linalg.hpp"
#include "lieinv/weights/weights.hpp"

using namespace lieinv;

namespace {

const CentralizerFixture& fixture() {
  static const CentralizerFixture fx = load_fixture(default_fixture_path());
  return fx;
}

RatVector axis(std::size_t n, std::size_t i) {
  RatVector v(n);
  v[i] = 1;
  return v;
}

const WeightDecomp& fixture_decomp() {
  static const WeightDecomp d =
      weight_decomposition(fixture().algebra, Subspace::whole(16), std::nullopt, Torus{{axis(16, 15)}});
  return d;
}

GradedBasis fixture_graded() {
  GradedBasis g;
  for (std::size_t i = 0; i < 16; ++i) g.vectors.push_back(axis(16, i));
  g.degrees = fixture().grading->degrees;
  return g;
}

Subspace fixture_l() { return Subspace::coordinate(16, fixture().reductive_basis); }

struct F4Example {
  ChevalleyAlgebra g;
  GradedCentralizer gc;
  WeightDecomp d;
};

const F4Example& f4_example() {
  static const F4Example ex = [] {
    auto g = build_simple('F', 4);
    auto rep = find_orbit_rep(g, 16, 3, [](const Element& e) { return reductive_factor(jacobson_morozov(e)).dim() == 3; });
    auto gc = graded_centralizer(g, jacobson_morozov(rep));
    auto d = weight_decomposition(g.algebra, gc.basis, gc.gf, Torus{{*gc.torus}});
    return F4Example{g, gc, d};
  }();
  return ex;
}

RatMatrix random_invertible(std::mt19937_64& rng, std::size_t k) {
  while (true) {
    RatMatrix p(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) p(i, j) = static_cast<long>(rng() % 9) - 4;
    }
    if (determinant(p) != 0) return p;
  }
}

std::vector<RatVector> transform(const RatMatrix& p, const std::vector<RatVector>& basis) {
  std::vector<RatVector> out;
  for (std::size_t i = 0; i < p.rows(); ++i) {
    RatVector v(basis.front().size());
    for (std::size_t j = 0; j < p.cols(); ++j) {
      for (std::size_t k = 0; k < v.size(); ++k) v[k] += p(i, j) * basis[j][k];
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace

TEST(WeightDecomposition, FixtureTorus) {
  const auto& d = fixture_decomp();
  const std::map<Rational, std::size_t> dims{{-3, 1}, {-2, 2}, {-1, 3}, {0, 4}, {1, 3}, {2, 2}, {3, 1}};
  ASSERT_EQ(d.weights.size(), dims.size());
  for (const auto& [w, k] : dims) EXPECT_EQ(d.dim_e({w}), k);
  EXPECT_TRUE(d.symmetry_violations().empty());
  EXPECT_EQ(d.E.at({-1}), (std::vector<RatVector>{axis(16, 0), axis(16, 5), axis(16, 10)}));  // x1, x6, x11
  EXPECT_EQ(d.a_e(), (std::vector<RatVector>{axis(16, 3), axis(16, 4), axis(16, 9), axis(16, 15)}));
}

TEST(WeightDecomposition, ZeroTorusAndErrors) {
  auto d = weight_decomposition(fixture().algebra, Subspace::whole(16), std::nullopt, Torus{});
  ASSERT_EQ(d.weights.size(), 1u);
  EXPECT_EQ(d.a_e().size(), 16u);
  EXPECT_EQ(delta(d), MultiPoly::constant(16, 1));
  // x1 is ad-nilpotent and nonzero, so not diagonalizable.
  EXPECT_THROW(weight_decomposition(fixture().algebra, Subspace::whole(16), std::nullopt, Torus{{axis(16, 0)}}),
               std::domain_error);
  EXPECT_THROW(weight_decomposition(fixture().algebra, Subspace::span(16, {RatVector{1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}), std::nullopt, Torus{{axis(16, 15)}}),
               std::invalid_argument);
}

TEST(Delta, FixtureValues) {
  const auto& d = fixture_decomp();
  // a(e) basis x4, x5, x10, x16 -> y1..y4
  PolyMatrix m1 = m_lambda(d, {1});
  EXPECT_EQ(m1.rows(), 3u);
  EXPECT_TRUE(delta_lambda(d, {1}).is_zero());
  EXPECT_TRUE(delta_lambda(d, {-1}).is_zero());
  EXPECT_EQ(delta_lambda(d, {2}).normalized(), parse_poly("x3^2", 4));
  EXPECT_FALSE(delta_lambda(d, {3}).is_zero());
  EXPECT_TRUE(delta(d).is_zero());
  auto minor = nonzero_principal_minor(m1);
  ASSERT_TRUE(minor.has_value());
  EXPECT_EQ(minor->size(), 2u);
  auto report = delta_report(d);
  EXPECT_FALSE(report.nonzero);
  EXPECT_EQ(report.entries.size(), 6u);
  EXPECT_EQ(report.to_json()["entries"][0]["weight"][0], "-3");
}

TEST(Delta, EmptyAndEscaping) {
  EXPECT_EQ(bareiss_det(PolyMatrix(0, 0, 4)), MultiPoly::constant(4, 1));
  const auto& alg = fixture().algebra;
  // [x1, x2] = 2 x3 is not in span(x4).
  EXPECT_THROW(bracket_pairing_matrix(alg, {axis(16, 0)}, {axis(16, 1)}, {axis(16, 3)}), std::domain_error);
  EXPECT_FALSE(nonzero_principal_minor(PolyMatrix(3, 3, 2)).has_value());
}

TEST(Delta, BasisCovariance) {
  std::mt19937_64 rng(77);
  const auto& d = fixture_decomp();
  const auto& f4 = f4_example().d;
  int cases = 0;
  for (const WeightDecomp* dec : {&d, &f4}) {
    for (const auto& w : dec->nonzero_weights()) {
      const auto& left = dec->E.at(w);
      RatVector neg(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) neg[i] = -w[i];
      const auto& right = dec->E.at(neg);
      const MultiPoly base = delta_lambda(*dec, w);
      for (int t = 0; t < 5; ++t) {
        RatMatrix p = random_invertible(rng, left.size()), q = random_invertible(rng, right.size());
        MultiPoly changed = bareiss_det(bracket_pairing_matrix(dec->ambient, transform(p, left), transform(q, right), dec->a_e()));
        EXPECT_EQ(changed, base * (determinant(p) * determinant(q)));
        ++cases;
      }
    }
  }
  EXPECT_GE(cases, 50);
}

TEST(CheckC3cn2, FixtureConclusions) {
  auto r = check_c3cn2(fixture_graded(), fixture_l(), fixture_decomp());
  EXPECT_EQ(r.d, 5);
  EXPECT_EQ(r.top_kernel_dim, 2u);
  EXPECT_FALSE(r.top_centralizes_t);
  EXPECT_EQ(r.rank_l, 1u);
  EXPECT_TRUE(r.hypotheses);
  EXPECT_FALSE(r.boundary_case);
  EXPECT_TRUE(r.generic_stabilizer_nilpotent);
  EXPECT_FALSE(r.t_is_center_of_l);
  EXPECT_FALSE(r.semi_invariants_exist);
}

TEST(CheckC3cn2, ConsistentWithStabilizers) {
  auto r = check_c3cn2(fixture_graded(), fixture_l(), fixture_decomp());
  ASSERT_TRUE(r.generic_stabilizer_nilpotent);
  Rng rng(kDefaultSeed);
  for (int t = 0; t < 10; ++t) {
    EXPECT_TRUE(stabilizer_at(fixture().algebra, random_point(rng, 16), rng).all_nilpotent);
  }
}

TEST(CheckC3cn2, RegularSl2HasNoConclusions) {
  auto g = build_simple('A', 1);
  auto t = jacobson_morozov(find_orbit_rep(g, 1, 1));
  auto gc = graded_centralizer(g, t);
  EXPECT_FALSE(gc.torus.has_value());
  auto d = weight_decomposition(g.algebra, gc.ge, gc.gf, Torus{});
  auto r = check_c3cn2(GradedBasis{gc.basis, gc.grading.degrees}, gc.l, d);
  EXPECT_FALSE(r.hypotheses);
  EXPECT_FALSE(r.generic_stabilizer_nilpotent);
  EXPECT_FALSE(r.semi_invariants_exist);
}

TEST(CheckL3cn2, FixtureConditions) {
  const auto& d = fixture_decomp();
  auto tc = torus_centralizer(fixture().algebra, d.torus, Subspace::whole(16));
  EXPECT_EQ(tc.a_e.dim(), 4u);
  const std::size_t ind_ae = certify_index(tc.a_e_algebra).index;
  EXPECT_EQ(ind_ae, 4u);
  auto r = check_l3cn2(fixture_graded(), fixture_l(), d, ind_ae, 4);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.top_weights, (std::vector<Weight>{{-1}, {1}}));
  EXPECT_EQ(r.principal_minors.at({1}).size(), 2u);
  EXPECT_EQ(r.index_consistent, true);
}

TEST(CheckL3cn2, AllDeltasNonzeroFails) {
  // sl2 with e = 0: g(e) = l = sl2, t = h, single degree 0.
  auto g = build_simple('A', 1);
  Subspace all = Subspace::whole(3);
  auto d = weight_decomposition(g.algebra, all, all, Torus{{axis(3, 2)}});
  EXPECT_TRUE(delta(d).normalized() == parse_poly("x1^2", 1));
  GradedBasis gb{all.basis(), RatVector(3)};
  auto r = check_l3cn2(gb, all, d);
  EXPECT_FALSE(r.holds);
  EXPECT_FALSE(r.conditions[1]);
}

TEST(TorusCentralizer, IndexEqualityWhenDeltaNonzero) {
  for (auto [type, rank] : std::vector<std::pair<char, std::size_t>>{{'A', 1}, {'A', 2}, {'B', 2}}) {
    auto g = build_simple(type, rank);
    Torus t;
    for (auto i : g.cartan_indices()) t.basis.push_back(axis(g.algebra.dim(), i));
    Subspace all = Subspace::whole(g.algebra.dim());
    auto d = weight_decomposition(g.algebra, all, all, t);
    ASSERT_TRUE(d.symmetry_violations().empty());
    ASSERT_FALSE(delta(d).is_zero());
    auto tc = torus_centralizer(g.algebra, t, all, all);
    EXPECT_EQ(tc.a_e.dim(), rank);
    EXPECT_EQ(certify_index(tc.a_e_algebra).index, certify_index(g.algebra).index);
  }
  auto zero = torus_centralizer(fixture().algebra, Torus{}, Subspace::whole(16));
  EXPECT_EQ(zero.a.dim(), 16u);
}

TEST(F4Example, WeightMachinery) {
  const auto& ex = f4_example();
  EXPECT_TRUE(ex.d.symmetry_violations().empty());
  EXPECT_EQ(ex.d.weights.size(), 7u);
  GradedBasis gb{ex.gc.basis, ex.gc.grading.degrees};
  auto r = check_c3cn2(gb, ex.gc.l, ex.d);
  EXPECT_EQ(r.d, 5);
  EXPECT_EQ(r.top_kernel_dim, 2u);
  EXPECT_FALSE(r.top_centralizes_t);
  EXPECT_EQ(r.rank_l, 1u);
  EXPECT_TRUE(r.generic_stabilizer_nilpotent);
  auto l3 = check_l3cn2(gb, ex.gc.l, ex.d);
  ASSERT_EQ(l3.top_weights.size(), 2u);
  for (const auto& w : l3.top_weights) EXPECT_TRUE(delta_lambda(ex.d, w).is_zero());
  EXPECT_TRUE(l3.holds);
  auto tc = torus_centralizer(ex.g.algebra, ex.d.torus, ex.gc.ge, ex.gc.gf);
  EXPECT_EQ(tc.a_e.dim(), ex.d.a_e().size());
}
