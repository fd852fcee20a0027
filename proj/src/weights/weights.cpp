#include "lieinv/weights/weights.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "lieinv/exact/linalg.hpp"
#include "lieinv/lie/io.hpp"

namespace lieinv {

namespace {

Weight negate(const Weight& w) {
  Weight out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = -w[i];
  return out;
}

const std::vector<RatVector>& lookup(const std::map<Weight, std::vector<RatVector>>& m, const Weight& w) {
  static const std::vector<RatVector> empty;
  auto it = m.find(w);
  return it == m.end() ? empty : it->second;
}

// Joint eigenvector weight of v, or nullopt.
std::optional<Weight> eigen_weight(const LieAlgebra& alg, const Torus& t, const RatVector& v) {
  std::size_t pivot = 0;
  while (pivot < v.size() && v[pivot] == 0) ++pivot;
  if (pivot == v.size()) return std::nullopt;
  Weight w;
  for (const auto& x : t.basis) {
    const RatVector b = alg.bracket(x, v);
    const Rational c = b[pivot] / v[pivot];
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (b[k] != c * v[k]) return std::nullopt;
    }
    w.push_back(c);
  }
  return w;
}

// Weight spaces of span(basis). A basis of joint eigenvectors is kept as
// given, in order; otherwise each weight space gets its echelon basis.
std::map<Weight, std::vector<RatVector>> split(const LieAlgebra& alg, const std::vector<RatVector>& basis, const Torus& t) {
  std::map<Weight, std::vector<RatVector>> out;
  bool aligned = true;
  for (const auto& v : basis) {
    auto w = eigen_weight(alg, t, v);
    if (!w) {
      aligned = false;
      break;
    }
    out[*w].push_back(v);
  }
  if (aligned) return out;
  out.clear();
  std::vector<std::pair<Weight, std::vector<RatVector>>> pieces{{Weight{}, Subspace::span(alg.dim(), basis).basis()}};
  for (const auto& x : t.basis) {
    std::vector<std::pair<Weight, std::vector<RatVector>>> next;
    for (const auto& [w, b] : pieces) {
      for (auto& es : ad_eigenspaces(alg, x, b)) {
        Weight w2 = w;
        w2.push_back(es.value);
        next.emplace_back(std::move(w2), std::move(es.basis));
      }
    }
    pieces = std::move(next);
  }
  for (auto& [w, b] : pieces) {
    if (!b.empty()) out[w] = std::move(b);
  }
  return out;
}

bool is_zero_weight(const Weight& w) { return is_zero(w); }

nlohmann::json weight_json(const Weight& w) {
  auto j = nlohmann::json::array();
  for (const auto& x : w) j.push_back(rational_to_json(x));
  return j;
}

std::string poly_text(const MultiPoly& p) {
  // Variables are y1..ym, dual to the a(e) basis.
  std::string s = to_string(p);
  std::replace(s.begin(), s.end(), 'x', 'y');
  return s;
}

nlohmann::json poly_matrix_json(const PolyMatrix& m) {
  auto rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(poly_text(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

std::size_t WeightDecomp::dim_e(const Weight& w) const { return lookup(E, w).size(); }

std::size_t WeightDecomp::dim_f(const Weight& w) const { return F ? lookup(*F, w).size() : 0; }

const std::vector<RatVector>& WeightDecomp::a_e() const { return lookup(E, zero()); }

std::vector<RatVector> WeightDecomp::a_f() const { return F ? lookup(*F, zero()) : std::vector<RatVector>{}; }

std::vector<Weight> WeightDecomp::nonzero_weights() const {
  std::vector<Weight> out;
  for (const auto& w : weights) {
    if (!is_zero_weight(w)) out.push_back(w);
  }
  return out;
}

std::vector<Weight> WeightDecomp::symmetry_violations() const {
  std::set<Weight> all(weights.begin(), weights.end());
  if (F) {
    for (const auto& [w, _] : *F) all.insert(w);
  }
  std::vector<Weight> out;
  for (const auto& w : all) {
    const Weight m = negate(w);
    const std::size_t k = dim_e(w);
    bool ok = dim_e(m) == k;
    if (F) ok = ok && dim_f(w) == k && dim_f(m) == k;
    if (!ok) out.push_back(w);
  }
  return out;
}

WeightDecomp weight_decomposition(const LieAlgebra& ambient, const Subspace& ge, const std::optional<Subspace>& gf,
                                  const Torus& t) {
  return weight_decomposition(ambient, ge.basis(), gf, t);
}

WeightDecomp weight_decomposition(const LieAlgebra& ambient, const std::vector<RatVector>& ge_basis,
                                  const std::optional<Subspace>& gf, const Torus& t) {
  for (std::size_t i = 0; i < t.basis.size(); ++i) {
    if (t.basis[i].size() != ambient.dim()) throw DimensionError("torus element has the wrong length");
    for (std::size_t j = i + 1; j < t.basis.size(); ++j) {
      if (!is_zero(ambient.bracket(t.basis[i], t.basis[j]))) throw std::invalid_argument("torus elements do not commute");
    }
  }
  WeightDecomp d{ambient, t, {}, split(ambient, ge_basis, t), std::nullopt};
  if (gf) d.F = split(ambient, gf->basis(), t);
  for (const auto& [w, _] : d.E) d.weights.push_back(w);
  return d;
}

PolyMatrix bracket_pairing_matrix(const LieAlgebra& ambient, const std::vector<RatVector>& left,
                                  const std::vector<RatVector>& right, const std::vector<RatVector>& target) {
  const std::size_t m = target.size();
  PolyMatrix out(left.size(), right.size(), m);
  if (left.empty() || right.empty()) return out;
  BasisFrame frame(ambient.dim(), target);
  for (std::size_t i = 0; i < left.size(); ++i) {
    for (std::size_t j = 0; j < right.size(); ++j) {
      const RatVector b = ambient.bracket(left[i], right[j]);
      if (is_zero(b)) continue;
      if (m == 0) throw std::domain_error("bracket of weight vectors leaves a(e)");
      auto c = frame.coordinates(b);
      if (!c) throw std::domain_error("bracket of weight vectors leaves a(e)");
      MultiPoly p(m);
      for (std::size_t k = 0; k < m; ++k) {
        if ((*c)[k] != 0) p += MultiPoly::variable(m, k, (*c)[k]);
      }
      out(i, j) = p;
    }
  }
  return out;
}

PolyMatrix m_lambda(const WeightDecomp& d, const Weight& lambda) {
  if (is_zero_weight(lambda)) throw std::invalid_argument("M_lambda needs a nonzero weight");
  return bracket_pairing_matrix(d.ambient, lookup(d.E, lambda), lookup(d.E, negate(lambda)), d.a_e());
}

MultiPoly delta_lambda(const WeightDecomp& d, const Weight& lambda) { return bareiss_det(m_lambda(d, lambda)); }

MultiPoly delta(const WeightDecomp& d) {
  MultiPoly out = MultiPoly::constant(d.a_e().size(), 1);
  for (const auto& w : d.nonzero_weights()) out = out * delta_lambda(d, w);
  return out;
}

std::optional<std::vector<std::size_t>> nonzero_principal_minor(const PolyMatrix& m) {
  if (!m.is_square()) throw DimensionError("principal minors of a non-square matrix");
  const std::size_t n = m.rows();
  for (std::size_t k = n; k >= 1; --k) {
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<long>(k), true);
    do {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask[i]) idx.push_back(i);
      }
      PolyMatrix sub(k, k, m.nvars());
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) sub(a, b) = m(idx[a], idx[b]);
      }
      if (!bareiss_det(sub).is_zero()) return idx;
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  return std::nullopt;
}

DeltaReport delta_report(const WeightDecomp& d) {
  DeltaReport r;
  r.delta = MultiPoly::constant(d.a_e().size(), 1);
  for (const auto& w : d.nonzero_weights()) {
    DeltaEntry e{w, m_lambda(d, w), {}, false, std::nullopt};
    e.delta = bareiss_det(e.m);
    e.nonzero = !e.delta.is_zero();
    if (!e.nonzero) e.principal_minor = nonzero_principal_minor(e.m);
    r.delta = r.delta * e.delta;
    r.entries.push_back(std::move(e));
  }
  r.nonzero = !r.delta.is_zero();
  return r;
}

nlohmann::json DeltaReport::to_json() const {
  auto list = nlohmann::json::array();
  for (const auto& e : entries) {
    nlohmann::json j{{"weight", weight_json(e.weight)},
                     {"M", poly_matrix_json(e.m)},
                     {"delta", poly_text(e.delta)},
                     {"delta_normalized", poly_text(e.delta.is_zero() ? e.delta : e.delta.normalized())},
                     {"nonzero", e.nonzero}};
    if (e.principal_minor) {
      auto idx = nlohmann::json::array();
      for (auto i : *e.principal_minor) idx.push_back(i + 1);
      j["nonzero_principal_minor"] = {{"size", e.principal_minor->size()}, {"rows", idx}};
    }
    list.push_back(j);
  }
  return {{"entries", list}, {"delta_nonzero", nonzero}};
}

HypothesisReport check_c3cn2(const GradedBasis& ge, const Subspace& l, const WeightDecomp& d, std::uint64_t seed) {
  const auto& alg = d.ambient;
  const auto& torus = d.torus.basis;
  HypothesisReport r;
  if (ge.vectors.empty()) return r;
  r.d = *std::max_element(ge.degrees.begin(), ge.degrees.end());
  std::vector<RatVector> top;
  for (std::size_t i = 0; i < ge.vectors.size(); ++i) {
    if (ge.degrees[i] == r.d) top.push_back(ge.vectors[i]);
  }
  r.top_kernel_dim = Subspace::span(alg.dim(), top).dim();
  for (const auto& x : torus) {
    for (const auto& v : top) {
      if (!is_zero(alg.bracket(x, v))) r.top_centralizes_t = false;
    }
  }

  r.t_in_center_of_l = !torus.empty();
  for (const auto& x : torus) {
    if (!l.contains(x)) r.t_in_center_of_l = false;
    for (const auto& b : l.basis()) {
      if (!is_zero(alg.bracket(x, b))) r.t_in_center_of_l = false;
    }
  }
  if (l.dim() > 0) {
    LieAlgebra la = subalgebra_from_basis(alg, l.basis());
    // Rank: the smallest centralizer dimension, attained at a generic element.
    std::mt19937_64 rng(seed);
    r.rank_l = la.dim();
    for (int k = 0; k < 3; ++k) {
      RatVector x(la.dim());
      for (auto& c : x) c = static_cast<long>(rng() % 1999) - 999;
      r.rank_l = std::min(r.rank_l, la.dim() - rank(la.ad(x)));
    }
    std::vector<RatVector> z;
    for (const auto& c : center(la).basis()) {
      RatVector v(alg.dim());
      for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t k = 0; k < v.size(); ++k) v[k] += c[i] * l.basis()[i][k];
      }
      z.push_back(v);
    }
    r.t_is_center_of_l = !torus.empty() && Subspace::span(alg.dim(), z) == Subspace::span(alg.dim(), torus);
  }

  r.boundary_case = r.top_kernel_dim == 3;
  r.hypotheses = !torus.empty() && r.top_kernel_dim <= 3 && !r.top_centralizes_t &&
                 (r.top_kernel_dim < 3 || r.t_in_center_of_l);
  r.generic_stabilizer_nilpotent = r.hypotheses && r.rank_l == 1;
  r.semi_invariants_exist = r.hypotheses && r.t_is_center_of_l;
  return r;
}

nlohmann::json HypothesisReport::to_json() const {
  return {{"d", rational_to_json(d)},
          {"top_kernel_dim", top_kernel_dim},
          {"top_centralizes_t", top_centralizes_t},
          {"t_in_center_of_l", t_in_center_of_l},
          {"t_is_center_of_l", t_is_center_of_l},
          {"rank_l", rank_l},
          {"hypotheses", hypotheses},
          {"boundary_case", boundary_case},
          {"conclusions",
           {{"generic_stabilizer_nilpotent", generic_stabilizer_nilpotent},
            {"semi_invariants_exist", semi_invariants_exist}}}};
}

IndexDropReport check_l3cn2(const GradedBasis& ge, const Subspace& l, const WeightDecomp& d,
                            std::optional<std::size_t> index_ae, std::optional<std::size_t> index_ge) {
  IndexDropReport r;
  r.index_ae = index_ae;
  r.index_ge = index_ge;
  if (index_ae && index_ge) r.index_consistent = *index_ge <= *index_ae;
  const HypothesisReport h = check_c3cn2(ge, l, d);
  if (ge.vectors.empty() || d.torus.basis.empty()) return r;

  r.conditions[0] = h.top_kernel_dim <= 3 && !h.top_centralizes_t;
  r.conditions[1] = h.top_kernel_dim != 3 || h.t_in_center_of_l;

  std::vector<RatVector> top;
  for (std::size_t i = 0; i < ge.vectors.size(); ++i) {
    if (ge.degrees[i] == h.d) top.push_back(ge.vectors[i]);
  }
  const auto top_split = split(d.ambient, top, d.torus);
  for (const auto& [w, _] : top_split) {
    if (!is_zero_weight(w)) r.top_weights.push_back(w);
  }
  auto in_top = [&](const Weight& w) {
    return std::find(r.top_weights.begin(), r.top_weights.end(), w) != r.top_weights.end() ||
           std::find(r.top_weights.begin(), r.top_weights.end(), negate(w)) != r.top_weights.end();
  };

  r.conditions[2] = true;
  for (const auto& w : d.nonzero_weights()) {
    if (!in_top(w) && delta_lambda(d, w).is_zero()) r.conditions[2] = false;
  }
  r.conditions[3] = true;
  for (const auto& w : r.top_weights) {
    auto minor = nonzero_principal_minor(m_lambda(d, w));
    if (minor) {
      r.principal_minors[w] = *minor;
    } else {
      r.conditions[3] = false;
    }
  }
  r.holds = std::all_of(r.conditions.begin(), r.conditions.end(), [](bool b) { return b; });
  return r;
}

nlohmann::json IndexDropReport::to_json() const {
  auto tw = nlohmann::json::array();
  for (const auto& w : top_weights) tw.push_back(weight_json(w));
  auto minors = nlohmann::json::array();
  for (const auto& [w, idx] : principal_minors) {
    auto rows = nlohmann::json::array();
    for (auto i : idx) rows.push_back(i + 1);
    minors.push_back({{"weight", weight_json(w)}, {"rows", rows}});
  }
  nlohmann::json j{{"conditions", conditions}, {"top_weights", tw}, {"principal_minors", minors}, {"holds", holds}};
  j["index_a_e"] = index_ae ? nlohmann::json(*index_ae) : nlohmann::json(nullptr);
  j["index_g_e"] = index_ge ? nlohmann::json(*index_ge) : nlohmann::json(nullptr);
  j["index_consistent"] = index_consistent ? nlohmann::json(*index_consistent) : nlohmann::json(nullptr);
  return j;
}

TorusCentralizer torus_centralizer(const LieAlgebra& ambient, const Torus& t, const Subspace& ge,
                                   const std::optional<Subspace>& gf) {
  TorusCentralizer out;
  out.a = centralizer(ambient, Subspace::span(ambient.dim(), t.basis));
  out.a_e = intersect(out.a, ge);
  if (gf) out.a_f = intersect(out.a, *gf);
  out.a_algebra = subalgebra_from_basis(ambient, out.a.basis());
  out.a_e_algebra = subalgebra_from_basis(ambient, out.a_e.basis());
  return out;
}

nlohmann::json weights_to_json(const WeightDecomp& d) {
  auto list = nlohmann::json::array();
  std::set<Weight> all(d.weights.begin(), d.weights.end());
  if (d.F) {
    for (const auto& [w, _] : *d.F) all.insert(w);
  }
  for (const auto& w : all) {
    nlohmann::json j{{"weight", weight_json(w)}, {"dim_E", d.dim_e(w)}};
    if (d.F) j["dim_F"] = d.dim_f(w);
    list.push_back(j);
  }
  auto ae = nlohmann::json::array();
  for (const auto& v : d.a_e()) ae.push_back(vector_to_json(v));
  auto viol = nlohmann::json::array();
  for (const auto& w : d.symmetry_violations()) viol.push_back(weight_json(w));
  return {{"weights", list}, {"a_e_basis", ae}, {"symmetric", viol.empty()}, {"symmetry_violations", viol}};
}

}  // namespace lieinv
