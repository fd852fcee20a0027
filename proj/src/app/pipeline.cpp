#include "lieinv/app/pipeline.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "lieinv/app/fixture.hpp"
#include "lieinv/exact/linalg.hpp"
#include "lieinv/lie/io.hpp"

namespace lieinv {

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void Report::check(std::string name, bool passed, std::string detail) {
  checks.push_back({std::move(name), passed, std::move(detail)});
}

bool Report::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

std::vector<std::string> Report::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (!c.passed) out.push_back(c.name);
  }
  return out;
}

nlohmann::json Report::to_json() const {
  auto cs = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json j{{"name", c.name}, {"pass", c.passed}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    cs.push_back(j);
  }
  return {{"command", command}, {"inputs_digest", inputs_digest}, {"seed", seed},        {"results", results},
          {"checks", cs},       {"warnings", warnings},          {"pass", passed()}};
}

std::string Report::summary() const {
  std::ostringstream out;
  out << command << " (seed " << seed << ")\n";
  for (const auto& w : warnings) out << "  warning: " << w << "\n";
  for (const auto& c : checks) {
    out << "  " << (c.passed ? "pass" : "FAIL") << "  " << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
  }
  out << (passed() ? "all checks passed" : "some checks failed") << "\n";
  return out.str();
}

namespace {

std::string read_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool annihilates(const PolyMatrix& a, const PolyVector& v) {
  for (const auto& p : a.apply(v)) {
    if (!p.is_zero()) return false;
  }
  return true;
}

nlohmann::json multiset_json(const std::vector<Rational>& xs) {
  std::map<Rational, int> m;
  for (const auto& x : xs) ++m[x];
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, c] : m) j[k.get_str()] = c;
  return j;
}

nlohmann::json element_json(const Element& x) {
  nlohmann::json j = nlohmann::json::object();
  for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
    if (x.coeffs()[i] != 0) j[x.algebra().names()[i]] = rational_to_json(x.coeffs()[i]);
  }
  return j;
}

// Shared by both pipelines: stabilizers at `points` seeded points.
void stabilizer_checks(Report& r, const LieAlgebra& alg, std::size_t expected_dim,
                       const std::vector<std::size_t>& u_indices, std::uint64_t seed, int points) {
  Rng rng(seed);
  int dim_ok = 0, nilpotent = 0, outside_u = 0;
  auto samples = nlohmann::json::array();
  for (int t = 0; t < points; ++t) {
    auto s = stabilizer_at(alg, random_point(rng, alg.dim()), rng, u_indices);
    dim_ok += s.stabilizer.dim() == expected_dim;
    nilpotent += s.all_nilpotent;
    outside_u += s.contained_in_u.has_value() && !*s.contained_in_u;
    samples.push_back({{"point", vector_to_json(s.point)},
                       {"stabilizer_dim", s.stabilizer.dim()},
                       {"all_nilpotent", s.all_nilpotent},
                       {"contained_in_u", s.contained_in_u.value_or(true)}});
  }
  r.results["stabilizers"] = samples;
  const std::string of = "/" + std::to_string(points);
  r.check("stabilizer_dim", dim_ok == points, std::to_string(dim_ok) + of + " of dimension " + std::to_string(expected_dim));
  r.check("stabilizer_nilpotent", nilpotent == points, std::to_string(nilpotent) + of);
  r.check("stabilizer_outside_u", outside_u == points, std::to_string(outside_u) + of);
}

}  // namespace

Report verify_fixture(const std::filesystem::path& path, const FixtureOptions& options) {
  Report r;
  r.command = "verify-fixture";
  r.seed = options.seed;
  r.inputs_digest = fnv1a_hex(read_bytes(path));
  const CentralizerFixture fx = load_fixture(path);
  const auto& alg = fx.algebra;
  const std::size_t n = alg.dim();
  r.results["dim"] = n;

  const auto jac = jacobi_check(alg);
  r.check("jacobi", jac.empty(), std::to_string(jac.size()) + " violating triples");
  if (fx.grading) {
    auto v = fx.grading->first_violation(alg);
    r.check("grading", !v, v ? "bracket [x" + std::to_string((*v)[0] + 1) + ",x" + std::to_string((*v)[1] + 1) + "]" : "");
  } else {
    r.warnings.push_back("no grading in fixture; grading check skipped");
  }
  const Subspace z = center(alg);
  r.check("center_dim_1", z.dim() == 1, "dim " + std::to_string(z.dim()));
  r.check("center_contains_e", z.contains(fx.e));
  r.check("unimodular", is_unimodular(alg));

  const PolyMatrix a = coadjoint_matrix(alg);
  bool all_kernel = true;
  for (const auto& v : fx.f) all_kernel = all_kernel && annihilates(a, v);
  for (const auto& v : fx.k()) all_kernel = all_kernel && annihilates(a, v);
  for (const auto& v : fx.m()) all_kernel = all_kernel && annihilates(a, v);
  r.check("kernel_vectors", all_kernel, "A f(i) = 0 for f1..f4, k1..k4, M1, M2");

  const auto inv = fx.invariants();
  auto inv_json = nlohmann::json::array();
  bool all_inv = true;
  for (const auto& p : inv) {
    all_inv = all_inv && is_invariant(alg, p);
    inv_json.push_back(to_string(p));
  }
  r.results["invariants"] = inv_json;
  r.check("invariants", all_inv, "p1..p4 invariant");
  r.check("displayed_p_invariant", is_invariant(alg, fx.displayed_p));
  r.check("displayed_p_is_p3", inv[2] == fx.displayed_p);
  r.check("p_not_in_S(g_u)", !support_in_subspace(fx.displayed_p, fx.u_indices));

  const auto kk = fx.k();
  try {
    IndexCertificate cert = certify_index(alg, options.seed, &kk);
    r.results["index"] = cert.to_json();
    r.check("index_4", cert.index == 4 && cert.witness_rank == 12, "index " + std::to_string(cert.index));
  } catch (const std::exception& e) {
    r.check("index_4", false, e.what());
  }

  Rng rng(options.seed);
  const RatVector pt = random_point(rng, n);
  const std::size_t jr = jacobian_rank(inv, pt);
  r.results["jacobian_rank"] = jr;
  r.check("jacobian_rank_4", jr == 4);
  int spans = 0;
  for (int t = 0; t < 10; ++t) spans += gradient_span_check(alg, inv, random_point(rng, n));
  r.check("gradient_span", spans == 10, std::to_string(spans) + "/10");

  stabilizer_checks(r, alg, 4, fx.u_indices, options.seed, 10);

  if (fx.grading && !fx.torus.empty()) {
    Torus t;
    for (auto i : fx.torus) {
      RatVector v(n);
      v[i] = 1;
      t.basis.push_back(v);
    }
    GradedBasis gb;
    for (std::size_t i = 0; i < n; ++i) {
      RatVector v(n);
      v[i] = 1;
      gb.vectors.push_back(v);
    }
    gb.degrees = fx.grading->degrees;
    auto d = weight_decomposition(alg, gb.vectors, std::nullopt, t);
    const Subspace l = Subspace::coordinate(n, fx.reductive_basis);
    auto h = check_c3cn2(gb, l, d, options.seed);
    r.results["weights"] = weights_to_json(d);
    r.results["c3cn2"] = h.to_json();
    r.check("weight_symmetry", d.symmetry_violations().empty());
    r.check("generic_stabilizer_nilpotent", h.generic_stabilizer_nilpotent);
  }

  if (options.rederive) {
    PolyKernel pk = frf_kernel(a);
    bool ok = pk.rank == 12 && pk.basis.size() == 4;
    for (const auto& v : pk.basis) ok = ok && annihilates(a, v);
    r.check("rederive_frf_kernel", ok, "rank " + std::to_string(pk.rank));
    IndexCertificate c2 = certify_index(alg, options.seed, nullptr, options.degree_cap);
    r.results["rederived_index"] = c2.to_json();
    r.check("rederive_degree_search", c2.index == 4, "index " + std::to_string(c2.index));
  }
  return r;
}

F4Example build_f4_example() {
  ChevalleyAlgebra g = build_simple('F', 4);
  // Among the representatives with a 16-dimensional centralizer, the example
  // is the one whose reductive factor has dimension 3.
  Element e = find_orbit_rep(g, kF4Target, kF4MaxSupport,
                             [](const Element& x) { return reductive_factor(jacobson_morozov(x)).dim() == 3; });
  GradedCentralizer gc = graded_centralizer(g, jacobson_morozov(e));
  if (!gc.torus) throw std::runtime_error("no one-dimensional torus in the reductive factor");
  WeightDecomp w = weight_decomposition(g.algebra, gc.basis, gc.gf, Torus{{*gc.torus}});
  std::vector<std::size_t> u;
  for (std::size_t i = 0; i < gc.basis.size(); ++i) {
    if (gc.grading.degrees[i] > 0) u.push_back(i);
  }
  return F4Example{std::move(g), std::move(e), std::move(gc), std::move(w), std::move(u)};
}

Report verify_f4(std::uint64_t seed) {
  Report r;
  r.command = "verify-f4";
  r.seed = seed;
  r.inputs_digest = fnv1a_hex("F4;target=" + std::to_string(kF4Target) + ";max_support=" + std::to_string(kF4MaxSupport));
  std::string stage = "build";
  try {
    const ChevalleyAlgebra g = build_simple('F', 4);
    r.check("build", g.algebra.dim() == 52 && g.roots.num_positive() == 24 && jacobi_check(g.algebra, 1).empty(),
            "dim " + std::to_string(g.algebra.dim()) + ", " + std::to_string(g.roots.num_positive()) + " positive roots");

    stage = "orbit_rep";
    F4Example ex = build_f4_example();
    r.results["e"] = element_json(ex.e);
    r.check("orbit_rep", ex.gc.ge.dim() == 16, "dim g(e) = " + std::to_string(ex.gc.ge.dim()));

    stage = "sl2_triple";
    const auto& t = ex.gc.triple;
    const auto bad = sl2_triple_violations(t);
    r.results["h"] = element_json(t.h);
    r.results["f"] = element_json(t.f);
    r.check("sl2_triple", bad.empty(), bad.empty() ? "" : bad.front());

    stage = "spectrum";
    const auto spec = ad_spectrum_on(t.h, ex.gc.ge);
    r.results["ad_h_spectrum"] = multiset_json(spec);
    r.check("spectrum", multiset_json(spec) == nlohmann::json{{"0", 3}, {"1", 4}, {"2", 2}, {"3", 2}, {"4", 3}, {"5", 2}});

    stage = "reductive_factor";
    const Subspace u = nilradical_u(ex.gc.algebra, ex.gc.grading);
    r.results["dim_l"] = ex.gc.l.dim();
    r.results["dim_g_e_u"] = u.dim();
    r.check("reductive_factor", ex.gc.l.dim() == 3 && u.dim() == 13 && ex.gc.l.dim() + u.dim() == ex.gc.ge.dim());

    stage = "killing";
    const Rational kd = determinant(killing_pairing(g.algebra, ex.gc.ge.basis(), ex.gc.gf.basis()));
    r.check("killing_nondegenerate", kd != 0);

    stage = "index";
    IndexCertificate cert = certify_index(ex.gc.algebra, seed, nullptr, 4);
    r.results["index"] = cert.to_json();
    r.check("index_4", cert.index == 4, "index " + std::to_string(cert.index));

    stage = "stabilizers";
    stabilizer_checks(r, ex.gc.algebra, 4, ex.u_indices, seed, 10);

    stage = "weights";
    r.results["weights"] = weights_to_json(ex.weights);
    r.check("weight_symmetry", ex.weights.symmetry_violations().empty());

    stage = "c3cn2";
    const GradedBasis amb{ex.gc.basis, ex.gc.grading.degrees};
    const HypothesisReport h = check_c3cn2(amb, ex.gc.l, ex.weights, seed);
    const IndexDropReport l3 = check_l3cn2(amb, ex.gc.l, ex.weights);
    r.results["c3cn2"] = h.to_json();
    r.results["l3cn2"] = l3.to_json();
    bool top_zero = !l3.top_weights.empty();
    for (const auto& w : l3.top_weights) top_zero = top_zero && delta_lambda(ex.weights, w).is_zero();
    r.check("top_delta_zero", top_zero);
    r.check("c3cn2", h.d == 5 && h.top_kernel_dim == 2 && !h.top_centralizes_t && h.rank_l == 1 &&
                         h.generic_stabilizer_nilpotent);
  } catch (const std::exception& ex) {
    r.check(stage, false, ex.what());
  }
  return r;
}

}  // namespace lieinv
