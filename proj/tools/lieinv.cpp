// lieinv: command-line front end. Reports go to stdout as JSON, a human
// summary to stderr. Exit codes: 0 pass, 1 check failure, 2 usage or parse error.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "lieinv/app/fixture.hpp"
#include "lieinv/app/pipeline.hpp"
#include "lieinv/lie/io.hpp"

using namespace lieinv;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("LIEINV_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("LIEINV_SEED is not an unsigned integer: ") + env);
    }
  }
  return kDefaultSeed;
}

// "1,3-14" -> 0-based {0, 2, ..., 13}
std::vector<std::size_t> parse_indices(const std::string& spec, std::size_t n) {
  std::vector<std::size_t> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t lo = 0, hi = 0;
    try {
      const auto dash = item.find('-');
      lo = std::stoul(item.substr(0, dash));
      hi = dash == std::string::npos ? lo : std::stoul(item.substr(dash + 1));
    } catch (const std::exception&) {
      throw UsageError("bad index list: " + spec);
    }
    if (lo < 1 || hi > n || lo > hi) throw UsageError("index out of range in: " + spec);
    for (std::size_t i = lo; i <= hi; ++i) out.push_back(i - 1);
  }
  return out;
}

int emit(const Report& r) {
  std::cout << r.to_json().dump(2) << "\n";
  std::cerr << r.summary();
  return r.passed() ? 0 : 1;
}

Report base_report(const std::string& command, const std::string& digest_input, std::uint64_t seed) {
  Report r;
  r.command = command;
  r.inputs_digest = fnv1a_hex(digest_input);
  r.seed = seed;
  return r;
}

std::string file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Torus, g(e) basis, grading and l for the weight commands.
struct WeightInput {
  LieAlgebra ambient;
  GradedBasis ge;  // degrees empty when no grading is known
  std::optional<Subspace> gf;
  Subspace l;
  Torus torus;
  std::string digest_source;
};

WeightInput weight_input(bool f4, const std::string& algebra, const std::string& torus, const std::string& reductive) {
  WeightInput in;
  if (f4) {
    if (!algebra.empty() || !torus.empty()) throw UsageError("--f4 excludes --algebra and --torus");
    F4Example ex = build_f4_example();
    in.ambient = ex.g.algebra;
    in.ge = {ex.gc.basis, ex.gc.grading.degrees};
    in.gf = ex.gc.gf;
    in.l = ex.gc.l;
    in.torus = ex.weights.torus;
    in.digest_source = "F4-example";
    return in;
  }
  if (algebra.empty()) throw UsageError("need --algebra FILE or --f4");
  const std::string bytes = file_bytes(algebra);
  const nlohmann::json j = nlohmann::json::parse(bytes, nullptr, false);
  if (j.is_discarded()) throw ParseError("invalid JSON in " + algebra);
  AlgebraFile file = algebra_from_json(j);
  const std::size_t n = file.algebra.dim();
  in.ambient = file.algebra;
  for (std::size_t i = 0; i < n; ++i) {
    RatVector v(n);
    v[i] = 1;
    in.ge.vectors.push_back(v);
  }
  if (file.grading) in.ge.degrees = file.grading->degrees;
  std::vector<std::size_t> t_idx, l_idx;
  if (!torus.empty()) {
    t_idx = parse_indices(torus, n);
  } else if (j.contains("fixture") && j["fixture"].contains("torus")) {
    for (const auto& i : j["fixture"]["torus"]) t_idx.push_back(i.get<std::size_t>() - 1);
  } else {
    throw UsageError("need --torus");
  }
  if (!reductive.empty()) {
    l_idx = parse_indices(reductive, n);
  } else if (j.contains("fixture") && j["fixture"].contains("reductive_basis")) {
    for (const auto& i : j["fixture"]["reductive_basis"]) l_idx.push_back(i.get<std::size_t>() - 1);
  }
  for (auto i : t_idx) {
    RatVector v(n);
    v[i] = 1;
    in.torus.basis.push_back(v);
  }
  in.l = Subspace::coordinate(n, l_idx);
  in.digest_source = bytes + "|torus=" + torus + "|l=" + reductive;
  return in;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariant theory of centralizers in simple Lie algebras"};
  app.require_subcommand(1);
  std::optional<std::uint64_t> seed_flag;

  auto* build = app.add_subcommand("build", "Construct a simple Lie algebra in a Chevalley basis");
  std::string type;
  std::size_t rank = 0;
  std::string out;
  build->add_option("--type", type, "Cartan type A..G")->required();
  build->add_option("--rank", rank, "Rank")->required();
  build->add_option("--out", out, "Output file (stdout when omitted)");

  auto* vfix = app.add_subcommand("verify-fixture", "Check the transcribed centralizer fixture");
  std::string fixture_file = default_fixture_path().string();
  bool rederive = false;
  vfix->add_option("--file", fixture_file, "Fixture JSON");
  vfix->add_flag("--rederive", rederive, "Also derive the kernel of A from scratch");
  vfix->add_option("--seed", seed_flag, "Random seed");

  auto* vf4 = app.add_subcommand("verify-f4", "Run the F4 pipeline end to end");
  vf4->add_option("--seed", seed_flag, "Random seed");

  auto* index = app.add_subcommand("index", "Certify the index of an algebra");
  std::string algebra_file;
  unsigned max_degree = 4;
  index->add_option("--algebra", algebra_file, "Algebra JSON")->required();
  index->add_option("--max-degree", max_degree, "Degree cap of the symbolic kernel search");
  index->add_option("--seed", seed_flag, "Random seed");

  auto* invc = app.add_subcommand("invariant-check", "Test a polynomial for (semi-)invariance");
  std::string poly_text;
  invc->add_option("--algebra", algebra_file, "Algebra JSON")->required();
  invc->add_option("--poly", poly_text, "Polynomial in x1..xn")->required();

  std::string torus_spec, reductive_spec;
  bool use_f4 = false;
  auto* weights = app.add_subcommand("weights", "Torus weight decomposition of g(e) (and g(f))");
  auto* delta_cmd = app.add_subcommand("delta", "M_lambda, delta_lambda and the hypothesis checks");
  for (auto* sc : {weights, delta_cmd}) {
    sc->add_option("--algebra", algebra_file, "g(e) as algebra JSON");
    sc->add_option("--torus", torus_spec, "1-based basis indices spanning t, e.g. 16");
    sc->add_option("--reductive", reductive_spec, "1-based basis indices spanning l");
    sc->add_flag("--f4", use_f4, "Use the F4 example, including g(f)");
    sc->add_option("--seed", seed_flag, "Random seed");
  }

  auto* g0 = app.add_subcommand("g0", "The subspace g_u + [g, g] + g(x) at a random point");
  std::string u_spec;
  g0->add_option("--algebra", algebra_file, "Algebra JSON")->required();
  g0->add_option("--u", u_spec, "1-based basis indices spanning g_u, e.g. 1,3-14")->required();
  g0->add_option("--seed", seed_flag, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    const std::uint64_t seed = resolve_seed(seed_flag);
    if (*build) {
      if (type.size() != 1) throw UsageError("--type takes one letter");
      ChevalleyAlgebra g = build_simple(type[0], rank);
      nlohmann::json labels = nlohmann::json::array();
      for (const auto& r : g.labels) labels.push_back(r);
      nlohmann::json j = algebra_to_json(g.algebra, std::nullopt, labels);
      if (out.empty()) {
        std::cout << j.dump(2) << "\n";
        std::cerr << "built " << g.roots.name() << ": dim " << g.algebra.dim() << "\n";
        return 0;
      }
      std::ofstream(out) << j.dump(2) << "\n";
      Report r = base_report("build", g.roots.name(), seed);
      r.results = {{"type", g.roots.name()}, {"dim", g.algebra.dim()}, {"positive_roots", g.roots.num_positive()}, {"out", out}};
      r.check("jacobi", true);
      return emit(r);
    }
    if (*vfix) return emit(verify_fixture(fixture_file, {seed, rederive, 4}));
    if (*vf4) return emit(verify_f4(seed));
    if (*index) {
      AlgebraFile f = load_algebra(algebra_file);
      Report r = base_report("index", file_bytes(algebra_file), seed);
      try {
        IndexCertificate c = certify_index(f.algebra, seed, nullptr, max_degree);
        r.results = c.to_json();
        r.check("certified", true, "index " + std::to_string(c.index));
      } catch (const CertificationError& e) {
        r.results = {{"rank_lower", e.rank_lower}, {"rank_upper", e.rank_upper}};
        r.check("certified", false, e.what());
      }
      return emit(r);
    }
    if (*invc) {
      AlgebraFile f = load_algebra(algebra_file);
      const MultiPoly p = parse_poly(poly_text, f.algebra.dim());
      Report r = base_report("invariant-check", file_bytes(algebra_file) + "|" + poly_text, seed);
      const bool inv = is_invariant(f.algebra, p);
      auto w = is_semi_invariant(f.algebra, p);
      r.results = {{"poly", to_string(p)}, {"invariant", inv}, {"semi_invariant", w.has_value()}};
      if (w) r.results["weight"] = vector_to_json(*w);
      r.check("invariant", inv);
      return emit(r);
    }
    if (*weights || *delta_cmd) {
      WeightInput in = weight_input(use_f4, algebra_file, torus_spec, reductive_spec);
      WeightDecomp d = weight_decomposition(in.ambient, in.ge.vectors, in.gf, in.torus);
      Report r = base_report(*weights ? "weights" : "delta", in.digest_source, seed);
      r.results["weights"] = weights_to_json(d);
      r.check("weight_symmetry", d.symmetry_violations().empty());
      if (*delta_cmd) {
        DeltaReport dr = delta_report(d);
        r.results["delta"] = dr.to_json();
        if (in.ge.degrees.size() == in.ge.vectors.size()) {
          HypothesisReport h = check_c3cn2(in.ge, in.l, d, seed);
          r.results["c3cn2"] = h.to_json();
          r.results["l3cn2"] = check_l3cn2(in.ge, in.l, d).to_json();
        } else {
          r.warnings.push_back("no ad h grading; hypothesis checks skipped");
        }
      }
      return emit(r);
    }
    if (*g0) {
      AlgebraFile f = load_algebra(algebra_file);
      const std::size_t n = f.algebra.dim();
      Rng rng(seed);
      const RatVector pt = random_point(rng, n);
      G0Result res = g0_subspace(f.algebra, Subspace::coordinate(n, parse_indices(u_spec, n)), pt);
      Report r = base_report("g0", file_bytes(algebra_file) + "|u=" + u_spec, seed);
      r.results = {{"point", vector_to_json(pt)}, {"dim_g0", res.g0.dim()}, {"proper", res.proper}};
      r.check("computed", true);
      return emit(r);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
