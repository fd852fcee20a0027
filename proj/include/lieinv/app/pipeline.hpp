#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lieinv/chevalley/chevalley.hpp"
#include "lieinv/coadjoint/coadjoint.hpp"
#include "lieinv/weights/weights.hpp"

namespace lieinv {

/// 64-bit FNV-1a, printed as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Outcome of one command. Deterministic given (inputs, seed): no timings,
/// no paths beyond what the caller put in.
struct Report {
  std::string command;
  std::string inputs_digest;
  std::uint64_t seed = 0;
  nlohmann::json results = nlohmann::json::object();
  std::vector<Check> checks;
  std::vector<std::string> warnings;

  void check(std::string name, bool passed, std::string detail = {});
  bool passed() const;
  /// Names of failed checks.
  std::vector<std::string> failures() const;
  nlohmann::json to_json() const;
  /// One line per check, for stderr.
  std::string summary() const;
};

struct FixtureOptions {
  std::uint64_t seed = kDefaultSeed;
  /// Also derive the kernel from scratch: frf_kernel over the fraction field
  /// and the degree-capped symbolic search.
  bool rederive = false;
  unsigned degree_cap = 4;
};

Report verify_fixture(const std::filesystem::path& path, const FixtureOptions& options = {});

/// The F4 example assembled from scratch: algebra, representative, triple,
/// graded centralizer and the torus weight data.
struct F4Example {
  ChevalleyAlgebra g;
  Element e;
  GradedCentralizer gc;
  WeightDecomp weights;
  std::vector<std::size_t> u_indices;  // g(e) basis positions of positive ad h degree
};

inline constexpr std::size_t kF4Target = 16;
inline constexpr std::size_t kF4MaxSupport = 3;

/// Throws on any construction failure.
F4Example build_f4_example();

Report verify_f4(std::uint64_t seed = kDefaultSeed);

}  // namespace lieinv
