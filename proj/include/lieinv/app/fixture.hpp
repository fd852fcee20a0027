#pragma once

#include <filesystem>
#include <vector>

#include "lieinv/coadjoint/coadjoint.hpp"

namespace lieinv {

/// The transcribed centralizer fixture: bracket table, ad h grading, the
/// polynomial kernel vectors f1..f4, the multipliers r1..r3 and the displayed
/// invariant, plus the combinations built from them.
struct CentralizerFixture {
  LieAlgebra algebra;
  std::optional<Grading> grading;
  std::vector<PolyVector> f;  // f1..f4
  std::vector<MultiPoly> r;   // r1..r3
  MultiPoly displayed_p;
  std::vector<std::size_t> u_indices;        // 0-based
  std::vector<std::size_t> reductive_basis;  // 0-based
  std::vector<std::size_t> torus;            // 0-based basis indices spanning t
  RatVector e;

  /// k1 = f1, k2 = f2, k3 = (f4 - 3 x12 f3) / x13^2, k4 = f3.
  std::vector<PolyVector> k() const;
  /// M1 = k3 + r1 k2 + r2 k1 and M2 = k4 + r3 k1.
  std::vector<PolyVector> m() const;
  /// p1..p4: contractions of k1, k2, M1, M2.
  std::vector<MultiPoly> invariants() const;
};

CentralizerFixture load_fixture(const std::filesystem::path& path);
/// Path of the shipped fixture file.
std::filesystem::path default_fixture_path();

}  // namespace lieinv
