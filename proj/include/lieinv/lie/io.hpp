#pragma once

#include <filesystem>
#include <optional>

#include <json.hpp>

#include "lieinv/lie/ops.hpp"

namespace lieinv {

/// An algebra as stored on disk: structure constants with 1-based indices,
/// an optional grading and an opaque "labels" side table.
struct AlgebraFile {
  LieAlgebra algebra;
  std::optional<Grading> grading;
  nlohmann::json labels;  // null when absent
};

/// Throws ParseError on schema violations.
AlgebraFile algebra_from_json(const nlohmann::json& j);
nlohmann::json algebra_to_json(const LieAlgebra& alg, const std::optional<Grading>& grading = std::nullopt,
                               const nlohmann::json& labels = nullptr);

nlohmann::json read_json_file(const std::filesystem::path& path);
AlgebraFile load_algebra(const std::filesystem::path& path);

/// Rationals travel as "num/den" strings; plain JSON integers are accepted on input.
Rational rational_from_json(const nlohmann::json& j);
nlohmann::json rational_to_json(const Rational& q);
nlohmann::json vector_to_json(const RatVector& v);
RatVector vector_from_json(const nlohmann::json& j);

}  // namespace lieinv
