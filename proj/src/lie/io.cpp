#include "lieinv/lie/io.hpp"

#include <fstream>

namespace lieinv {

using nlohmann::json;

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected a rational as integer or \"num/den\" string, got " + j.dump());
}

json rational_to_json(const Rational& q) { return to_string(q); }

json vector_to_json(const RatVector& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(rational_to_json(q));
  return out;
}

RatVector vector_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals");
  RatVector v;
  for (const auto& e : j) v.push_back(rational_from_json(e));
  return v;
}

namespace {

std::size_t one_based(const json& j, std::size_t dim, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  const long v = j.get<long>();
  if (v < 1 || static_cast<std::size_t>(v) > dim) {
    throw ParseError(std::string(what) + " index " + std::to_string(v) + " outside 1.." + std::to_string(dim));
  }
  return static_cast<std::size_t>(v - 1);
}

}  // namespace

AlgebraFile algebra_from_json(const json& j) {
  try {
    if (!j.is_object() || !j.contains("dim")) throw ParseError("algebra JSON needs an object with \"dim\"");
    const auto dim = j.at("dim").get<std::size_t>();
    std::vector<std::string> names;
    if (j.contains("names")) {
      names = j.at("names").get<std::vector<std::string>>();
      if (names.size() != dim) throw ParseError("\"names\" length does not match \"dim\"");
    } else {
      for (std::size_t i = 0; i < dim; ++i) names.push_back("x" + std::to_string(i + 1));
    }
    LieAlgebra::BracketTable table;
    for (const auto& b : j.value("brackets", json::array())) {
      const std::size_t i = one_based(b.at("i"), dim, "bracket i");
      const std::size_t jj = one_based(b.at("j"), dim, "bracket j");
      SparseVector v;
      for (const auto& t : b.value("terms", json::array())) {
        v.emplace_back(one_based(t.at("k"), dim, "term k"), rational_from_json(t.at("c")));
      }
      if (table.count({i, jj}) || table.count({jj, i})) {
        throw ParseError("bracket (" + std::to_string(i + 1) + "," + std::to_string(jj + 1) + ") listed twice");
      }
      table.emplace(std::make_pair(i, jj), std::move(v));
    }
    AlgebraFile out{LieAlgebra(std::move(names), table), std::nullopt, j.value("labels", json())};
    if (j.contains("grading") && !j.at("grading").is_null()) {
      Grading g{vector_from_json(j.at("grading"))};
      if (g.degrees.size() != dim) throw ParseError("\"grading\" length does not match \"dim\"");
      out.grading = std::move(g);
    }
    return out;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed algebra JSON: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw ParseError(std::string("malformed algebra JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("malformed algebra JSON: ") + e.what());
  }
}

json algebra_to_json(const LieAlgebra& alg, const std::optional<Grading>& grading, const json& labels) {
  json out;
  out["dim"] = alg.dim();
  out["names"] = alg.names();
  json brackets = json::array();
  for (const auto& [key, v] : alg.table()) {
    json terms = json::array();
    for (const auto& [k, c] : v) terms.push_back({{"k", k + 1}, {"c", rational_to_json(c)}});
    brackets.push_back({{"i", key.first + 1}, {"j", key.second + 1}, {"terms", std::move(terms)}});
  }
  out["brackets"] = std::move(brackets);
  if (grading) out["grading"] = vector_to_json(grading->degrees);
  if (!labels.is_null()) out["labels"] = labels;
  return out;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

AlgebraFile load_algebra(const std::filesystem::path& path) { return algebra_from_json(read_json_file(path)); }

}  // namespace lieinv
