#include "lieinv/app/fixture.hpp"

#include <cstdlib>

#include "lieinv/lie/io.hpp"

#ifndef LIEINV_DATA_DIR
#define LIEINV_DATA_DIR "data"
#endif

namespace lieinv {

namespace {

PolyVector parse_vector(const nlohmann::json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) throw ParseError("kernel vector must list one polynomial per basis vector");
  PolyVector v;
  for (const auto& e : j) v.push_back(parse_poly(e.get<std::string>(), n));
  return v;
}

std::vector<std::size_t> indices(const nlohmann::json& j, std::size_t n) {
  std::vector<std::size_t> out;
  for (const auto& e : j) {
    const long i = e.get<long>();
    if (i < 1 || static_cast<std::size_t>(i) > n) throw ParseError("fixture index out of range");
    out.push_back(static_cast<std::size_t>(i - 1));
  }
  return out;
}

PolyVector scaled(const PolyVector& v, const MultiPoly& s) {
  PolyVector out;
  for (const auto& p : v) out.push_back(p * s);
  return out;
}

PolyVector added(const PolyVector& a, const PolyVector& b) {
  PolyVector out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
  return out;
}

}  // namespace

std::vector<PolyVector> CentralizerFixture::k() const {
  const std::size_t n = algebra.dim();
  const MultiPoly x12 = MultiPoly::variable(n, 11, 3);
  const MultiPoly x13sq = MultiPoly::variable(n, 12) * MultiPoly::variable(n, 12);
  PolyVector k3;
  const PolyVector num = added(f[3], scaled(f[2], -x12));
  for (const auto& p : num) k3.push_back(p.exact_divide(x13sq));
  return {f[0], f[1], k3, f[2]};
}

std::vector<PolyVector> CentralizerFixture::m() const {
  const auto kk = k();
  return {added(added(kk[2], scaled(kk[1], r[0])), scaled(kk[0], r[1])), added(kk[3], scaled(kk[0], r[2]))};
}

std::vector<MultiPoly> CentralizerFixture::invariants() const {
  const auto kk = k();
  const auto mm = m();
  return {contract(kk[0]), contract(kk[1]), contract(mm[0]), contract(mm[1])};
}

CentralizerFixture load_fixture(const std::filesystem::path& path) {
  const nlohmann::json j = read_json_file(path);
  AlgebraFile file = algebra_from_json(j);
  CentralizerFixture fx;
  fx.algebra = file.algebra;
  fx.grading = file.grading;
  const std::size_t n = fx.algebra.dim();
  try {
    const auto& data = j.at("fixture");
    for (const char* name : {"f1", "f2", "f3", "f4"}) fx.f.push_back(parse_vector(data.at("kernel_vectors").at(name), n));
    for (const char* name : {"r1", "r2", "r3"}) fx.r.push_back(parse_poly(data.at("multipliers").at(name).get<std::string>(), n));
    fx.displayed_p = parse_poly(data.at("invariant_p").get<std::string>(), n);
    fx.u_indices = indices(data.at("u_indices"), n);
    fx.reductive_basis = indices(data.at("reductive_basis"), n);
    fx.torus = indices(data.at("torus"), n);
    fx.e = vector_from_json(data.at("e"));
    if (fx.e.size() != n) throw ParseError("fixture element e has the wrong length");
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed fixture: ") + e.what());
  }
  return fx;
}

std::filesystem::path default_fixture_path() {
  if (const char* dir = std::getenv("LIEINV_DATA_DIR")) return std::filesystem::path(dir) / "f4_centralizer.json";
  return std::filesystem::path(LIEINV_DATA_DIR) / "f4_centralizer.json";
}

}  // namespace lieinv
