#include "lieinv/lie/algebra.hpp"

#include <algorithm>
#include <mutex>

namespace lieinv {

struct LieAlgebra::Data {
  std::vector<std::string> names;
  BracketTable table;
  std::vector<SparseVector> dense;  // n*n, [x_i, x_j] at i*n + j
  mutable std::once_flag killing_once;
  mutable RatMatrix killing;
};

namespace {

SparseVector canonical(SparseVector v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVector out;
  for (auto& [k, c] : v) {
    if (!out.empty() && out.back().first == k) out.back().second += c;
    else out.emplace_back(k, std::move(c));
  }
  std::erase_if(out, [](const auto& e) { return is_zero(e.second); });
  return out;
}

SparseVector negated(const SparseVector& v) {
  SparseVector out = v;
  for (auto& e : out) e.second = -e.second;
  return out;
}

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("x" + std::to_string(i + 1));
  return out;
}

}  // namespace

LieAlgebra::LieAlgebra(std::size_t dim, const BracketTable& brackets) : LieAlgebra(default_names(dim), brackets) {}

LieAlgebra::LieAlgebra(std::vector<std::string> names, const BracketTable& brackets) {
  auto d = std::make_shared<Data>();
  const std::size_t n = names.size();
  d->names = std::move(names);
  for (const auto& [key, value] : brackets) {
    auto [i, j] = key;
    if (i >= n || j >= n) throw std::out_of_range("bracket index out of range");
    for (const auto& [k, c] : value) {
      if (k >= n) throw std::out_of_range("bracket output index out of range");
    }
    SparseVector v = canonical(value);
    if (i == j) {
      if (!v.empty()) throw std::invalid_argument("nonzero bracket of a basis vector with itself");
      continue;
    }
    if (i > j) {
      std::swap(i, j);
      v = negated(v);
    }
    if (d->table.count({i, j})) throw std::invalid_argument("bracket specified twice");
    if (!v.empty()) d->table.emplace(std::make_pair(i, j), std::move(v));
  }
  d->dense.assign(n * n, {});
  for (const auto& [key, v] : d->table) {
    d->dense[key.first * n + key.second] = v;
    d->dense[key.second * n + key.first] = negated(v);
  }
  data_ = std::move(d);
}

const LieAlgebra::Data& LieAlgebra::data() const {
  static const Data empty{};
  return data_ ? *data_ : empty;
}

std::size_t LieAlgebra::dim() const { return data().names.size(); }
const std::vector<std::string>& LieAlgebra::names() const { return data().names; }
const LieAlgebra::BracketTable& LieAlgebra::table() const { return data().table; }

const SparseVector& LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  const std::size_t n = dim();
  if (i >= n || j >= n) throw std::out_of_range("basis index out of range");
  return data().dense[i * n + j];
}

RatVector LieAlgebra::bracket(const RatVector& a, const RatVector& b) const {
  const std::size_t n = dim();
  if (a.size() != n || b.size() != n) throw DimensionError("element length does not match algebra dimension");
  RatVector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (is_zero(b[j])) continue;
      const auto& v = data().dense[i * n + j];
      if (v.empty()) continue;
      const Rational f = a[i] * b[j];
      for (const auto& [k, c] : v) out[k] += f * c;
    }
  }
  return out;
}

RatMatrix LieAlgebra::ad(const RatVector& v) const {
  const std::size_t n = dim();
  if (v.size() != n) throw DimensionError("element length does not match algebra dimension");
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero(v[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [k, c] : data().dense[i * n + j]) m(k, j) += v[i] * c;
    }
  }
  return m;
}

const RatMatrix& LieAlgebra::killing_gram() const {
  const Data& d = data();
  std::call_once(d.killing_once, [&] {
    const std::size_t n = dim();
    // ad x_i as sparse (row, col, value) triples.
    std::vector<std::vector<std::tuple<std::size_t, std::size_t, Rational>>> ads(n);
    std::vector<RatMatrix> dense;
    dense.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (const auto& [k, c] : d.dense[i * n + j]) ads[i].emplace_back(k, j, c);
      }
      RatVector e(n);
      e[i] = 1;
      dense.push_back(ad(e));
    }
    RatMatrix k(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        Rational tr = 0;
        for (const auto& [r, c, v] : ads[i]) tr += v * dense[j](c, r);
        k(i, j) = tr;
        k(j, i) = tr;
      }
    }
    d.killing = std::move(k);
  });
  return d.killing;
}

Element::Element(LieAlgebra alg, RatVector coeffs) : alg_(std::move(alg)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != alg_.dim()) throw DimensionError("element length does not match algebra dimension");
}

Element Element::zero(const LieAlgebra& alg) { return Element(alg, RatVector(alg.dim())); }

Element Element::basis(const LieAlgebra& alg, std::size_t i) {
  if (i >= alg.dim()) throw std::out_of_range("basis index out of range");
  RatVector v(alg.dim());
  v[i] = 1;
  return Element(alg, std::move(v));
}

void Element::check_same(const Element& other) const {
  if (!(alg_ == other.alg_)) throw AlgebraMismatch("elements belong to different algebras");
}

Element Element::operator+(const Element& other) const {
  check_same(other);
  RatVector v = coeffs_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += other.coeffs_[i];
  return Element(alg_, std::move(v));
}

Element Element::operator-(const Element& other) const {
  check_same(other);
  RatVector v = coeffs_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= other.coeffs_[i];
  return Element(alg_, std::move(v));
}

Element Element::operator*(const Rational& c) const {
  RatVector v = coeffs_;
  for (auto& x : v) x *= c;
  return Element(alg_, std::move(v));
}

bool Element::operator==(const Element& other) const { return alg_ == other.alg_ && coeffs_ == other.coeffs_; }

Element bracket(const Element& a, const Element& b) {
  if (!(a.algebra() == b.algebra())) throw AlgebraMismatch("elements belong to different algebras");
  return Element(a.algebra(), a.algebra().bracket(a.coeffs(), b.coeffs()));
}

}  // namespace lieinv
