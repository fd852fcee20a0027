#include "lieinv/exact/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace lieinv {

Echelon rref(RatMatrix m) {
  Echelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const RatMatrix& m) { return rref(m).rank(); }

namespace {

std::vector<RatVector> kernel_from_rref(const RatMatrix& reduced, const std::vector<std::size_t>& pivots) {
  const std::size_t n = reduced.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(n);
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -reduced(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

RatKernel rat_kernel(const RatMatrix& m) {
  Echelon e = rref(m);
  return {e.rank(), kernel_from_rref(e.reduced, e.pivots)};
}

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
  if (b.size() != a.rows()) throw DimensionError("right-hand side length does not match matrix rows");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  Echelon e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  RatVector x(a.cols());
  for (std::size_t k = 0; k < e.pivots.size(); ++k) x[e.pivots[k]] = e.reduced(k, a.cols());
  return x;
}

Rational determinant(RatMatrix m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  Rational det = 1;
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(m(p, c))) ++p;
    if (p == n) return 0;
    if (p != c) {
      m.swap_rows(p, c);
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      const Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Echelon e = rref(std::move(aug));
  if (e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  RatMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = e.reduced(i, n + j);
  }
  return out;
}

std::vector<Rational> characteristic_polynomial(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionError("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix h = m;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t col = 0; col + 2 < n; ++col) {
    const std::size_t m1 = col + 1;
    std::size_t i = m1;
    while (i < n && is_zero(h(i, col))) ++i;
    if (i == n) continue;
    if (i != m1) {
      h.swap_rows(i, m1);
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, i), h(r, m1));
    }
    const Rational t = h(m1, col);
    for (std::size_t k = m1 + 1; k < n; ++k) {
      if (is_zero(h(k, col))) continue;
      const Rational u = h(k, col) / t;
      for (std::size_t j = 0; j < n; ++j) h(k, j) -= u * h(m1, j);
      for (std::size_t r = 0; r < n; ++r) h(r, m1) += u * h(r, k);
    }
  }
  // p_k = det(X - H[0..k, 0..k]) by the Hessenberg recurrence.
  std::vector<std::vector<Rational>> p(n + 1);
  p[0] = {Rational(1)};
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t d = k - 1;
    std::vector<Rational> next(k + 1);
    for (std::size_t c = 0; c < p[k - 1].size(); ++c) {
      next[c + 1] += p[k - 1][c];
      next[c] -= h(d, d) * p[k - 1][c];
    }
    Rational prod = 1;
    for (std::size_t i = d; i-- > 0;) {
      prod *= h(i + 1, i);
      if (is_zero(prod)) break;
      const Rational coef = h(i, d) * prod;
      if (is_zero(coef)) continue;
      for (std::size_t c = 0; c < p[i].size(); ++c) next[c] -= coef * p[i][c];
    }
    p[k] = std::move(next);
  }
  return p[n];
}

std::vector<Eigenspace> rational_eigenspaces(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionError("eigenspaces of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return {};
  // Rational eigenvalues of m are k/D with D clearing all denominators and
  // |k| bounded by the largest absolute row sum of D*m.
  Integer den = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& x : m.row(i)) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  }
  Rational bound = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Rational s = 0;
    for (const auto& x : m.row(i)) s += abs(x);
    bound = std::max(bound, s);
  }
  const Integer kmax = Integer(bound * den + 1);
  if (kmax > 1000000) throw std::domain_error("eigenvalue search range too large");
  const auto poly = characteristic_polynomial(m);
  std::vector<Eigenspace> out;
  std::size_t total = 0;
  for (long k = -kmax.get_si(); k <= kmax.get_si(); ++k) {
    Rational lambda(Integer(k), den);
    lambda.canonicalize();
    Rational acc = 0;
    for (std::size_t c = poly.size(); c-- > 0;) acc = acc * lambda + poly[c];
    if (!is_zero(acc)) continue;
    RatMatrix shifted = m;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= lambda;
    auto ker = rat_kernel(shifted);
    total += ker.basis.size();
    out.push_back({lambda, std::move(ker.basis)});
  }
  if (total != n) throw std::domain_error("matrix is not diagonalizable over the rationals");
  return out;
}

std::size_t jacobian_rank(const std::vector<MultiPoly>& polys, std::span<const Rational> point) {
  if (polys.empty()) return 0;
  const std::size_t n = polys.front().nvars();
  if (point.size() != n) throw DimensionError("point length does not match variable count");
  RatMatrix jac(polys.size(), n);
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (polys[i].nvars() != n) throw DimensionError("polynomials disagree on variable count");
    for (std::size_t j = 0; j < n; ++j) jac(i, j) = polys[i].derivative(j).evaluate(point);
  }
  return rank(jac);
}

// ---------------------------------------------------------------------------
// SparseEchelon
// ---------------------------------------------------------------------------

namespace {

// a - f * b over sorted sparse rows.
SparseEchelon::Row axpy(const SparseEchelon::Row& a, const Rational& f, const SparseEchelon::Row& b) {
  SparseEchelon::Row out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.emplace_back(ib->first, -f * ib->second);
      ++ib;
    } else {
      Rational v = ia->second - f * ib->second;
      if (!is_zero(v)) out.emplace_back(ia->first, std::move(v));
      ++ia;
      ++ib;
    }
  }
  return out;
}

}  // namespace

bool SparseEchelon::add_row(Row row) {
  std::erase_if(row, [](const auto& e) { return is_zero(e.second); });
  for (const auto& [c, v] : row) {
    if (c >= ncols_) throw DimensionError("sparse row column out of range");
  }
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  // Leading-entry reduction only; full back-substitution happens on demand.
  while (!row.empty()) {
    auto it = rows_.find(row.front().first);
    if (it == rows_.end()) break;
    row = axpy(row, row.front().second, it->second);
  }
  if (row.empty()) return false;
  const Rational inv = 1 / row.front().second;
  for (auto& e : row) e.second *= inv;
  rows_.emplace(row.front().first, std::move(row));
  return true;
}

bool SparseEchelon::add_dense_row(const RatVector& row) {
  if (row.size() != ncols_) throw DimensionError("dense row length does not match column count");
  Row sparse;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (!is_zero(row[j])) sparse.emplace_back(j, row[j]);
  }
  return add_row(std::move(sparse));
}

std::vector<SparseEchelon::Row> SparseEchelon::reduced_rows() const {
  // Back-substitute from the last pivot upwards.
  std::map<std::size_t, Row> done;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    Row row = it->second;
    std::size_t pos = 1;
    while (pos < row.size()) {
      auto d = done.find(row[pos].first);
      if (d == done.end()) {
        ++pos;
        continue;
      }
      const Rational f = row[pos].second;
      row = axpy(row, f, d->second);
    }
    done.emplace(it->first, std::move(row));
  }
  std::vector<Row> out;
  out.reserve(done.size());
  for (auto& [p, r] : done) out.push_back(std::move(r));
  return out;
}

std::vector<std::size_t> SparseEchelon::pivots() const {
  std::vector<std::size_t> out;
  for (const auto& [p, r] : rows_) out.push_back(p);
  return out;
}

std::vector<RatVector> SparseEchelon::kernel() const {
  const auto rows = reduced_rows();
  std::vector<bool> is_pivot(ncols_, false);
  for (const auto& r : rows) is_pivot[r.front().first] = true;
  std::vector<std::size_t> free_index(ncols_, 0);
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < ncols_; ++f) {
    if (is_pivot[f]) continue;
    free_index[f] = basis.size();
    RatVector v(ncols_);
    v[f] = 1;
    basis.push_back(std::move(v));
  }
  for (const auto& r : rows) {
    const std::size_t p = r.front().first;
    for (std::size_t k = 1; k < r.size(); ++k) basis[free_index[r[k].first]][p] = -r[k].second;
  }
  return basis;
}

}  // namespace lieinv
