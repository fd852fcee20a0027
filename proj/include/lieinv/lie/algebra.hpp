#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lieinv/exact/matrix.hpp"

namespace lieinv {

/// Sparse vector: (index, coefficient) pairs sorted by index, no zeros.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

class AlgebraMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finite-dimensional Lie algebra given by structure constants
/// [x_i, x_j] = sum_k c_ij^k x_k on a named basis. Immutable and cheap to copy;
/// copies share the same table and compare equal.
class LieAlgebra {
 public:
  using BracketTable = std::map<std::pair<std::size_t, std::size_t>, SparseVector>;

  LieAlgebra() = default;
  /// Keys may be given in either order; (j, i) is stored as -(i, j). A key
  /// given in both orders, i == j with a nonzero value, or an index out of
  /// range is rejected.
  LieAlgebra(std::vector<std::string> names, const BracketTable& brackets);
  /// Names default to x1..xn.
  LieAlgebra(std::size_t dim, const BracketTable& brackets);

  std::size_t dim() const;
  const std::vector<std::string>& names() const;

  /// [x_i, x_j] for any i, j.
  const SparseVector& basis_bracket(std::size_t i, std::size_t j) const;
  /// Stored brackets with i < j and a nonzero value.
  const BracketTable& table() const;

  RatVector bracket(const RatVector& a, const RatVector& b) const;
  /// Matrix of ad v: column j holds [v, x_j].
  RatMatrix ad(const RatVector& v) const;
  /// Killing form Gram matrix trace(ad x_i ad x_j), computed once.
  const RatMatrix& killing_gram() const;

  bool operator==(const LieAlgebra& other) const { return data_ == other.data_; }

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
  const Data& data() const;
};

/// Element of a specific algebra.
class Element {
 public:
  Element(LieAlgebra alg, RatVector coeffs);
  static Element zero(const LieAlgebra& alg);
  static Element basis(const LieAlgebra& alg, std::size_t i);

  const LieAlgebra& algebra() const { return alg_; }
  const RatVector& coeffs() const { return coeffs_; }
  bool is_zero() const { return lieinv::is_zero(coeffs_); }

  Element operator+(const Element& other) const;
  Element operator-(const Element& other) const;
  Element operator*(const Rational& c) const;
  bool operator==(const Element& other) const;

 private:
  void check_same(const Element& other) const;
  LieAlgebra alg_;
  RatVector coeffs_;
};

Element bracket(const Element& a, const Element& b);

}  // namespace lieinv
