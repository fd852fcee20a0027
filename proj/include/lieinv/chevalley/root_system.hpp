#pragma once

#include <map>
#include <string>
#include <vector>

#include "lieinv/exact/matrix.hpp"

namespace lieinv {

using Root = std::vector<int>;  // coordinates in the simple-root basis

/// Root system of a simple Lie algebra of type A..G, Bourbaki numbering.
class RootSystem {
 public:
  /// Throws std::invalid_argument for an unknown (type, rank) pair.
  RootSystem(char type, std::size_t rank);

  char type() const { return type_; }
  std::size_t rank() const { return rank_; }
  std::string name() const { return std::string(1, type_) + std::to_string(rank_); }

  /// Cartan matrix a_ij = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j).
  const Matrix<int>& cartan_matrix() const { return cartan_; }
  /// Gram matrix of the simple roots.
  const RatMatrix& gram() const { return gram_; }

  /// Positive roots ordered by height, then lexicographically.
  const std::vector<Root>& positive_roots() const { return positive_; }
  std::size_t num_positive() const { return positive_.size(); }

  Rational inner(const Root& a, const Root& b) const;
  /// <a, b^vee> = 2 (a, b) / (b, b)
  Rational pairing(const Root& a, const Root& b) const;
  /// Index of a positive root, or -1 when `r` is not one.
  int positive_index(const Root& r) const;
  /// Root (positive or negative) membership.
  bool is_root(const Root& r) const;

 private:
  char type_;
  std::size_t rank_;
  Matrix<int> cartan_;
  RatMatrix gram_;
  std::vector<Root> positive_;
  std::map<Root, int> index_;
};

int height(const Root& r);
Root operator+(const Root& a, const Root& b);
Root operator-(const Root& a, const Root& b);
Root operator-(const Root& a);

}  // namespace lieinv
