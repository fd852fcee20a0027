#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lieinv/exact/rational.hpp"

namespace lieinv {

/// Dense exponent vector with a cached total degree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint16_t> exps);

  static Monomial unit(std::size_t nvars, std::size_t var, std::uint16_t power = 1);

  std::size_t nvars() const { return exps_.size(); }
  unsigned degree() const { return degree_; }
  std::uint16_t operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint16_t>& exponents() const { return exps_; }

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;

  bool operator==(const Monomial& other) const = default;

 private:
  std::vector<std::uint16_t> exps_;
  unsigned degree_ = 0;
};

/// Graded lexicographic order with x1 > x2 > ... > xn.
std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept sorted by decreasing graded-lex order with no zero
/// coefficients, so equality is structural and printing is canonical.
class MultiPoly {
 public:
  struct Term {
    Monomial mono;
    Rational coeff;
  };

  MultiPoly() = default;
  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const Rational& c);
  static MultiPoly variable(std::size_t nvars, std::size_t index, const Rational& c = 1);
  static MultiPoly monomial(const Monomial& m, const Rational& c);
  /// Sorts, merges equal monomials and drops zeros.
  static MultiPoly from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  const Term& leading_term() const;
  /// Coefficient of the given monomial (zero when absent).
  Rational coefficient(const Monomial& m) const;
  /// Indices of variables with a positive exponent somewhere in the polynomial.
  std::vector<std::size_t> support() const;

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& other) const;
  MultiPoly operator-(const MultiPoly& other) const;
  MultiPoly operator*(const MultiPoly& other) const;
  MultiPoly operator*(const Rational& c) const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& c);

  bool operator==(const MultiPoly& other) const;

  MultiPoly derivative(std::size_t var) const;
  Rational evaluate(std::span<const Rational> point) const;
  /// Exact quotient; throws std::domain_error if `divisor` does not divide *this.
  MultiPoly exact_divide(const MultiPoly& divisor) const;
  /// Divides every coefficient by the rational content: integer coefficients with gcd 1.
  MultiPoly primitive() const;
  /// Primitive with a positive leading coefficient.
  MultiPoly normalized() const;

 private:
  void check_compatible(const MultiPoly& other) const;
  MultiPoly combine(const MultiPoly& other, bool subtract) const;

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

inline MultiPoly operator*(const Rational& c, const MultiPoly& p) { return p * c; }

/// Text form: `c*x<i>^<e>*...` terms joined by " + " / " - ", variables 1-based.
std::string to_string(const MultiPoly& p);

/// Parses the text form. Also accepts `x[i]` for variables, `**` for powers
/// and implicit coefficient 1. Variable indices must lie in 1..nvars.
MultiPoly parse_poly(std::string_view text, std::size_t nvars);

}  // namespace lieinv
