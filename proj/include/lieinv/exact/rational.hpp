#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lieinv {

using Integer = mpz_class;
/// Exact rational scalar. gmpxx keeps arithmetic results canonical
/// (positive denominator, reduced); values built from text go through
/// parse_rational, which canonicalizes.
using Rational = mpq_class;

using RatVector = std::vector<Rational>;

/// Thrown on any shape or variable-count disagreement between operands.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when text input (polynomials, rationals, JSON payloads) is malformed.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "n", "-n", "n/d". Rejects a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline bool is_zero(const RatVector& v) {
  for (const auto& c : v) {
    if (!is_zero(c)) return false;
  }
  return true;
}

/// Greatest common divisor of the numerators over the least common multiple
/// of the denominators; zero for an all-zero input.
Rational content(const std::vector<Rational>& coeffs);

}  // namespace lieinv
