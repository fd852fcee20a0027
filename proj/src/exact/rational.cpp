#include "lieinv/exact/rational.hpp"

#include <cctype>

namespace lieinv {

namespace {

bool valid_integer_text(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  std::string num(text.substr(0, slash));
  std::string den = slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
  if (!num.empty() && num.front() == '+') num.erase(0, 1);
  if (!valid_integer_text(num) || !valid_integer_text(den) || den.front() == '-' || den.front() == '+') {
    throw ParseError("malformed rational: '" + std::string(text) + "'");
  }
  Integer n(num, 10);
  Integer d(den, 10);
  if (d == 0) throw ParseError("zero denominator in rational: '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Rational content(const std::vector<Rational>& coeffs) {
  Integer g = 0;
  Integer l = 1;
  for (const auto& c : coeffs) {
    if (is_zero(c)) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  if (g == 0) return Rational(0);
  Rational out(g, l);
  out.canonicalize();
  return out;
}

}  // namespace lieinv
