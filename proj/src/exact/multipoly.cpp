#include "lieinv/exact/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lieinv {

// ---------------------------------------------------------------------------
// Monomial
// ---------------------------------------------------------------------------

Monomial::Monomial(std::vector<std::uint16_t> exps) : exps_(std::move(exps)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), 0u);
}

Monomial Monomial::unit(std::size_t nvars, std::size_t var, std::uint16_t power) {
  Monomial m(nvars);
  m.exps_[var] = power;
  m.degree_ = power;
  return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += other.exps_[i];
  out.degree_ += other.degree_;
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] -= divisor.exps_[i];
  out.degree_ -= divisor.degree_;
  return out;
}

std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (auto c = ea[i] <=> eb[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto e : m.exponents()) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

// ---------------------------------------------------------------------------
// MultiPoly
// ---------------------------------------------------------------------------

namespace {

bool term_greater(const MultiPoly::Term& a, const MultiPoly::Term& b) {
  return grlex_compare(a.mono, b.mono) == std::strong_ordering::greater;
}

}  // namespace

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
  MultiPoly p(nvars);
  if (!lieinv::is_zero(c)) p.terms_.push_back({Monomial(nvars), c});
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index, const Rational& c) {
  if (index >= nvars) throw DimensionError("variable index out of range");
  MultiPoly p(nvars);
  if (!lieinv::is_zero(c)) p.terms_.push_back({Monomial::unit(nvars, index), c});
  return p;
}

MultiPoly MultiPoly::monomial(const Monomial& m, const Rational& c) {
  MultiPoly p(m.nvars());
  if (!lieinv::is_zero(c)) p.terms_.push_back({m, c});
  return p;
}

MultiPoly MultiPoly::from_terms(std::size_t nvars, std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.mono.nvars() != nvars) throw DimensionError("monomial length does not match variable count");
  }
  std::sort(terms.begin(), terms.end(), term_greater);
  MultiPoly p(nvars);
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (lieinv::is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
    } else if (!lieinv::is_zero(t.coeff)) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool MultiPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.degree() == 0); }

int MultiPoly::total_degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.degree()); }

bool MultiPoly::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.mono.degree() == terms_.front().mono.degree(); });
}

const MultiPoly::Term& MultiPoly::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  return terms_.front();
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
    return grlex_compare(t.mono, key) == std::strong_ordering::greater;
  });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return Rational(0);
}

std::vector<std::size_t> MultiPoly::support() const {
  std::vector<bool> used(nvars_, false);
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (t.mono[i] > 0) used[i] = true;
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (used[i]) out.push_back(i);
  }
  return out;
}

void MultiPoly::check_compatible(const MultiPoly& other) const {
  if (nvars_ != other.nvars_) {
    throw DimensionError("polynomial variable counts differ: " + std::to_string(nvars_) + " vs " +
                         std::to_string(other.nvars_));
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(*this);
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

MultiPoly MultiPoly::combine(const MultiPoly& other, bool subtract) const {
  check_compatible(other);
  MultiPoly out(nvars_);
  out.terms_.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    std::strong_ordering c = std::strong_ordering::equal;
    if (a == terms_.end()) {
      c = std::strong_ordering::less;
    } else if (b == other.terms_.end()) {
      c = std::strong_ordering::greater;
    } else {
      c = grlex_compare(a->mono, b->mono);
    }
    if (c == std::strong_ordering::greater) {
      out.terms_.push_back(*a++);
    } else if (c == std::strong_ordering::less) {
      out.terms_.push_back({b->mono, subtract ? Rational(-b->coeff) : b->coeff});
      ++b;
    } else {
      Rational s = subtract ? Rational(a->coeff - b->coeff) : Rational(a->coeff + b->coeff);
      if (!lieinv::is_zero(s)) out.terms_.push_back({a->mono, std::move(s)});
      ++a;
      ++b;
    }
  }
  return out;
}

MultiPoly MultiPoly::operator+(const MultiPoly& other) const { return combine(other, false); }
MultiPoly MultiPoly::operator-(const MultiPoly& other) const { return combine(other, true); }

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) { return *this = combine(other, false); }
MultiPoly& MultiPoly::operator-=(const MultiPoly& other) { return *this = combine(other, true); }

MultiPoly MultiPoly::operator*(const MultiPoly& other) const {
  check_compatible(other);
  if (is_zero() || other.is_zero()) return MultiPoly(nvars_);
  if (other.terms_.size() == 1) {
    // Multiplying by a single term preserves the order.
    MultiPoly out(nvars_);
    out.terms_.reserve(terms_.size());
    const auto& [m, c] = other.terms_.front();
    for (const auto& t : terms_) out.terms_.push_back({t.mono * m, t.coeff * c});
    return out;
  }
  if (terms_.size() == 1) return other * *this;
  std::vector<Term> prods;
  prods.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) prods.push_back({a.mono * b.mono, a.coeff * b.coeff});
  }
  return from_terms(nvars_, std::move(prods));
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
  if (lieinv::is_zero(c)) return MultiPoly(nvars_);
  MultiPoly out(*this);
  for (auto& t : out.terms_) t.coeff *= c;
  return out;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) { return *this = *this * c; }

bool MultiPoly::operator==(const MultiPoly& other) const {
  if (nvars_ != other.nvars_ || terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].mono == other.terms_[i].mono) || terms_[i].coeff != other.terms_[i].coeff) return false;
  }
  return true;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  if (var >= nvars_) throw DimensionError("derivative variable index out of range");
  // Lowering one exponent keeps grlex order among the surviving terms.
  MultiPoly out(nvars_);
  for (const auto& t : terms_) {
    const auto e = t.mono[var];
    if (e == 0) continue;
    out.terms_.push_back({t.mono / Monomial::unit(nvars_, var), t.coeff * e});
  }
  return out;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) {
    throw DimensionError("evaluation point has length " + std::to_string(point.size()) + ", expected " +
                         std::to_string(nvars_));
  }
  Rational sum = 0;
  Rational prod;
  Rational pw;
  for (const auto& t : terms_) {
    prod = t.coeff;
    for (std::size_t i = 0; i < nvars_; ++i) {
      const auto e = t.mono[i];
      if (e == 0) continue;
      mpz_pow_ui(pw.get_num_mpz_t(), point[i].get_num_mpz_t(), e);
      mpz_pow_ui(pw.get_den_mpz_t(), point[i].get_den_mpz_t(), e);
      prod *= pw;
    }
    sum += prod;
  }
  return sum;
}

MultiPoly MultiPoly::exact_divide(const MultiPoly& divisor) const {
  check_compatible(divisor);
  if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
  const Term& lead = divisor.terms_.front();
  if (divisor.terms_.size() == 1) {
    MultiPoly out(nvars_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      if (!lead.mono.divides(t.mono)) throw std::domain_error("inexact polynomial division");
      out.terms_.push_back({t.mono / lead.mono, t.coeff / lead.coeff});
    }
    return out;
  }
  std::vector<Term> quotient;
  MultiPoly rem(*this);
  while (!rem.is_zero()) {
    const Term& rt = rem.terms_.front();
    if (!lead.mono.divides(rt.mono)) throw std::domain_error("inexact polynomial division");
    Term q{rt.mono / lead.mono, rt.coeff / lead.coeff};
    rem -= divisor * MultiPoly::monomial(q.mono, q.coeff);
    quotient.push_back(std::move(q));
  }
  MultiPoly out(nvars_);
  out.terms_ = std::move(quotient);  // produced in decreasing order
  return out;
}

MultiPoly MultiPoly::primitive() const {
  if (is_zero()) return *this;
  std::vector<Rational> coeffs;
  coeffs.reserve(terms_.size());
  for (const auto& t : terms_) coeffs.push_back(t.coeff);
  return *this * Rational(1 / content(coeffs));
}

MultiPoly MultiPoly::normalized() const {
  MultiPoly p = primitive();
  if (!p.is_zero() && sgn(p.terms_.front().coeff) < 0) p = -p;
  return p;
}

// ---------------------------------------------------------------------------
// Text form
// ---------------------------------------------------------------------------

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, coeff] : p.terms()) {
    Rational mag = abs(coeff);
    if (first) {
      if (sgn(coeff) < 0) os << '-';
    } else {
      os << (sgn(coeff) < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (mono.degree() == 0 || mag != 1) {
      os << to_string(mag);
      need_star = true;
    }
    for (std::size_t i = 0; i < mono.nvars(); ++i) {
      if (mono[i] == 0) continue;
      if (need_star) os << '*';
      os << 'x' << (i + 1);
      if (mono[i] > 1) os << '^' << mono[i];
      need_star = true;
    }
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t nvars) : s_(text), nvars_(nvars) {}

  MultiPoly parse() {
    std::vector<MultiPoly::Term> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      skip_ws();
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      terms.push_back(parse_term(sign));
      skip_ws();
    }
    return MultiPoly::from_terms(nvars_, std::move(terms));
  }

 private:
  MultiPoly::Term parse_term(int sign) {
    Rational coeff = sign;
    std::vector<std::uint16_t> exps(nvars_, 0);
    bool expect_factor = true;
    while (expect_factor) {
      skip_ws();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff *= parse_number();
      } else if (peek() == 'x') {
        get();
        std::size_t idx = 0;
        if (peek() == '[') {
          get();
          idx = parse_index();
          if (get() != ']') fail("expected ']'");
        } else {
          idx = parse_index();
        }
        if (idx == 0 || idx > nvars_) fail("variable x" + std::to_string(idx) + " outside x1..x" + std::to_string(nvars_));
        unsigned power = 1;
        skip_ws();
        if (peek() == '^' || (peek() == '*' && peek(1) == '*')) {
          get();
          if (peek() == '*') get();
          skip_ws();
          power = static_cast<unsigned>(parse_index());
        }
        exps[idx - 1] = static_cast<std::uint16_t>(exps[idx - 1] + power);
      } else {
        fail("expected a number or a variable");
      }
      skip_ws();
      if (peek() == '*' && peek(1) != '*') {
        get();
      } else {
        expect_factor = false;
      }
    }
    return {Monomial(std::move(exps)), coeff};
  }

  Rational parse_number() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) get();
    std::string num(s_.substr(start, pos_ - start));
    std::string den = "1";
    if (peek() == '/') {
      get();
      std::size_t ds = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) get();
      if (ds == pos_) fail("expected denominator");
      den = std::string(s_.substr(ds, pos_ - ds));
    }
    return parse_rational(num + "/" + den);
  }

  std::size_t parse_index() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) get();
    if (start == pos_) fail("expected an integer");
    return std::stoul(std::string(s_.substr(start, pos_ - start)));
  }

  bool at_end() const { return pos_ >= s_.size(); }
  char peek(std::size_t ahead = 0) const { return pos_ + ahead < s_.size() ? s_[pos_ + ahead] : '\0'; }
  char get() { return at_end() ? '\0' : s_[pos_++]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view s_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, std::size_t nvars) { return PolyParser(text, nvars).parse(); }

}  // namespace lieinv
