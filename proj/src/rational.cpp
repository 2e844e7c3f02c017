#include "hsclab/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace hsc {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Rational parse_decimal(std::string_view text) {
  bool negative = false;
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::string digits;
  long exponent = 0;
  bool seen_point = false;
  bool any_digit = false;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      any_digit = true;
      if (seen_point) --exponent;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) throw std::invalid_argument("malformed number: " + std::string(text));
  if (pos < text.size()) {
    if (text[pos] != 'e' && text[pos] != 'E')
      throw std::invalid_argument("malformed number: " + std::string(text));
    ++pos;
    std::string_view rest = text.substr(pos);
    bool exp_negative = false;
    if (!rest.empty() && (rest[0] == '+' || rest[0] == '-')) {
      exp_negative = rest[0] == '-';
      rest.remove_prefix(1);
    }
    if (!all_digits(rest) || rest.size() > 6)
      throw std::invalid_argument("malformed exponent: " + std::string(text));
    long e = std::stol(std::string(rest));
    exponent += exp_negative ? -e : e;
  }
  Integer mantissa(digits, 10);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  Rational out = exponent >= 0 ? Rational(mantissa * scale) : ratio(mantissa, scale);
  out.canonicalize();
  return negative ? Rational(-out) : out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational");

  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    std::string_view num_body = num;
    if (!num_body.empty() && (num_body[0] == '-' || num_body[0] == '+')) num_body.remove_prefix(1);
    if (!all_digits(num_body) || !all_digits(den))
      throw std::invalid_argument("malformed rational: " + std::string(text));
    Integer d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    std::string n(num);
    if (!n.empty() && n[0] == '+') n.erase(0, 1);
    Rational q{Integer(n), d};
    q.canonicalize();
    return q;
  }
  return parse_decimal(text);
}

std::string to_string(const Rational& q) { return q.get_str(); }

int sign(const Rational& q) { return sgn(q); }
int sign(const Integer& z) { return sgn(z); }

Rational pow(const Rational& base, unsigned exponent) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  out.canonicalize();
  return out;
}

Rational simplest_between(const Rational& lo_in, const Rational& hi_in) {
  // Stern-Brocot descent on the continued fractions of the two ends.
  Rational lo = lo_in, hi = hi_in;
  if (lo > hi) std::swap(lo, hi);
  if (lo <= 0 && hi >= 0) return Rational(0);
  if (hi < 0) return -simplest_between(-hi, -lo);

  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (Rational(fl) == lo) return lo;
  Rational next_int = Rational(fl + 1);
  if (next_int <= hi) return next_int;
  // lo and hi share the integer part fl; recurse on reciprocals of the fractional parts.
  Rational lo_frac = lo - Rational(fl);
  Rational hi_frac = hi - Rational(fl);
  Rational inner = simplest_between(1 / hi_frac, 1 / lo_frac);
  return Rational(fl) + 1 / inner;
}

Rational from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite double");
  Rational q(x);  // GMP converts doubles exactly
  return q;
}

}  // namespace hsc
