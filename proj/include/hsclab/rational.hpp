#ifndef HSCLAB_RATIONAL_HPP_
#define HSCLAB_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hsc {

/// Exact rational number (GMP, always kept in lowest terms).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "num/den", an integer, or a decimal literal such as "-0.51" or
/// "1.5e-3". Decimals are converted exactly, digit by digit.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Lowest-terms "num/den" (or "num" when the denominator is 1).
std::string to_string(const Rational& q);

/// num/den in lowest terms. Prefer this over the two-argument mpq_class
/// constructor, which does not canonicalize.
inline Rational ratio(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline double to_double(const Rational& q) { return q.get_d(); }

int sign(const Rational& q);
int sign(const Integer& z);

Rational pow(const Rational& base, unsigned exponent);

/// Simplest rational (smallest denominator) in the closed interval [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi);

/// Exact binary expansion of a finite double.
Rational from_double(double x);

}  // namespace hsc

#endif  // HSCLAB_RATIONAL_HPP_
