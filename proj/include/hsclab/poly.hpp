#ifndef HSCLAB_POLY_HPP_
#define HSCLAB_POLY_HPP_

#include <initializer_list>
#include <string>
#include <vector>

#include "hsclab/rational.hpp"

namespace hsc {

class IntPoly;

/// Univariate polynomial with exact rational coefficients, ascending degree.
/// The highest stored coefficient is nonzero; the zero polynomial stores
/// nothing.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);
  RationalPoly(std::initializer_list<Rational> coeffs);

  static RationalPoly constant(const Rational& c);
  static RationalPoly monomial(const Rational& c, unsigned degree);
  /// The identity polynomial U.
  static RationalPoly identity();
  /// a + b*U
  static RationalPoly linear(const Rational& a, const Rational& b);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of U^i (zero beyond the degree).
  Rational coeff(std::size_t i) const;
  const Rational& leading() const;

  Rational operator()(const Rational& u) const;
  double eval(double u) const;
  long double eval(long double u) const;

  RationalPoly derivative() const;
  /// p(q(U))
  RationalPoly compose(const RationalPoly& q) const;

  RationalPoly& operator+=(const RationalPoly& rhs);
  RationalPoly& operator-=(const RationalPoly& rhs);
  RationalPoly& operator*=(const RationalPoly& rhs);
  RationalPoly& operator*=(const Rational& s);

  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator*(RationalPoly a, const RationalPoly& b) { return a *= b; }
  friend RationalPoly operator*(RationalPoly a, const Rational& s) { return a *= s; }
  friend RationalPoly operator*(const Rational& s, RationalPoly a) { return a *= s; }
  RationalPoly operator-() const;

  friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Quotient and remainder of Euclidean division; throws on a zero divisor.
  static void divmod(const RationalPoly& num, const RationalPoly& den, RationalPoly& quot, RationalPoly& rem);
  /// Monic greatest common divisor (zero only if both inputs are zero).
  static RationalPoly gcd(const RationalPoly& a, const RationalPoly& b);
  /// p / gcd(p, p'): same distinct roots, all simple.
  RationalPoly squarefree_part() const;

  /// Positive multiple with coprime integer coefficients (sign preserved).
  IntPoly to_primitive_int() const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Integer-coefficient polynomial used by the exact root machinery.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Integer>& coeffs() const { return c_; }
  std::vector<Integer>& mutable_coeffs() { return c_; }
  const Integer& leading() const { return c_.back(); }

  /// Sign of p(num/den), den > 0, without forming the rational value.
  int sign_at(const Rational& x) const;
  /// Exact value at a rational point.
  Rational value_at(const Rational& x) const;

  IntPoly derivative() const;
  Integer content() const;
  /// Divides by the content; makes the polynomial primitive.
  void make_primitive();
  void trim();

  /// Remainder of lc(b)^e * a modulo b, where e (written to
  /// multiplier_power when non-null) counts the elimination steps.
  static IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b, int* multiplier_power = nullptr);

  RationalPoly to_rational() const;

 private:
  std::vector<Integer> c_;
};

}  // namespace hsc

#endif  // HSCLAB_POLY_HPP_
