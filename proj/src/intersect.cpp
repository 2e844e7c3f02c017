#include "hsclab/intersect.hpp"

#include <stdexcept>

namespace hsc {

namespace {

void check(int r, int s, int p) {
  if (r < 2 || s < 2 || p < 1) throw std::invalid_argument("hypersurface: need r, s >= 2 and p >= 1");
}

Integer binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace

HypersurfaceRing intersection_numbers(int r, int s, int p) {
  check(r, s, p);
  HypersurfaceRing ring{r, s, p, {}};
  const int n = ring.n();
  // [M] = p H1 + H2 as exponent shifts with coefficients.
  const struct {
    int d1, d2, coeff;
  } divisor[] = {{1, 0, p}, {0, 1, 1}};
  ring.numbers.assign(n + 1, 0);
  for (int i = 0; i <= n; ++i)
    for (const auto& term : divisor) {
      int e1 = i + term.d1, e2 = n - i + term.d2;
      if (e1 == r && e2 == s) ring.numbers[i] += term.coeff;
    }
  return ring;
}

Rational total_scalar_coefficient(int r, int s, int p, const Rational& a, const Rational& b) {
  HypersurfaceRing ring = intersection_numbers(r, s, p);
  const int n = ring.n();
  const Rational c1_h1 = r + 1 - p, c1_h2 = s;
  Rational total = 0;
  // (a H1 + b H2)^(n-1) = sum_j C(n-1, j) a^j b^(n-1-j) H1^j H2^(n-1-j)
  for (int j = 0; j <= n - 1; ++j) {
    Rational term = c1_h1 * Rational(ring[j + 1]) + c1_h2 * Rational(ring[j]);
    if (term == 0) continue;
    total += Rational(binom(n - 1, j)) * pow(a, j) * pow(b, n - 1 - j) * term;
  }
  return total;
}

Rational Bracket::value(const Rational& a, const Rational& b) const {
  return pow(a, r - 2) * pow(b, s - 2) * (a2 * a * a + ab * a * b + b2 * b * b);
}

Bracket printed_bracket(int r, int s, int p) {
  check(r, s, p);
  const int n = r + s - 1;
  return {r, s, Rational(binom(n - 1, r) * s), Rational(binom(n - 1, r - 1) * (r + 1 + s * p - p)),
          Rational(binom(n - 1, r - 2) * (r + 1 - p))};
}

Bracket corrected_bracket(int r, int s, int p) {
  Bracket br = printed_bracket(r, s, p);
  br.b2 *= p;
  return br;
}

std::optional<ClassWitness> negative_class_witness(int r, int s, int p) {
  check(r, s, p);
  Bracket br = corrected_bracket(r, s, p);
  if (br.a2 >= 0 && br.ab >= 0 && br.b2 >= 0 && (br.a2 > 0 || br.ab > 0 || br.b2 > 0)) return std::nullopt;
  if (br.b2 < 0) {
    // b >> a: double b from a = 1 until the pairing turns negative.
    const Rational a = 1;
    const Rational cap = pow(Rational(2), 64);
    for (Rational b = 1; b <= cap; b *= 2) {
      Rational v = total_scalar_coefficient(r, s, p, a, b);
      if (v < 0) return ClassWitness{a, b, v};
    }
    throw std::runtime_error("negative_class_witness: doubling exhausted");
  }
  // Remaining sign patterns: minimise the quadratic in x = b/a over x > 0.
  // q(x) = a2 + ab x + b2 x^2 with b2 >= 0.
  if (br.b2 == 0) {
    if (br.ab < 0) {
      Rational x = 2 * (-br.a2 / br.ab);
      if (x <= 0) x = 1;
      while (br.a2 + br.ab * x >= 0) x *= 2;
      return ClassWitness{1, x, total_scalar_coefficient(r, s, p, 1, x)};
    }
    if (br.a2 < 0) return ClassWitness{1, ratio(1, 2), total_scalar_coefficient(r, s, p, 1, ratio(1, 2))};
    return std::nullopt;
  }
  Rational x = -br.ab / (2 * br.b2);
  if (x > 0 && br.a2 + br.ab * x + br.b2 * x * x < 0) return ClassWitness{1, x, total_scalar_coefficient(r, s, p, 1, x)};
  if (br.a2 < 0) {
    Rational y(1, 2);
    while (br.a2 + br.ab * y + br.b2 * y * y >= 0) y /= 2;
    return ClassWitness{1, y, total_scalar_coefficient(r, s, p, 1, y)};
  }
  return std::nullopt;
}

}  // namespace hsc
