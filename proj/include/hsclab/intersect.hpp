#ifndef HSCLAB_INTERSECT_HPP_
#define HSCLAB_INTERSECT_HPP_

#include <optional>
#include <vector>

#include "hsclab/rational.hpp"

// Bidegree (p,1) hypersurfaces M in CP^r x CP^s, n = r + s - 1, with H1, H2
// the restricted hyperplane classes and c1(M) = (r+1-p) H1 + s H2.

namespace hsc {

struct HypersurfaceRing {
  int r = 2;
  int s = 2;
  int p = 1;
  std::vector<Integer> numbers;  ///< numbers[i] = H1^i H2^(n-i) on M, i = 0..n

  int n() const { return r + s - 1; }
  const Integer& operator[](int i) const { return numbers.at(i); }
};

/// Pushes H1^i H2^(n-i) (p H1 + H2) into the ambient ring, where only
/// H1^r H2^s integrates to 1.
HypersurfaceRing intersection_numbers(int r, int s, int p);

/// c1(M) . (a H1 + b H2)^(n-1) by multinomial expansion.
Rational total_scalar_coefficient(int r, int s, int p, const Rational& a, const Rational& b);

/// value = a^(r-2) b^(s-2) (a2 a^2 + ab a b + b2 b^2)
struct Bracket {
  int r = 2;
  int s = 2;
  Rational a2;
  Rational ab;
  Rational b2;
  Rational value(const Rational& a, const Rational& b) const;
};

/// As printed: C(n-1,r) s, C(n-1,r-1)(r+1+sp-p), C(n-1,r-2)(r+1-p).
Bracket printed_bracket(int r, int s, int p);
/// The expansion actually gives C(n-1,r-2)(r+1-p) p on b^2.
Bracket corrected_bracket(int r, int s, int p);

struct ClassWitness {
  Rational a;
  Rational b;
  Rational value;
};

/// A class a H1 + b H2 with c1 . [w]^(n-1) < 0, or none once the bracket is
/// shown positive on a, b > 0.
std::optional<ClassWitness> negative_class_witness(int r, int s, int p);

}  // namespace hsc

#endif  // HSCLAB_INTERSECT_HPP_
