#ifndef HSCLAB_ROOTS_HPP_
#define HSCLAB_ROOTS_HPP_

#include <optional>
#include <vector>

#include "hsclab/poly.hpp"

namespace hsc {

/// Closed rational interval [lo, hi]; lo == hi denotes an exact point.
struct Interval {
  Rational lo;
  Rational hi;

  bool is_point() const { return lo == hi; }
  Rational midpoint() const { return (lo + hi) / 2; }
  Rational width() const { return hi - lo; }
};

enum class SignKind { strictly_positive, strictly_negative, has_zero, mixed_sign };

const char* to_string(SignKind kind);

/// Outcome of an exact sign test on a closed interval.
///
/// For has_zero the witness is a root: exact when `witness_exact`, otherwise
/// the root lies in `witness_interval` and `witness` is a rational inside it.
/// For mixed_sign the witness is a rational point where the polynomial is
/// negative (and `positive_point` one where it is positive).
struct SignVerdict {
  SignKind kind = SignKind::strictly_positive;
  std::optional<Rational> witness;
  std::optional<Interval> witness_interval;
  std::optional<Rational> positive_point;
  bool witness_exact = false;

  bool positive() const { return kind == SignKind::strictly_positive; }
  bool negative() const { return kind == SignKind::strictly_negative; }
};

/// Sturm sequence of a polynomial, built once and evaluated at many points.
class SturmChain {
 public:
  explicit SturmChain(const RationalPoly& p);

  /// Sign changes of the chain at x (zeros skipped).
  int variations_at(const Rational& x) const;
  /// Distinct roots in the half-open interval (lo, hi].
  int count_half_open(const Rational& lo, const Rational& hi) const;
  std::size_t length() const { return chain_.size(); }

 private:
  std::vector<IntPoly> chain_;
};

/// Number of distinct real roots of p in the closed interval [lo, hi].
/// Endpoint roots are found by exact evaluation; the open interior is counted
/// with a Sturm chain. Throws std::domain_error("indeterminate") for p == 0.
int sturm_count(const RationalPoly& p, const Rational& lo, const Rational& hi);

enum class RootMethod { automatic, sturm, descartes };

/// Distinct real roots in [lo, hi] by the chosen exact method. `automatic`
/// uses Sturm chains up to degree 32 and Descartes bisection above.
int count_roots(const RationalPoly& p, const Rational& lo, const Rational& hi,
                RootMethod method = RootMethod::automatic);

/// Isolating intervals for the distinct real roots of p in [lo, hi], sorted
/// and pairwise disjoint. Each nondegenerate interval (a, b) holds exactly
/// one root with p(a), p(b) nonzero; exact rational roots come back as
/// points. Intervals are refined to width <= `max_width` (default
/// 2^-40 * (hi - lo)).
std::vector<Interval> isolate_roots(const RationalPoly& p, const Rational& lo, const Rational& hi,
                                    std::optional<Rational> max_width = std::nullopt);

/// Certified sign of p on the closed interval [lo, hi] (lo <= hi).
/// strictly_positive requires no roots in [lo, hi], and positive values at
/// both endpoints and the midpoint.
SignVerdict sign_on_interval(const RationalPoly& p, const Rational& lo, const Rational& hi);

/// Bisects an isolating interval of a simple root down to `max_width`.
Interval refine_root(const RationalPoly& p, Interval iv, const Rational& max_width);

/// Upper bound on the absolute value of every complex root (Cauchy).
Rational root_bound(const RationalPoly& p);

}  // namespace hsc

#endif  // HSCLAB_ROOTS_HPP_
