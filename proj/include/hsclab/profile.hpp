#ifndef HSCLAB_PROFILE_HPP_
#define HSCLAB_PROFILE_HPP_

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hsclab/poly.hpp"

namespace hsc {

/// U(n)-invariant metric on M_{n,k} given by phi(U) on [u_min, u_max].
struct GeneratingProfile {
  int n = 2;
  int k = 1;
  Rational u_min;
  Rational u_max;
  RationalPoly phi;

  friend bool operator==(const GeneratingProfile& a, const GeneratingProfile& b) {
    return a.n == b.n && a.k == b.k && a.u_min == b.u_min && a.u_max == b.u_max && a.phi == b.phi;
  }
};

struct Violation {
  std::string condition;
  std::string witness;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks the compactification conditions exactly: n + k*u_min > 0,
/// phi = 0 and phi' = +-2 at the ends, phi > 0 strictly inside.
ValidationReport validate_profile(const GeneratingProfile& profile);

/// Class b[E_inf] - a[E_0] with a = n + k*u_min, b = n + k*u_max. Only the
/// ray b:a is determined by the profile.
struct KahlerClassRatio {
  Rational a;
  Rational b;
  Rational ratio() const { return b / a; }
};

KahlerClassRatio kahler_class_of(const GeneratingProfile& profile);

/// phi = c - U^2/c on [-c, c]; requires 0 < c < n/k.
GeneratingProfile hitchin_profile(int n, int k, const Rational& c);

/// The quartic family on M_{2,1}:
/// phi = mu - (1/c^3 - mu/c^4) U^4 - (2mu/c^2 - 1/c) U^2 on [-c, c],
/// 0 < c < 6/5 and c/2 <= mu < c (mu = c/2 is the limiting member).
GeneratingProfile quartic_profile(const Rational& c, const Rational& mu);

/// Parameters of phi = mu - a2 x^2 - a_{2p-2} x^{2p-2} - a_{2p} x^{2p}.
struct AnyClassParams {
  int p = 2;
  Rational delta1;
  Rational delta2;
  Rational alpha2;
  Rational mu;
  Rational alpha_2p_2;
  Rational alpha_2p;
  Rational epsilon_p;
};

/// Fills mu, alpha_{2p-2}, alpha_{2p} and epsilon_p from (p, delta2, alpha2).
AnyClassParams anyclass_params(int n, int k, const Rational& c, int p, const Rational& delta1,
                               const Rational& delta2, const Rational& alpha2);

/// alpha_{2p-2} and alpha_{2p} for given mu and alpha2 (no admissibility check).
std::pair<Rational, Rational> anyclass_coefficients(const Rational& c, int p, const Rational& mu,
                                                    const Rational& alpha2);

/// The three upper bounds on delta2 from the positivity, C > 0 and
/// zero-section conditions, in that order.
std::vector<Rational> anyclass_delta2_bounds(int n, int k, const Rational& c, int p);

/// delta2 = half the smallest bound, delta1 = p delta2 / (2 (p-1) c^2),
/// alpha2 = delta1 / 2.
AnyClassParams anyclass_default_params(int n, int k, const Rational& c, int p);

/// Smallest p >= 2 with c <= n/k - 2 epsilon_p, or nullopt beyond `cap`.
std::optional<int> anyclass_min_p(int n, int k, const Rational& c, int cap = 4096);

/// Every violated admissibility condition, by name.
std::vector<std::string> anyclass_violations(int n, int k, const Rational& c, const AnyClassParams& params);

/// Throws std::invalid_argument naming the first violated condition.
GeneratingProfile anyclass_profile(int n, int k, const Rational& c, const AnyClassParams& params);

/// t * phi1 + (1 - t) * phi2; domains and (n, k) must match, 0 <= t <= 1.
GeneratingProfile convex_combine(const GeneratingProfile& p1, const GeneratingProfile& p2, const Rational& t);

/// Random valid profile phi = (U - lo)(hi - U) g with g = 2/(hi - lo) on the
/// ends; retried until phi > 0 inside. degree >= 2.
GeneratingProfile random_profile(int n, int k, const Rational& lo, const Rational& hi, int degree,
                                 std::mt19937_64& rng);

struct ArclengthReport {
  std::vector<double> u;        ///< sample abscissae in U
  std::vector<double> t;        ///< t(U) = int dU / sqrt(phi), from `t_base`
  std::vector<double> speed;    ///< sqrt(phi(U))
  double t_base = 0.0;
  double total_length = 0.0;    ///< infinite if either end diverges
  bool lower_divergent = false;
  bool upper_divergent = false;
  double lower_exponent = 0.0;  ///< phi ~ (U - u_min)^q near the lower end
  double upper_exponent = 0.0;
  std::optional<bool> complete_at_infinity;
  double growth_exponent = 0.0;  ///< phi ~ U^q at infinity (unbounded only)
};

/// Arclength data for an evaluator on [u_min, u_max]; u_max may be +inf.
/// Throws std::domain_error if phi <= 0 at an interior sample.
ArclengthReport arclength_data(const std::function<double(double)>& phi, double u_min, double u_max,
                               int samples = 65);
ArclengthReport arclength_data(const GeneratingProfile& profile, int samples = 65);

}  // namespace hsc

#endif  // HSCLAB_PROFILE_HPP_
