#ifndef HSCLAB_SOLITON_HPP_
#define HSCLAB_SOLITON_HPP_

#include <optional>
#include <vector>

#include "hsclab/curvature.hpp"

namespace hsc {

/// Coefficients of alpha^{n+1} eta(U, alpha) as a polynomial in alpha whose
/// coefficients are polynomials in U:
///   (k/n)^{n-1} ( sum_{l=1}^n (n!/l!) (n+kU)^{l-1} (n+kU-l) / k^l alpha^l + n! ).
struct EtaPolynomial {
  int n = 2;
  int k = 1;
  std::vector<RationalPoly> alpha_coeffs;  ///< index l multiplies alpha^l

  /// The polynomial in alpha obtained by fixing U.
  RationalPoly at_u(const Rational& u) const;
  /// alpha^{n+1} eta(U, alpha) and its U-derivatives, in floating point.
  long double scaled(long double u, long double alpha, int derivative = 0) const;
  /// eta(U, alpha) itself.
  double eta(double u, double alpha) const;
};

EtaPolynomial eta_polynomial(int n, int k);

enum class SolitonKind { compact, fik };
const char* to_string(SolitonKind kind);

struct PhiJet {
  double phi = 0.0;
  double dphi = 0.0;
  double ddphi = 0.0;
};

/// Shrinking soliton with potential -alpha U. The profile is the closed form
///   compact: phi = 2 [eta(U) - e^{alpha(U+1)} eta(-1)] / Q(U),
///   fik:     phi = 2 eta(U) / Q(U),
/// with Q = (1 + kU/n)^{n-1}; domain [-1, 1] or [-1, inf).
struct SolitonSolution {
  SolitonKind kind = SolitonKind::compact;
  int n = 2;
  int k = 1;
  double alpha = 0.0;
  double alpha_error = 0.0;
  double residual = 0.0;        ///< sup |phi' + k(n-1)phi/(n+kU) + 2U - alpha phi| on the test grid
  double boundary_error = 0.0;  ///< worst of |phi(-1)|, |phi'(-1) - 2| and (compact) |phi(1)|
  EtaPolynomial eta;

  double u_min() const { return -1.0; }
  double u_max() const;
  PhiJet eval(double u) const;
  /// The ODE residual at one point.
  double ode_residual(double u) const;
};

/// Bisection on alpha^{n+1}[eta(1) - e^{2 alpha} eta(-1)] = 0 in high precision.
/// The bracket starts at (1e-6, 8) and grows if needed.
struct AlphaResult {
  double alpha = 0.0;
  double error = 0.0;
};
AlphaResult compact_alpha(int n, int k, double tol = 1e-12);

/// Independent route: integrate the soliton ODE from U = -1 with phi(-1) = 0
/// and solve phi(1; alpha) = 0.
double shooting_alpha(int n, int k, double tol = 1e-12);

/// (n - 2k)(k + 1)/(n - k): the zero-section threshold for H > 0.
Rational critical_alpha0(int n, int k);

/// chi(alpha) = sum_{l=1}^n (n!/l!) (n-k)^{l-1} (n-k-l)/k^l alpha^l + n!.
RationalPoly chi_polynomial(int n, int k);

/// The unique positive root of chi, with an exact isolating interval.
struct FikAlpha {
  double alpha = 0.0;
  Interval bracket;
};
FikAlpha fik_alpha(int n, int k, double tol = 1e-12);

/// Builds the closed-form solution and checks the residual and boundary
/// conditions (throws std::runtime_error if either exceeds 1e-8).
SolitonSolution soliton_profile(int n, int k, double alpha, SolitonKind kind);

/// The displayed soliton curvature formulas (no phi'' needed).
AbcFn soliton_curvature(const SolitonSolution& sol);
/// Generic formulas applied to the closed-form phi, phi', phi''.
AbcFn soliton_curvature_generic(const SolitonSolution& sol);

struct SolitonHReport {
  SolitonKind kind = SolitonKind::compact;
  int n = 2;
  int k = 1;
  double alpha = 0.0;
  Rational alpha0;
  bool zero_section_ok = false;  ///< 2B + sqrt(AC) > 0 at U = -1
  PositivityCertificate certificate;
  std::optional<PinchingReport> pinching;
  std::vector<double> crossovers;  ///< zeros of 2B - C in the domain
  double domain_max = 1.0;
};

/// Numeric H > 0 verdict; FIK solitons are sampled on [-1, fik_umax].
SolitonHReport soliton_h_positive(int n, int k, SolitonKind kind, double fik_umax = 100.0);

struct SweepRow {
  int n = 2;
  int k = 1;
  double alpha = 0.0;
  Rational alpha0;
  int kplus1 = 2;
  bool above_alpha0 = false;  ///< alpha0 < alpha_*, decided exactly by chi(alpha0) > 0
  bool below_kplus1 = false;  ///< alpha_* < k+1, by chi(k+1) < 0
  bool above_k = false;       ///< alpha_* > k, by chi(k) > 0
  bool holds() const { return above_alpha0 && below_kplus1; }
};

/// Rows for 1 <= k <= k_max, k < n <= n_max in (k, n) order.
std::vector<SweepRow> conjecture_sweep(int n_max, int k_max);

}  // namespace hsc

#endif  // HSCLAB_SOLITON_HPP_
