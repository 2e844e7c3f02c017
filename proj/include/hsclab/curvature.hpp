#ifndef HSCLAB_CURVATURE_HPP_
#define HSCLAB_CURVATURE_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hsclab/profile.hpp"
#include "hsclab/roots.hpp"

namespace hsc {

/// A = a_num, B = b_num / (2 (n+kU)^2), C = c_num / (n+kU)^2.
struct CurvatureTriple {
  int n = 2;
  int k = 1;
  Rational u_min;
  Rational u_max;
  RationalPoly a_num;
  RationalPoly b_num;
  RationalPoly c_num;

  /// n + kU
  RationalPoly base() const { return RationalPoly::linear(n, k); }
  Rational A(const Rational& u) const;
  Rational B(const Rational& u) const;
  Rational C(const Rational& u) const;
};

CurvatureTriple curvature_triple(const GeneratingProfile& profile);

/// Floating values of the three components at one point.
struct Abc {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
};

using AbcFn = std::function<Abc(double)>;

/// Double-coefficient copy of a triple for fast sampling.
class TripleEval {
 public:
  explicit TripleEval(const CurvatureTriple& t);
  Abc operator()(double u) const;
  double u_min() const { return lo_; }
  double u_max() const { return hi_; }

 private:
  static double horner(const std::vector<double>& c, double u);
  int n_, k_;
  double lo_, hi_;
  std::vector<double> a_, b_, c_;
};

/// A, B, C from phi, phi', phi'' at a point.
Abc abc_from_phi(int n, int k, double u, double phi, double dphi, double ddphi);

/// H = (A+C-4B) t^2 + (4B-2C) t + C with t = |x0|^2 in [0, 1].
double h_value(const Abc& abc, double t);
double h_value(const CurvatureTriple& triple, double u, double t);
Rational h_value_exact(const CurvatureTriple& triple, const Rational& u, const Rational& t);

template <class T>
struct HExtremaT {
  T min_h;
  T max_h;
  T argmin_t;
  T argmax_t;
};
using HExtrema = HExtremaT<Rational>;
using HExtremaD = HExtremaT<double>;

/// Exact extremes over t in [0, 1] of the quadratic with coefficients (A, B, C).
HExtrema h_extrema(const Rational& A, const Rational& B, const Rational& C);
HExtremaD h_extrema(const Abc& abc);
HExtrema h_extrema_at(const CurvatureTriple& triple, const Rational& u);

enum class Verdict { positive, not_positive, inconclusive };
enum class CertMethod { exact_sturm, numeric_sampling };

const char* to_string(Verdict v);
const char* to_string(CertMethod m);

struct CertPiece {
  Interval interval;
  std::vector<std::string> facts;
};

struct PositivityCertificate {
  Verdict verdict = Verdict::inconclusive;
  CertMethod method = CertMethod::exact_sturm;
  std::vector<CertPiece> pieces;
  std::string failed_condition;  ///< "A>0", "C>0" or "2B+sqrt(AC)>0" on failure

  // Exact witness (method exact_sturm): H(u, t) <= 0.
  std::optional<Rational> witness_u;
  std::optional<Rational> witness_t;
  bool witness_exact = false;
  std::optional<Interval> witness_interval;

  // Numeric diagnostics (method numeric_sampling).
  double margin = 0.0;  ///< smallest sampled value of min(A, C, T)
  std::optional<double> worst_u;
  std::optional<double> worst_t;
  int evaluations = 0;

  bool positive() const { return verdict == Verdict::positive; }
};

/// P = b_num and W = (n+kU)^2 a_num c_num - P^2.
RationalPoly p_poly(const CurvatureTriple& t);
RationalPoly w_poly(const CurvatureTriple& t);

/// Exact decision of H > 0 on the closed domain.
PositivityCertificate certify_positive(const GeneratingProfile& profile);

/// Re-checks every fact of an exact certificate (and coverage of the domain).
bool verify_certificate(const GeneratingProfile& profile, const PositivityCertificate& cert);

/// Sampling verdict for non-polynomial profiles. T = (n+kU)^2 (2B + sqrt(AC)).
PositivityCertificate certify_positive_numeric(const AbcFn& abc, int n, int k, double u_min, double u_max,
                                               int samples = 4096);

struct PinchingPoint {
  double u = 0.0;
  double t = 0.0;
  double value = 0.0;
};

struct PinchingReport {
  double local_constant = 0.0;
  double global_constant = 0.0;
  double local_argmin_u = 0.0;
  PinchingPoint global_min;
  PinchingPoint global_max;
  double tolerance = 0.0;
  bool has_global = false;
};

/// r(u) = min_t H / max_t H.
double pinching_ratio(const Abc& abc);

/// Local pinching by a 1024-point grid plus bracketed minimization.
PinchingReport local_pinching(const AbcFn& abc, double u_min, double u_max, double tol = 1e-10);
/// Also the global constant, from min_u min_t H and max_u max_t H.
PinchingReport global_pinching(const AbcFn& abc, double u_min, double u_max, double tol = 1e-10);

/// Profile versions; throw std::domain_error unless certified positive.
PinchingReport local_pinching(const GeneratingProfile& profile, double tol = 1e-10);
PinchingReport global_pinching(const GeneratingProfile& profile, double tol = 1e-10);

}  // namespace hsc

#endif  // HSCLAB_CURVATURE_HPP_
