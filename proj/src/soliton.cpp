#include "hsclab/soliton.hpp"

#include <boost/math/tools/roots.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <boost/numeric/odeint.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "hsclab/kernels.hpp"

namespace hsc {

namespace {

using Big = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<400>>;

constexpr double kResidualBound = 1e-8;
constexpr int kResidualGrid = 4096;

void require_fano(int n, int k) {
  if (k < 1 || k >= n) throw std::invalid_argument("need 1 <= k < n");
}

Rational factorial_ratio(int n, int l) {
  Integer v = 1;
  for (int i = l + 1; i <= n; ++i) v *= i;
  return Rational(v);
}

Big to_big(const Rational& q) {
  Big x;
  mpfr_set_q(x.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return x;
}

}  // namespace

// ---------------------------------------------------------------------------

EtaPolynomial eta_polynomial(int n, int k) {
  require_fano(n, k);
  EtaPolynomial e;
  e.n = n;
  e.k = k;
  const Rational pref = pow(ratio(k, n), static_cast<unsigned>(n - 1));
  const RationalPoly L = RationalPoly::linear(n, k);
  e.alpha_coeffs.resize(n + 1);
  e.alpha_coeffs[0] = RationalPoly::constant(pref * factorial_ratio(n, 0));
  RationalPoly Lpow = RationalPoly::constant(1);  // L^{l-1}
  for (int l = 1; l <= n; ++l) {
    Rational c = pref * factorial_ratio(n, l) / pow(Rational(k), static_cast<unsigned>(l));
    e.alpha_coeffs[l] = c * (Lpow * (L - RationalPoly::constant(l)));
    Lpow *= L;
  }
  return e;
}

RationalPoly EtaPolynomial::at_u(const Rational& u) const {
  std::vector<Rational> c(alpha_coeffs.size());
  for (std::size_t l = 0; l < c.size(); ++l) c[l] = alpha_coeffs[l](u);
  return RationalPoly(std::move(c));
}

long double EtaPolynomial::scaled(long double u, long double alpha, int derivative) const {
  const long double L = n + k * u;
  long double pref = std::pow(static_cast<long double>(k) / n, n - 1);
  long double coef = 1.0L;  // (n!/l!) / k^l, built from l = n downwards
  std::vector<long double> c(n + 1);
  for (int l = n; l >= 1; --l) {
    c[l] = coef / std::pow(static_cast<long double>(k), l);
    coef *= l;
  }
  long double sum = derivative == 0 ? coef : 0.0L;  // n!
  long double apow = 1.0L;
  for (int l = 1; l <= n; ++l) {
    apow *= alpha;
    // L^{l-1}(L - l) = L^l - l L^{l-1} and its L-derivatives.
    long double term;
    const long double ll = l;
    if (derivative == 0) {
      term = std::pow(L, l) - ll * std::pow(L, l - 1);
    } else if (derivative == 1) {
      term = ll * std::pow(L, l - 1) - (l >= 2 ? ll * (ll - 1) * std::pow(L, l - 2) : 0.0L);
      term *= k;
    } else {
      term = (l >= 2 ? ll * (ll - 1) * std::pow(L, l - 2) : 0.0L) -
             (l >= 3 ? ll * (ll - 1) * (ll - 2) * std::pow(L, l - 3) : 0.0L);
      term *= static_cast<long double>(k) * k;
    }
    sum += c[l] * apow * term;
  }
  return pref * sum;
}

double EtaPolynomial::eta(double u, double alpha) const {
  return static_cast<double>(scaled(u, alpha) / std::pow(static_cast<long double>(alpha), n + 1));
}

const char* to_string(SolitonKind kind) { return kind == SolitonKind::compact ? "compact" : "fik"; }

// ---------------------------------------------------------------------------

double SolitonSolution::u_max() const {
  return kind == SolitonKind::compact ? 1.0 : std::numeric_limits<double>::infinity();
}

PhiJet SolitonSolution::eval(double u_in) const {
  const long double u = u_in, a = alpha;
  const long double L = n + k * u;
  // phi = s N R with s = 2/alpha^{n+1}, R = (n/L)^{n-1}.
  const long double s = 2.0L / std::pow(a, n + 1);
  long double N0 = eta.scaled(u, a, 0), N1 = eta.scaled(u, a, 1), N2 = eta.scaled(u, a, 2);
  if (kind == SolitonKind::compact) {
    const long double e = std::exp(a * (u + 1)) * eta.scaled(-1.0L, a, 0);
    N0 -= e;
    N1 -= a * e;
    N2 -= a * a * e;
  }
  const long double R0 = std::pow(static_cast<long double>(n) / L, n - 1);
  const long double R1 = -(n - 1) * k / L * R0;
  const long double R2 = static_cast<long double>(n - 1) * n * k * k / (L * L) * R0;
  PhiJet j;
  j.phi = static_cast<double>(s * N0 * R0);
  j.dphi = static_cast<double>(s * (N1 * R0 + N0 * R1));
  j.ddphi = static_cast<double>(s * (N2 * R0 + 2 * N1 * R1 + N0 * R2));
  return j;
}

double SolitonSolution::ode_residual(double u) const {
  PhiJet j = eval(u);
  return std::abs(j.dphi + k * (n - 1) * j.phi / (n + k * u) + 2 * u - alpha * j.phi);
}

// ---------------------------------------------------------------------------

AlphaResult compact_alpha(int n, int k, double tol) {
  require_fano(n, k);
  EtaPolynomial e = eta_polynomial(n, k);
  RationalPoly top = e.at_u(1), bottom = e.at_u(-1);
  std::vector<Big> tc, bc;
  for (const auto& c : top.coeffs()) tc.push_back(to_big(c));
  for (const auto& c : bottom.coeffs()) bc.push_back(to_big(c));
  auto horner = [](const std::vector<Big>& c, const Big& x) {
    Big acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  };
  auto F = [&](const Big& a) { return horner(tc, a) - exp(2 * a) * horner(bc, a); };

  Big lo = Big(1) / 1000000, hi = 8;
  int s_lo = sign(F(lo));
  int grow = 0;
  while (sign(F(hi)) == s_lo) {
    if (++grow > 64 || s_lo == 0) throw std::runtime_error("compact_alpha: bracketing failed");
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > tol) {
    Big m = (lo + hi) / 2;
    int s = sign(F(m));
    if (s == 0) {
      lo = hi = m;
      break;
    }
    if (s == s_lo) lo = m;
    else hi = m;
  }
  return {static_cast<double>((lo + hi) / 2), static_cast<double>((hi - lo) / 2)};
}

double shooting_alpha(int n, int k, double tol) {
  require_fano(n, k);
  namespace ode = boost::numeric::odeint;
  auto end_value = [n, k](double a) {
    auto rhs = [n, k, a](const double& phi, double& dphi, double u) {
      dphi = a * phi - 2 * u - k * (n - 1) * phi / (n + k * u);
    };
    double phi = 0.0;
    ode::integrate_adaptive(ode::make_controlled<ode::runge_kutta_dopri5<double>>(1e-14, 1e-14), rhs, phi, -1.0,
                            1.0, 1e-3);
    return phi;
  };
  double step = 0.02;
  double a0 = step, f0 = end_value(a0);
  for (double a1 = a0 + step; a1 <= 16.0; a1 += step) {
    double f1 = end_value(a1);
    if ((f0 < 0) != (f1 < 0)) {
      boost::math::tools::eps_tolerance<double> stop(std::max(1, static_cast<int>(-std::log2(tol))));
      std::uintmax_t iters = 200;
      auto r = boost::math::tools::toms748_solve(end_value, a0, a1, f0, f1, stop, iters);
      return 0.5 * (r.first + r.second);
    }
    a0 = a1;
    f0 = f1;
  }
  throw std::runtime_error("shooting_alpha: no sign change of phi(1; alpha)");
}

Rational critical_alpha0(int n, int k) {
  require_fano(n, k);
  return ratio((n - 2 * k) * (k + 1), n - k);
}

RationalPoly chi_polynomial(int n, int k) {
  require_fano(n, k);
  std::vector<Rational> c(n + 1);
  c[0] = factorial_ratio(n, 0);
  for (int l = 1; l <= n; ++l) {
    c[l] = factorial_ratio(n, l) * pow(Rational(n - k), static_cast<unsigned>(l - 1)) * (n - k - l) /
           pow(Rational(k), static_cast<unsigned>(l));
  }
  return RationalPoly(std::move(c));
}

FikAlpha fik_alpha(int n, int k, double tol) {
  RationalPoly chi = chi_polynomial(n, k);
  std::vector<Interval> roots = isolate_roots(chi, 0, root_bound(chi), from_double(tol));
  if (roots.size() != 1) throw std::runtime_error("fik_alpha: expected exactly one positive root of chi");
  return {roots[0].midpoint().get_d(), roots[0]};
}

SolitonSolution soliton_profile(int n, int k, double alpha, SolitonKind kind) {
  require_fano(n, k);
  if (!(alpha > 0)) throw std::invalid_argument("soliton_profile: need alpha > 0");
  SolitonSolution s;
  s.kind = kind;
  s.n = n;
  s.k = k;
  s.alpha = alpha;
  s.eta = eta_polynomial(n, k);
  const double hi = kind == SolitonKind::compact ? 1.0 : 1000.0;
  double res = 0.0;
  for (int i = 0; i < kResidualGrid; ++i) {
    double u = -1.0 + (hi + 1.0) * i / (kResidualGrid - 1);
    // Scale-aware residual far out on the FIK end, where the terms grow like U.
    double scale = std::max(1.0, std::abs(u));
    res = std::max(res, s.ode_residual(u) / scale);
  }
  s.residual = res;
  PhiJet lo = s.eval(-1.0);
  s.boundary_error = std::max(std::abs(lo.phi), std::abs(lo.dphi - 2.0));
  if (kind == SolitonKind::compact) s.boundary_error = std::max(s.boundary_error, std::abs(s.eval(1.0).phi));
  if (s.residual > kResidualBound || s.boundary_error > kResidualBound)
    throw std::runtime_error("soliton_profile: residual or boundary error above 1e-8 (inconsistent alpha)");
  return s;
}

AbcFn soliton_curvature(const SolitonSolution& sol) {
  return [sol](double u) {
    const double n = sol.n, k = sol.k, a = sol.alpha;
    const double L = n + k * u;
    const double phi = sol.eval(u).phi;
    Abc x;
    // +k^2 n(n-1)/L^2: differentiating the ODE gives this sign.
    x.A = -0.5 * (a * a - 2 * a * k * (n - 1) / L + k * k * n * (n - 1) / (L * L)) * phi + (a - k * (n - 1) / L) * u + 1;
    x.B = ((k * k * n - k * L * a) * phi + 2 * k * L * u) / (2 * L * L);
    x.C = (2 * L - k * k * phi) / (L * L);
    return x;
  };
}

AbcFn soliton_curvature_generic(const SolitonSolution& sol) {
  return [sol](double u) {
    PhiJet j = sol.eval(u);
    return abc_from_phi(sol.n, sol.k, u, j.phi, j.dphi, j.ddphi);
  };
}

SolitonHReport soliton_h_positive(int n, int k, SolitonKind kind, double fik_umax) {
  SolitonHReport rep;
  rep.kind = kind;
  rep.n = n;
  rep.k = k;
  rep.alpha0 = critical_alpha0(n, k);
  rep.alpha = kind == SolitonKind::compact ? compact_alpha(n, k).alpha : fik_alpha(n, k).alpha;
  SolitonSolution sol = soliton_profile(n, k, rep.alpha, kind);
  AbcFn f = soliton_curvature(sol);
  rep.domain_max = kind == SolitonKind::compact ? 1.0 : fik_umax;

  Abc z = f(-1.0);
  rep.zero_section_ok = z.A > 0 && z.C > 0 && 2 * z.B + std::sqrt(z.A * z.C) > 0;
  rep.certificate = certify_positive_numeric(f, n, k, -1.0, rep.domain_max);
  if (rep.certificate.positive()) rep.pinching = local_pinching(f, -1.0, rep.domain_max);

  // Zeros of 2B - C: where the minimizing t leaves the interior branch.
  auto g = [&](double u) {
    Abc x = f(u);
    return 2 * x.B - x.C;
  };
  std::vector<double> grid = linspace(-1.0, rep.domain_max, 2049);
  double g0 = g(grid[0]);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    double g1 = g(grid[i]);
    if (g0 == 0.0) {
      rep.crossovers.push_back(grid[i - 1]);
    } else if ((g0 < 0) != (g1 < 0) && g1 != 0.0) {
      boost::math::tools::eps_tolerance<double> stop(50);
      std::uintmax_t iters = 200;
      auto r = boost::math::tools::toms748_solve(g, grid[i - 1], grid[i], g0, g1, stop, iters);
      rep.crossovers.push_back(0.5 * (r.first + r.second));
    }
    g0 = g1;
  }
  return rep;
}

std::vector<SweepRow> conjecture_sweep(int n_max, int k_max) {
  std::vector<std::pair<int, int>> cases;
  for (int k = 1; k <= k_max; ++k)
    for (int n = k + 1; n <= n_max; ++n) cases.emplace_back(n, k);
  std::vector<SweepRow> rows(cases.size());
  const long count = static_cast<long>(cases.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    auto [n, k] = cases[i];
    SweepRow r;
    r.n = n;
    r.k = k;
    RationalPoly chi = chi_polynomial(n, k);
    r.alpha = fik_alpha(n, k, 1e-10).alpha;
    r.alpha0 = critical_alpha0(n, k);
    r.kplus1 = k + 1;
    // chi > 0 on (0, alpha_*) and < 0 beyond, so comparisons are sign tests.
    r.above_alpha0 = sgn(r.alpha0) <= 0 || sgn(chi(r.alpha0)) > 0;
    r.below_kplus1 = sgn(chi(Rational(k + 1))) < 0;
    r.above_k = sgn(chi(Rational(k))) > 0;
    rows[i] = r;
  }
  return rows;
}

}  // namespace hsc
