#include "hsclab/profile.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "hsclab/roots.hpp"

namespace hsc {

namespace {

void require_nk(int n, int k) {
  if (n < 2 || k < 1) throw std::invalid_argument("need n >= 2 and k >= 1");
}

// Multiplicity of x as a root of p (p nonzero).
int root_multiplicity(RationalPoly p, const Rational& x) {
  int m = 0;
  while (p.degree() >= 1 && sgn(p(x)) == 0) {
    RationalPoly q, r;
    RationalPoly::divmod(p, RationalPoly::linear(-x, 1), q, r);
    p = q;
    ++m;
  }
  return m;
}

}  // namespace

ValidationReport validate_profile(const GeneratingProfile& g) {
  ValidationReport rep;
  auto fail = [&](std::string cond, std::string witness) { rep.violations.push_back({std::move(cond), std::move(witness)}); };
  if (g.n < 2) fail("n >= 2", std::to_string(g.n));
  if (g.k < 1) fail("k >= 1", std::to_string(g.k));
  if (!(g.u_min < g.u_max)) {
    fail("u_min < u_max", to_string(g.u_min) + " >= " + to_string(g.u_max));
    return rep;
  }
  Rational base = g.n + g.k * g.u_min;
  if (sgn(base) <= 0) fail("n + k*u_min > 0", to_string(base));
  if (g.phi.is_zero()) {
    fail("phi > 0 on (u_min,u_max)", "phi is identically zero");
    return rep;
  }
  RationalPoly d = g.phi.derivative();
  Rational v;
  if ((v = g.phi(g.u_min)) != 0) fail("phi(u_min)=0", to_string(v));
  if ((v = g.phi(g.u_max)) != 0) fail("phi(u_max)=0", to_string(v));
  if ((v = d(g.u_min)) != 2) fail("phi'(u_min)=2", to_string(v));
  if ((v = d(g.u_max)) != -2) fail("phi'(u_max)=-2", to_string(v));

  // phi > 0 inside: no interior roots and positive at the midpoint.
  Rational mid = (g.u_min + g.u_max) / 2;
  int closed = count_roots(g.phi, g.u_min, g.u_max);
  int ends = (sgn(g.phi(g.u_min)) == 0 ? 1 : 0) + (sgn(g.phi(g.u_max)) == 0 ? 1 : 0);
  if (closed - ends > 0 || sgn(g.phi(mid)) <= 0) {
    SignVerdict sv = sign_on_interval(g.phi, g.u_min, g.u_max);
    std::string w = sgn(g.phi(mid)) <= 0 ? to_string(mid) : (sv.witness ? to_string(*sv.witness) : to_string(mid));
    fail("phi > 0 on (u_min,u_max)", w);
  }
  return rep;
}

KahlerClassRatio kahler_class_of(const GeneratingProfile& g) {
  if (!validate_profile(g).ok()) throw std::invalid_argument("invalid profile");
  return {g.n + g.k * g.u_min, g.n + g.k * g.u_max};
}

GeneratingProfile hitchin_profile(int n, int k, const Rational& c) {
  require_nk(n, k);
  if (sgn(c) <= 0 || c >= ratio(n, k)) throw std::invalid_argument("hitchin: need 0 < c < n/k");
  return {n, k, -c, c, RationalPoly({c, 0, -1 / c})};
}

GeneratingProfile quartic_profile(const Rational& c, const Rational& mu) {
  if (sgn(c) <= 0 || c >= ratio(6, 5)) throw std::invalid_argument("quartic: need 0 < c < 6/5");
  if (mu < c / 2 || mu >= c) throw std::invalid_argument("quartic: need c/2 <= mu < c");
  Rational c2 = c * c, c3 = c2 * c, c4 = c3 * c;
  Rational a4 = 1 / c3 - mu / c4;
  Rational a2 = 2 * mu / c2 - 1 / c;
  return {2, 1, -c, c, RationalPoly({mu, 0, -a2, 0, -a4})};
}

std::pair<Rational, Rational> anyclass_coefficients(const Rational& c, int p, const Rational& mu,
                                                    const Rational& alpha2) {
  Rational c2 = c * c;
  Rational a_2p_2 = (p * mu - c - (p - 1) * alpha2 * c2) / pow(c, 2 * p - 2);
  Rational a_2p = (c - (p - 1) * mu + (p - 2) * alpha2 * c2) / pow(c, 2 * p);
  return {a_2p_2, a_2p};
}

AnyClassParams anyclass_params(int n, int k, const Rational& c, int p, const Rational& delta1,
                               const Rational& delta2, const Rational& alpha2) {
  require_nk(n, k);
  if (p < 2) throw std::invalid_argument("anyclass: need p >= 2");
  if (sgn(c) <= 0) throw std::invalid_argument("anyclass: need c > 0");
  AnyClassParams a;
  a.p = p;
  a.delta1 = delta1;
  a.delta2 = delta2;
  a.alpha2 = alpha2;
  a.mu = c / p + delta2;
  std::tie(a.alpha_2p_2, a.alpha_2p) = anyclass_coefficients(c, p, a.mu, alpha2);
  a.epsilon_p = ratio(2 * n, 2 * p + 2 * k - 1);
  return a;
}

std::vector<Rational> anyclass_delta2_bounds(int n, int k, const Rational& c, int p) {
  const Rational eps = ratio(2 * n, 2 * p + 2 * k - 1);
  Rational b1 = c / (p * (p - 1));
  Rational b2 = ratio(n * (2 * p + 2 * k + 1), k * p * (2 * p + 2 * k - 1));
  Rational b4 = Rational(k * (2 * p - 1) + 2 * k * k) / (n - k * c) * (ratio(n, k) - eps - c) * c /
                (2 * p * (p - 1));
  return {b1, b2, b4};
}

AnyClassParams anyclass_default_params(int n, int k, const Rational& c, int p) {
  auto b = anyclass_delta2_bounds(n, k, c, p);
  Rational m = b[0];
  for (const auto& x : b)
    if (x < m) m = x;
  Rational delta2 = m / 2;
  Rational delta1 = p * delta2 / (2 * (p - 1) * c * c);
  return anyclass_params(n, k, c, p, delta1, delta2, delta1 / 2);
}

std::optional<int> anyclass_min_p(int n, int k, const Rational& c, int cap) {
  for (int p = 2; p <= cap; ++p)
    if (c <= ratio(n, k) - ratio(4 * n, 2 * p + 2 * k - 1)) return p;
  return std::nullopt;
}

std::vector<std::string> anyclass_violations(int n, int k, const Rational& c, const AnyClassParams& a) {
  std::vector<std::string> v;
  const int p = a.p;
  if (p < 2) {
    v.push_back("p >= 2");
    return v;
  }
  if (sgn(c) <= 0 || c >= ratio(n, k)) {
    v.push_back("0 < c < n/k");
    return v;
  }
  const Rational eps = ratio(2 * n, 2 * p + 2 * k - 1);
  if (a.epsilon_p != eps) v.push_back("epsilon_p = 2n/(2p+2k-1)");
  if (c > ratio(n, k) - 2 * eps) v.push_back("c <= n/k - 2*epsilon_p");
  if (sgn(a.delta1) <= 0) v.push_back("delta1 > 0");
  if (sgn(a.delta2) <= 0) v.push_back("delta2 > 0");
  if (sgn(a.alpha2) <= 0 || a.alpha2 >= a.delta1) v.push_back("0 < alpha2 < delta1");
  if (a.mu != c / p + a.delta2) v.push_back("mu = c/p + delta2");
  auto coeffs = anyclass_coefficients(c, p, a.mu, a.alpha2);
  if (coeffs.first != a.alpha_2p_2 || coeffs.second != a.alpha_2p) v.push_back("alpha coefficients consistent");
  auto b = anyclass_delta2_bounds(n, k, c, p);
  if (a.delta2 >= b[0]) v.push_back("delta2 < c/(p(p-1))");
  if ((p - 1) * a.delta1 * c * c >= p * a.delta2) v.push_back("(p-1) delta1 c^2 < p delta2");
  if (a.delta2 >= b[1]) v.push_back("delta2 < n(2p+2k+1)/(kp(2p+2k-1))");
  if (a.delta2 >= b[2]) v.push_back("[k(2p-1)+2k^2]/(n-kc) [n/k-eps_p-c] > 2p(p-1) delta2/c");
  if (sgn(a.alpha_2p_2) <= 0) v.push_back("alpha_{2p-2} > 0");
  if (sgn(a.alpha_2p) <= 0) v.push_back("alpha_{2p} > 0");
  return v;
}

GeneratingProfile anyclass_profile(int n, int k, const Rational& c, const AnyClassParams& a) {
  require_nk(n, k);
  auto v = anyclass_violations(n, k, c, a);
  if (!v.empty()) throw std::invalid_argument("anyclass: violated " + v.front());
  std::vector<Rational> coeffs(2 * a.p + 1);
  coeffs[0] = a.mu;
  coeffs[2] -= a.alpha2;
  coeffs[2 * a.p - 2] -= a.alpha_2p_2;
  coeffs[2 * a.p] -= a.alpha_2p;
  return {n, k, -c, c, RationalPoly(std::move(coeffs))};
}

GeneratingProfile convex_combine(const GeneratingProfile& p1, const GeneratingProfile& p2, const Rational& t) {
  if (p1.n != p2.n || p1.k != p2.k || p1.u_min != p2.u_min || p1.u_max != p2.u_max)
    throw std::invalid_argument("convex_combine: mismatched domains");
  if (sgn(t) < 0 || t > 1) throw std::invalid_argument("convex_combine: need 0 <= t <= 1");
  return {p1.n, p1.k, p1.u_min, p1.u_max, t * p1.phi + (1 - t) * p2.phi};
}

GeneratingProfile random_profile(int n, int k, const Rational& lo, const Rational& hi, int degree,
                                 std::mt19937_64& rng) {
  if (degree < 2) throw std::invalid_argument("random_profile: degree >= 2");
  if (!(lo < hi)) throw std::invalid_argument("random_profile: need lo < hi");
  const Rational len = hi - lo;
  const Rational g0 = 2 / len;
  std::uniform_int_distribution<int> num(-24, 24);
  const RationalPoly ends = RationalPoly::linear(-lo, 1) * RationalPoly::linear(hi, -1);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    RationalPoly h;
    const int hdeg = degree - 4;
    if (hdeg >= 0) {
      std::vector<Rational> hc(hdeg + 1);
      Rational scale = g0 / (len * len);
      for (auto& x : hc) x = ratio(num(rng), 8) * scale;
      h = RationalPoly(std::move(hc));
    }
    RationalPoly g = RationalPoly::constant(g0) - ends * h;
    GeneratingProfile prof{n, k, lo, hi, ends * g};
    if (validate_profile(prof).ok()) return prof;
  }
  throw std::runtime_error("random_profile: no valid sample");
}

// ---------------------------------------------------------------------------

namespace {

constexpr double kRelTol = 1e-8;

double endpoint_exponent(const std::function<double(double)>& phi, double a, double dir, double scale) {
  double h1 = 1e-4 * scale, h2 = 1e-6 * scale;
  double f1 = std::abs(phi(a + dir * h1)), f2 = std::abs(phi(a + dir * h2));
  if (f1 <= 0.0 || f2 <= 0.0) return std::numeric_limits<double>::infinity();
  return std::log(f1 / f2) / std::log(h1 / h2);
}

}  // namespace

ArclengthReport arclength_data(const std::function<double(double)>& phi, double u_min, double u_max, int samples) {
  if (!(u_min < u_max)) throw std::invalid_argument("arclength: need u_min < u_max");
  if (samples < 3) samples = 3;
  ArclengthReport rep;
  const bool unbounded = std::isinf(u_max);
  const double scale = unbounded ? 1.0 : u_max - u_min;
  const double inf = std::numeric_limits<double>::infinity();

  rep.u.resize(samples);
  if (unbounded) {
    const double smax = std::log1p(1e3);
    for (int i = 0; i < samples; ++i) rep.u[i] = u_min + std::expm1(smax * i / (samples - 1));
  } else {
    for (int i = 0; i < samples; ++i) rep.u[i] = u_min + (u_max - u_min) * i / (samples - 1);
  }
  rep.speed.resize(samples);
  for (int i = 0; i < samples; ++i) {
    double v = phi(rep.u[i]);
    bool interior = i > 0 && (unbounded || i < samples - 1);
    if (interior && !(v > 0.0)) throw std::domain_error("phi <= 0 inside the domain at U = " + std::to_string(rep.u[i]));
    rep.speed[i] = std::sqrt(std::max(v, 0.0));
  }

  rep.lower_exponent = endpoint_exponent(phi, u_min, 1.0, scale);
  rep.lower_divergent = rep.lower_exponent >= 2.0 - 1e-3;
  if (unbounded) {
    double f1 = phi(1e4), f2 = phi(1e6);
    rep.growth_exponent = std::log(f2 / f1) / std::log(1e2);
    rep.complete_at_infinity = rep.growth_exponent <= 2.0 + 1e-2;
    rep.upper_divergent = *rep.complete_at_infinity;
  } else {
    rep.upper_exponent = endpoint_exponent(phi, u_max, -1.0, scale);
    rep.upper_divergent = rep.upper_exponent >= 2.0 - 1e-3;
  }

  boost::math::quadrature::tanh_sinh<double> quad;
  auto integrand = [&](double x) {
    double v = phi(x);
    return v > 0.0 ? 1.0 / std::sqrt(v) : 0.0;
  };
  auto piece = [&](double a, double b) { return quad.integrate(integrand, a, b, kRelTol); };

  // Measure t from the midpoint (bounded) or from the lower end (unbounded).
  int base = unbounded ? 0 : (samples - 1) / 2;
  rep.t_base = rep.u[base];
  if (unbounded && rep.lower_divergent) {
    base = 1;
    rep.t_base = rep.u[1];
  }
  rep.t.assign(samples, 0.0);
  for (int i = base + 1; i < samples; ++i) {
    bool last_end = !unbounded && i == samples - 1;
    rep.t[i] = (last_end && rep.upper_divergent) ? inf : rep.t[i - 1] + piece(rep.u[i - 1], rep.u[i]);
  }
  for (int i = base - 1; i >= 0; --i) {
    rep.t[i] = (i == 0 && rep.lower_divergent) ? -inf : rep.t[i + 1] - piece(rep.u[i], rep.u[i + 1]);
  }

  if (rep.lower_divergent || rep.upper_divergent) {
    rep.total_length = inf;
  } else if (unbounded) {
    rep.total_length = rep.t.back() - rep.t.front() + quad.integrate(integrand, rep.u.back(), inf, kRelTol);
  } else {
    rep.total_length = rep.t.back() - rep.t.front();
  }
  return rep;
}

ArclengthReport arclength_data(const GeneratingProfile& g, int samples) {
  if (g.phi.is_zero()) throw std::domain_error("phi is identically zero");
  const RationalPoly& phi = g.phi;
  ArclengthReport rep = arclength_data([&](double x) { return phi.eval(x); }, g.u_min.get_d(), g.u_max.get_d(), samples);
  // Exact endpoint behaviour from root multiplicities.
  int lo = root_multiplicity(phi, g.u_min), hi = root_multiplicity(phi, g.u_max);
  rep.lower_exponent = lo;
  rep.upper_exponent = hi;
  const double inf = std::numeric_limits<double>::infinity();
  rep.lower_divergent = lo >= 2;
  rep.upper_divergent = hi >= 2;
  if (rep.lower_divergent) rep.t.front() = -inf;
  if (rep.upper_divergent) rep.t.back() = inf;
  if (rep.lower_divergent || rep.upper_divergent) rep.total_length = inf;
  return rep;
}

}  // namespace hsc
