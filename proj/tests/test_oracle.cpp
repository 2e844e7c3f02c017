#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <Eigen/Dense>

#include "hsclab/kernels.hpp"
#include "support.hpp"

using namespace hsc;

namespace {

RationalPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(1, 12), coef(-9, 9);
  int d = deg(rng);
  std::vector<Rational> c(d + 1);
  for (auto& x : c) x = coef(rng);
  if (c.back() == 0) c.back() = 1;
  return RationalPoly(std::move(c));
}

// Real eigenvalues of the companion matrix, polished by Newton steps.
// Returns nullopt when a root sits too close to the real axis or to another
// root for the floating answer to be trusted.
std::optional<std::vector<double>> companion_real_roots(const RationalPoly& p) {
  int d = p.degree();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
  double lead = p.leading().get_d();
  for (int i = 0; i < d; ++i) m(0, i) = -p.coeff(d - 1 - i).get_d() / lead;
  for (int i = 1; i < d; ++i) m(i, i - 1) = 1.0;
  Eigen::VectorXcd ev = m.eigenvalues();
  std::vector<double> roots;
  for (auto z : ev) {
    double im = std::abs(z.imag());
    if (im > 1e-9 && im < 1e-4) return std::nullopt;
    if (im <= 1e-9) roots.push_back(z.real());
  }
  std::sort(roots.begin(), roots.end());
  for (std::size_t i = 1; i < roots.size(); ++i)
    if (roots[i] - roots[i - 1] < 1e-4) return std::nullopt;
  RationalPoly dp = p.derivative();
  for (double& r : roots)
    for (int it = 0; it < 3; ++it) {
      long double x = r;
      long double f = p.eval(x), g = dp.eval(x);
      if (g != 0) r = static_cast<double>(x - f / g);
    }
  return roots;
}

// Minimum of H with t minimized exactly at each u; used only to drop profiles
// whose true minimum is too close to zero for a float grid to decide.
double h_margin(const TripleEval& f) {
  double m = std::numeric_limits<double>::infinity();
  for (const HExtremaD& e : sample_extrema(f, linspace(f.u_min(), f.u_max(), 10000))) m = std::min(m, e.min_h);
  return m;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("root counts and isolating intervals against the companion matrix") {
  std::mt19937_64 rng(20);
  const Rational lo = -2, hi = 2;
  int compared = 0;
  for (int i = 0; i < 1000; ++i) {
    RationalPoly p = random_poly(rng);
    if (p(lo) == 0 || p(hi) == 0) continue;
    auto all = companion_real_roots(p);
    if (!all) continue;
    std::vector<double> inside;
    bool near_end = false;
    for (double r : *all) {
      if (std::abs(r - 2) < 1e-6 || std::abs(r + 2) < 1e-6) near_end = true;
      if (r > -2 && r < 2) inside.push_back(r);
    }
    if (near_end) continue;
    ++compared;
    int expect = static_cast<int>(inside.size());
    CHECK(count_roots(p, lo, hi, RootMethod::sturm) == expect);
    CHECK(count_roots(p, lo, hi, RootMethod::descartes) == expect);
    auto iv = isolate_roots(p, lo, hi, pow(ratio(1, 2), 40));
    REQUIRE(iv.size() == inside.size());
    for (std::size_t j = 0; j < iv.size(); ++j)
      CHECK(std::abs(iv[j].midpoint().get_d() - inside[j]) < 1e-10);
  }
  CHECK(compared > 900);
}

TEST_CASE("a positive verdict means positive on a fine grid") {
  std::mt19937_64 rng(21);
  int positives = 0;
  for (int i = 0; i < 1000; ++i) {
    RationalPoly p = random_poly(rng);
    if (!sign_on_interval(p, -1, 1).positive()) continue;
    ++positives;
    bool ok = true;
    for (int j = 0; j <= 10000 && ok; ++j) {
      double u = -1.0 + 2.0 * j / 10000;
      double v = p.eval(u);
      if (v <= 1e-9) ok = p(ratio(j - 5000, 5000)) > 0;
    }
    CHECK(ok);
  }
  CHECK(positives > 50);
}

TEST_CASE("exact H verdicts agree with dense sampling") {
  std::mt19937_64 rng(22);
  int compared = 0, positive = 0;
  for (int i = 0; i < 100; ++i) {
    std::uniform_int_distribution<int> nk(1, 3), deg(2, 8);
    int k = nk(rng), n = k + nk(rng);
    GeneratingProfile g = random_profile(n, k, Q("-1/2"), Q("1/2"), deg(rng), rng);
    PositivityCertificate cert = certify_positive(g);
    TripleEval f(curvature_triple(g));
    if (std::abs(h_margin(f)) <= 1e-6) continue;
    GridMin m = dense_h_min(f, -0.5, 0.5, 10000, 64);
    ++compared;
    if (cert.positive()) ++positive;
    CHECK(cert.positive() == (m.value > 0));
  }
  CHECK(compared >= 90);
  MESSAGE(compared << " compared, " << positive << " positive");
}

}
