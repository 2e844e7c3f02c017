#include <cmath>

#include "hsclab/kernels.hpp"
#include "hsclab/soliton.hpp"
#include "support.hpp"

using namespace hsc;

TEST_SUITE("soliton") {

TEST_CASE("compact alpha regression values") {
  CHECK(std::abs(compact_alpha(2, 1).alpha - 0.5276195199) < 1e-6);
  CHECK(std::abs(compact_alpha(3, 1).alpha - 0.6820161326) < 1e-6);
  CHECK(std::abs(compact_alpha(7, 2).alpha - 1.742423694) < 1e-5);
  CHECK(compact_alpha(3, 1).error < 1e-10);
}

TEST_CASE("shooting agrees with the closed form") {
  for (auto [n, k] : {std::pair{2, 1}, {3, 1}, {4, 1}, {7, 2}})
    CHECK(std::abs(shooting_alpha(n, k) - compact_alpha(n, k).alpha) < 1e-6);
}

TEST_CASE("zero-section threshold alpha0") {
  CHECK(critical_alpha0(2, 1) == 0);
  CHECK(critical_alpha0(3, 1) == 1);  // the prose figure 3/2 disagrees with the formula
  CHECK(critical_alpha0(7, 2) == Q("9/5"));
  CHECK_THROWS_AS(critical_alpha0(2, 2), std::invalid_argument);
}

TEST_CASE("chi has one positive root") {
  for (auto [n, k] : {std::pair{2, 1}, {4, 1}, {3, 2}, {8, 3}}) {
    RationalPoly chi = chi_polynomial(n, k);
    Rational nf = 1;
    for (int i = 2; i <= n; ++i) nf *= i;
    CHECK(chi(0) == nf);
    CHECK(count_roots(chi, Q("1/1000000"), root_bound(chi)) == 1);
    FikAlpha a = fik_alpha(n, k);
    CHECK(sgn(chi(a.bracket.lo)) * sgn(chi(a.bracket.hi)) < 0);
    CHECK(a.alpha > k);
    CHECK(a.alpha < k + 1);
  }
}

TEST_CASE("soliton profiles solve the ODE with the boundary conditions") {
  for (auto kind : {SolitonKind::compact, SolitonKind::fik}) {
    double alpha = kind == SolitonKind::compact ? compact_alpha(3, 1).alpha : fik_alpha(3, 1).alpha;
    SolitonSolution s = soliton_profile(3, 1, alpha, kind);
    CHECK(s.residual < 1e-8);
    CHECK(s.boundary_error < 1e-8);
    CHECK(s.eval(0.0).phi > 0);
  }
  CHECK_THROWS_AS(soliton_profile(3, 1, 0.9, SolitonKind::compact), std::runtime_error);
}

TEST_CASE("eta derivatives match finite differences") {
  EtaPolynomial e = eta_polynomial(4, 1);
  const long double h = 1e-5L, a = 0.8L;
  for (long double u : {-0.7L, 0.1L, 0.9L}) {
    long double fd = (e.scaled(u + h, a, 0) - e.scaled(u - h, a, 0)) / (2 * h);
    CHECK(static_cast<double>(e.scaled(u, a, 1)) == doctest::Approx(static_cast<double>(fd)).epsilon(1e-7));
    long double fd2 = (e.scaled(u + h, a, 1) - e.scaled(u - h, a, 1)) / (2 * h);
    CHECK(static_cast<double>(e.scaled(u, a, 2)) == doctest::Approx(static_cast<double>(fd2)).epsilon(1e-7));
  }
}

TEST_CASE("displayed soliton curvature equals the generic formulas") {
  SolitonSolution s = soliton_profile(3, 1, compact_alpha(3, 1).alpha, SolitonKind::compact);
  AbcFn a = soliton_curvature(s), b = soliton_curvature_generic(s);
  for (double u : linspace(-1.0, 1.0, 41)) {
    Abc x = a(u), y = b(u);
    CHECK(x.A == doctest::Approx(y.A).epsilon(1e-9));
    CHECK(x.B == doctest::Approx(y.B).epsilon(1e-9));
    CHECK(x.C == doctest::Approx(y.C).epsilon(1e-9));
  }
}

TEST_CASE("compact soliton H > 0 verdicts") {
  SolitonHReport r21 = soliton_h_positive(2, 1, SolitonKind::compact);
  CHECK(r21.certificate.verdict == Verdict::not_positive);
  CHECK_FALSE(r21.zero_section_ok);

  SolitonHReport r31 = soliton_h_positive(3, 1, SolitonKind::compact);
  CHECK(r31.certificate.positive());
  REQUIRE(r31.pinching);
  double a = r31.alpha;
  CHECK(std::abs(r31.pinching->local_constant - (1 - a) / ((2 - a) * (5 - a))) < 1e-6);
  CHECK(r31.pinching->local_argmin_u == doctest::Approx(-1.0));
  // 2B - C stays negative on [-1, 1) and only vanishes at U = 1.
  for (double u : r31.crossovers) CHECK(u == doctest::Approx(1.0).epsilon(1e-6));

  SolitonHReport r72 = soliton_h_positive(7, 2, SolitonKind::compact);
  CHECK(r72.certificate.positive());
  CHECK(r72.certificate.margin > 0);
}

TEST_CASE("FIK solitons grow like 2U/alpha") {
  FikAlpha a = fik_alpha(2, 1);
  SolitonSolution s = soliton_profile(2, 1, a.alpha, SolitonKind::fik);
  double u = 1e4;
  CHECK(s.eval(u).phi * a.alpha / (2 * u) == doctest::Approx(1.0).epsilon(1e-3));
  SolitonHReport r = soliton_h_positive(2, 1, SolitonKind::fik);
  CHECK_FALSE(r.certificate.positive());
}

TEST_CASE("small conjecture sweep") {
  auto rows = conjecture_sweep(8, 2);
  REQUIRE(rows.size() == 7 + 6);
  CHECK(rows.front().k == 1);
  CHECK(rows.front().n == 2);
  CHECK(rows.back().k == 2);
  CHECK(rows.back().n == 8);
  for (const auto& r : rows) {
    CHECK(r.holds());
    CHECK(r.above_k);
  }
}

}
