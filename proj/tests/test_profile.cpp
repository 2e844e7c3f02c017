#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "hsclab/construct.hpp"
#include "hsclab/soliton.hpp"
#include "support.hpp"

using namespace hsc;

namespace {

bool violates(const ValidationReport& r, const std::string& cond) {
  return std::any_of(r.violations.begin(), r.violations.end(), [&](const Violation& v) { return v.condition == cond; });
}

}  // namespace

TEST_SUITE("profile") {

TEST_CASE("validate_profile examples") {
  CHECK(validate_profile(hitchin_profile(2, 1, Q("1/2"))).ok());

  GeneratingProfile half = hitchin_profile(2, 1, Q("1/2"));
  half.u_max = Q("1/4");
  ValidationReport r = validate_profile(half);
  CHECK(violates(r, "phi(u_max)=0"));

  GeneratingProfile low{2, 1, -3, -1, RationalPoly{-3, -4, -1}};  // -(U+1)(U+3)
  CHECK(violates(validate_profile(low), "n + k*u_min > 0"));

  GeneratingProfile dip{2, 1, -1, 1, RationalPoly{1, 0, -1} * RationalPoly{Q("1/100"), 0, 1}};
  CHECK(violates(validate_profile(dip), "phi'(u_min)=2"));
}

TEST_CASE("every violation carries a witness") {
  GeneratingProfile bad{2, 1, -1, 1, RationalPoly{Q("1/2"), 0, -1}};
  ValidationReport r = validate_profile(bad);
  CHECK_FALSE(r.ok());
  for (const auto& v : r.violations) CHECK_FALSE(v.witness.empty());
}

TEST_CASE("kahler_class_of examples") {
  GeneratingProfile anti = quartic_profile(1, Q("51/100"));
  CHECK(kahler_class_of(anti).ratio() == 3);
  CHECK(kahler_class_of(hitchin_profile(2, 1, Q("2/7"))).ratio() == Q("4/3"));
  for (const char* c : {"1/10", "1/2", "3/2"}) {
    Rational cc = Q(c);
    CHECK(kahler_class_of(hitchin_profile(2, 1, cc)).ratio() == (2 + cc) / (2 - cc));
  }
}

TEST_CASE("kahler class ratio depends only on the domain") {
  GeneratingProfile h = hitchin_profile(3, 1, Q("1/2"));
  CertifiedProfile other = construct_positive_profile(3, 1, Q("1/2"));
  CHECK_FALSE(h.phi == other.profile.phi);
  CHECK(kahler_class_of(h).ratio() == kahler_class_of(other.profile).ratio());
  CHECK(kahler_class_of(h).a == Q("5/2"));
  CHECK(kahler_class_of(h).b == Q("7/2"));
}

TEST_CASE("hitchin_profile range and A = 1/c") {
  CHECK_THROWS_AS(hitchin_profile(2, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(hitchin_profile(2, 1, 0), std::invalid_argument);
  for (int n = 2; n <= 5; ++n)
    for (int k = 1; k < 4; ++k) {
      Rational c = ratio(n, k) / 3;
      GeneratingProfile h = hitchin_profile(n, k, c);
      CHECK(validate_profile(h).ok());
      CurvatureTriple t = curvature_triple(h);
      CHECK(t.a_num == RationalPoly::constant(1 / c));
    }
}

TEST_CASE("quartic_profile boundary identities and range") {
  for (const char* mu : {"1/2", "51/100", "3/5", "3/4", "99/100"}) {
    GeneratingProfile q = quartic_profile(1, Q(mu));
    CHECK(validate_profile(q).ok());
  }
  CHECK(validate_profile(quartic_profile(Q("1/2"), Q("3/10"))).ok());
  CHECK_THROWS_AS(quartic_profile(2, Q("3/2")), std::invalid_argument);
  CHECK_THROWS_AS(quartic_profile(1, Q("2/5")), std::invalid_argument);
  // mu = c/2 drops the U^2 term: phi = c/2 - U^4/(2c^3).
  Rational c = Q("4/5");
  GeneratingProfile lim = quartic_profile(c, c / 2);
  CHECK(lim.phi == RationalPoly({c / 2, 0, 0, 0, -1 / (2 * c * c * c)}));
}

TEST_CASE("anyclass limiting case alpha2 = 0, mu = c/p") {
  Rational c = Q("3/2");
  for (int p : {2, 5, 9}) {
    auto [a22, a2p] = anyclass_coefficients(c, p, c / p, 0);
    CHECK(a22 == 0);
    CHECK(a2p == 1 / (p * pow(c, 2 * p - 1)));
  }
}

TEST_CASE("anyclass profiles satisfy phi'(+-c) = -+2") {
  Rational c = Q("3/2");
  AnyClassParams params = anyclass_default_params(2, 1, c, 40);
  CHECK(anyclass_violations(2, 1, c, params).empty());
  GeneratingProfile prof = anyclass_profile(2, 1, c, params);
  CHECK(validate_profile(prof).ok());
  CHECK(prof.phi.derivative()(c) == -2);
  CHECK(prof.phi.derivative()(-c) == 2);
  CHECK(prof.phi.degree() == 80);
  CHECK(params.epsilon_p == ratio(4, 81));
}

TEST_CASE("anyclass rejects inadmissible parameters by name") {
  Rational c = Q("3/2");
  AnyClassParams params = anyclass_default_params(2, 1, c, 40);
  params.delta2 = 1;
  params = anyclass_params(2, 1, c, 40, params.delta1, params.delta2, params.alpha2);
  auto v = anyclass_violations(2, 1, c, params);
  CHECK_FALSE(v.empty());
  CHECK_THROWS_AS(anyclass_profile(2, 1, c, params), std::invalid_argument);
}

TEST_CASE("anyclass_min_p is the first p with c <= n/k - 2 eps_p") {
  auto p = anyclass_min_p(2, 1, 1);
  REQUIRE(p);
  CHECK(*p == 4);
  CHECK(Rational(1) <= Rational(2) - ratio(8, 2 * *p + 1));
  CHECK(Rational(1) > Rational(2) - ratio(8, 2 * (*p - 1) + 1));
}

TEST_CASE("family constructors always validate") {
  for (int n = 2; n <= 4; ++n)
    for (int k = 1; k < n; ++k)
      for (int i = 1; i <= 4; ++i) {
        Rational c = ratio(n, k) * ratio(i, 5);
        CHECK(validate_profile(hitchin_profile(n, k, c)).ok());
        auto p = anyclass_min_p(n, k, c);
        REQUIRE(p);
        CHECK(validate_profile(anyclass_profile(n, k, c, anyclass_default_params(n, k, c, *p))).ok());
      }
}

TEST_CASE("convex_combine") {
  GeneratingProfile a = hitchin_profile(2, 1, Q("2/7"));
  GeneratingProfile b = quartic_profile(Q("2/7"), Q("1/5"));
  CHECK(convex_combine(a, b, 0) == b);
  CHECK(convex_combine(a, b, 1) == a);
  GeneratingProfile other = hitchin_profile(2, 1, Q("1/4"));
  CHECK_THROWS_AS(convex_combine(a, other, Q("1/2")), std::invalid_argument);
  CHECK_THROWS_AS(convex_combine(a, a, 2), std::invalid_argument);
}

TEST_CASE("convex combination of certified profiles certifies") {
  GeneratingProfile a = hitchin_profile(2, 1, Q("2/7"));
  CertifiedProfile b = construct_positive_profile(2, 1, Q("2/7"));
  REQUIRE(b.certificate.positive());
  REQUIRE(certify_positive(a).positive());
  for (const char* t : {"1/4", "1/2", "3/4"}) CHECK(certify_positive(convex_combine(a, b.profile, Q(t))).positive());
}

TEST_CASE("convex combinations of random certified pairs stay positive") {
  std::mt19937_64 rng(11);
  int pairs = 0;
  for (int attempt = 0; attempt < 2000 && pairs < 50; ++attempt) {
    GeneratingProfile a = random_profile(2, 1, Q("-1/3"), Q("1/3"), 6, rng);
    GeneratingProfile b = random_profile(2, 1, Q("-1/3"), Q("1/3"), 6, rng);
    if (!certify_positive(a).positive() || !certify_positive(b).positive()) continue;
    ++pairs;
    std::uniform_int_distribution<int> tt(1, 15);
    CHECK(certify_positive(convex_combine(a, b, ratio(tt(rng), 16))).positive());
  }
  CHECK(pairs == 50);
}

TEST_CASE("random_profile is valid and reproducible") {
  std::mt19937_64 r1(5), r2(5);
  for (int deg = 2; deg <= 8; ++deg) {
    GeneratingProfile a = random_profile(3, 2, Q("-1/2"), Q("3/4"), deg, r1);
    GeneratingProfile b = random_profile(3, 2, Q("-1/2"), Q("3/4"), deg, r2);
    CHECK(a == b);
    CHECK(validate_profile(a).ok());
    CHECK(a.phi.degree() <= deg);
  }
}

TEST_CASE("arclength of a Hitchin profile is finite and symmetric") {
  ArclengthReport rep = arclength_data(hitchin_profile(2, 1, Q("1/2")));
  CHECK(std::isfinite(rep.total_length));
  CHECK_FALSE(rep.lower_divergent);
  CHECK_FALSE(rep.upper_divergent);
  // phi = 1/2 - 2U^2: t(U) = asin(2U)/sqrt(2), total pi/sqrt(2)
  CHECK(rep.total_length == doctest::Approx(std::numbers::pi / std::sqrt(2.0)).epsilon(1e-7));
  const std::size_t m = rep.t.size();
  for (std::size_t i = 0; i < m; ++i) CHECK(rep.t[i] == doctest::Approx(-rep.t[m - 1 - i]).epsilon(1e-7));
  CHECK(rep.lower_exponent == 1);
}

TEST_CASE("arclength flags a double root as divergent") {
  GeneratingProfile sq{2, 1, 0, 1, RationalPoly{0, 0, 1}};
  ArclengthReport rep = arclength_data(sq);
  CHECK(rep.lower_divergent);
  CHECK(std::isinf(rep.total_length));
  CHECK(rep.lower_exponent == 2);
}

TEST_CASE("arclength of the FIK soliton is complete at infinity") {
  FikAlpha a = fik_alpha(2, 1);
  SolitonSolution sol = soliton_profile(2, 1, a.alpha, SolitonKind::fik);
  ArclengthReport rep = arclength_data([&](double u) { return sol.eval(u).phi; }, -1.0, std::numeric_limits<double>::infinity());
  REQUIRE(rep.complete_at_infinity);
  CHECK(*rep.complete_at_infinity);
  CHECK(rep.growth_exponent == doctest::Approx(1.0).epsilon(1e-2));
}

TEST_CASE("arclength rejects nonpositive interior values") {
  CHECK_THROWS_AS(arclength_data([](double u) { return u * u - 0.25; }, -1.0, 1.0), std::domain_error);
}

}
