#include <random>

#include "hsclab/roots.hpp"
#include "support.hpp"

using namespace hsc;

TEST_SUITE("exactpoly") {

TEST_CASE("rationals parse exactly and print in lowest terms") {
  CHECK(to_string(Q("6/4")) == "3/2");
  CHECK(to_string(Q("-0.51")) == "-51/100");
  CHECK(to_string(Q("1.5e-3")) == "3/2000");
  CHECK(to_string(Q("-7/2")) == "-7/2");
  CHECK(to_string(Q("12")) == "12");
  CHECK_THROWS_AS(Q("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Q("abc"), std::invalid_argument);
  CHECK(simplest_between(Q("0.3"), Q("0.4")) == Q("1/3"));
}

TEST_CASE("polynomial arithmetic is exact") {
  RationalPoly p{Q("1/3"), 0, 1};  // 1/3 + U^2
  RationalPoly q{-1, 1};           // U - 1
  RationalPoly prod = p * q;
  CHECK(prod == RationalPoly({Q("-1/3"), Q("1/3"), -1, 1}));
  CHECK(prod(Q("2")) == Q("13/3"));
  CHECK(prod.derivative() == RationalPoly({Q("1/3"), -2, 3}));
  CHECK(p.compose(q) == RationalPoly({Q("4/3"), -2, 1}));
  RationalPoly quot, rem;
  RationalPoly::divmod(prod, q, quot, rem);
  CHECK(quot == p);
  CHECK(rem.is_zero());
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == -1);
}

TEST_CASE("squarefree part keeps the distinct roots") {
  RationalPoly r{-1, 1};
  RationalPoly p = r * r * RationalPoly{2, 1};
  CHECK(p.squarefree_part() == RationalPoly({-2, 1, 1}));
}

TEST_CASE("sturm_count examples") {
  CHECK(sturm_count({-2, 0, 1}, 0, 2) == 1);
  CHECK(sturm_count({1, 0, 1}, -10, 10) == 0);
  RationalPoly cubic = RationalPoly{-1, 1} * RationalPoly{-2, 1} * RationalPoly{-3, 1};
  CHECK(sturm_count(cubic, 1, 3) == 3);
  CHECK(sturm_count(cubic, Q("1/2"), Q("5/2")) == 2);
  CHECK_THROWS_AS(sturm_count(RationalPoly(), 0, 1), std::domain_error);
}

TEST_CASE("sturm and descartes counts agree") {
  RationalPoly p = RationalPoly::monomial(1, 101) - RationalPoly::constant(Q("1/3"));
  CHECK(count_roots(p, 0, 2, RootMethod::sturm) == 1);
  CHECK(count_roots(p, 0, 2, RootMethod::descartes) == 1);
  RationalPoly four = RationalPoly{-1, 0, 1} * RationalPoly{-4, 0, 1};
  for (auto m : {RootMethod::sturm, RootMethod::descartes}) {
    CHECK(count_roots(four, -3, 3, m) == 4);
    CHECK(count_roots(four, -2, 1, m) == 3);
  }
}

TEST_CASE("sign_on_interval examples") {
  CHECK(sign_on_interval({1, 0, 1}, -1, 1).kind == SignKind::strictly_positive);
  SignVerdict sq = sign_on_interval({0, 0, 1}, -1, 1);
  CHECK(sq.kind == SignKind::has_zero);
  REQUIRE(sq.witness);
  CHECK(*sq.witness == 0);
  // -2U^2 + (4/3)U = 2U(2/3 - U)
  RationalPoly h{0, Q("4/3"), -2};
  CHECK(sign_on_interval(h, Q("1/100"), Q("2/3") - Q("1/100")).kind == SignKind::strictly_positive);
  SignVerdict mixed = sign_on_interval(h, Q("-1/2"), Q("1/2"));
  CHECK(mixed.kind == SignKind::mixed_sign);
  REQUIRE(mixed.witness);
  CHECK(h(*mixed.witness) < 0);
  CHECK(sign_on_interval({-1, 0, -1}, -1, 1).kind == SignKind::strictly_negative);
  SignVerdict zero = sign_on_interval(RationalPoly(), 0, 1);
  CHECK(zero.kind == SignKind::has_zero);
  CHECK(*zero.witness == 0);
}

TEST_CASE("double roots are found as zeros, not sign changes") {
  RationalPoly r{Q("-1/3"), 1};
  SignVerdict v = sign_on_interval(r * r * RationalPoly{1, 0, 1}, -1, 1);
  CHECK(v.kind == SignKind::has_zero);
  CHECK(*v.witness == Q("1/3"));
}

TEST_CASE("isolate_roots examples") {
  auto sqrt2 = isolate_roots({-2, 0, 1}, 0, 2);
  REQUIRE(sqrt2.size() == 1);
  CHECK(sqrt2[0].lo * sqrt2[0].lo < 2);
  CHECK(sqrt2[0].hi * sqrt2[0].hi > 2);
  CHECK(sqrt2[0].width() <= Q("2") / Rational(mpz_class(1) << 40));

  auto four = isolate_roots(RationalPoly{-1, 0, 1} * RationalPoly{-4, 0, 1}, -3, 3);
  REQUIRE(four.size() == 4);
  const double expect[] = {-2, -1, 1, 2};
  for (int i = 0; i < 4; ++i) {
    CHECK(to_double(four[i].lo) <= expect[i]);
    CHECK(to_double(four[i].hi) >= expect[i]);
    if (i > 0) CHECK(four[i - 1].hi < four[i].lo);
  }
}

TEST_CASE("the zero of P on (-1, 0) sits inside its estimated bracket") {
  // n = 2, k = 1, c = 1, p = 3: P = (5/3) x^6 + 4 x^5 + 1/3
  RationalPoly P{Q("1/3"), 0, 0, 0, 0, 4, Q("5/3")};
  auto roots = isolate_roots(P, -1, 0);
  REQUIRE(roots.size() == 1);
  Rational lo5 = pow(-roots[0].hi, 5), hi5 = pow(-roots[0].lo, 5);
  CHECK(lo5 > Q("1/12"));
  CHECK(hi5 < Q("1/2"));
}

TEST_CASE("refined roots converge") {
  RationalPoly p{-2, 0, 1};
  Interval iv = refine_root(p, {1, 2}, Q("1/1000000000000"));
  CHECK(std::abs(to_double(iv.midpoint()) - std::sqrt(2.0)) < 1e-11);
  CHECK(root_bound(RationalPoly{-4, 0, 1}) >= 2);
}

}
