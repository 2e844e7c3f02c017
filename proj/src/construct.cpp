#include "hsclab/construct.hpp"

#include <stdexcept>

namespace hsc {

namespace {

std::optional<CertifiedProfile> try_anyclass(int n, int k, const Rational& c, int p) {
  AnyClassParams params = anyclass_default_params(n, k, c, p);
  if (!anyclass_violations(n, k, c, params).empty()) return std::nullopt;
  GeneratingProfile prof = anyclass_profile(n, k, c, params);
  PositivityCertificate cert = certify_positive(prof);
  if (!cert.positive()) return std::nullopt;
  return CertifiedProfile{std::move(prof), std::move(cert), p};
}

CertifiedProfile certified(const GeneratingProfile& prof) {
  PositivityCertificate cert = certify_positive(prof);
  if (!cert.positive()) throw std::runtime_error("path_between: a path profile failed to certify");
  return {prof, std::move(cert), 0};
}

Rational half_width(const GeneratingProfile& prof) {
  if (prof.u_min != -prof.u_max) throw std::invalid_argument("path_between: domains must be symmetric [-c, c]");
  return prof.u_max;
}

// t = 1 - i/steps for i = 1..steps-1, so the ends themselves are not repeated.
void convex_leg(std::vector<CertifiedProfile>& out, const GeneratingProfile& from, const GeneratingProfile& to,
                int steps) {
  for (int i = 1; i < steps; ++i) out.push_back(certified(convex_combine(from, to, ratio(steps - i, steps))));
}

}  // namespace

CertifiedProfile construct_positive_profile(int n, int k, const Rational& c, int cap) {
  if (n < 2 || k < 1) throw std::invalid_argument("construct: need n >= 2, k >= 1");
  if (!(c > 0 && c < ratio(n, k))) throw std::invalid_argument("construct: need 0 < c < n/k");
  std::optional<int> p0 = anyclass_min_p(n, k, c, cap);
  if (!p0) throw std::runtime_error("construct: search exhausted (no admissible p below cap)");
  for (int p = *p0; p <= cap; ++p)
    if (auto found = try_anyclass(n, k, c, p)) return *found;
  throw std::runtime_error("construct: search exhausted");
}

std::vector<CertifiedProfile> path_between(const GeneratingProfile& p1, const GeneratingProfile& p2, int steps) {
  if (steps < 1) throw std::invalid_argument("path_between: steps >= 1");
  if (p1.n != p2.n || p1.k != p2.k) throw std::invalid_argument("path_between: (n, k) must match");
  std::vector<CertifiedProfile> out;
  out.push_back(certified(p1));
  if (p1 == p2) return out;
  const int n = p1.n, k = p1.k;
  const Rational c1 = half_width(p1), c2 = half_width(p2);
  if (c1 == c2) {
    convex_leg(out, p1, p2, steps);
    out.push_back(certified(p2));
    return out;
  }

  // One p for the whole leg: the larger of the two endpoint searches, raised
  // if an intermediate class fails to certify.
  int p = std::max(construct_positive_profile(n, k, c1).p, construct_positive_profile(n, k, c2).p);
  std::vector<CertifiedProfile> leg;
  for (;;) {
    leg.clear();
    bool ok = true;
    for (int j = 0; j <= steps && ok; ++j) {
      Rational c = c1 + (c2 - c1) * ratio(j, steps);
      auto member = try_anyclass(n, k, c, p);
      if (member) leg.push_back(std::move(*member));
      else ok = false;
    }
    if (ok) break;
    if (++p > 4096) throw std::runtime_error("path_between: no common p for the anyclass leg");
  }

  const GeneratingProfile first = leg.front().profile, last = leg.back().profile;
  convex_leg(out, p1, first, steps);
  for (auto& m : leg) out.push_back(std::move(m));
  convex_leg(out, last, p2, steps);
  out.push_back(certified(p2));
  return out;
}

}  // namespace hsc
