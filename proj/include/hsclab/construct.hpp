#ifndef HSCLAB_CONSTRUCT_HPP_
#define HSCLAB_CONSTRUCT_HPP_

#include <vector>

#include "hsclab/curvature.hpp"

namespace hsc {

struct CertifiedProfile {
  GeneratingProfile profile;
  PositivityCertificate certificate;
  int p = 0;  ///< half-degree of the anyclass member, 0 for other profiles
};

/// Walks p upward from anyclass_min_p with the default (delta1, delta2,
/// alpha2) and returns the first exactly certified member on [-c, c].
/// Throws std::runtime_error if nothing certifies by p = cap.
CertifiedProfile construct_positive_profile(int n, int k, const Rational& c, int cap = 4096);

/// Certified path from p1 to p2 (both on symmetric domains, same n and k):
/// convex steps p1 -> anyclass(c1), an anyclass leg at one fixed p from c1
/// to c2, then convex steps anyclass(c2) -> p2. Each leg has `steps`
/// subdivisions; every profile on the path is certified afresh.
std::vector<CertifiedProfile> path_between(const GeneratingProfile& p1, const GeneratingProfile& p2, int steps);

}  // namespace hsc

#endif  // HSCLAB_CONSTRUCT_HPP_
