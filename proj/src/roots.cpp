#include "hsclab/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace hsc {

const char* to_string(SignKind kind) {
  switch (kind) {
    case SignKind::strictly_positive: return "strictly-positive";
    case SignKind::strictly_negative: return "strictly-negative";
    case SignKind::has_zero: return "has-zero";
    case SignKind::mixed_sign: return "mixed-sign";
  }
  return "?";
}

namespace {

constexpr int kAutomaticSturmMaxDegree = 32;
constexpr unsigned kFirstPassDepth = 64;
constexpr unsigned kSquarefreeDepth = 4096;

// Divides (U - r) out of p; p(r) must be zero.
RationalPoly deflate(const RationalPoly& p, const Rational& r) {
  const auto& c = p.coeffs();
  const int d = p.degree();
  std::vector<Rational> q(d);
  Rational carry = 0;
  for (int i = d; i >= 1; --i) {
    carry = c[i] + carry * r;
    q[i - 1] = carry;
  }
  return RationalPoly(std::move(q));
}

// Removes every root at lo and hi; reports which endpoints were roots.
RationalPoly strip_endpoints(RationalPoly p, const Rational& lo, const Rational& hi, bool& lo_root, bool& hi_root) {
  lo_root = hi_root = false;
  while (p.degree() >= 1 && sgn(p(lo)) == 0) {
    lo_root = true;
    p = deflate(p, lo);
  }
  if (hi != lo) {
    while (p.degree() >= 1 && sgn(p(hi)) == 0) {
      hi_root = true;
      p = deflate(p, hi);
    }
  }
  return p;
}

void taylor_shift_one(std::vector<Integer>& c) {
  const int d = static_cast<int>(c.size()) - 1;
  for (int i = 0; i < d; ++i)
    for (int j = d - 1; j >= i; --j) c[j] += c[j + 1];
}

// Descartes bound for roots of q in (0, 1): sign variations of
// (1 + y)^d q(1 / (1 + y)).
int unit_variations(const IntPoly& q) {
  std::vector<Integer> c(q.coeffs().rbegin(), q.coeffs().rend());
  taylor_shift_one(c);
  int changes = 0;
  int last = 0;
  for (const auto& v : c) {
    int s = sgn(v);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

struct Vca {
  Rational lo;
  Rational width;
  unsigned max_depth;
  bool depth_exceeded = false;
  std::vector<Interval> out;

  Rational map(const Integer& num, unsigned k) const {
    Rational x(num);
    mpz_mul_2exp(x.get_den_mpz_t(), x.get_den_mpz_t(), k);
    x.canonicalize();
    return lo + width * x;
  }

  // q represents the polynomial on [num / 2^k, (num + 1) / 2^k] rescaled to [0, 1].
  void run(const IntPoly& q, const Integer& num, unsigned k) {
    if (depth_exceeded) return;
    int v = unit_variations(q);
    if (v == 0) return;
    if (v == 1) {
      out.push_back({map(num, k), map(num + 1, k)});
      return;
    }
    if (k >= max_depth) {
      depth_exceeded = true;
      return;
    }
    const int d = q.degree();
    std::vector<Integer> left = q.coeffs();
    for (int i = 0; i <= d; ++i) mpz_mul_2exp(left[i].get_mpz_t(), left[i].get_mpz_t(), static_cast<unsigned long>(d - i));
    std::vector<Integer> right = left;
    taylor_shift_one(right);
    IntPoly ql(std::move(left));
    IntPoly qr(std::move(right));
    ql.make_primitive();
    const bool mid_root = sgn(qr.coeffs().empty() ? Integer(0) : qr.coeffs()[0]) == 0;
    qr.make_primitive();
    run(ql, 2 * num, k + 1);
    if (mid_root) out.push_back({map(2 * num + 1, k + 1), map(2 * num + 1, k + 1)});
    run(qr, 2 * num + 1, k + 1);
  }
};

// Roots of q strictly inside (lo, hi); q must not vanish at lo or hi.
// Returns the isolating polynomial actually used (squarefree part when the
// first pass had to give up).
std::vector<Interval> interior_isolation(const RationalPoly& q, const Rational& lo, const Rational& hi,
                                         RationalPoly& isolating_poly) {
  isolating_poly = q;
  if (q.degree() <= 0) return {};
  for (int pass = 0; pass < 2; ++pass) {
    Vca vca{lo, hi - lo, pass == 0 ? kFirstPassDepth : kSquarefreeDepth, false, {}};
    IntPoly unit = isolating_poly.compose(RationalPoly::linear(lo, hi - lo)).to_primitive_int();
    vca.run(unit, Integer(0), 0);
    if (!vca.depth_exceeded) return vca.out;
    if (pass == 0) isolating_poly = q.squarefree_part();
  }
  throw std::runtime_error("root isolation did not terminate");
}

}  // namespace

// ---------------------------------------------------------------------------

SturmChain::SturmChain(const RationalPoly& p) {
  if (p.is_zero()) throw std::domain_error("indeterminate");
  chain_.push_back(p.to_primitive_int());
  if (p.degree() == 0) return;
  IntPoly d = chain_[0].derivative();
  d.make_primitive();
  chain_.push_back(std::move(d));
  while (true) {
    const IntPoly& a = chain_[chain_.size() - 2];
    const IntPoly& b = chain_.back();
    if (b.degree() == 0) break;
    int e = 0;
    IntPoly r = IntPoly::pseudo_remainder(a, b, &e);
    if (r.is_zero()) break;
    const bool flip = (e % 2 == 1) && sgn(b.leading()) < 0;
    if (!flip)
      for (auto& c : r.mutable_coeffs()) c = -c;
    r.make_primitive();
    chain_.push_back(std::move(r));
  }
}

int SturmChain::variations_at(const Rational& x) const {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain_) {
    int s = q.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmChain::count_half_open(const Rational& lo, const Rational& hi) const {
  return variations_at(lo) - variations_at(hi);
}

int sturm_count(const RationalPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw std::domain_error("indeterminate");
  if (!(lo < hi)) throw std::invalid_argument("sturm_count requires lo < hi");
  bool lo_root = false, hi_root = false;
  RationalPoly q = strip_endpoints(p, lo, hi, lo_root, hi_root);
  int count = (lo_root ? 1 : 0) + (hi_root ? 1 : 0);
  if (q.degree() >= 1) {
    SturmChain chain(q);
    count += chain.count_half_open(lo, hi);  // q(hi) != 0, so (lo, hi] == (lo, hi)
  }
  return count;
}

int count_roots(const RationalPoly& p, const Rational& lo, const Rational& hi, RootMethod method) {
  if (p.is_zero()) throw std::domain_error("indeterminate");
  if (lo > hi) throw std::invalid_argument("count_roots requires lo <= hi");
  if (lo == hi) return sgn(p(lo)) == 0 ? 1 : 0;
  if (method == RootMethod::automatic)
    method = p.degree() <= kAutomaticSturmMaxDegree ? RootMethod::sturm : RootMethod::descartes;
  if (method == RootMethod::sturm) return sturm_count(p, lo, hi);
  return static_cast<int>(isolate_roots(p, lo, hi, hi - lo).size());
}

namespace {

// Roots of q strictly inside (a, b), by Descartes bisection; no refinement.
int count_open(const RationalPoly& q, const Rational& a, const Rational& b) {
  bool lo_root = false, hi_root = false;
  RationalPoly r = strip_endpoints(q, a, b, lo_root, hi_root);
  RationalPoly iso;
  return static_cast<int>(interior_isolation(r, a, b, iso).size());
}

// Bisects (a, b), known to hold exactly one simple root of p in its
// interior, until the width is at most max_width and p is nonzero at both
// ends. Either end may itself be a root of p (a neighbouring root).
Interval refine_isolating(const RationalPoly& p, const IntPoly& ip, Interval iv, const Rational& max_width) {
  int s_lo = ip.sign_at(iv.lo);
  int s_hi = ip.sign_at(iv.hi);
  while (s_lo == 0 && s_hi == 0) {
    Rational m = iv.midpoint();
    int s = ip.sign_at(m);
    if (s == 0) return {m, m};
    if (count_open(p, iv.lo, m) == 1) {
      iv.hi = m;
      s_hi = s;
    } else {
      iv.lo = m;
      s_lo = s;
    }
  }
  // The sign just inside a zero end is opposite to the sign at the other end.
  int v_lo = s_lo != 0 ? s_lo : -s_hi;
  while (iv.width() > max_width || s_lo == 0 || s_hi == 0) {
    Rational m = iv.midpoint();
    int s = ip.sign_at(m);
    if (s == 0) return {m, m};
    if (s == v_lo) {
      iv.lo = m;
      s_lo = s;
    } else {
      iv.hi = m;
      s_hi = s;
    }
  }
  return iv;
}

}  // namespace

Interval refine_root(const RationalPoly& p, Interval iv, const Rational& max_width) {
  if (iv.is_point()) return iv;
  IntPoly ip = p.to_primitive_int();
  int s_lo = ip.sign_at(iv.lo);
  if (s_lo == 0) return {iv.lo, iv.lo};
  int s_hi = ip.sign_at(iv.hi);
  if (s_hi == 0) return {iv.hi, iv.hi};
  if (s_lo == s_hi) throw std::invalid_argument("refine_root needs a sign change");
  return refine_isolating(p, ip, iv, max_width);
}

std::vector<Interval> isolate_roots(const RationalPoly& p, const Rational& lo, const Rational& hi,
                                    std::optional<Rational> max_width) {
  if (p.is_zero()) throw std::domain_error("indeterminate");
  if (lo > hi) throw std::invalid_argument("isolate_roots requires lo <= hi");
  if (lo == hi) {
    if (sgn(p(lo)) == 0) return {{lo, lo}};
    return {};
  }
  Rational width = max_width ? *max_width : Rational(hi - lo);
  if (!max_width) mpz_mul_2exp(width.get_den_mpz_t(), width.get_den_mpz_t(), 40), width.canonicalize();

  bool lo_root = false, hi_root = false;
  RationalPoly q = strip_endpoints(p, lo, hi, lo_root, hi_root);
  RationalPoly iso;
  std::vector<Interval> inner = interior_isolation(q, lo, hi, iso);

  std::vector<Interval> out;
  if (lo_root) out.push_back({lo, lo});
  IntPoly ip = iso.to_primitive_int();
  for (auto& iv : inner) out.push_back(refine_isolating(iso, ip, iv, width));
  if (hi_root) out.push_back({hi, hi});
  return out;
}

SignVerdict sign_on_interval(const RationalPoly& p, const Rational& lo, const Rational& hi) {
  if (lo > hi) throw std::invalid_argument("sign_on_interval requires lo <= hi");
  SignVerdict v;
  if (p.is_zero()) {
    v.kind = SignKind::has_zero;
    v.witness = lo;
    v.witness_exact = true;
    return v;
  }
  IntPoly ip = p.to_primitive_int();
  const int s_lo = ip.sign_at(lo);
  const int s_hi = ip.sign_at(hi);
  const int s_mid = ip.sign_at((lo + hi) / 2);

  if (lo == hi) {
    if (s_lo > 0) v.kind = SignKind::strictly_positive;
    else if (s_lo < 0) v.kind = SignKind::strictly_negative;
    else {
      v.kind = SignKind::has_zero;
      v.witness = lo;
      v.witness_exact = true;
    }
    return v;
  }

  if (s_lo != 0 && s_lo == s_hi && s_lo == s_mid && count_roots(p, lo, hi) == 0) {
    v.kind = s_lo > 0 ? SignKind::strictly_positive : SignKind::strictly_negative;
    return v;
  }

  std::vector<Interval> roots = isolate_roots(p, lo, hi);
  // Sample every sign region: non-root interval ends and open-gap midpoints.
  std::vector<Rational> samples;
  Rational cursor = lo;
  bool cursor_is_root = false;
  auto add_gap = [&](const Rational& a, bool a_root, const Rational& b, bool b_root) {
    if (!a_root) samples.push_back(a);
    if (!b_root) samples.push_back(b);
    if (a < b) samples.push_back((a + b) / 2);
  };
  for (const auto& iv : roots) {
    add_gap(cursor, cursor_is_root, iv.lo, iv.is_point());
    cursor = iv.hi;
    cursor_is_root = iv.is_point();
  }
  add_gap(cursor, cursor_is_root, hi, false);

  std::optional<Rational> neg, pos;
  for (const auto& x : samples) {
    int s = ip.sign_at(x);
    if (s < 0 && !neg) neg = x;
    if (s > 0 && !pos) pos = x;
  }
  if (roots.empty()) {
    // Only reachable when an endpoint test above was inconclusive.
    v.kind = neg ? SignKind::strictly_negative : SignKind::strictly_positive;
    return v;
  }
  if (neg && pos) {
    v.kind = SignKind::mixed_sign;
    v.witness = *neg;
    v.positive_point = *pos;
    v.witness_exact = true;
    return v;
  }
  v.kind = SignKind::has_zero;
  for (const auto& iv : roots) {
    if (iv.is_point()) {
      v.witness = iv.lo;
      v.witness_exact = true;
      return v;
    }
  }
  const Interval& iv = roots.front();
  Rational guess = simplest_between(iv.lo, iv.hi);
  v.witness_interval = iv;
  if (sgn(p(guess)) == 0) {
    v.witness = guess;
    v.witness_exact = true;
  } else {
    v.witness = iv.midpoint();
    v.witness_exact = false;
  }
  return v;
}

Rational root_bound(const RationalPoly& p) {
  if (p.degree() < 1) return Rational(1);
  Rational m = 0;
  const Rational& lead = p.leading();
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(p.coeffs()[i] / lead);
    if (r > m) m = r;
  }
  return m + 1;
}

}  // namespace hsc
