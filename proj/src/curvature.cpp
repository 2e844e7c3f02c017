#include "hsclab/curvature.hpp"

#include <boost/math/tools/minima.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

#include "hsclab/kernels.hpp"

namespace hsc {

Rational CurvatureTriple::A(const Rational& u) const { return a_num(u); }

Rational CurvatureTriple::B(const Rational& u) const {
  Rational l = n + k * u;
  return b_num(u) / (2 * l * l);
}

Rational CurvatureTriple::C(const Rational& u) const {
  Rational l = n + k * u;
  return c_num(u) / (l * l);
}

CurvatureTriple curvature_triple(const GeneratingProfile& g) {
  CurvatureTriple t;
  t.n = g.n;
  t.k = g.k;
  t.u_min = g.u_min;
  t.u_max = g.u_max;
  const RationalPoly base = t.base();
  const RationalPoly d1 = g.phi.derivative();
  const Rational k(g.k);
  t.a_num = g.phi.derivative().derivative() * ratio(-1, 2);
  t.b_num = (k * k) * g.phi - k * (base * d1);
  t.c_num = Rational(2) * base - (k * k) * g.phi;
  return t;
}

TripleEval::TripleEval(const CurvatureTriple& t)
    : n_(t.n), k_(t.k), lo_(t.u_min.get_d()), hi_(t.u_max.get_d()) {
  auto conv = [](const RationalPoly& p) {
    std::vector<double> v;
    for (const auto& c : p.coeffs()) v.push_back(c.get_d());
    return v;
  };
  a_ = conv(t.a_num);
  b_ = conv(t.b_num);
  c_ = conv(t.c_num);
}

double TripleEval::horner(const std::vector<double>& c, double u) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * u + *it;
  return acc;
}

Abc TripleEval::operator()(double u) const {
  double l = n_ + k_ * u;
  return {horner(a_, u), horner(b_, u) / (2 * l * l), horner(c_, u) / (l * l)};
}

Abc abc_from_phi(int n, int k, double u, double phi, double dphi, double ddphi) {
  double l = n + k * u;
  return {-ddphi / 2, (k * k * phi - k * l * dphi) / (2 * l * l), (2 * l - k * k * phi) / (l * l)};
}

double h_value(const Abc& x, double t) {
  return (x.A + x.C - 4 * x.B) * t * t + (4 * x.B - 2 * x.C) * t + x.C;
}

double h_value(const CurvatureTriple& triple, double u, double t) {
  if (u < triple.u_min.get_d() || u > triple.u_max.get_d()) throw std::domain_error("u outside the domain");
  return h_value(TripleEval(triple)(u), t);
}

Rational h_value_exact(const CurvatureTriple& triple, const Rational& u, const Rational& t) {
  if (u < triple.u_min || u > triple.u_max) throw std::domain_error("u outside the domain");
  Rational A = triple.A(u), B = triple.B(u), C = triple.C(u);
  return (A + C - 4 * B) * t * t + (4 * B - 2 * C) * t + C;
}

namespace {

template <class T>
HExtremaT<T> extrema_impl(const T& A, const T& B, const T& C) {
  HExtremaT<T> e;
  // Endpoints: t = 0 gives C, t = 1 gives A.
  if (C <= A) {
    e.min_h = C, e.argmin_t = T(0), e.max_h = A, e.argmax_t = T(1);
  } else {
    e.min_h = A, e.argmin_t = T(1), e.max_h = C, e.argmax_t = T(0);
  }
  T alpha = A + C - 4 * B;
  if (alpha == 0) return e;
  T ts = (C - 2 * B) / alpha;
  if (!(ts > 0 && ts < 1)) return e;
  T v = (A * C - 4 * B * B) / alpha;
  if (alpha > 0) {
    e.min_h = v;
    e.argmin_t = ts;
  } else {
    e.max_h = v;
    e.argmax_t = ts;
  }
  return e;
}

}  // namespace

HExtrema h_extrema(const Rational& A, const Rational& B, const Rational& C) { return extrema_impl<Rational>(A, B, C); }

HExtremaD h_extrema(const Abc& x) { return extrema_impl<double>(x.A, x.B, x.C); }

HExtrema h_extrema_at(const CurvatureTriple& triple, const Rational& u) {
  if (u < triple.u_min || u > triple.u_max) throw std::domain_error("u outside the domain");
  return h_extrema(triple.A(u), triple.B(u), triple.C(u));
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::positive: return "positive";
    case Verdict::not_positive: return "not-positive";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

const char* to_string(CertMethod m) { return m == CertMethod::exact_sturm ? "exact-sturm" : "numeric-sampling"; }

RationalPoly p_poly(const CurvatureTriple& t) { return t.b_num; }

RationalPoly w_poly(const CurvatureTriple& t) {
  RationalPoly b = t.base();
  return b * b * t.a_num * t.c_num - t.b_num * t.b_num;
}

// ---------------------------------------------------------------------------
// Exact certification

namespace {

constexpr int kMaxShrink = 200;

// [c - w, c + w] clipped to [lo, hi].
Interval around(const Rational& c, const Rational& w, const Rational& lo, const Rational& hi) {
  Rational a = c - w, b = c + w;
  return {a < lo ? lo : a, b > hi ? hi : b};
}

// A point where the polynomial behind `sv` is <= 0.
std::pair<Rational, bool> bad_point(const SignVerdict& sv, const Interval& iv) {
  if (sv.kind == SignKind::strictly_negative) return {iv.midpoint(), true};
  return {*sv.witness, sv.witness_exact};
}

PositivityCertificate failure(const CurvatureTriple& tr, std::string condition, const Rational& u,
                              std::optional<Rational> t, bool exact, std::optional<Interval> where) {
  PositivityCertificate c;
  c.verdict = Verdict::not_positive;
  c.method = CertMethod::exact_sturm;
  c.failed_condition = std::move(condition);
  c.witness_u = u;
  c.witness_t = t ? *t : h_extrema_at(tr, u).argmin_t;
  c.witness_exact = exact;
  c.witness_interval = where;
  return c;
}

}  // namespace

PositivityCertificate certify_positive(const GeneratingProfile& g) {
  if (!validate_profile(g).ok()) throw std::invalid_argument("certify_positive: invalid profile");
  const CurvatureTriple tr = curvature_triple(g);
  const Rational lo = g.u_min, hi = g.u_max;
  const Interval dom{lo, hi};

  SignVerdict sa = sign_on_interval(tr.a_num, lo, hi);
  if (!sa.positive()) {
    auto [u, exact] = bad_point(sa, dom);
    return failure(tr, "A>0", u, Rational(1), exact, sa.witness_interval);
  }
  SignVerdict sc = sign_on_interval(tr.c_num, lo, hi);
  if (!sc.positive()) {
    auto [u, exact] = bad_point(sc, dom);
    return failure(tr, "C>0", u, Rational(0), exact, sc.witness_interval);
  }

  PositivityCertificate cert;
  cert.method = CertMethod::exact_sturm;
  cert.verdict = Verdict::positive;
  const RationalPoly P = p_poly(tr);
  const RationalPoly W = w_poly(tr);
  auto piece = [&](const Interval& iv, const char* fact) {
    cert.pieces.push_back({iv, {"A>0", "C>0", fact}});
  };

  // Where P <= 0 we need W > 0; try the whole domain first.
  if (sign_on_interval(W, lo, hi).positive()) {
    piece(dom, "W>0");
    return cert;
  }
  if (!P.is_zero() && sign_on_interval(P, lo, hi).positive()) {
    piece(dom, "P>0");
    return cert;
  }

  // Split at the roots of P. W equals (n+kU)^2 A C > 0 at each root, so a
  // small enough neighbourhood of every root is a W>0 piece.
  const RationalPoly Psf = P.squarefree_part();
  Rational width = (hi - lo) / (1 << 20);
  std::vector<Interval> roots = isolate_roots(Psf, lo, hi, width);
  std::vector<std::optional<Rational>> centers(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (!roots[i].is_point()) continue;
    const Rational r = roots[i].lo;
    centers[i] = r;
    Rational left = i > 0 ? roots[i - 1].hi : lo;
    Rational right = i + 1 < roots.size() ? roots[i + 1].lo : hi;
    Rational w = -1;
    if (r > left) w = (r - left) / 4;
    if (right > r && (w < 0 || (right - r) / 4 < w)) w = (right - r) / 4;
    roots[i] = around(r, w, lo, hi);
  }
  for (std::size_t i = 0; i < roots.size(); ++i) {
    Interval& iv = roots[i];
    std::optional<Rational> center = centers[i];
    int shrink = 0;
    while (!sign_on_interval(W, iv.lo, iv.hi).positive()) {
      if (++shrink > kMaxShrink) throw std::runtime_error("certify_positive: root neighbourhood did not settle");
      if (center) {
        Rational w = iv.width() / 4;
        iv = around(*center, w, lo, hi);
      } else {
        iv = refine_root(Psf, iv, iv.width() / 2);
        if (iv.is_point()) {
          center = iv.lo;
          iv = around(*center, width, lo, hi);
        }
      }
    }
  }

  Rational cursor = lo;
  auto gap = [&](const Rational& a, const Rational& b) -> std::optional<PositivityCertificate> {
    if (!(a < b)) return std::nullopt;
    Interval iv{a, b};
    int s = sgn(P(iv.midpoint()));
    if (s > 0 && sign_on_interval(P, a, b).positive()) {
      piece(iv, "P>0");
      return std::nullopt;
    }
    SignVerdict sw = sign_on_interval(W, a, b);
    if (sw.positive()) {
      piece(iv, "W>0");
      return std::nullopt;
    }
    auto [u, exact] = bad_point(sw, iv);
    return failure(tr, "2B+sqrt(AC)>0", u, std::nullopt, exact, sw.witness_interval);
  };
  for (const auto& iv : roots) {
    if (auto f = gap(cursor, iv.lo)) return *f;
    piece(iv, "W>0");
    cursor = iv.hi;
  }
  if (auto f = gap(cursor, hi)) return *f;
  return cert;
}

bool verify_certificate(const GeneratingProfile& g, const PositivityCertificate& cert) {
  if (cert.method != CertMethod::exact_sturm) return false;
  const CurvatureTriple tr = curvature_triple(g);
  if (cert.verdict == Verdict::not_positive) {
    if (!cert.witness_u || !cert.witness_t) return false;
    if (!cert.witness_exact) return true;
    return sgn(h_value_exact(tr, *cert.witness_u, *cert.witness_t)) <= 0;
  }
  if (cert.verdict != Verdict::positive || cert.pieces.empty()) return false;
  if (cert.pieces.front().interval.lo != g.u_min || cert.pieces.back().interval.hi != g.u_max) return false;
  const RationalPoly P = p_poly(tr), W = w_poly(tr);
  for (std::size_t i = 0; i < cert.pieces.size(); ++i) {
    const auto& pc = cert.pieces[i];
    if (i > 0 && cert.pieces[i - 1].interval.hi != pc.interval.lo) return false;
    bool a = false, c = false, pw = false;
    for (const auto& f : pc.facts) {
      const RationalPoly* poly = nullptr;
      if (f == "A>0") poly = &tr.a_num, a = true;
      else if (f == "C>0") poly = &tr.c_num, c = true;
      else if (f == "P>0") poly = &P, pw = true;
      else if (f == "W>0") poly = &W, pw = true;
      else return false;
      if (poly->is_zero() || !sign_on_interval(*poly, pc.interval.lo, pc.interval.hi).positive()) return false;
    }
    if (!(a && c && pw)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Numeric certification

namespace {

constexpr int kMaxCellDepth = 20;

double t_quantity(const Abc& x, double l) {
  return l * l * (2 * x.B + std::sqrt(std::max(x.A * x.C, 0.0)));
}

double worst_of(const Abc& x, double l) { return std::min({x.A, x.C, t_quantity(x, l)}); }

}  // namespace

PositivityCertificate certify_positive_numeric(const AbcFn& f, int n, int k, double lo, double hi, int samples) {
  if (!(lo < hi)) throw std::invalid_argument("certify_positive_numeric: need lo < hi");
  if (samples < 3) samples = 3;
  PositivityCertificate cert;
  cert.method = CertMethod::numeric_sampling;

  std::vector<double> u = linspace(lo, hi, samples);
  std::vector<Abc> vals = sample_abc(f, u);
  cert.evaluations = samples;
  std::vector<double> q(samples);
  for (int i = 0; i < samples; ++i) {
    double l = n + k * u[i];
    if (!std::isfinite(vals[i].A) || !std::isfinite(vals[i].B) || !std::isfinite(vals[i].C))
      throw std::runtime_error("certify_positive_numeric: evaluator returned a non-finite value");
    q[i] = worst_of(vals[i], l);
  }
  auto worst = std::min_element(q.begin(), q.end()) - q.begin();
  cert.margin = q[worst];
  cert.worst_u = u[worst];
  cert.worst_t = h_extrema(vals[worst]).argmin_t;
  if (cert.margin <= 0.0) {
    cert.verdict = Verdict::not_positive;
    return cert;
  }

  // Cellwise margin rule with adaptive subdivision.
  std::optional<double> bad;
  bool undecided = false;
  auto value_at = [&](double x) {
    ++cert.evaluations;
    return worst_of(f(x), n + k * x);
  };
  std::function<void(double, double, double, double, double, int)> cell = [&](double a, double b, double qa,
                                                                                double qb, double slope, int depth) {
    if (bad || undecided) return;
    double h = b - a;
    if (std::min(qa, qb) > 4 * h * slope) return;
    if (depth >= kMaxCellDepth) {
      undecided = true;
      cert.worst_u = a;
      return;
    }
    double m = 0.5 * (a + b);
    double qm = value_at(m);
    if (qm <= 0.0) {
      bad = m;
      return;
    }
    double s = std::max(std::abs(qm - qa), std::abs(qb - qm)) / (0.5 * h);
    s = std::max(s, slope);
    cell(a, m, qa, qm, s, depth + 1);
    cell(m, b, qm, qb, s, depth + 1);
  };
  for (int i = 0; i + 1 < samples && !bad && !undecided; ++i) {
    double h = u[i + 1] - u[i];
    double s = std::abs(q[i + 1] - q[i]) / h;
    if (i > 0) s = std::max(s, std::abs(q[i] - q[i - 1]) / (u[i] - u[i - 1]));
    if (i + 2 < samples) s = std::max(s, std::abs(q[i + 2] - q[i + 1]) / (u[i + 2] - u[i + 1]));
    cell(u[i], u[i + 1], q[i], q[i + 1], s, 0);
  }
  if (bad) {
    cert.verdict = Verdict::not_positive;
    cert.worst_u = *bad;
    cert.margin = std::min(cert.margin, value_at(*bad));
    cert.worst_t = h_extrema(f(*bad)).argmin_t;
    return cert;
  }
  cert.verdict = undecided ? Verdict::inconclusive : Verdict::positive;
  return cert;
}

// ---------------------------------------------------------------------------
// Pinching

double pinching_ratio(const Abc& abc) {
  HExtremaD e = h_extrema(abc);
  return e.min_h / e.max_h;
}

namespace {

constexpr int kPinchGrid = 1024;
constexpr int kMaxCandidates = 8;

struct Argmin {
  double u;
  double value;
};

// Grid plus bracketed Brent refinement of a scalar function of u.
Argmin minimize_1d(const std::function<double(double)>& fn, const std::vector<double>& u, const std::vector<double>& v,
                   double tol) {
  const int n = static_cast<int>(u.size());
  std::vector<int> cand;
  for (int i = 0; i < n; ++i) {
    bool left = i == 0 || v[i] <= v[i - 1];
    bool right = i == n - 1 || v[i] <= v[i + 1];
    if (left && right) cand.push_back(i);
  }
  std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) { return v[a] < v[b]; });
  if (static_cast<int>(cand.size()) > kMaxCandidates) cand.resize(kMaxCandidates);
  Argmin best{u[cand.front()], v[cand.front()]};
  const int bits = std::clamp(static_cast<int>(-std::log2(std::max(tol, 1e-15))), 8, 26);
  for (int i : cand) {
    double a = u[std::max(i - 1, 0)], b = u[std::min(i + 1, n - 1)];
    std::uintmax_t iters = 200;
    auto r = boost::math::tools::brent_find_minima(fn, a, b, bits, iters);
    if (r.second < best.value) best = {r.first, r.second};
    for (double e : {a, b}) {
      double fe = fn(e);
      if (fe < best.value) best = {e, fe};
    }
  }
  return best;
}

}  // namespace

PinchingReport local_pinching(const AbcFn& f, double lo, double hi, double tol) {
  PinchingReport rep;
  rep.tolerance = tol;
  std::vector<double> u = linspace(lo, hi, kPinchGrid + 1);
  std::vector<HExtremaD> ex = sample_extrema(f, u);
  std::vector<double> r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = ex[i].min_h / ex[i].max_h;
  Argmin m = minimize_1d([&](double x) { return pinching_ratio(f(x)); }, u, r, tol);
  rep.local_constant = m.value;
  rep.local_argmin_u = m.u;
  return rep;
}

PinchingReport global_pinching(const AbcFn& f, double lo, double hi, double tol) {
  PinchingReport rep = local_pinching(f, lo, hi, tol);
  std::vector<double> u = linspace(lo, hi, kPinchGrid + 1);
  std::vector<HExtremaD> ex = sample_extrema(f, u);
  std::vector<double> mins(u.size()), negmax(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    mins[i] = ex[i].min_h;
    negmax[i] = -ex[i].max_h;
  }
  Argmin lo_m = minimize_1d([&](double x) { return h_extrema(f(x)).min_h; }, u, mins, tol);
  Argmin hi_m = minimize_1d([&](double x) { return -h_extrema(f(x)).max_h; }, u, negmax, tol);
  HExtremaD at_min = h_extrema(f(lo_m.u));
  HExtremaD at_max = h_extrema(f(hi_m.u));
  rep.global_min = {lo_m.u, at_min.argmin_t, lo_m.value};
  rep.global_max = {hi_m.u, at_max.argmax_t, -hi_m.value};
  rep.global_constant = rep.global_min.value / rep.global_max.value;
  rep.has_global = true;
  return rep;
}

namespace {

AbcFn triple_fn(const GeneratingProfile& g) {
  if (!certify_positive(g).positive()) throw std::domain_error("pinching: profile is not certified positive");
  auto ev = std::make_shared<TripleEval>(curvature_triple(g));
  return [ev](double u) { return (*ev)(u); };
}

}  // namespace

PinchingReport local_pinching(const GeneratingProfile& g, double tol) {
  return local_pinching(triple_fn(g), g.u_min.get_d(), g.u_max.get_d(), tol);
}

PinchingReport global_pinching(const GeneratingProfile& g, double tol) {
  return global_pinching(triple_fn(g), g.u_min.get_d(), g.u_max.get_d(), tol);
}

}  // namespace hsc
