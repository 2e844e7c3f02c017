// One line per acceptance criterion; exit status is the number of failures.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <string>

#include "hsclab/construct.hpp"
#include "hsclab/intersect.hpp"
#include "hsclab/kernels.hpp"
#include "hsclab/pointcurv.hpp"
#include "hsclab/soliton.hpp"

using namespace hsc;

namespace {

constexpr double kThresholdTol = 1e-6;
constexpr double kPinchTol = 1e-6;
constexpr double kPinch19Tol = 1e-9;
constexpr double kAlphaTol = 1e-6;
constexpr double kAlpha72Tol = 1e-5;
constexpr double kSolitonPinchTol = 1e-3;
constexpr double kFlagTol = 1e-6;
constexpr double kInducedTol = 1e-5;
constexpr double kOracleMargin = 1e-6;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void run(const char* id, const char* name, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome out;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail << " [exception: " << e.what() << "]";
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > budget_s) {
    out.pass = false;
    out.detail << " [over budget " << budget_s << " s]";
  }
  if (!out.pass) ++failures;
  std::printf("%-4s %-4s %-28s %7.2fs %s\n", out.pass ? "PASS" : "FAIL", id, name, secs, out.detail.str().c_str());
  std::fflush(stdout);
}

bool hitchin_positive(int n, int k, const Rational& c) { return certify_positive(hitchin_profile(n, k, c)).positive(); }

// Largest c with a positive certificate, assuming positive at lo and not at hi.
Rational hitchin_boundary(int n, int k, Rational lo, Rational hi, double width) {
  while (Rational(hi - lo).get_d() > width) {
    Rational mid = (lo + hi) / 2;
    (hitchin_positive(n, k, mid) ? lo : hi) = mid;
  }
  return (lo + hi) / 2;
}

bool certified_exactly(const CertifiedProfile& cp) {
  return cp.certificate.positive() && cp.certificate.method == CertMethod::exact_sturm &&
         verify_certificate(cp.profile, cp.certificate);
}

const std::pair<int, int> kHitchinSet[] = {{2, 1}, {3, 1}, {3, 2}, {5, 2}, {7, 2}};

}  // namespace

int main() {
  std::printf("tolerances: threshold %.0e, pinching %.0e (1/9: %.0e), alpha %.0e/%.0e, soliton pinching %.0e, "
              "flag %.0e, induced %.0e, oracle margin %.0e\n",
              kThresholdTol, kPinchTol, kPinch19Tol, kAlphaTol, kAlpha72Tol, kSolitonPinchTol, kFlagTol, kInducedTol,
              kOracleMargin);

  run("1", "hitchin threshold (2,1)", 5, [](Outcome& o) {
    for (const char* c : {"1/10", "1/3", "1/2", "33/50"}) o.require(hitchin_positive(2, 1, parse_rational(c)), c);
    for (const char* c : {"2/3", "7/10", "1"}) o.require(!hitchin_positive(2, 1, parse_rational(c)), c);
    Rational b = hitchin_boundary(2, 1, ratio(1, 2), 1, kThresholdTol);
    double err = std::abs(b.get_d() - 2.0 / 3);
    o.detail << "boundary " << b.get_d() << " err " << err;
    o.require(err < kThresholdTol, "boundary");
  });

  run("2", "hitchin threshold general", 30, [](Outcome& o) {
    for (auto [n, k] : kHitchinSet) {
      const Rational target = ratio(n, k * (2 * k + 1));
      Rational lo = target / 2, hi = target * 2;
      if (hi >= ratio(n, k)) hi = ratio(n, k) * ratio(99, 100);
      o.require(hitchin_positive(n, k, lo) && !hitchin_positive(n, k, hi), "bracket");
      double err = std::abs(Rational(hitchin_boundary(n, k, lo, hi, kThresholdTol) - target).get_d());
      o.detail << "(" << n << "," << k << ") " << err << " ";
      o.require(err < kThresholdTol, "boundary");
    }
  });

  run("3", "optimal hitchin pinching", 30, [](Outcome& o) {
    for (auto [n, k] : kHitchinSet) {
      double got = local_pinching(hitchin_profile(n, k, ratio(n, 4 * k * k + 3 * k))).local_constant;
      double err = std::abs(got - 1.0 / ((2 * k + 1) * (2 * k + 1)));
      o.detail << "(" << n << "," << k << ") " << err << " ";
      o.require(err < kPinchTol, "pinching");
    }
    double err = std::abs(local_pinching(hitchin_profile(2, 1, ratio(2, 7))).local_constant - 1.0 / 9);
    o.detail << "1/9 err " << err;
    o.require(err < kPinch19Tol, "1/9");
  });

  run("4", "every-class construction", 60 * 8, [](Outcome& o) {
    for (auto [n, k] : {std::pair{2, 1}, {3, 1}, {3, 2}, {4, 3}})
      for (Rational f : {ratio(9, 10), ratio(1, 2)}) {
        auto t0 = std::chrono::steady_clock::now();
        CertifiedProfile cp = construct_positive_profile(n, k, f * ratio(n, k));
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        o.detail << "(" << n << "," << k << "," << f.get_d() << ") p=" << cp.p << " ";
        o.require(certified_exactly(cp), "certificate");
        o.require(secs < 60, "per-run budget");
      }
  });

  run("5", "quartic local vs global", 10, [](Outcome& o) {
    Rational mu(501, 1000);
    GeneratingProfile q = quartic_profile(1, mu);
    o.require(certify_positive(q).positive(), "certify");
    double m = mu.get_d();
    double local = local_pinching(q).local_constant, global = global_pinching(q).global_constant;
    double el = std::abs(local - 4 * (2 * m - 1) / (4 - m)), eg = std::abs(global - (2 * m - 1) / (5 - 4 * m));
    o.detail << "mu 0.501 local err " << el << " global err " << eg;
    o.require(el < kPinchTol, "local");
    o.require(eg < kPinchTol, "global");
    o.require(std::abs(local - global) > 10 * kPinchTol, "local != global");
  });

  run("6", "soliton alpha regression", 10, [](Outcome& o) {
    struct Row { int n, k; double want, tol; };
    for (Row r : {Row{2, 1, 0.5276195199, kAlphaTol}, Row{3, 1, 0.6820161326, kAlphaTol},
                  Row{7, 2, 1.742423694, kAlpha72Tol}}) {
      double a = compact_alpha(r.n, r.k).alpha, s = shooting_alpha(r.n, r.k);
      o.detail << "(" << r.n << "," << r.k << ") " << std::abs(a - r.want) << "/" << std::abs(a - s) << " ";
      o.require(std::abs(a - r.want) < r.tol, "alpha");
      o.require(std::abs(a - s) < kAlphaTol, "shooting");
    }
  });

  run("7", "soliton H > 0", 10, [](Outcome& o) {
    SolitonHReport r21 = soliton_h_positive(2, 1, SolitonKind::compact);
    SolitonHReport r31 = soliton_h_positive(3, 1, SolitonKind::compact);
    SolitonHReport r72 = soliton_h_positive(7, 2, SolitonKind::compact);
    o.require(r21.certificate.verdict == Verdict::not_positive, "(2,1) not positive");
    o.require(r31.certificate.positive() && r31.pinching.has_value(), "(3,1) positive");
    o.require(r72.certificate.positive(), "(7,2) positive");
    if (r31.pinching) {
      double a = r31.alpha;
      double err = std::abs(r31.pinching->local_constant - (1 - a) / ((2 - a) * (5 - a)));
      o.detail << "(3,1) pinching " << r31.pinching->local_constant << " err " << err;
      o.require(err < kSolitonPinchTol, "pinching");
    }
  });

  run("8", "FIK conjecture sweep", 60, [](Outcome& o) {
    int proved = 0, numeric = 0;
    for (const SweepRow& r : conjecture_sweep(48, 6))
      if (r.n <= r.k * r.k + 2 * r.k) {
        ++proved;
        o.require(r.holds() && r.above_k, "proved range");
      }
    for (const SweepRow& r : conjecture_sweep(50, 10)) {
      ++numeric;
      o.require(r.holds() && r.above_k, "numeric range");
    }
    o.detail << proved << " proved-range rows, " << numeric << " rows to n=50";
  });

  run("9", "flag 3-fold", 60, [](Outcome& o) {
    KahlerCurvatureTensor f = flag_tensor();
    o.require(f.ricci() == 2.0 * Eigen::MatrixXcd::Identity(3, 3), "Einstein");
    TensorExtrema e = h_extrema(f);
    o.require(std::abs(e.min - 0.5) < kFlagTol && std::abs(e.max - 2) < kFlagTol, "extrema");
    KahlerCurvatureTensor t = induced_curvature_at(2, 2, 1, Eigen::VectorXcd::Zero(3));
    double worst = 0;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c)
          for (int d = 0; d < 3; ++d) worst = std::max(worst, std::abs(t(a, b, c, d) - f(a, b, c, d)));
    o.require(worst < kInducedTol, "induced (2,2,1)");
    double r2 = std::abs(induced_curvature_at(2, 2, 2, Eigen::VectorXcd::Zero(3))(0, 0, 0, 0) - cplx(-2.0));
    o.require(r2 < kInducedTol, "induced (2,2,2)");
    o.detail << "pinching " << e.pinching() << " induced err " << worst << " R1111 err " << r2;
  });

  run("10", "intersection obstruction", 10, [](Outcome& o) {
    int printed_bad = 0, corrected_bad = 0, witness_bad = 0;
    Rational a(3, 2), b(7, 5);
    for (int r = 2; r <= 6; ++r)
      for (int s = 2; s <= 6; ++s)
        for (int p = 1; p <= 10; ++p) {
          Rational e = total_scalar_coefficient(r, s, p, a, b);
          if (printed_bracket(r, s, p).value(a, b) != e) ++printed_bad;
          if (corrected_bracket(r, s, p).value(a, b) != e) ++corrected_bad;
          if (negative_class_witness(r, s, p).has_value() != (p > r + 1)) ++witness_bad;
        }
    o.detail << "printed bracket mismatches " << printed_bad << "/250, with factor p on b^2 " << corrected_bad
             << "/250, witness mismatches " << witness_bad;
    o.require(printed_bad == 0, "expansion vs printed bracket");
    o.require(witness_bad == 0, "witness iff p > r+1");
  });

  run("11", "oracle equivalence", 120, [](Outcome& o) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> kd(1, 3), deg(2, 8);
    int compared = 0, disagree = 0, skipped = 0, positive = 0;
    while (compared < 100 && compared + skipped < 1000) {
      int k = kd(rng), n = k + kd(rng);
      GeneratingProfile g = random_profile(n, k, ratio(-1, 2), ratio(1, 2), deg(rng), rng);
      TripleEval f(curvature_triple(g));
      double margin = std::numeric_limits<double>::infinity();
      for (const HExtremaD& e : sample_extrema(f, linspace(-0.5, 0.5, 10000))) margin = std::min(margin, e.min_h);
      if (std::abs(margin) <= kOracleMargin) {
        ++skipped;
        continue;
      }
      GridMin m = dense_h_min(f, -0.5, 0.5, 10000, 64);
      ++compared;
      bool exact = certify_positive(g).positive();
      positive += exact;
      if (exact != (m.value > 0)) ++disagree;
    }
    o.detail << compared << " compared (" << positive << " positive), " << skipped << " inside margin, "
             << disagree << " disagreements";
    o.require(compared == 100 && disagree == 0, "agreement");
  });

  run("12", "path connectedness", 120, [](Outcome& o) {
    auto path = path_between(hitchin_profile(2, 1, ratio(1, 4)), quartic_profile(1, ratio(51, 100)), 8);
    int bad = 0;
    for (const auto& cp : path) bad += !certified_exactly(cp);
    o.detail << path.size() << " profiles, " << bad << " uncertified";
    o.require(path.size() >= 8 && bad == 0, "path");
  });

  std::printf("%d failure(s)\n", failures);
  return failures == 0 ? 0 : 1;
}
