// hsclab command-line front end. Prints a JSON report on stdout.
// Exit codes: 0 positive/success, 1 not positive or witness found,
// 2 inconclusive, 3 usage or input error.

#include <chrono>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hsclab/construct.hpp"
#include "hsclab/json_io.hpp"
#include "hsclab/kernels.hpp"

using namespace hsc;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInconclusive = 2;
constexpr int kUsage = 3;

struct Options {
  std::uint64_t seed = 1;
  std::optional<double> tol;
  int jobs = 0;
  bool timings = false;
  std::string out;
};

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::positive: return kOk;
    case Verdict::not_positive: return kNegative;
    default: return kInconclusive;
  }
}

const char* verdict_name(Verdict v) { return v == Verdict::not_positive ? "not-positive" : to_string(v); }

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct Context {
  Options opt;
  RunReport report;
  Timer timer;

  int finish(int code) {
    if (opt.timings) report.timings["total_s"] = timer.seconds();
    std::cout << report.to_json().dump(2) << '\n';
    return code;
  }
};

Rational rat(const std::string& text, const char* name) {
  try {
    return parse_rational(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("--") + name + ": " + e.what());
  }
}

int family(Context& ctx, const std::string& kind, int n, int k, const std::string& c_text,
           const std::string& mu_text, int p) {
  GeneratingProfile prof;
  Rational c = rat(c_text, "c");
  ctx.report.inputs = {{"family", kind}, {"n", n}, {"k", k}, {"c", to_string(c)}};
  if (kind == "hitchin") {
    prof = hitchin_profile(n, k, c);
  } else if (kind == "quartic") {
    Rational mu = rat(mu_text, "mu");
    ctx.report.inputs["mu"] = to_string(mu);
    prof = quartic_profile(c, mu);
  } else {
    int pp = p;
    if (pp == 0) {
      auto p0 = anyclass_min_p(n, k, c);
      if (!p0) throw std::invalid_argument("no admissible p for this c");
      pp = *p0;
    }
    ctx.report.inputs["p"] = pp;
    AnyClassParams params = anyclass_default_params(n, k, c, pp);
    prof = anyclass_profile(n, k, c, params);
  }
  ValidationReport v = validate_profile(prof);
  ctx.report.verdicts["profile"] = to_json(prof);
  ctx.report.verdicts["validation"] = to_json(v);
  if (!ctx.opt.out.empty()) write_json(ctx.opt.out, to_json(prof));
  return ctx.finish(v.ok() ? kOk : kNegative);
}

int validate(Context& ctx, const std::string& path) {
  GeneratingProfile prof = read_profile(path);
  ctx.report.inputs = {{"profile", to_json(prof)}};
  ValidationReport v = validate_profile(prof);
  ctx.report.verdicts["validation"] = to_json(v);
  if (v.ok()) ctx.report.verdicts["kahler_class"] = to_json(kahler_class_of(prof));
  return ctx.finish(v.ok() ? kOk : kNegative);
}

bool require_valid(Context& ctx, const GeneratingProfile& prof) {
  ValidationReport v = validate_profile(prof);
  if (v.ok()) return true;
  ctx.report.verdicts["validation"] = to_json(v);
  return false;
}

int certify(Context& ctx, const std::string& path) {
  GeneratingProfile prof = read_profile(path);
  ctx.report.inputs = {{"profile", to_json(prof)}};
  if (!require_valid(ctx, prof)) return ctx.finish(kUsage);
  PositivityCertificate cert = certify_positive(prof);
  ctx.report.verdicts["verdict"] = verdict_name(cert.verdict);
  ctx.report.verdicts["verified"] = verify_certificate(prof, cert);
  ctx.report.verdicts["certificate"] = to_json(cert);
  return ctx.finish(exit_for(cert.verdict));
}

int pinch(Context& ctx, const std::string& path, bool global) {
  GeneratingProfile prof = read_profile(path);
  double tol = ctx.opt.tol.value_or(1e-6);
  ctx.report.inputs = {{"profile", to_json(prof)}, {"global", global}, {"tol", tol}};
  if (!require_valid(ctx, prof)) return ctx.finish(kUsage);
  PositivityCertificate cert = certify_positive(prof);
  ctx.report.verdicts["verdict"] = verdict_name(cert.verdict);
  if (!cert.positive()) return ctx.finish(exit_for(cert.verdict));
  PinchingReport rep = global ? global_pinching(prof, tol) : local_pinching(prof, tol);
  ctx.report.verdicts["pinching"] = to_json(rep);
  return ctx.finish(kOk);
}

int construct(Context& ctx, int n, int k, const std::string& c_text) {
  Rational c = rat(c_text, "c");
  ctx.report.inputs = {{"n", n}, {"k", k}, {"c", to_string(c)}};
  CertifiedProfile cp = construct_positive_profile(n, k, c);
  ctx.report.verdicts["verdict"] = verdict_name(cp.certificate.verdict);
  ctx.report.verdicts["p"] = cp.p;
  ctx.report.verdicts["kahler_class"] = to_json(kahler_class_of(cp.profile));
  ctx.report.verdicts["profile"] = to_json(cp.profile);
  ctx.report.verdicts["certificate"] = to_json(cp.certificate);
  if (!ctx.opt.out.empty()) write_json(ctx.opt.out, to_json(cp.profile));
  return ctx.finish(kOk);
}

int path(Context& ctx, const std::string& from, const std::string& to, int steps) {
  GeneratingProfile p1 = read_profile(from), p2 = read_profile(to);
  ctx.report.inputs = {{"from", to_json(p1)}, {"to", to_json(p2)}, {"steps", steps}};
  auto steps_out = path_between(p1, p2, steps);
  Json arr = Json::array();
  for (const auto& s : steps_out)
    arr.push_back({{"p", s.p}, {"verdict", verdict_name(s.certificate.verdict)}, {"profile", to_json(s.profile)}});
  ctx.report.verdicts["length"] = steps_out.size();
  ctx.report.verdicts["path"] = arr;
  return ctx.finish(kOk);
}

int soliton(Context& ctx, const std::string& kind, int n, int k) {
  ctx.report.inputs = {{"kind", kind}, {"n", n}, {"k", k}};
  SolitonKind sk = kind == "fik" ? SolitonKind::fik : SolitonKind::compact;
  SolitonHReport rep = soliton_h_positive(n, k, sk);
  ctx.report.verdicts["soliton"] = to_json(rep);
  if (sk == SolitonKind::compact) {
    double tol = ctx.opt.tol.value_or(1e-9);
    ctx.report.verdicts["shooting_alpha"] = shooting_alpha(n, k, tol);
  }
  return ctx.finish(exit_for(rep.certificate.verdict));
}

int sweep(Context& ctx, int nmax, int kmax) {
  ctx.report.inputs = {{"nmax", nmax}, {"kmax", kmax}};
  auto rows = conjecture_sweep(nmax, kmax);
  Json arr = Json::array();
  bool all = true, above_k = true;
  for (const auto& r : rows) {
    arr.push_back(to_json(r));
    all = all && r.holds();
    above_k = above_k && r.above_k;
  }
  ctx.report.verdicts["rows"] = arr;
  ctx.report.verdicts["all_hold"] = all;
  ctx.report.verdicts["all_above_k"] = above_k;
  return ctx.finish(all ? kOk : kNegative);
}

int point(Context& ctx, const std::string& kind, int r, int s, int p, const std::vector<double>& at, int samples,
          double step) {
  KahlerCurvatureTensor t;
  if (kind == "flag") {
    ctx.report.inputs = {{"kind", kind}};
    t = flag_tensor();
  } else {
    const int dim = r + s - 1;
    Eigen::VectorXcd x = Eigen::VectorXcd::Zero(dim);
    if (!at.empty()) {
      if (static_cast<int>(at.size()) != 2 * dim)
        throw std::invalid_argument("--at needs 2(r+s-1) numbers: re im per coordinate");
      for (int i = 0; i < dim; ++i) x[i] = {at[2 * i], at[2 * i + 1]};
    }
    ctx.report.inputs = {{"kind", kind}, {"r", r}, {"s", s}, {"p", p}, {"at", at}, {"step", step}};
    InducedCurvature ic = induced_curvature(r, s, p, x, step);
    ctx.report.verdicts["richardson_gap"] = ic.richardson_gap;
    t = ic.tensor;
  }
  ctx.report.inputs["samples"] = samples;
  TensorExtrema e = h_extrema(t, samples, 200, ctx.opt.seed);
  ctx.report.verdicts["tensor"] = to_json(t);
  ctx.report.verdicts["h_extrema"] = to_json(e);
  Eigen::MatrixXcd ric = t.ricci();
  Json rj = Json::array();
  for (int i = 0; i < ric.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < ric.cols(); ++j) row.push_back(ric(i, j).real());
    rj.push_back(row);
  }
  ctx.report.verdicts["ricci"] = rj;
  if (t.dim() >= 2)
    ctx.report.verdicts["orthogonal_bisectional_min"] =
        orthogonal_bisectional_min(t, 20000, 200, ctx.opt.seed).value;
  return ctx.finish(kOk);
}

int cone(Context& ctx, int r, int s, int p) {
  ctx.report.inputs = {{"r", r}, {"s", s}, {"p", p}};
  auto w = negative_class_witness(r, s, p);
  ctx.report.verdicts["cone"] = cone_row(r, s, p, w);
  Bracket pb = printed_bracket(r, s, p), cb = corrected_bracket(r, s, p);
  ctx.report.verdicts["bracket"] = {{"a2", to_string(cb.a2)}, {"ab", to_string(cb.ab)}, {"b2", to_string(cb.b2)},
                                    {"printed_b2", to_string(pb.b2)}};
  return ctx.finish(w ? kNegative : kOk);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified curvature laboratory for U(n)-invariant Kähler metrics"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(HSCLAB_VERSION));

  Context ctx;
  for (int i = 0; i < argc; ++i) ctx.report.command.push_back(argv[i]);
  app.add_option("--seed", ctx.opt.seed, "Seed for all sampling");
  app.add_option("--tol", ctx.opt.tol, "Numeric tolerance (roots 1e-9, pinching 1e-6 by default)");
  app.add_option("--jobs", ctx.opt.jobs, "Cap on worker threads (0 = runtime default)");
  app.add_flag("--timings", ctx.opt.timings, "Add wall-clock timings to the report");

  int n = 2, k = 1, p = 0, r = 2, s = 2, steps = 8, nmax = 50, kmax = 10, samples = 100000;
  double step = 1e-3;
  std::string c_text, mu_text, file, from, to, kind;
  bool global = false;
  std::vector<double> at;

  auto* fam = app.add_subcommand("family", "Build a profile from a named family");
  fam->add_option("kind", kind, "hitchin, quartic or anyclass")
      ->required()
      ->check(CLI::IsMember({"hitchin", "quartic", "anyclass"}));
  fam->add_option("--n", n);
  fam->add_option("--k", k);
  fam->add_option("--c", c_text)->required();
  fam->add_option("--mu", mu_text);
  fam->add_option("--p", p, "Half-degree for anyclass (default: smallest admissible)");
  fam->add_option("-o,--output", ctx.opt.out, "Write the profile JSON here");

  auto* val = app.add_subcommand("validate", "Check the compactification conditions");
  val->add_option("-p,--profile", file)->required();

  auto* cert = app.add_subcommand("certify", "Exact H > 0 certificate");
  cert->add_option("-p,--profile", file)->required();

  auto* pin = app.add_subcommand("pinch", "Local (and global) pinching constant");
  pin->add_option("-p,--profile", file)->required();
  pin->add_flag("--global", global);

  auto* con = app.add_subcommand("construct", "Search for a certified profile in the class of c");
  con->add_option("--n", n)->required();
  con->add_option("--k", k)->required();
  con->add_option("--c", c_text)->required();
  con->add_option("-o,--output", ctx.opt.out);

  auto* pth = app.add_subcommand("path", "Certified path between two profiles");
  pth->add_option("--from", from)->required();
  pth->add_option("--to", to)->required();
  pth->add_option("--steps", steps);

  auto* sol = app.add_subcommand("soliton", "Shrinking solitons");
  sol->add_option("kind", kind, "compact, fik or sweep")->required()->check(CLI::IsMember({"compact", "fik", "sweep"}));
  sol->add_option("--n", n);
  sol->add_option("--k", k);
  sol->add_option("--nmax", nmax);
  sol->add_option("--kmax", kmax);

  auto* pt = app.add_subcommand("point", "Pointwise curvature tensors");
  pt->add_option("kind", kind, "flag or hypersurface")->required()->check(CLI::IsMember({"flag", "hypersurface"}));
  pt->add_option("--r", r);
  pt->add_option("--s", s);
  pt->add_option("--p", p);
  pt->add_option("--at", at, "Point as re im pairs (default: origin)");
  pt->add_option("--samples", samples);
  pt->add_option("--step", step);

  auto* cn = app.add_subcommand("cone", "Negative total scalar curvature classes");
  cn->add_option("--r", r)->required();
  cn->add_option("--s", s)->required();
  cn->add_option("--p", p)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  set_max_workers(ctx.opt.jobs);
  if (pt->parsed()) ctx.report.seed = ctx.opt.seed;

  try {
    if (fam->parsed()) return family(ctx, kind, n, k, c_text, mu_text, p);
    if (val->parsed()) return validate(ctx, file);
    if (cert->parsed()) return certify(ctx, file);
    if (pin->parsed()) return pinch(ctx, file, global);
    if (con->parsed()) return construct(ctx, n, k, c_text);
    if (pth->parsed()) return path(ctx, from, to, steps);
    if (sol->parsed()) {
      if (kind == "sweep") return sweep(ctx, nmax, kmax);
      return soliton(ctx, kind, n, k);
    }
    if (pt->parsed()) return point(ctx, kind, r, s, p == 0 ? 1 : p, at, samples, step);
    if (cn->parsed()) return cone(ctx, r, s, p);
  } catch (const std::invalid_argument& e) {
    std::cerr << "hsclab: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "hsclab: " << e.what() << '\n';
    return kInconclusive;
  }
  return kUsage;
}
