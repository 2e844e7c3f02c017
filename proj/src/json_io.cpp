#include "hsclab/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace hsc {

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  throw std::invalid_argument("expected a rational string, got " + j.dump());
}

Json to_json(const RationalPoly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
  return arr;
}

Json to_json(const GeneratingProfile& profile) {
  Json j;
  j["n"] = profile.n;
  j["k"] = profile.k;
  j["umin"] = to_string(profile.u_min);
  j["umax"] = to_string(profile.u_max);
  j["coeffs"] = to_json(profile.phi);
  return j;
}

GeneratingProfile profile_from_json(const Json& j) {
  try {
    GeneratingProfile p;
    p.n = j.at("n").get<int>();
    p.k = j.at("k").get<int>();
    p.u_min = rational_from_json(j.at("umin"));
    p.u_max = rational_from_json(j.at("umax"));
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_json(c));
    p.phi = RationalPoly(std::move(coeffs));
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("profile json: ") + e.what());
  }
}

GeneratingProfile read_profile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  return profile_from_json(j);
}

void write_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << j.dump(2) << '\n';
}

Json to_json(const ValidationReport& report) {
  Json j;
  j["ok"] = report.ok();
  Json v = Json::array();
  for (const auto& x : report.violations) v.push_back({{"condition", x.condition}, {"witness", x.witness}});
  j["violations"] = v;
  return j;
}

Json to_json(const KahlerClassRatio& ratio) {
  return {{"a", to_string(ratio.a)}, {"b", to_string(ratio.b)}, {"ratio", to_string(ratio.ratio())}};
}

Json to_json(const PositivityCertificate& cert) {
  Json j;
  j["verdict"] = cert.verdict == Verdict::not_positive ? "not-positive" : to_string(cert.verdict);
  j["method"] = cert.method == CertMethod::exact_sturm ? "exact-sturm" : "numeric-sampling";
  Json pieces = Json::array();
  for (const auto& piece : cert.pieces) {
    Json pj;
    pj["interval"] = {to_string(piece.interval.lo), to_string(piece.interval.hi)};
    pj["facts"] = piece.facts;
    pieces.push_back(pj);
  }
  j["pieces"] = pieces;
  if (!cert.failed_condition.empty()) j["failed_condition"] = cert.failed_condition;
  if (cert.witness_u) {
    Json w;
    w["u"] = to_string(*cert.witness_u);
    if (cert.witness_t) w["t"] = to_string(*cert.witness_t);
    w["exact"] = cert.witness_exact;
    if (cert.witness_interval)
      w["interval"] = {to_string(cert.witness_interval->lo), to_string(cert.witness_interval->hi)};
    j["witness"] = w;
  }
  if (cert.method == CertMethod::numeric_sampling) {
    j["margin"] = cert.margin;
    if (cert.worst_u) j["worst_u"] = *cert.worst_u;
    if (cert.worst_t) j["worst_t"] = *cert.worst_t;
    j["evaluations"] = cert.evaluations;
  }
  return j;
}

Json to_json(const PinchingReport& report) {
  Json j;
  j["local_constant"] = report.local_constant;
  j["local_argmin_u"] = report.local_argmin_u;
  if (report.has_global) {
    j["global_constant"] = report.global_constant;
    j["global_min"] = {{"u", report.global_min.u}, {"t", report.global_min.t}, {"value", report.global_min.value}};
    j["global_max"] = {{"u", report.global_max.u}, {"t", report.global_max.t}, {"value", report.global_max.value}};
  }
  j["tolerance"] = report.tolerance;
  return j;
}

Json to_json(const KahlerCurvatureTensor& t) {
  Json j;
  j["dim"] = t.dim();
  Json comps = Json::array();
  for (const auto& [key, v] : t.components())
    comps.push_back({{"idx", {key[0] + 1, key[1] + 1, key[2] + 1, key[3] + 1}}, {"re", v.real()}, {"im", v.imag()}});
  j["components"] = comps;
  return j;
}

KahlerCurvatureTensor tensor_from_json(const Json& j) {
  try {
    KahlerCurvatureTensor t(j.at("dim").get<int>());
    for (const auto& c : j.at("components")) {
      auto idx = c.at("idx").get<std::vector<int>>();
      if (idx.size() != 4) throw std::invalid_argument("tensor json: idx needs 4 entries");
      t.set(idx[0] - 1, idx[1] - 1, idx[2] - 1, idx[3] - 1, {c.at("re").get<double>(), c.value("im", 0.0)});
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("tensor json: ") + e.what());
  }
}

namespace {

Json vec_json(const Eigen::VectorXcd& x) {
  Json arr = Json::array();
  for (int i = 0; i < x.size(); ++i) arr.push_back({x[i].real(), x[i].imag()});
  return arr;
}

}  // namespace

Json to_json(const TensorExtrema& e) {
  return {{"min", e.min}, {"max", e.max}, {"pinching", e.pinching()},
          {"argmin", vec_json(e.argmin)}, {"argmax", vec_json(e.argmax)}};
}

Json to_json(const SolitonHReport& report) {
  Json j;
  j["kind"] = to_string(report.kind);
  j["n"] = report.n;
  j["k"] = report.k;
  j["alpha"] = report.alpha;
  j["alpha0"] = to_string(report.alpha0);
  j["kplus1"] = report.k + 1;
  j["h_positive"] = report.certificate.positive();
  j["verdict"] = report.certificate.verdict == Verdict::not_positive ? "not-positive"
                                                                      : to_string(report.certificate.verdict);
  j["zero_section_ok"] = report.zero_section_ok;
  j["margin"] = report.certificate.margin;
  if (report.pinching) j["pinching"] = report.pinching->local_constant;
  j["crossovers"] = report.crossovers;
  j["domain_max"] = report.domain_max;
  return j;
}

Json to_json(const SweepRow& row) {
  Json j;
  j["n"] = row.n;
  j["k"] = row.k;
  j["alpha"] = row.alpha;
  j["alpha0"] = to_string(row.alpha0);
  j["kplus1"] = row.kplus1;
  j["above_alpha0"] = row.above_alpha0;
  j["below_kplus1"] = row.below_kplus1;
  j["above_k"] = row.above_k;
  j["holds"] = row.holds();
  return j;
}

Json cone_row(int r, int s, int p, const std::optional<ClassWitness>& witness) {
  Json j;
  j["r"] = r;
  j["s"] = s;
  j["p"] = p;
  if (witness) {
    j["witness"] = {{"a", to_string(witness->a)}, {"b", to_string(witness->b)}};
    j["value"] = to_string(witness->value);
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json RunReport::to_json() const {
  Json j;
  j["tool"] = "hsclab";
  j["version"] = HSCLAB_VERSION;
  j["command"] = command;
  if (seed) j["seed"] = *seed;
  j["inputs"] = inputs;
  j["verdicts"] = verdicts;
  if (!timings.empty()) j["timings"] = timings;
  return j;
}

}  // namespace hsc
