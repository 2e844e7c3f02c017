#ifndef HSCLAB_JSON_IO_HPP_
#define HSCLAB_JSON_IO_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hsclab/construct.hpp"
#include "hsclab/intersect.hpp"
#include "hsclab/pointcurv.hpp"
#include "hsclab/soliton.hpp"

// JSON forms of the library values. Rationals travel as "num/den" strings.

namespace hsc {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const RationalPoly& p);

/// {"n":2,"k":1,"umin":"-2/7","umax":"2/7","coeffs":["2/7","0","-7/2"]}
Json to_json(const GeneratingProfile& profile);
/// Throws std::invalid_argument on missing or malformed fields.
GeneratingProfile profile_from_json(const Json& j);
GeneratingProfile read_profile(const std::string& path);
void write_json(const std::string& path, const Json& j);

Json to_json(const ValidationReport& report);
Json to_json(const KahlerClassRatio& ratio);
Json to_json(const PositivityCertificate& cert);
Json to_json(const PinchingReport& report);

/// {"dim":3,"components":[{"idx":[1,1,1,1],"re":1.0,"im":0.0},...]}, 1-based
/// canonical representatives only.
Json to_json(const KahlerCurvatureTensor& t);
KahlerCurvatureTensor tensor_from_json(const Json& j);
Json to_json(const TensorExtrema& e);

Json to_json(const SolitonHReport& report);
Json to_json(const SweepRow& row);

/// {"r":2,"s":2,"p":4,"witness":{"a":"1","b":"4"},"value":"-6"}
Json cone_row(int r, int s, int p, const std::optional<ClassWitness>& witness);

/// Everything needed to re-run a CLI command.
struct RunReport {
  std::vector<std::string> command;
  Json inputs = Json::object();
  Json verdicts = Json::object();
  Json timings = Json::object();
  std::optional<std::uint64_t> seed;
  Json to_json() const;
};

}  // namespace hsc

#endif  // HSCLAB_JSON_IO_HPP_
