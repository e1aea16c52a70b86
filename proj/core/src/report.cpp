#include "knitord/report.hpp"

#include <sstream>

#include <json.hpp>

namespace knitord {

void VerificationReport::truncate(std::size_t max_violations) {
  if (violations.size() > max_violations) {
    violations.resize(max_violations);
  }
}

std::string VerificationReport::to_json_line() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["instance"] = instance;
  j["radii"] = radii;
  j["checked"] = checked;
  nlohmann::ordered_json vs = nlohmann::ordered_json::array();
  for (const auto& v : violations) {
    nlohmann::ordered_json jv;
    jv["index"] = v.index;
    jv["witness"] = v.witness;
    jv["expected"] = v.expected;
    jv["actual"] = v.actual;
    vs.push_back(std::move(jv));
  }
  j["violations"] = std::move(vs);
  j["stats"] = stats;
  return j.dump();
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "suite=" << suite << " instance=" << instance << " radii=[";
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (i) os << ",";
    os << radii[i];
  }
  os << "] checked=" << checked << " violations=" << violations.size() << " "
     << (passed() ? "PASS" : "FAIL");
  for (const auto& [k, v] : stats) {
    os << "\n  stat " << k << "=" << v;
  }
  for (const auto& v : violations) {
    os << "\n  violation #" << v.index << " witness=[";
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
      if (i) os << ", ";
      os << "\"" << v.witness[i] << "\"";
    }
    os << "] expected=" << v.expected << " actual=" << v.actual;
  }
  return os.str();
}

}  // namespace knitord
