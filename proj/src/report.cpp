#include "bitop/report.hpp"

#include <cstdio>

namespace bitop {

Json CheckResult::to_json() const {
  Json j;
  j["name"] = name;
  j["value"] = value;
  j["tolerance"] = tolerance;
  j["pass"] = pass;
  if (!details.is_null()) j["details"] = details;
  return j;
}

bool VerificationReport::all_pass() const {
  for (const CheckResult& c : checks)
    if (!c.pass) return false;
  return true;
}

std::vector<std::string> VerificationReport::failing() const {
  std::vector<std::string> out;
  for (const CheckResult& c : checks)
    if (!c.pass) out.push_back(c.name);
  return out;
}

Json VerificationReport::to_json() const {
  Json j;
  j["metadata"] = metadata;
  j["checks"] = Json::array();
  for (const CheckResult& c : checks) j["checks"].push_back(c.to_json());
  j["suspected_typos"] = Json::array();
  for (const SuspectedTypo& t : suspected_typos)
    j["suspected_typos"].push_back(
        Json{{"check", t.check}, {"detail", t.detail}, {"resolution", t.resolution}});
  j["all_pass"] = all_pass();
  return j;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace bitop
