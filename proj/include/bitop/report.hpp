#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace bitop {

using Json = nlohmann::ordered_json;

struct CheckResult {
  std::string name;
  double value = 0.0;      ///< measured quantity (residual, drift, ...)
  double tolerance = 0.0;  ///< bound it is held against
  bool pass = false;
  Json details;  ///< free-form per-check data

  Json to_json() const;
};

/// Formula variants the oracles had to adjudicate; reported, never hidden.
struct SuspectedTypo {
  std::string check;       ///< check that performed the adjudication
  std::string detail;      ///< what disagreed and by how much
  std::string resolution;  ///< variant selected by the oracle
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  std::vector<SuspectedTypo> suspected_typos;
  Json metadata;

  bool all_pass() const;
  std::vector<std::string> failing() const;
  Json to_json() const;
};

/// Full-precision, locale-independent decimal form (round-trips a double).
std::string format_double(double v);

}  // namespace bitop
