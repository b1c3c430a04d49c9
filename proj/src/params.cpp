#include "bitop/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bitop {

namespace {
constexpr double kDegenerateEps = 1e-14;
}

bool Params::is_degenerate() const {
  return std::abs(std::abs(chi12) - std::abs(chi34)) <= kDegenerateEps;
}

void Params::validate() const {
  auto fail = [](const std::string& what) {
    throw std::invalid_argument("invalid params: " + what);
  };
  if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(chi12) && std::isfinite(chi34)))
    fail("non-finite entry");
  if (a == b) fail("a == b");
  if (a + b == 0.0) fail("a + b == 0");
  if (a == 0.0 || b == 0.0) fail("a == 0 or b == 0 (inertia sums not invertible)");
  if (chi12 == 0.0) fail("chi12 == 0");
  if (chi34 == 0.0) fail("chi34 == 0");
  if (is_degenerate() && !allow_degenerate)
    fail("|chi12| == |chi34| (set allow_degenerate to study this regime)");
}

}  // namespace bitop
