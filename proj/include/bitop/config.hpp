#pragma once

#include "bitop/dynamics.hpp"
#include "bitop/params.hpp"

#include <array>
#include <cstdint>
#include <istream>
#include <map>
#include <string>

namespace bitop {

/// Thrown for malformed configuration input (maps to CLI exit code 2).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Flat key-value run configuration.  Unknown keys are errors.
struct RunConfig {
  Params params;

  bool random_init = true;
  std::uint64_t seed = 2024;
  std::array<double, 6> m_init{};  ///< explicit mode: momentum entries
  std::array<double, 6> g_init{};  ///< explicit mode: Poisson entries

  double dt = 1e-3;
  int steps = 10000;
  Method method = Method::rk4;

  int lambda_samples = 9;
  int hierarchy_n = 3;
  double hierarchy_d = 1.5;

  std::map<std::string, double> tol_overrides;
  /// Name of a check whose data is deliberately corrupted (test fixture).
  std::string fault_inject;

  double tolerance(const std::string& check, double fallback) const;
};

RunConfig parse_config(std::istream& in);
RunConfig load_config(const std::string& path);

/// Deterministic splitmix-style derivation of per-purpose seeds, so that
/// check subsets do not perturb each other's draws.
std::uint64_t derive_seed(std::uint64_t base, const std::string& purpose);

/// Initial phase point: the explicit entries, or a seeded draw with the
/// Poisson part normalized so both split gamma vectors are unit.
BodyState initial_state(const RunConfig& cfg);

/// Seeded random state with unit gamma norms (shared by tests and checks).
BodyState random_state(std::uint64_t seed);
/// Seeded random valid parameter draw (never degenerate).
Params random_params(std::uint64_t seed);

}  // namespace bitop
