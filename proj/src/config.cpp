#include "bitop/config.hpp"

#include "bitop/skew4.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

namespace bitop {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
  std::size_t pos = 0;
  double out = 0.0;
  try {
    out = std::stod(v, &pos);
  } catch (const std::exception&) {
    throw ConfigError("bad numeric value for " + key + ": '" + v + "'");
  }
  if (pos != v.size()) throw ConfigError("trailing junk in value for " + key);
  return out;
}

long parse_int(const std::string& key, const std::string& v) {
  std::size_t pos = 0;
  long out = 0;
  try {
    out = std::stol(v, &pos);
  } catch (const std::exception&) {
    throw ConfigError("bad integer value for " + key + ": '" + v + "'");
  }
  if (pos != v.size()) throw ConfigError("trailing junk in value for " + key);
  return out;
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw ConfigError("bad boolean value for " + key + ": '" + v + "'");
}

int entry_index(const std::string& suffix) {
  static const std::array<std::string, 6> names = {"12", "13", "14", "23", "24", "34"};
  const auto it = std::find(names.begin(), names.end(), suffix);
  return it == names.end() ? -1 : static_cast<int>(it - names.begin());
}

}  // namespace

double RunConfig::tolerance(const std::string& check, double fallback) const {
  const auto it = tol_overrides.find(check);
  return it == tol_overrides.end() ? fallback : it->second;
}

RunConfig parse_config(std::istream& in) {
  RunConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key.empty() || val.empty())
      throw ConfigError("line " + std::to_string(lineno) + ": empty key or value");

    if (key == "params.a") cfg.params.a = parse_double(key, val);
    else if (key == "params.b") cfg.params.b = parse_double(key, val);
    else if (key == "params.chi12") cfg.params.chi12 = parse_double(key, val);
    else if (key == "params.chi34") cfg.params.chi34 = parse_double(key, val);
    else if (key == "degenerate.allow") cfg.params.allow_degenerate = parse_bool(key, val);
    else if (key == "init.mode") {
      if (val == "random") cfg.random_init = true;
      else if (val == "explicit") cfg.random_init = false;
      else throw ConfigError("init.mode must be random or explicit");
    } else if (key == "init.seed") {
      cfg.seed = static_cast<std::uint64_t>(parse_int(key, val));
    } else if (key.rfind("init.m", 0) == 0 && key.size() == 8) {
      const int idx = entry_index(key.substr(6));
      if (idx < 0) throw ConfigError("unknown key " + key);
      cfg.m_init[static_cast<std::size_t>(idx)] = parse_double(key, val);
    } else if (key.rfind("init.g", 0) == 0 && key.size() == 8) {
      const int idx = entry_index(key.substr(6));
      if (idx < 0) throw ConfigError("unknown key " + key);
      cfg.g_init[static_cast<std::size_t>(idx)] = parse_double(key, val);
    } else if (key == "run.dt") {
      cfg.dt = parse_double(key, val);
      if (!(cfg.dt > 0.0)) throw ConfigError("run.dt must be positive");
    } else if (key == "run.steps") {
      cfg.steps = static_cast<int>(parse_int(key, val));
      if (cfg.steps < 1) throw ConfigError("run.steps must be >= 1");
    } else if (key == "run.method") {
      if (val == "rk4") cfg.method = Method::rk4;
      else if (val == "midpoint") cfg.method = Method::midpoint;
      else throw ConfigError("run.method must be rk4 or midpoint");
    } else if (key == "spectral.lambda_samples") {
      cfg.lambda_samples = static_cast<int>(parse_int(key, val));
      if (cfg.lambda_samples < 1) throw ConfigError("spectral.lambda_samples must be >= 1");
    } else if (key == "hierarchy.n") {
      cfg.hierarchy_n = static_cast<int>(parse_int(key, val));
      if (cfg.hierarchy_n < 2) throw ConfigError("hierarchy.n must be >= 2");
    } else if (key == "hierarchy.d") {
      cfg.hierarchy_d = parse_double(key, val);
      if (cfg.hierarchy_d == 0.0) throw ConfigError("hierarchy.d must be nonzero");
    } else if (key.rfind("tol.", 0) == 0) {
      const double tol = parse_double(key, val);
      if (!(tol > 0.0)) throw ConfigError("tolerances must be positive");
      cfg.tol_overrides[key.substr(4)] = tol;
    } else if (key == "fault.inject") {
      cfg.fault_inject = val == "none" ? "" : val;
    } else {
      throw ConfigError("unknown key " + key);
    }
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  return parse_config(in);
}

std::uint64_t derive_seed(std::uint64_t base, const std::string& purpose) {
  std::uint64_t h = base ^ 0x9e3779b97f4a7c15ull;
  for (unsigned char c : purpose) {
    h ^= c;
    h *= 0xff51afd7ed558ccdull;
    h ^= h >> 33;
  }
  return h;
}

BodyState random_state(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  BodyState s;
  std::array<double, 6> me{};
  for (double& e : me) e = uni(rng);
  s.m = Skew4::from_entries(me);
  Vec3 g1, g2;
  do {
    for (int k = 0; k < 3; ++k) g1(k) = gauss(rng);
  } while (g1.norm() < 1e-3);
  do {
    for (int k = 0; k < 3; ++k) g2(k) = gauss(rng);
  } while (g2.norm() < 1e-3);
  g1.normalize();
  g2.normalize();
  s.g = merge(g1, g2);
  return s;
}

Params random_params(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  Params p;
  p.a = 0.5 + uni(rng);          // [0.5, 1.5]
  p.b = 1.8 + uni(rng);          // [1.8, 2.8]  (disjoint from a: a != b, 4ab != 0)
  p.chi12 = 0.2 + 0.3 * uni(rng);   // [0.2, 0.5]
  p.chi34 = 0.05 + 0.1 * uni(rng);  // [0.05, 0.15], |chi12| != |chi34|
  p.validate();
  return p;
}

BodyState initial_state(const RunConfig& cfg) {
  if (cfg.random_init) return random_state(derive_seed(cfg.seed, "initial-state"));
  BodyState s;
  s.m = Skew4::from_entries(cfg.m_init);
  s.g = Skew4::from_entries(cfg.g_init);
  return s;
}

}  // namespace bitop
