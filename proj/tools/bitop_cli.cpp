// Command-line front end: simulation runs, spectral/reduction/hierarchy
// reports, and the pass/fail verification suite.  Exit codes: 0 all enabled
// checks pass, 1 a check failed, 2 configuration or I/O error.

#include "bitop/basis.hpp"
#include "bitop/config.hpp"
#include "bitop/hierarchy.hpp"
#include "bitop/invariants.hpp"
#include "bitop/reduction.hpp"
#include "bitop/report.hpp"
#include "bitop/spectral.hpp"
#include "bitop/verify.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

namespace {

namespace fs = std::filesystem;
using namespace bitop;

struct CommonOpts {
  std::string config_path;
  std::string out_dir = ".";
  long seed_override = -1;
  bool allow_degenerate = false;
};

RunConfig make_config(const CommonOpts& opts) {
  RunConfig cfg;
  if (!opts.config_path.empty()) cfg = load_config(opts.config_path);
  if (opts.seed_override >= 0) cfg.seed = static_cast<std::uint64_t>(opts.seed_override);
  if (opts.allow_degenerate) cfg.params.allow_degenerate = true;
  try {
    cfg.params.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return cfg;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open output file: " + path.string());
  out << text;
  if (!out) throw ConfigError("write failed: " + path.string());
}

void write_json(const fs::path& path, const Json& j) { write_text(path, j.dump(2) + "\n"); }

Json config_echo(const RunConfig& cfg) {
  Json j;
  j["seed"] = cfg.seed;
  j["generator"] = "mt19937_64";
  j["params"] = {{"a", cfg.params.a},
                 {"b", cfg.params.b},
                 {"chi12", cfg.params.chi12},
                 {"chi34", cfg.params.chi34}};
  j["dt"] = cfg.dt;
  j["steps"] = cfg.steps;
  j["method"] = cfg.method == Method::rk4 ? "rk4" : "midpoint";
  return j;
}

std::string trajectory_csv(const Trajectory& traj) {
  std::string csv = "t,m12,m13,m14,m23,m24,m34,g12,g13,g14,g23,g24,g34\n";
  for (std::size_t k = 0; k < traj.states.size(); ++k) {
    csv += format_double(traj.times[k]);
    for (double e : traj.states[k].m.entries()) csv += "," + format_double(e);
    for (double e : traj.states[k].g.entries()) csv += "," + format_double(e);
    csv += "\n";
  }
  return csv;
}

int cmd_simulate(const CommonOpts& opts) {
  const RunConfig cfg = make_config(opts);
  const BodyState s0 = initial_state(cfg);
  const Trajectory traj = integrate(s0, cfg.params, cfg.dt, cfg.steps, cfg.method);
  fs::create_directories(opts.out_dir);
  write_text(fs::path(opts.out_dir) / "trajectory.csv", trajectory_csv(traj));

  Json meta = config_echo(cfg);
  {
    // Endpoint self-convergence: halving dt twice gives the observed order.
    const Trajectory half = integrate(s0, cfg.params, cfg.dt / 2, 2 * cfg.steps, cfg.method);
    const Trajectory quarter =
        integrate(s0, cfg.params, cfg.dt / 4, 4 * cfg.steps, cfg.method);
    const double e1 = (traj.states.back() - half.states.back()).max_abs();
    const double e2 = (half.states.back() - quarter.states.back()).max_abs();
    meta["convergence"]["endpoint_error_dt"] = e1;
    meta["convergence"]["endpoint_error_dt_half"] = e2;
    meta["convergence"]["ratio"] = e2 > 0.0 ? e1 / e2 : 0.0;
    meta["convergence"]["expected_ratio"] = cfg.method == Method::rk4 ? 16.0 : 4.0;
  }
  write_json(fs::path(opts.out_dir) / "simulate.json", meta);
  std::cout << "wrote " << (fs::path(opts.out_dir) / "trajectory.csv").string() << " ("
            << traj.states.size() << " rows)\n";
  return 0;
}

int cmd_verify(const CommonOpts& opts, const std::vector<std::string>& subset) {
  const RunConfig cfg = make_config(opts);
  const VerificationReport rep = run_verification(cfg, subset);
  fs::create_directories(opts.out_dir);
  Json j = rep.to_json();
  j["metadata"]["config"] = config_echo(cfg);
  write_json(fs::path(opts.out_dir) / "verify.json", j);
  for (const CheckResult& c : rep.checks)
    std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name
              << "  value=" << format_double(c.value)
              << "  tol=" << format_double(c.tolerance) << "\n";
  if (!rep.all_pass()) {
    std::cerr << "failed checks:";
    for (const std::string& n : rep.failing()) std::cerr << " " << n;
    std::cerr << "\n";
    return 1;
  }
  return 0;
}

int cmd_spectral(const CommonOpts& opts) {
  const RunConfig cfg = make_config(opts);
  const BodyState s = initial_state(cfg);
  const auto [pp, qq] = pq_from_state(s, cfg.params);
  const CurveSummary cs = curve_summary(pp, qq);
  const DoublePointCheck dp = double_point_check(s, cfg.params);

  Json j;
  j["metadata"] = config_echo(cfg);
  for (int c = 0; c <= 4; ++c) {
    j["P"].push_back(pp.coeff(c).real());
    j["Q"].push_back(qq.coeff(c).real());
  }
  j["curve"]["degenerate"] = cs.degenerate;
  if (cs.degenerate) j["curve"]["reason"] = cs.degenerate_reason;
  if (cs.genus_quotient) j["curve"]["genus_quotient"] = *cs.genus_quotient;
  if (cs.arith_genus) j["curve"]["arith_genus"] = *cs.arith_genus;
  if (cs.genus_normalized) j["curve"]["genus_normalized"] = *cs.genus_normalized;
  j["curve"]["disc_degree"] = cs.disc8.degree();
  j["curve"]["min_qroot_gap"] = cs.min_qroot_gap;
  j["double_points"]["max_residual"] = dp.max_residual;
  j["double_points"]["min_hessian"] = dp.min_hessian;
  for (const cplx& r : dp.points)
    j["double_points"]["points"].push_back({r.real(), r.imag()});
  {
    std::mt19937_64 rng(derive_seed(cfg.seed, "spectral-route"));
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
      std::uniform_real_distribution<double> uni(-2.0, 2.0);
      worst = std::max(worst, char_poly_check(s, cfg.params, cplx(uni(rng), uni(rng))));
    }
    j["charpoly_residual"] = worst;
  }
  fs::create_directories(opts.out_dir);
  write_json(fs::path(opts.out_dir) / "spectral.json", j);
  std::cout << "genus (" << (cs.genus_quotient ? std::to_string(*cs.genus_quotient) : "-")
            << ", " << (cs.arith_genus ? std::to_string(*cs.arith_genus) : "-") << ", "
            << (cs.genus_normalized ? std::to_string(*cs.genus_normalized) : "-") << ")\n";
  return 0;
}

int cmd_reduce(const CommonOpts& opts) {
  const RunConfig cfg = make_config(opts);
  TypoList typos;
  const CheckResult closure = check_reduction_cubic_closure(cfg, &typos);
  const CheckResult fcons = check_reduction_f_conservation(cfg, &typos);
  const CheckResult push = check_reduction_pushforward(cfg);
  const CheckResult rconst = check_reduction_r_constants(cfg);

  const BodyState s = initial_state(cfg);
  const TwistedState ts = to_twisted(s, cfg.params, GammaNorm::allow_any);
  const ReductionConstants rc = reduction_constants(ts, cfg.params);
  const CubicData cd = cubic_data(rc, cfg.params);
  const auto [e1, e2] = elliptic_curves(cd);

  Json j;
  j["metadata"] = config_echo(cfg);
  j["constants"] = {{"m", rc.m},       {"n1", rc.n1},         {"n2", rc.n2},
                    {"alpha1", rc.alpha1}, {"alpha2", rc.alpha2}, {"a1", rc.a1},
                    {"a2", rc.a2},     {"f11", rc.f11},       {"f12", rc.f12},
                    {"f13", rc.f13},   {"f21", rc.f21},       {"f22", rc.f22},
                    {"f23", rc.f23}};
  j["cubics"] = {{"b1", cd.b1}, {"c1", cd.c1}, {"d1", cd.d1},
                 {"b2", cd.b2}, {"c2", cd.c2}, {"d2", cd.d2}};
  j["elliptic"] = {{"g2_1", e1.g2}, {"g3_1", e1.g3}, {"disc_1", e1.discriminant()},
                   {"g2_2", e2.g2}, {"g3_2", e2.g3}, {"disc_2", e2.discriminant()}};
  for (const CheckResult& c : {closure, fcons, push, rconst})
    j["checks"].push_back(c.to_json());
  for (const SuspectedTypo& t : typos)
    j["suspected_typos"].push_back(
        Json{{"check", t.check}, {"detail", t.detail}, {"resolution", t.resolution}});
  fs::create_directories(opts.out_dir);
  write_json(fs::path(opts.out_dir) / "reduce.json", j);
  const bool ok = closure.pass && fcons.pass && push.pass && rconst.pass;
  std::cout << (ok ? "reduction checks pass\n" : "reduction checks FAILED\n");
  return ok ? 0 : 1;
}

int cmd_hierarchy(const CommonOpts& opts) {
  const RunConfig cfg = make_config(opts);
  std::mt19937_64 rng(derive_seed(cfg.seed, "hierarchy-cmd"));
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::vector<Skew4> mats;
  for (int k = 0; k < cfg.hierarchy_n; ++k) {
    std::array<double, 6> e{};
    for (double& v : e) v = uni(rng);
    mats.push_back(Skew4::from_entries(e));
  }
  const HierState hs = make_hier_state(cfg.hierarchy_d, std::move(mats));
  const HierSpectral spec = hier_spectral(hs, cfg.params);
  const OmegaPolicyResult pol = omega_policy(hs, cfg.params);

  Json j;
  j["metadata"] = config_echo(cfg);
  j["n"] = cfg.hierarchy_n;
  j["d"] = cfg.hierarchy_d;
  j["degree_p"] = spec.degree_p;
  j["degree_q"] = spec.degree_q;
  j["genus"] = spec.genus ? Json(*spec.genus) : Json();
  j["degenerate"] = spec.degenerate;
  if (spec.degenerate) j["note"] = spec.note;
  j["constraint_residual"] = pol.constraint_residual;
  j["omega_scale"] = pol.scale;
  j["centralizer_dim"] = pol.centralizer_dim;
  bool ok = !spec.degenerate;
  if (!spec.degenerate) {
    const CoveringPartition part = equal_split(spec.ppoly, spec.qpoly);
    j["split"] = {part.plus_count, part.minus_count};
    j["factorization_residual"] = part.factorization_residual;
    j["equally_split"] = is_equally_split(part.side);
    ok = ok && is_equally_split(part.side);
  }
  const CheckResult base = check_hierarchy_base_case(cfg);
  j["checks"].push_back(base.to_json());
  ok = ok && base.pass;
  fs::create_directories(opts.out_dir);
  write_json(fs::path(opts.out_dir) / "hierarchy.json", j);
  std::cout << "degrees (" << spec.degree_p << ", " << spec.degree_q << "), genus "
            << (spec.genus ? std::to_string(*spec.genus) : "-") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical laboratory for a pair of twisted four-dimensional tops"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::vector<std::string> checks;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", opts.config_path, "flat key-value config file");
    sub->add_option("--out", opts.out_dir, "output directory");
    sub->add_option("--seed", opts.seed_override, "override config seed");
    sub->add_flag("--allow-degenerate", opts.allow_degenerate,
                  "accept |chi12| == |chi34| parameter sets");
  };

  CLI::App* simulate = app.add_subcommand("simulate", "integrate and write trajectory csv");
  add_common(simulate);
  CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
  add_common(verify);
  verify->add_option("--check", checks, "run only the named checks (repeatable)");
  CLI::App* spectral = app.add_subcommand("spectral", "spectral-curve report");
  add_common(spectral);
  CLI::App* reduce = app.add_subcommand("reduce", "classical reduction report");
  add_common(reduce);
  CLI::App* hierarchy = app.add_subcommand("hierarchy", "degree-N flow report");
  add_common(hierarchy);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (simulate->parsed()) return cmd_simulate(opts);
    if (verify->parsed()) return cmd_verify(opts, checks);
    if (spectral->parsed()) return cmd_spectral(opts);
    if (reduce->parsed()) return cmd_reduce(opts);
    if (hierarchy->parsed()) return cmd_hierarchy(opts);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
