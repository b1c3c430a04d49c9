// Acceptance suite: one line per criterion, pinned tolerances, exit 0 iff
// everything passes.  Run through ctest or directly; the CLI binary path is
// compiled in for the determinism/exit-code criterion.

#include "bitop/config.hpp"
#include "bitop/report.hpp"
#include "bitop/verify.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace bitop;

namespace {

int failures = 0;

void report(int number, const std::string& label, bool pass, const std::string& info) {
  std::printf("criterion %02d %-28s %s (%s)\n", number, label.c_str(),
              pass ? "PASS" : "FAIL", info.c_str());
  if (!pass) ++failures;
}

std::string val_tol(const CheckResult& c) {
  return c.name + " value=" + format_double(c.value) +
         " tol=" + format_double(c.tolerance);
}

struct CliRun {
  int exit_code = -1;
  std::string output;
};

CliRun run_cli(const std::string& args) {
  const std::string cmd = std::string(BITOP_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  CliRun out;
  if (!pipe) return out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.output.append(buf, n);
  const int status = pclose(pipe);
  out.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main() {
  RunConfig cfg;  // library defaults: a=1, b=2, chi12=0.3, chi34=0.1, seed 2024
  cfg.tol_overrides.clear();

  // 1. The Lax identity at random states and spectral parameters.
  {
    const CheckResult c = check_lax_identity(cfg);
    report(1, "lax-identity", c.pass, val_tol(c));
  }

  // 2. Conservation of all ten coefficients + fourth-order drift scaling.
  {
    const CheckResult c = check_conservation(cfg);
    const CheckResult o = check_conservation_order(cfg);
    report(2, "conservation", c.pass && o.pass,
           val_tol(c) + "; halving ratio " + format_double(o.value));
  }

  // 3. Route equivalence of the spectral quartics and the characteristic
  //    polynomial identity.
  {
    TypoList typos;
    const CheckResult r = check_route_equivalence(cfg, &typos);
    const CheckResult d = check_charpoly_identity(cfg);
    report(3, "route-equivalence", r.pass && d.pass, val_tol(r) + "; " + val_tol(d));
  }

  // 4. Involution, generic rank 4, degenerate rank 3 with 2 q3 = p3.
  {
    const CheckResult i = check_involution(cfg);
    const CheckResult k = check_independence_rank(cfg);
    const CheckResult d = check_degenerate_rank(cfg);
    report(4, "involution-independence", i.pass && k.pass && d.pass,
           val_tol(i) + "; rank " + format_double(k.value) + "; degenerate " +
               (d.pass ? "3 with linear relation" : "FAILED"));
  }

  // 5. Curve structure: degree-8 model, genus (3, 9, 5), four double points.
  {
    const CheckResult c = check_curve_structure(cfg);
    report(5, "curve-structure", c.pass, val_tol(c));
  }

  // 6. Closed-form eigenvector against a dense eigensolver.
  {
    const CheckResult c = check_eigenvector_formula(cfg);
    report(6, "eigenvector-formula", c.pass, val_tol(c));
  }

  // 7. Reduction closure: pushforward, constant axial rates, cubic closure,
  //    adjudications listed.
  {
    TypoList typos;
    const CheckResult p = check_reduction_pushforward(cfg);
    const CheckResult r = check_reduction_r_constants(cfg);
    const CheckResult f = check_reduction_f_conservation(cfg, &typos);
    const CheckResult u = check_reduction_cubic_closure(cfg, &typos);
    const bool listed = typos.size() >= 3;
    report(7, "reduction-closure", p.pass && r.pass && f.pass && u.pass && listed,
           val_tol(p) + "; " + val_tol(r) + "; " + val_tol(u) + "; " +
               std::to_string(typos.size()) + " adjudications listed");
  }

  // 8. Weierstrass invariants of the covering quartics against the reduced
  //    cubics, pairing reported.
  {
    TypoList typos;
    const CheckResult c = check_prym_weierstrass(cfg, &typos);
    report(8, "prym-weierstrass-match", c.pass,
           val_tol(c) + "; pairing +<->" +
               c.details["pairing_plus_quartic"].dump() + ", g3 sign " +
               c.details["g3_sign"].dump());
  }

  // 9. Hierarchy: base case, degrees (2N, 2N), genus 2N-1, balanced split,
  //    factorization identity.
  {
    const CheckResult b = check_hierarchy_base_case(cfg);
    const CheckResult h = check_hierarchy_curves(cfg);
    report(9, "hierarchy", b.pass && h.pass, val_tol(b) + "; " + val_tol(h));
  }

  // 10. CLI determinism and the exit-code contract, including the
  //     deliberate-fault fixture.
  {
    const fs::path dir = fs::temp_directory_path() / "bitop-acceptance";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const std::string fixtures = BITOP_FIXTURES_DIR;

    const CliRun v1 = run_cli("verify --config " + fixtures + "/default.cfg --out " +
                              (dir / "v1").string());
    const CliRun v2 = run_cli("verify --config " + fixtures + "/default.cfg --out " +
                              (dir / "v2").string());
    const bool deterministic =
        v1.exit_code == 0 && v2.exit_code == 0 && v1.output == v2.output &&
        slurp(dir / "v1" / "verify.json") == slurp(dir / "v2" / "verify.json");

    const CliRun fault = run_cli("verify --config " + fixtures + "/fault.cfg --out " +
                                 (dir / "fault").string());
    const bool fault_ok =
        fault.exit_code == 1 &&
        fault.output.find("failed checks: route-equivalence") != std::string::npos;

    const CliRun bad = run_cli("verify --config " + fixtures + "/bad.cfg");
    const bool io_ok = bad.exit_code == 2;

    report(10, "cli-contract", deterministic && fault_ok && io_ok,
           std::string("determinism ") + (deterministic ? "ok" : "BROKEN") +
               ", fault exit " + std::to_string(fault.exit_code) + ", config-error exit " +
               std::to_string(bad.exit_code));
  }

  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all acceptance criteria pass\n");
  return 0;
}
