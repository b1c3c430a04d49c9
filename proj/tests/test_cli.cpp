#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

struct CliRun {
  int exit_code = -1;
  std::string output;
};

CliRun run_cli(const std::string& args) {
  const std::string cmd = std::string(BITOP_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliRun out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.output.append(buf, n);
  const int status = pclose(pipe);
  out.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

std::string fixture(const std::string& name) {
  return std::string(BITOP_FIXTURES_DIR) + "/" + name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch_dir(const std::string& tag) {
  const fs::path dir = fs::temp_directory_path() / ("bitop-cli-test-" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("verify: identical config and seed give byte-identical reports") {
  const fs::path d1 = scratch_dir("det1");
  const fs::path d2 = scratch_dir("det2");
  const std::string checks = " --check lax-identity --check route-equivalence"
                             " --check hierarchy-curves --check involution";
  const CliRun r1 = run_cli("verify --config " + fixture("default.cfg") + " --out " +
                            d1.string() + checks);
  const CliRun r2 = run_cli("verify --config " + fixture("default.cfg") + " --out " +
                            d2.string() + checks);
  CHECK(r1.exit_code == 0);
  CHECK(r2.exit_code == 0);
  CHECK(r1.output == r2.output);
  CHECK(slurp(d1 / "verify.json") == slurp(d2 / "verify.json"));

  // report schema: per-check name/value/tolerance/pass, adjudication array,
  // seeded-generator metadata
  const Json rep = Json::parse(slurp(d1 / "verify.json"));
  CHECK(rep["metadata"]["seed"] == 2024);
  CHECK(rep["metadata"]["generator"] == "mt19937_64");
  CHECK(rep.contains("suspected_typos"));
  REQUIRE(rep["checks"].size() == 4);
  for (const auto& c : rep["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c["value"].is_number());
    CHECK(c["tolerance"].is_number());
    CHECK(c["pass"].is_boolean());
  }
}

TEST_CASE("verify: seed override changes draws but not determinism") {
  const fs::path d1 = scratch_dir("seed1");
  const fs::path d2 = scratch_dir("seed2");
  const std::string base = "verify --config " + fixture("default.cfg") +
                           " --check conservation --out ";
  const CliRun r1 = run_cli(base + d1.string() + " --seed 5");
  const CliRun r2 = run_cli(base + d2.string() + " --seed 6");
  CHECK(r1.exit_code == 0);
  CHECK(r2.exit_code == 0);
  CHECK(slurp(d1 / "verify.json") != slurp(d2 / "verify.json"));
}

TEST_CASE("verify: deliberate-fault fixture fails naming the corrupted check") {
  const fs::path dir = scratch_dir("fault");
  const CliRun r = run_cli("verify --config " + fixture("fault.cfg") + " --out " +
                           dir.string() + " --check route-equivalence");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("[FAIL] route-equivalence") != std::string::npos);
  CHECK(r.output.find("failed checks: route-equivalence") != std::string::npos);

  const Json rep = Json::parse(slurp(dir / "verify.json"));
  REQUIRE(rep["checks"].size() == 1);
  CHECK(rep["checks"][0]["name"] == "route-equivalence");
  CHECK(rep["checks"][0]["pass"] == false);
  CHECK(rep["all_pass"] == false);
}

TEST_CASE("exit code 2 for configuration and I/O problems") {
  CHECK(run_cli("verify --config " + fixture("bad.cfg")).exit_code == 2);
  CHECK(run_cli("verify --config /nonexistent/x.cfg").exit_code == 2);
  CHECK(run_cli("verify --config " + fixture("default.cfg") + " --check no-such-check")
            .exit_code == 2);
  // degenerate parameters without the flag are a config error
  const CliRun deg = run_cli("verify --config " + fixture("degenerate.cfg"));
  CHECK(deg.exit_code != 2);  // fixture carries degenerate.allow = true
}

TEST_CASE("simulate: determinism and the equilibrium fixture") {
  const fs::path d1 = scratch_dir("sim1");
  const fs::path d2 = scratch_dir("sim2");
  const CliRun r1 = run_cli("simulate --config " + fixture("default.cfg") + " --out " +
                            d1.string());
  CHECK(r1.exit_code == 0);
  const CliRun r2 = run_cli("simulate --config " + fixture("default.cfg") + " --out " +
                            d2.string());
  CHECK(r2.exit_code == 0);
  CHECK(slurp(d1 / "trajectory.csv") == slurp(d2 / "trajectory.csv"));
  CHECK(slurp(d1 / "simulate.json") == slurp(d2 / "simulate.json"));

  const std::string csv_text = slurp(d1 / "trajectory.csv");
  CHECK(csv_text.rfind("t,m12,m13,m14,m23,m24,m34,g12,g13,g14,g23,g24,g34\n0,", 0) == 0);

  // order-4 endpoint convergence is recorded in the metadata; measure it on
  // a run whose step size keeps the differences above the rounding floor
  const fs::path dc = scratch_dir("simconv");
  const CliRun rc = run_cli("simulate --config " + fixture("convergence.cfg") +
                            " --out " + dc.string());
  CHECK(rc.exit_code == 0);
  const Json meta = Json::parse(slurp(dc / "simulate.json"));
  const double ratio = meta["convergence"]["ratio"].get<double>();
  CHECK(ratio > 8.0);
  CHECK(ratio < 32.0);

  const fs::path de = scratch_dir("simeq");
  const CliRun re = run_cli("simulate --config " + fixture("equilibrium.cfg") +
                            " --out " + de.string());
  CHECK(re.exit_code == 0);
  std::istringstream csv(slurp(de / "trajectory.csv"));
  std::string line;
  std::getline(csv, line);  // header
  int rows = 0;
  while (std::getline(csv, line)) {
    ++rows;
    const auto first_comma = line.find(',');
    CHECK(line.substr(first_comma) == ",0,0,0,0,0,0,2,0,0,0,0,0");
  }
  CHECK(rows == 51);
}

TEST_CASE("spectral command reports the genus triple") {
  const fs::path dir = scratch_dir("spectral");
  const CliRun r = run_cli("spectral --config " + fixture("default.cfg") + " --out " +
                           dir.string());
  CHECK(r.exit_code == 0);
  const Json j = Json::parse(slurp(dir / "spectral.json"));
  CHECK(j["curve"]["genus_quotient"] == 3);
  CHECK(j["curve"]["arith_genus"] == 9);
  CHECK(j["curve"]["genus_normalized"] == 5);
  CHECK(j["curve"]["disc_degree"] == 8);
  CHECK(j["double_points"]["points"].size() == 4);
  CHECK(j["charpoly_residual"].get<double>() < 1e-10);
}

TEST_CASE("reduce command emits residuals and the adjudicated variants") {
  const fs::path dir = scratch_dir("reduce");
  const CliRun r = run_cli("reduce --config " + fixture("default.cfg") + " --out " +
                           dir.string());
  CHECK(r.exit_code == 0);
  const Json j = Json::parse(slurp(dir / "reduce.json"));
  CHECK(j["suspected_typos"].size() >= 3);
  bool found_f22 = false;
  for (const auto& t : j["suspected_typos"])
    if (t["detail"].get<std::string>().find("f22") != std::string::npos) found_f22 = true;
  CHECK(found_f22);
  for (const auto& c : j["checks"]) CHECK(c["pass"] == true);
}

TEST_CASE("hierarchy command: degrees, genus, split for the configured order") {
  const fs::path dir = scratch_dir("hier");
  const CliRun r = run_cli("hierarchy --config " + fixture("default.cfg") + " --out " +
                           dir.string());
  CHECK(r.exit_code == 0);
  const Json j = Json::parse(slurp(dir / "hierarchy.json"));
  CHECK(j["n"] == 3);
  CHECK(j["degree_p"] == 6);
  CHECK(j["degree_q"] == 6);
  CHECK(j["genus"] == 5);
  CHECK(j["split"][0] == 6);
  CHECK(j["split"][1] == 6);
  CHECK(j["equally_split"] == true);
  CHECK(j["constraint_residual"].get<double>() < 1e-10);
}

TEST_CASE("degenerate flag: rank drops to 3 with the linear relation") {
  const fs::path dir = scratch_dir("degrank");
  const CliRun r = run_cli("verify --config " + fixture("degenerate.cfg") + " --out " +
                           dir.string() + " --check degenerate-rank");
  CHECK(r.exit_code == 0);
  const Json j = Json::parse(slurp(dir / "verify.json"));
  CHECK(j["checks"][0]["details"]["rank"] == 3);
  CHECK(j["checks"][0]["value"].get<double>() < 1e-9);
}
