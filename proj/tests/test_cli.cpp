#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#ifndef POLYZETA_CLI_PATH
#error "POLYZETA_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(POLYZETA_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  char buf[4096];
  while (size_t n = fread(buf, 1, sizeof(buf), p)) r.out.append(buf, n);
  const int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("eval emits a value that survives a JSON round trip") {
  auto r = run_cli("--format json eval --k 2 --a 2 --method series");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  const double v = j["results"][0]["value"].get<double>();
  CHECK(std::fabs(v - std::numbers::pi * std::numbers::pi / 4) <= 1e-9);
  // 17 significant digits: re-serializing must not move the value
  auto round = nlohmann::json::parse(nlohmann::json(v).dump());
  CHECK(round.get<double>() == v);
}

TEST_CASE("verify agrees across methods and exits 0") {
  auto r = run_cli("--format json verify --k 2 --a 2 --samples 200000 --seed 5");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["status"] == "ok");
}

TEST_CASE("the uncorrected-constant diagnostic trips the tolerance gate") {
  auto r = run_cli("--format json verify --k 2 --a 2 --use-printed-constants "
                   "--samples 100000");
  CHECK(r.exit_code == 1);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["status"] == "tolerance_exceeded");
}

TEST_CASE("invalid parameters exit 2") {
  CHECK(run_cli("eval --k 0 --a 2").exit_code == 2);
  CHECK(run_cli("eval --k 2 --a 1").exit_code == 2);
  CHECK(run_cli("eval --k 2").exit_code == 2);          // missing required --a
  CHECK(run_cli("eval --k 2 --a 2 --method bogus").exit_code == 2);
  CHECK(run_cli("--format yaml eval --k 2 --a 2").exit_code == 2);
  CHECK(run_cli("enumerate --k 1").exit_code == 2);
}

TEST_CASE("help exits 0") {
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("sample output is deterministic for a fixed seed") {
  const std::string args = "sample --a 3 --dist xi --n 5 --seed 42";
  auto r1 = run_cli(args);
  auto r2 = run_cli(args);
  CHECK(r1.exit_code == 0);
  CHECK(r1.out == r2.out);
  auto r3 = run_cli("sample --a 3 --dist xi --n 5 --seed 43");
  CHECK(r3.out != r1.out);
}

TEST_CASE("the POLYZETA_SEED environment variable seeds sampling") {
  auto env = run_cli("sample --a 2 --n 3 --seed 777");
  const std::string cmd = std::string("POLYZETA_SEED=777 ") +
                          POLYZETA_CLI_PATH + " sample --a 2 --n 3 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  while (size_t n = fread(buf, 1, sizeof(buf), p)) out.append(buf, n);
  pclose(p);
  CHECK(out == env.out);
}

TEST_CASE("cdf subcommand prints the known a=2 value") {
  auto r = run_cli("cdf --a 2 --t 1 --dist xi");
  CHECK(r.exit_code == 0);
  CHECK(std::fabs(std::stod(r.out) - 0.5) <= 1e-14);
}

TEST_CASE("enumerate reports tuples with alphas") {
  auto r = run_cli("--format json enumerate --k 4 --n 2");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["tuples"].size() == 4);
  CHECK(j["tuples"][0]["r"] == nlohmann::json({1, 3}));
  CHECK(j["tuples"][0]["alphas"] == nlohmann::json({2, 0}));
}
