#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "reflectinv/cli.hpp"
#include "reflectinv/groupfile.hpp"

using namespace reflectinv;

namespace {

const std::string kData = REFLECTINV_TEST_DATA;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

// Runs the installed binary through the shell to observe the real exit status.
Run binary(const std::string& args) {
  std::string cmd = std::string(REFLECTINV_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, ""};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("reflectinv-test-" + name)).string();
}

void write(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  f << text;
}

}  // namespace

TEST_CASE("order") {
  CHECK(cli({"order", "--catalog", "st8"}).out == "96\n");
  CHECK(cli({"order", "--catalog", "st8", "--rep", "rho5"}).out == "6\n");
  CHECK(cli({"order", "--rep", "rho13"}).out == "48\n");
  CHECK(cli({"order", "--file", kData + "/cyclic4.json"}).out == "4\n");
}

TEST_CASE("molien") {
  Run r = cli({"molien", "--catalog", "st8", "--rep", "rho5", "--max-degree", "40", "--denom", "8,12"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\n(t^4 + t^8)/((1 - t^8)*(1 - t^12))\n") != std::string::npos);
  CHECK(cli({"molien", "--catalog", "st8", "--rep", "rho1", "--max-degree", "16"}).out == "1 + t^8 + t^12 + t^16\n");
  r = cli({"molien", "--catalog", "st8", "--rep", "rho3", "--max-degree", "40", "--denom", "8,12"});
  CHECK(r.out.find("numerator: t^6\n") != std::string::npos);
  r = cli({"molien", "--rep", "rho3*rho13", "--max-degree", "40", "--denom", "8,12", "--json"});
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["rep"] == "rho3*rho13");
  CHECK(j["series"].size() == 41);
  CHECK(j["series"][0] == "0");
}

TEST_CASE("molien without a terminating numerator") {
  Run r = cli({"molien", "--rep", "rho1", "--max-degree", "40", "--denom", "4,12"});
  CHECK(r.code == 3);
  CHECK(r.err.find("NonTerminatingNumerator") != std::string::npos);
}

TEST_CASE("max degree from the environment") {
  setenv("REFLECTINV_MAX_DEGREE", "12", 1);
  CHECK(cli({"molien", "--rep", "rho1"}).out == "1 + t^8 + t^12\n");
  CHECK(cli({"molien", "--rep", "rho1", "--max-degree", "8"}).out == "1 + t^8\n");
  setenv("REFLECTINV_MAX_DEGREE", "twelve", 1);
  CHECK(cli({"molien", "--rep", "rho1"}).code == 2);
  unsetenv("REFLECTINV_MAX_DEGREE");
}

TEST_CASE("equivariants") {
  Run r = cli({"equivariants", "--rep", "rho13", "--degree", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "dim 1\n(x^2, x*y, y^2)\n");
  CHECK(cli({"equivariants", "--rep", "rho10", "--degree", "3", "--method", "reynolds"}).out == "dim 0\n");
  CHECK(cli({"equivariants", "--rep", "rho3", "--degree", "6", "--method", "nullspace"}).out == "dim 1\n(x^5*y - x*y^5)\n");
  auto j = nlohmann::json::parse(cli({"equivariants", "--rep", "rho5", "--degree", "4", "--json"}).out);
  CHECK(j["dim"] == 1);
  CHECK(j["basis"][0][0] == "x^4 + y^4");
  CHECK(cli({"equivariants", "--rep", "rho5"}).code == 2);
  CHECK(cli({"equivariants", "--rep", "rho5", "--degree", "2", "--method", "guess"}).code == 2);
}

TEST_CASE("generators") {
  Run r = cli({"generators", "--catalog", "st8", "--rep", "rho10", "--max-degree", "15"});
  CHECK(r.code == 0);
  CHECK(r.out.find("degree 1: (x, y)\n") != std::string::npos);
  CHECK(r.out.find("degree 5: ") != std::string::npos);
  r = cli({"generators", "--catalog", "st8", "--rep", "rho13", "--max-degree", "15", "--json"});
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["generators"].size() == 3);
  CHECK(j["generators"][0]["degree"] == 2);
  CHECK(j["generators"][1]["degree"] == 6);
  CHECK(j["generators"][2]["degree"] == 10);
  r = cli({"generators", "--catalog", "st8", "--rep", "rho1", "--max-degree", "15"});
  CHECK(r.out.find("degree 0: (1)\n") != std::string::npos);
  CHECK(cli({"generators", "--rep", "rho5", "--prim-degrees", "8,12", "--method", "nullspace"}).code == 0);
}

TEST_CASE("primary degrees without an independent phi") {
  // The degree-8 slice is the line of theta, leaving nothing for phi.
  Run r = cli({"generators", "--rep", "rho1", "--prim-degrees", "8,8", "--max-degree", "16"});
  CHECK(r.code == 3);
}

TEST_CASE("character and relations") {
  Run r = cli({"character", "--rep", "rho13"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("rho13: degree 3, <chi, chi> = 1\n0 1: 3\n", 0) == 0);
  r = cli({"relations"});
  CHECK(r.code == 0);
  CHECK(r.out.find("rho7 = rho3*rho10: degree 2, irreducible\n") != std::string::npos);
  auto j = nlohmann::json::parse(cli({"relations", "--json"}).out);
  CHECK(j["relations"].size() == 10);
  CHECK(j["ok"] == true);
}

TEST_CASE("input errors exit with 2") {
  CHECK(cli({"order", "--catalog", "nosuch"}).code == 2);
  CHECK(cli({"order", "--rep", "rho99"}).code == 2);
  CHECK(cli({"order", "--catalog", "st8", "--file", "x.json"}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"order", "--file", kData + "/missing.json"}).code == 2);

  std::string path = temp_path("singular.json");
  write(path, R"({"n": 2, "generators": [[["1", "1"], ["1", "1"]]], "representations": {}})");
  Run r = cli({"order", "--file", path});
  CHECK(r.code == 2);
  CHECK(r.err.find("SingularGenerator") != std::string::npos);
  CHECK(binary("order --file " + path).code == 2);
  CHECK(cli({"order", "--file", path, "--cap", "10"}).code == 2);
}

TEST_CASE("export round-trip") {
  std::string path = temp_path("st8.json");
  CHECK(cli({"export", "--catalog", "st8", "--output", path}).code == 0);
  CHECK(cli({"order", "--file", path}).out == "96\n");
  for (const char* rep : {"rho3", "rho5", "rho10", "rho13", "rho15", "rho16"}) {
    auto a = cli({"molien", "--catalog", "st8", "--rep", rep, "--denom", "8,12"});
    auto b = cli({"molien", "--file", path, "--rep", rep, "--denom", "8,12"});
    CHECK(a.out == b.out);
  }
  CHECK(cli({"export", "--file", path}).out == cli({"export", "--catalog", "st8"}).out);
}

TEST_CASE("verify-paper on a file") {
  Run r = binary("verify-paper --file " + kData + "/cyclic4.json");
  CHECK(r.code == 0);
  CHECK(r.out.find("all checks passed") != std::string::npos);

  CatalogEntry e = load_group_file(kData + "/cyclic4.json");
  e.expected->theta = Poly::parse("2*x");
  std::string path = temp_path("cyclic4-bad-theta.json");
  write(path, export_group_json(e));
  r = binary("verify-paper --file " + path);
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL  3  Primary invariants") != std::string::npos);
  CHECK(r.out.find("failed checks: 3\n") != std::string::npos);

  r = cli({"verify-paper", "--file", path, "--json"});
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["passed"] == false);
  REQUIRE(j["checks"].size() == 11);
  CHECK(j["checks"][2]["id"] == 3);
  CHECK(j["checks"][2]["status"] == "FAIL");
  CHECK(j["checks"][10]["status"] == "N/A");
}

TEST_CASE("output is deterministic") {
  for (std::vector<std::string> args : {std::vector<std::string>{"generators", "--rep", "rho15", "--max-degree", "15"},
                                        std::vector<std::string>{"character", "--rep", "rho3*rho13", "--json"},
                                        std::vector<std::string>{"export"}}) {
    CHECK(cli(args).out == cli(args).out);
  }
  CHECK(binary("generators --rep rho13 --max-degree 12").out == binary("generators --rep rho13 --max-degree 12").out);
}

TEST_CASE("help exits cleanly") {
  Run r = cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verify-paper") != std::string::npos);
}
