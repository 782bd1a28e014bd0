#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "minemb/cli.hpp"

namespace {
struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  RunResult r;
  r.code = minemb::run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}
}  // namespace

TEST_CASE("closed-form product defaults to the balanced radius") {
  const RunResult r = run({"closed-form", "product", "--n", "4", "--k", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("a2 = 4\n") != std::string::npos);
  CHECK(r.out.find("s = 8\n") != std::string::npos);
  CHECK(r.out.find("is_minimal_radius = 1") != std::string::npos);
  CHECK(r.out.find("lambda_minimal = 50.265482457436") != std::string::npos);
}

TEST_CASE("closed-form projective emits the catalog row") {
  const RunResult r =
      run({"closed-form", "projective", "--field", "C", "--dim", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("sigma = 53.3145952579") != std::string::npos);
  CHECK(r.out.find("k_hol = 1.3333333333") != std::string::npos);
}

TEST_CASE("sigma table csv carries the three-dimensional row") {
  const RunResult r = run({"sigma-table", "--max-n", "4", "--csv"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("manifold,dimension,value,form", 0) == 0);
  CHECK(r.out.find("RP^3,3,27.60690668682") != std::string::npos);
  CHECK(r.out.find("S^2xS^2,4,50.2654824574") != std::string::npos);
}

TEST_CASE("verify subcommands return ledger-driven exit codes") {
  const RunResult ok = run({"verify", "minimality", "--field", "R", "--dim",
                            "2", "--samples", "10"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("status: ok") != std::string::npos);

  const RunResult bad = run({"verify", "minimality", "--product", "--n", "3",
                             "--k", "1", "--r1", "0.6", "--samples", "10"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("status: violation") != std::string::npos);
  CHECK(bad.out.find("FAIL") != std::string::npos);
}

TEST_CASE("usage and domain errors exit with code 2") {
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({"closed-form", "product", "--n", "4"}).code == 2);  // missing --k
  CHECK(run({"closed-form", "projective", "--field", "Q", "--dim", "2"}).code ==
        2);
  CHECK(run({"closed-form", "product", "--n", "3", "--k", "7"}).code == 2);
  CHECK(run({"verify", "fk", "--n", "3", "--k", "1"}).code == 2);
  CHECK(run({"verify", "minimality", "--json", "--csv"}).code == 2);
  const RunResult help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("verify") != std::string::npos);
}

TEST_CASE("seeded json runs are byte identical without timestamps") {
  const std::vector<std::string> args = {"verify",    "identities",
                                         "--samples", "8",
                                         "--seed",    "5",
                                         "--json",    "--no-timestamp"};
  const RunResult a = run(args);
  const RunResult b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const nlohmann::json j = nlohmann::json::parse(a.out);
  CHECK(j.at("seed") == 5);
  CHECK(j.at("status") == "ok");
  CHECK(!j.contains("timestamp"));
  CHECK(j.at("payload").at("kind") == "ledger");

  std::vector<std::string> stamped = args;
  stamped.pop_back();
  const nlohmann::json js = nlohmann::json::parse(run(stamped).out);
  CHECK(js.contains("timestamp"));
}

TEST_CASE("reports can be written to a file") {
  const std::string path = "cli_test_report.json";
  const RunResult r = run({"closed-form", "projective", "--field", "H",
                           "--dim", "1", "--json", "--no-timestamp", "--out",
                           path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  REQUIRE(f.good());
  std::stringstream buf;
  buf << f.rdbuf();
  const nlohmann::json j = nlohmann::json::parse(buf.str());
  CHECK(j.at("payload").at("values").at("gn") == 4.0);
  f.close();
  std::remove(path.c_str());
}
