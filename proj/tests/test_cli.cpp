#include <catch_amalgamated.hpp>

#include "qonkit/cli.hpp"
#include "qonkit/io.hpp"
#include "qonkit/report.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

using namespace qonkit;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_CASE("fock_verify_example_passes") {
  const Run r = cli({"fock-verify", "--scheme", "one-param", "--q", "0.5", "--D", "8"});
  REQUIRE(r.code == kExitPass);
  const Json j = Json::parse(r.out);
  CHECK(j.at("command") == "fock-verify");
  CHECK(j.at("pass") == true);
  CHECK(j.at("params").at("D") == 8);
  for (const Json& c : j.at("checks")) {
    CHECK(c.contains("tag"));
    CHECK(c.contains("residual"));
    CHECK(c.contains("tolerance"));
    CHECK(c.at("pass") == true);
  }
}

TEST_CASE("braid_check_example_reports_braid_and_ybe") {
  const Run r = cli({"braid-check", "--preset", "multiparametric", "--d", "3", "--seed", "7"});
  REQUIRE(r.code == kExitPass);
  const Json j = Json::parse(r.out);
  CHECK(j.at("seed") == 7);
  std::vector<std::string> names;
  for (const Json& c : j.at("checks")) names.push_back(c.at("name"));
  CHECK(std::find(names.begin(), names.end(), "braid_relation") != names.end());
  CHECK(std::find(names.begin(), names.end(), "yang_baxter") != names.end());
}

TEST_CASE("quon_dist_fermion_row") {
  const Run r = cli({"quon-dist", "--k", "2", "--eta", "1.0"});
  REQUIRE(r.code == kExitPass);
  const Json j = Json::parse(r.out);
  const Complex f = complex_from_json(j.at("data").at("rows")[0].at("f"));
  CHECK(std::abs(f - 1.0 / (std::exp(1.0) + 1.0)) < 1e-15);
}

TEST_CASE("identical_config_gives_identical_json") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"braid-check", "--seed", "11"}, {"ncforms-check", "--seed", "5", "--trials", "10"},
        {"graded-check", "--k", "3", "--solve-h", "--seed", "4"}, {"all-acceptance", "--criterion", "3", "--criterion", "8"}}) {
    const Run a = cli(args), b = cli(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
  CHECK(cli({"braid-check", "--seed", "11"}).out != cli({"braid-check", "--seed", "12"}).out);
}

TEST_CASE("usage_errors_exit_2") {
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"no-such-command"}).code == kExitUsage);
  CHECK(cli({"fock-verify", "--D", "1"}).code == kExitUsage);
  CHECK(cli({"fock-verify", "--D", "eight"}).code == kExitUsage);
  CHECK(cli({"qcalc", "--q", "0.5+"}).code == kExitUsage);
  CHECK(cli({"qcalc", "--scheme", "three-param"}).code == kExitUsage);
  CHECK(cli({"qcalc", "--tol", "-1"}).code == kExitUsage);
  CHECK(cli({"quon-dist"}).code == kExitUsage);
  CHECK(cli({"quon-dist", "--k", "3", "--q", "0.5"}).code == kExitUsage);
  CHECK(cli({"cs-resolution", "--q", "1.5"}).code == kExitUsage);
  CHECK(cli({"graded-check", "--k", "4"}).code == kExitUsage);
  CHECK(cli({"all-acceptance", "--criterion", "11"}).code == kExitUsage);
  CHECK(cli({"--help"}).code == kExitPass);
}

TEST_CASE("residual_failure_exits_1_and_names_the_relation") {
  const Run r = cli({"ncforms-check", "--dx-rule", "as-printed", "--trials", "10"});
  CHECK(r.code == kExitFail);
  CHECK(r.err.find("d_squared") != std::string::npos);
  const Json j = Json::parse(r.out);
  CHECK(j.at("pass") == false);
  CHECK(j.at("failing") == Json::array({"d_squared"}));
}

TEST_CASE("tolerance_flag_and_environment") {
  ::setenv(kTolEnv, "1e-6", 1);
  CHECK(Json::parse(cli({"fock-verify", "--q", "0.5", "--D", "4", "--scheme", "one-param"}).out).at("tolerance") == 1e-6);
  CHECK(Json::parse(cli({"fock-verify", "--tol", "1e-9"}).out).at("tolerance") == 1e-9);
  ::setenv(kTolEnv, "nope", 1);
  CHECK(cli({"fock-verify"}).code == kExitUsage);
  ::unsetenv(kTolEnv);
  CHECK(Json::parse(cli({"fock-verify"}).out).at("tolerance") == kDefaultTol);
}

TEST_CASE("text_and_csv_formats") {
  const Run text = cli({"graded-check", "--k", "2", "--format", "text"});
  CHECK(text.code == kExitPass);
  CHECK(text.out.find("PASS resolution_of_identity") != std::string::npos);
  CHECK(text.out.find("result: PASS") != std::string::npos);

  const Run csv = cli({"quon-dist", "--k", "3", "--eta-grid", "0.5:1.5:0.5", "--format", "csv"});
  CHECK(csv.code == kExitPass);
  CHECK(csv.out.rfind("eta,Z,f_real,f_imag\n", 0) == 0);
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 4);

  const Run table = cli({"cs-resolution", "--format", "csv", "--block", "5"});
  CHECK(std::count(table.out.begin(), table.out.end(), '\n') == 6);

  // The format flag is accepted on either side of the subcommand.
  CHECK(cli({"--format", "csv", "fock-verify"}).out == cli({"fock-verify", "--format", "csv"}).out);
}

TEST_CASE("graded_solve_mode_reports_every_convention") {
  const Json j = Json::parse(cli({"graded-check", "--k", "3", "--solve-h"}).out);
  const Json& solve = j.at("data").at("solve");
  REQUIRE(solve.size() == 3);
  int matches = 0;
  for (const Json& s : solve) matches += s.at("matches_reference").get<bool>();
  CHECK(matches >= 1);
}
