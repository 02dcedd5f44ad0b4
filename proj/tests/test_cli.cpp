// End-to-end checks of the command-line binary; WQSDC_CLI_PATH is injected
// by the build.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include <nlohmann/json.hpp>

#include "wqsdc/sweeptable.hpp"

namespace {

struct RunResult {
  int code = -1;
  std::string output;
};

std::string temp_dir() {
  static std::string dir = [] {
    char tmpl[] = "/tmp/wqsdc_cli_XXXXXX";
    char* made = mkdtemp(tmpl);
    REQUIRE(made != nullptr);
    return std::string(made);
  }();
  return dir;
}

RunResult run_cli(const std::string& args) {
  std::string capture = temp_dir() + "/last_output.txt";
  std::string cmd = std::string(WQSDC_CLI_PATH) + " " + args + " > " +
                    capture + " 2>&1";
  int status = std::system(cmd.c_str());
  RunResult result;
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(capture);
  std::stringstream buf;
  buf << in.rdbuf();
  result.output = buf.str();
  return result;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("run writes a transcript and is byte-identical per seed") {
  std::string path1 = temp_dir() + "/t1.json";
  std::string path2 = temp_dir() + "/t2.json";
  std::string flags =
      "run --alpha2 0.5 --beta2 0.3 --gamma2 0.2 --secret 0.6,0.8 --seed 11 ";
  RunResult r1 = run_cli(flags + "--out " + path1);
  CHECK(r1.code == 0);
  CHECK(r1.output.find("outcome=") != std::string::npos);
  RunResult r2 = run_cli(flags + "--out " + path2);
  CHECK(r2.code == 0);
  std::string t1 = slurp(path1);
  CHECK(t1 == slurp(path2));
  nlohmann::json j = nlohmann::json::parse(t1);
  CHECK(j.contains("config"));
  CHECK(j.contains("events"));
  CHECK(j.contains("outcome"));
}

TEST_CASE("run accepts complex secrets and the physical convention") {
  std::string path = temp_dir() + "/t_complex.json";
  RunResult r = run_cli(
      "run --alpha2 0.45 --beta2 0.1 --gamma2 0.45 "
      "--secret 0.6,0:0,0.8 --convention physical --seed 4 --out " +
      path);
  CHECK(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(slurp(path));
  CHECK(j["config"]["convention"] == "physical");
}

TEST_CASE("figures produce their tables and optional charts") {
  std::string f2 = temp_dir() + "/fig2.csv";
  RunResult r2 = run_cli("figures fig2 --n-max 5 --out " + f2);
  CHECK(r2.code == 0);
  wqsdc::SweepTable t2 = wqsdc::read_csv_string(slurp(f2));
  CHECK(t2.rows.size() == 5);
  CHECK(t2.columns == std::vector<std::string>{"n", "fill"});

  std::string f1 = temp_dir() + "/fig1.csv";
  RunResult r1 = run_cli(
      "figures fig1 --alpha2 0.1 --beta2 0.8 --gamma2 0.1 --points 11 "
      "--svg --out " +
      f1);
  CHECK(r1.code == 0);
  wqsdc::SweepTable t1 = wqsdc::read_csv_string(slurp(f1));
  CHECK(t1.rows.size() == 11);
  std::string svg = slurp(temp_dir() + "/fig1.svg");
  CHECK(svg.find("<svg") != std::string::npos);

  std::string f3 = temp_dir() + "/fig3.csv";
  RunResult r3 = run_cli("figures fig3 --beta2 0.1 --points 10 --out " + f3);
  CHECK(r3.code == 0);
  wqsdc::SweepTable t3 = wqsdc::read_csv_string(slurp(f3));
  CHECK(t3.rows.size() == 10);
  CHECK(t3.columns ==
        std::vector<std::string>{"beta_sq", "fill", "ps"});
}

TEST_CASE("figure warnings reach the csv comments") {
  std::string f3 = temp_dir() + "/fig3_warn.csv";
  RunResult r = run_cli("figures fig3 --beta2 0.2 --points 5 --out " + f3);
  CHECK(r.code == 0);
  CHECK(r.output.find("warning:") != std::string::npos);
  wqsdc::SweepTable t = wqsdc::read_csv_string(slurp(f3));
  CHECK(!t.warnings.empty());
}

TEST_CASE("sweep emits the three estimator columns") {
  std::string path = temp_dir() + "/sweep.csv";
  RunResult r = run_cli(
      "sweep --beta2 0.3 --points 4 --shots 2000 --seed 2 --out " + path);
  CHECK(r.code == 0);
  wqsdc::SweepTable t = wqsdc::read_csv_string(slurp(path));
  CHECK(t.rows.size() == 4);
  std::size_t an = t.column_index("ps_analytic");
  std::size_t en = t.column_index("ps_enumerate");
  std::size_t mc = t.column_index("ps_mc");
  std::size_t se = t.column_index("mc_std_error");
  for (const auto& row : t.rows) {
    CHECK(std::abs(row[an] - row[en]) < 1e-9);
    CHECK(std::abs(row[mc] - row[an]) <= 6.0 * row[se] + 1e-9);
  }
}

TEST_CASE("attack commands write their reports") {
  std::string recv = temp_dir() + "/recv.json";
  RunResult r1 = run_cli(
      "attack receiver --alpha2 0.5 --beta2 0.3 --gamma2 0.2 "
      "--shots 2000 --seed 1 --out " +
      recv);
  CHECK(r1.code == 0);
  nlohmann::json jr = nlohmann::json::parse(slurp(recv));
  CHECK(jr["kind"] == "receiver");
  CHECK(std::abs(jr["analytic_mean"].get<double>() - 0.5) < 1e-12);

  std::string ctrl = temp_dir() + "/ctrl.json";
  RunResult r2 = run_cli(
      "attack controller --alpha2 0.6 --beta2 0.2 --gamma2 0.2 "
      "--secret 0.6,0.8 --out " +
      ctrl);
  CHECK(r2.code == 0);
  nlohmann::json jc = nlohmann::json::parse(slurp(ctrl));
  CHECK(std::abs(jc["identity_mean"].get<double>() - 0.57) < 1e-12);
  CHECK(std::abs(jc["with_bits_mean"].get<double>() - 0.5392) < 1e-12);

  std::string eve = temp_dir() + "/eve.json";
  RunResult r3 = run_cli(
      "attack eve --alpha2 0.5 --beta2 0.3 --gamma2 0.2 --shots 10 "
      "--seed 3 --out " +
      eve);
  CHECK(r3.code == 0);
  nlohmann::json je = nlohmann::json::parse(slurp(eve));
  CHECK(je["quantum_events_bob_to_charlie"] == 0);
}

TEST_CASE("clone-analysis reports norms, averages, and the curve") {
  std::string path = temp_dir() + "/clone.json";
  RunResult r = run_cli(
      "clone-analysis --alpha2 0.45 --gamma2 0.45 --points 5 --out " + path);
  CHECK(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(slurp(path));
  CHECK(std::abs(j["machine_norms"]["n0"].get<double>() - 1.0 / 1.9) <
        1e-12);
  double closed = j["average_distance"]["closed_form"].get<double>();
  double quad = j["average_distance"]["quadrature"].get<double>();
  CHECK(std::abs(closed - quad) < 1e-9);
  CHECK(j["distance_curve"].size() == 5);
  CHECK(j["isometry"]["physical_is_isometry"] == true);
  CHECK(j["isometry"]["literal_is_isometry"] == false);
}

TEST_CASE("selfcheck passes and writes both reconciliation files") {
  std::string dir = temp_dir();
  RunResult r = run_cli("selfcheck --out " + dir);
  CHECK(r.code == 0);
  CHECK(r.output.find("PASS") != std::string::npos);
  CHECK(r.output.find("all checks passed") != std::string::npos);
  nlohmann::json j = nlohmann::json::parse(slurp(dir + "/errata.json"));
  CHECK(j["all_pass"] == true);
  std::string text = slurp(dir + "/errata.txt");
  CHECK(text.find("[PASS]") != std::string::npos);
}

TEST_CASE("usage and domain errors exit with code 2") {
  CHECK(run_cli("no-such-command").code == 2);
  CHECK(run_cli("run --alpha2 0.9 --beta2 0.9 --gamma2 0.9").code == 2);
  CHECK(run_cli("run --alpha2 0.5 --beta2 0.3 --gamma2 0.2 "
                "--secret 0.1,0.1")
            .code == 2);
  CHECK(run_cli("figures fig3 --beta2 1.5").code == 2);
  CHECK(run_cli("--help").code == 0);
}

}  // TEST_SUITE
