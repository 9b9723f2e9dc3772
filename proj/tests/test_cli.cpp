// Drives the installed CLI binary end to end.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

#ifndef TRANSCO_CLI_PATH
#error "TRANSCO_CLI_PATH must point at the transco binary"
#endif

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

int run_cli(const std::string& args) {
  const std::string cmd = std::string(TRANSCO_CLI_PATH) + " " + args +
                          " > /dev/null 2> /dev/null";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  REQUIRE(is.good());
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

fs::path fresh_dir(const std::string& tag) {
  const fs::path dir = fs::temp_directory_path() /
                       ("transco_test_" + tag + "_" + std::to_string(getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("state subcommand dumps the recursion state") {
  const fs::path dir = fresh_dir("state");
  REQUIRE(run_cli("--out " + dir.string() + " state --ground --nmax 2") == 0);
  const json j = json::parse(slurp(dir / "state.json"));
  CHECK(j.at("n_cut").get<int>() == 2);
  REQUIRE(j.at("amps").size() == 3);
  auto prob = [&](int n) {
    const double re = j["amps"][n][0].get<double>();
    const double im = j["amps"][n][1].get<double>();
    return re * re + im * im;
  };
  CHECK(prob(0) == doctest::Approx(0.40142497).epsilon(1e-6));
  CHECK(prob(1) == doctest::Approx(0.50000000).epsilon(1e-6));
  CHECK(prob(2) == doctest::Approx(0.09857503).epsilon(1e-6));
  CHECK(j.at("meta").at("spec") == "ground");
  CHECK(j.at("meta").at("n_max").get<int>() == 2);
  fs::remove_all(dir);
}

TEST_CASE("invalid state flags exit with the usage code") {
  const fs::path dir = fresh_dir("usage");
  CHECK(run_cli("--out " + dir.string() + " state --ground --nmax 0") == 2);
  CHECK(run_cli("--out " + dir.string() + " state --nmax 3") == 2);
  CHECK(run_cli("--out " + dir.string() +
                " state --ground --excited --nmax 3") == 2);
  CHECK(run_cli("state --bogus-flag") == 2);
  CHECK(run_cli("") == 2);
  fs::remove_all(dir);
}

TEST_CASE("verify exits zero at defaults and nonzero below precision") {
  const fs::path dir = fresh_dir("verify");
  CHECK(run_cli("--out " + dir.string() + " verify") == 0);
  const json report = json::parse(slurp(dir / "verify_report.json"));
  CHECK(report.at("all_pass").get<bool>());
  CHECK(report.at("checks").size() >= 20);

  CHECK(run_cli("--out " + dir.string() + " --tol 1e-16 verify") == 1);
  const json bad = json::parse(slurp(dir / "verify_report.json"));
  CHECK_FALSE(bad.at("all_pass").get<bool>());
  fs::remove_all(dir);
}

TEST_CASE("fig 1 distributions are normalized") {
  const fs::path dir = fresh_dir("fig1");
  REQUIRE(run_cli("--out " + dir.string() + " fig 1") == 0);
  int files = 0;
  for (const auto& entry : fs::directory_iterator(dir)) {
    ++files;
    std::istringstream is(slurp(entry.path()));
    std::string line;
    std::getline(is, line);
    CHECK(line == "n,probability");
    double sum = 0.0;
    while (std::getline(is, line))
      sum += std::stod(line.substr(line.find(',') + 1));
    CHECK(std::abs(sum - 1.0) <= 1e-9);
  }
  CHECK(files == 8);  // four sizes, recursion state and matched coherent each
  fs::remove_all(dir);
}

TEST_CASE("fig 3 reaches machine precision at the family times") {
  const fs::path dir = fresh_dir("fig3");
  REQUIRE(run_cli("--out " + dir.string() + " fig 3") == 0);
  std::istringstream is(slurp(dir / "fig3_truncated.csv"));
  std::string line;
  std::getline(is, line);
  int exact_rows = 0;
  double prev_x = 0.0;
  while (std::getline(is, line)) {
    const size_t comma = line.find(',');
    const double x = std::stod(line.substr(0, comma));
    const double y = std::stod(line.substr(comma + 1));
    CHECK(x > prev_x);  // strictly increasing rows
    prev_x = x;
    CHECK(y <= 3e-3);
    if (y <= 1e-10) ++exact_rows;
  }
  CHECK(exact_rows >= 150);  // the merged pi/sqrt(n) grid points
  fs::remove_all(dir);
}

TEST_CASE("catalyze emits a consistent trace") {
  const fs::path dir = fresh_dir("cat");
  REQUIRE(run_cli("--out " + dir.string() +
                  " catalyze --nbar 4 --events 3") == 0);
  const json j = json::parse(slurp(dir / "catalysis.json"));
  REQUIRE(j.at("events").size() == 3);
  CHECK(1.0 - j["events"][0]["p_event"].get<double>() <= 1e-9);
  double cum = 1.0;
  for (const auto& ev : j["events"]) {
    cum *= ev.at("p_event").get<double>();
    CHECK(ev.at("p_cumulative").get<double>() ==
          doctest::Approx(cum).epsilon(1e-15));
  }
  const std::string csv = slurp(dir / "catalysis.csv");
  CHECK(csv.rfind("event,t_star,p_event,p_cumulative\n", 0) == 0);
  fs::remove_all(dir);
}

TEST_CASE("catalyze keeps 90% success over 50 events at nbar 25") {
  const fs::path dir = fresh_dir("cat25");
  REQUIRE(run_cli("--out " + dir.string() +
                  " catalyze --nbar 25 --events 50") == 0);
  const json j = json::parse(slurp(dir / "catalysis.json"));
  REQUIRE(j.at("events").size() == 50);
  CHECK(j["events"].back()["p_cumulative"].get<double>() >= 0.9);
  fs::remove_all(dir);
}

TEST_CASE("outputs are byte-identical across runs") {
  const fs::path a = fresh_dir("det_a");
  const fs::path b = fresh_dir("det_b");
  for (const fs::path& dir : {a, b}) {
    REQUIRE(run_cli("--out " + dir.string() +
                    " catalyze --nbar 6 --events 4") == 0);
    REQUIRE(run_cli("--out " + dir.string() + " state --excited --nmin 3 "
                    "--nmax 15") == 0);
  }
  for (const char* name : {"catalysis.csv", "catalysis.json", "state.json"})
    CHECK(slurp(a / name) == slurp(b / name));
  fs::remove_all(a);
  fs::remove_all(b);
}
