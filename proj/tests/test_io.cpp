#include <cmath>
#include <sstream>

#include <doctest.h>

#include "transco/io.hpp"

using namespace transco;
using nlohmann::json;

TEST_CASE("field state JSON round trip") {
  const FieldState s = make_coherent(1.7, 0.4, coherent_min_cutoff(1.7));
  const json j = field_to_json(s);
  CHECK(j.at("n_cut").get<int>() == s.n_cut());
  CHECK(j.at("amps").size() == s.amps.size());

  // serialize through text as the CLI does
  const FieldState back = field_from_json(json::parse(j.dump()));
  REQUIRE(back.amps.size() == s.amps.size());
  for (size_t n = 0; n < s.amps.size(); ++n)
    CHECK(std::abs(back.amps[n] - s.amps[n]) <= 1e-15);
}

TEST_CASE("field JSON validation") {
  CHECK_THROWS_AS(field_from_json(json{{"amps", json::array()}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      field_from_json(json{{"n_cut", 2}, {"amps", {{1.0, 0.0}}}}),
      std::invalid_argument);
  // badly denormalized input is rejected
  CHECK_THROWS_AS(
      field_from_json(json{{"n_cut", 0}, {"amps", {{2.0, 0.0}}}}),
      std::invalid_argument);
}

TEST_CASE("joint state JSON round trip") {
  const FieldState f = make_coherent(1.2, 0.0, coherent_min_cutoff(1.2));
  const JointState s = joint_product(0.6, cplx{0.0, 0.8}, f, {1.0, 2.5});
  const json j = joint_to_json(s);
  CHECK(j.at("omega_ratio").get<double>() == doctest::Approx(2.5));
  const JointState back = joint_from_json(json::parse(j.dump()));
  REQUIRE(back.g.size() == s.g.size());
  for (size_t n = 0; n < s.g.size(); ++n) {
    CHECK(std::abs(back.g[n] - s.g[n]) <= 1e-15);
    CHECK(std::abs(back.e[n] - s.e[n]) <= 1e-15);
  }
  CHECK(back.params.omega == doctest::Approx(2.5));

  CHECK_THROWS_AS(joint_from_json(json{{"omega_ratio", 0.0},
                                       {"g_amps", {{1.0, 0.0}}},
                                       {"e_amps", json::array()}}),
                  std::invalid_argument);
}

TEST_CASE("trace CSV format") {
  const CatalysisTrace trace =
      run_catalysis(build_ground(ground_spec(0, 0, 9, {})), 3, {});
  std::ostringstream os;
  write_trace_csv(trace, os);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  CHECK(line == "event,t_star,p_event,p_cumulative");
  int rows = 0;
  while (std::getline(is, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 3);
  }
  CHECK(rows == 3);

  const json j = trace_to_json(trace);
  CHECK(j.at("events").size() == 3);
  CHECK(j.at("aborted").get<bool>() == false);
  CHECK(j.at("final_field").contains("amps"));
}

TEST_CASE("table CSV uses the labels and 17 significant digits") {
  SweepTable table;
  table.x_label = "omega0_t";
  table.y_label = "one_minus_C";
  table.x = {0.1, 0.2};
  table.y = {1.0 / 3.0, 2.0 / 3.0};
  std::ostringstream os;
  write_table_csv(table, os);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  CHECK(line == "omega0_t,one_minus_C");
  std::getline(is, line);
  const std::string y0 = line.substr(line.find(',') + 1);
  CHECK(std::stod(y0) == 1.0 / 3.0);  // round trips exactly
  CHECK(y0.size() >= 17);
}

TEST_CASE("format_double round trips") {
  for (double v : {0.1, 1.0 / 3.0, 3.141592653589793, 1e-300, 24.5025})
    CHECK(std::stod(format_double(v)) == v);
}
