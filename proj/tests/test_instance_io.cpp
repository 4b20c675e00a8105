#include <doctest.h>

#include "ppp/errors.hpp"
#include "ppp/instance.hpp"
#include "ppp/matpower.hpp"
#include "support/test_support.hpp"

using namespace ppp;
using ppp::test::read_file;

TEST_CASE("small instance loads") {
  const std::string text = R"({
    "buses": [1, 2],
    "lines": [[1, 2]],
    "M_I": [1], "c_I": {"1": 5},
    "M_L": [],  "c_L": {},
    "M_P": [2], "c_P": {"2": 3}
  })";
  Instance inst = load_instance(text);
  CHECK(inst.grid.bus_count() == 2);
  CHECK(inst.config.measured_injections == std::vector<int>{0});
  CHECK(inst.config.cost_injection.at(0) == 5);
  CHECK(inst.config.cost_pmu.at(1) == 3);
}

TEST_CASE("cost key outside its measured set is rejected") {
  const std::string text = R"({
    "buses": [1, 2],
    "lines": [[1, 2]],
    "M_I": [1], "c_I": {"2": 5},
    "M_P": [2], "c_P": {"2": 3}
  })";
  CHECK_THROWS_AS(load_instance(text), ValidationError);
}

TEST_CASE("unknown references are rejected") {
  CHECK_THROWS_AS(load_instance(R"({"buses":[1],"lines":[[1,9]]})"),
                  ValidationError);
  CHECK_THROWS_AS(
      load_instance(R"({"buses":[1,2],"lines":[[1,2]],"M_L":[4]})"),
      ValidationError);
  CHECK_THROWS_AS(load_instance("{"), ParseError);
}

TEST_CASE("save then load is the identity on the 9-bus instance") {
  Grid grid = parse_matpower(read_file(std::string(PPP_DATA_DIR) + "/case9.m"));
  Instance inst{grid, ppp::test::case9_unitcost(grid)};
  std::string first = save_instance(inst);
  Instance reloaded = load_instance(first);
  CHECK(reloaded.grid.bus_count() == inst.grid.bus_count());
  CHECK(reloaded.grid.line_count() == inst.grid.line_count());
  CHECK(reloaded.config.cost_injection == inst.config.cost_injection);
  // Canonical text is byte-stable.
  CHECK(save_instance(reloaded) == first);
}

TEST_CASE("canonicalization remaps line data") {
  // Lines given out of order; index-keyed data must follow the sort.
  Instance inst{Grid({1, 2, 3}, {{2, 3}, {1, 2}}, {{0, Rational(1, 4)}}),
                MeasurementConfig{}};
  inst.config.measured_lines = {0};
  inst.config.cost_line = {{0, 7}};
  std::string text = save_instance(inst);
  Instance reloaded = load_instance(text);
  // The {2,3} line is index 1 after sorting.
  CHECK(reloaded.config.measured_lines == std::vector<int>{1});
  CHECK(reloaded.config.cost_line.at(1) == 7);
  CHECK(reloaded.grid.reactance().count(1) == 1);
  CHECK(save_instance(reloaded) == text);
}

TEST_CASE("plan json round-trip with parallel lines") {
  Grid grid({1, 2, 3}, {{1, 2}, {1, 2}, {2, 3}});
  MeasurementConfig config = ppp::test::full_config(grid);
  ProtectionPlan plan;
  plan.protected_lines = {0, 1};
  plan.protected_pmus = {0};
  std::string text = plan_to_json(grid, plan);
  ProtectionPlan back = plan_from_json(grid, config, text);
  CHECK(back.protected_lines == plan.protected_lines);
  CHECK(back.protected_pmus == plan.protected_pmus);
}

TEST_CASE("plan json rejects unprotectable lines") {
  Grid grid({1, 2, 3}, {{1, 2}, {2, 3}});
  MeasurementConfig config;  // nothing measured
  CHECK_THROWS_AS(
      plan_from_json(grid, config, R"({"protected_lines":[[1,2]]})"),
      ValidationError);
}
