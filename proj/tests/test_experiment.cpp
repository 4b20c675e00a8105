#include <doctest.h>

#include "ppp/errors.hpp"
#include "ppp/experiment.hpp"
#include "support/test_support.hpp"

using namespace ppp;

TEST_CASE("star graph with forced costs pins the pmu rule") {
  // K_{1,3} with every line cost forced to 10: the center PMU costs
  // ceil(0.8 * 30) = 24.
  Grid star({1, 2, 3, 4}, {{1, 2}, {1, 3}, {1, 4}});
  ExperimentProfile profile;
  profile.cost_low = 10;
  profile.cost_high = 10;
  profile.zero_injection_fraction = Rational(0);
  MeasurementConfig config = generate_experiment(star, profile);
  CHECK(config.cost_pmu.at(star.bus_index(1)) == 24);
  for (BusId leaf : {2, 3, 4}) {
    CHECK(config.cost_pmu.at(star.bus_index(leaf)) == 8);
  }
}

TEST_CASE("zero-injection count rounds to nearest") {
  std::mt19937_64 rng(5);
  Grid g = ppp::test::random_connected_graph(rng, 9);
  ExperimentProfile profile;
  profile.rng_seed = 42;
  MeasurementConfig config = generate_experiment(g, profile);
  int zeros = 0;
  for (const auto& [bus, cost] : config.cost_injection) zeros += cost == 0;
  CHECK(zeros == 1);  // round(0.1 * 9) = 1
  CHECK(config.measured_injections.size() == 9);
  CHECK(config.pmu_buses.size() == 9);
  CHECK(config.measured_lines.size() == static_cast<std::size_t>(g.line_count()));
}

TEST_CASE("same seed reproduces the configuration") {
  std::mt19937_64 rng(77);
  Grid g = ppp::test::random_connected_graph(rng, 12);
  ExperimentProfile profile;
  profile.rng_seed = 123;
  MeasurementConfig a = generate_experiment(g, profile);
  MeasurementConfig b = generate_experiment(g, profile);
  CHECK(a.cost_injection == b.cost_injection);
  CHECK(a.cost_line == b.cost_line);
  CHECK(a.cost_pmu == b.cost_pmu);
}

TEST_CASE("toggling line flows changes only the measured line set") {
  std::mt19937_64 rng(78);
  Grid g = ppp::test::random_connected_graph(rng, 10);
  ExperimentProfile with_lines;
  with_lines.rng_seed = 9001;
  ExperimentProfile without = with_lines;
  without.line_flows_enabled = false;
  MeasurementConfig a = generate_experiment(g, with_lines);
  MeasurementConfig b = generate_experiment(g, without);
  CHECK(b.measured_lines.empty());
  CHECK(b.cost_line.empty());
  CHECK(a.measured_lines.size() == static_cast<std::size_t>(g.line_count()));
  CHECK(a.cost_injection == b.cost_injection);
  CHECK(a.cost_pmu == b.cost_pmu);
}

TEST_CASE("profile preconditions") {
  Grid g({1, 2}, {{1, 2}});
  ExperimentProfile bad;
  bad.cost_low = 5;
  bad.cost_high = 1;
  CHECK_THROWS_AS(generate_experiment(g, bad), PreconditionError);
  ExperimentProfile frac;
  frac.zero_injection_fraction = Rational(3, 2);
  CHECK_THROWS_AS(generate_experiment(g, frac), PreconditionError);
}
