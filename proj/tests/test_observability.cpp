#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ppp/errors.hpp"
#include "ppp/matpower.hpp"
#include "ppp/observability.hpp"
#include "ppp/rank_check.hpp"
#include "support/test_support.hpp"

using namespace ppp;
using ppp::test::read_file;

namespace {

Grid case9() {
  return parse_matpower(read_file(std::string(PPP_DATA_DIR) + "/case9.m"));
}

/// The study layout on the 9-bus system: zero-injections protected at
/// buses 4, 6, 8 and PMUs at 4 and 7, no protected lines.
ProtectionPlan study_plan(const Grid& g) {
  ProtectionPlan plan;
  plan.protected_injections = {g.bus_index(4), g.bus_index(6), g.bus_index(8)};
  std::sort(plan.protected_injections.begin(), plan.protected_injections.end());
  plan.protected_pmus = {g.bus_index(4), g.bus_index(7)};
  std::sort(plan.protected_pmus.begin(), plan.protected_pmus.end());
  return plan;
}

MeasurementConfig measure_everything(const Grid& g) {
  return ppp::test::full_config(g);
}

}  // namespace

TEST_CASE("augmented graph construction") {
  Grid g({1, 2, 3}, {{1, 2}, {2, 3}});
  ProtectionPlan none;
  CHECK(build_augmented(g, none).pmu_edges.empty());

  ProtectionPlan mid;
  mid.protected_pmus = {1};
  auto aug = build_augmented(g, mid);
  CHECK(aug.root == 3);
  CHECK(aug.covered == std::vector<int>{0, 1, 2});
  CHECK(aug.pmu_edges.size() == 3);

  Grid nine = case9();
  auto aug9 = build_augmented(nine, study_plan(nine));
  CHECK(aug9.pmu_edges.size() == 7);
}

TEST_CASE("9-bus study layout is observable") {
  Grid g = case9();
  auto witness = topological_witness(g, study_plan(g));
  REQUIRE(witness.has_value());
  CHECK(verify_g(g, study_plan(g), *witness));
}

TEST_CASE("no protected pmu means not observable") {
  std::mt19937_64 rng(21);
  for (int iter = 0; iter < 50; ++iter) {
    Grid g = ppp::test::random_graph(rng, 7);
    MeasurementConfig config = measure_everything(g);
    ProtectionPlan plan = ppp::test::random_plan(rng, config);
    plan.protected_pmus.clear();
    CHECK_FALSE(is_topologically_observable(g, plan));
  }
}

TEST_CASE("duplicated line measurement cannot reach a hidden bus") {
  // Path 1-2-3-4, PMU zone {1,2}, protected line {3,4} and protected
  // injection at 4: the injection can only re-measure the protected line,
  // so bus 3 stays unreachable.
  Grid g({1, 2, 3, 4}, {{1, 2}, {2, 3}, {3, 4}});
  ProtectionPlan plan;
  plan.protected_injections = {3};
  plan.protected_lines = {2};
  plan.protected_pmus = {0};
  CHECK(brute_force_g_search(g, plan) == std::nullopt);
  CHECK_FALSE(is_topologically_observable(g, plan));
}

TEST_CASE("brute force degenerate cases") {
  Grid single({1}, {});
  ProtectionPlan pmu_only;
  pmu_only.protected_pmus = {0};
  auto found = brute_force_g_search(single, pmu_only);
  REQUIRE(found.has_value());
  CHECK(found->empty());

  ProtectionPlan nothing;
  CHECK(brute_force_g_search(single, nothing) == std::nullopt);
}

TEST_CASE("brute force refuses oversized searches") {
  // A 14-bus hub fan-out: one injection with 13 parallel candidate slots
  // stays fine; push the product over 10^6 with several high-degree hubs.
  std::vector<BusId> buses;
  std::vector<std::pair<BusId, BusId>> lines;
  for (BusId b = 1; b <= 8; ++b) buses.push_back(b);
  for (BusId a = 1; a <= 8; ++a) {
    for (BusId b = a + 1; b <= 8; ++b) {
      lines.emplace_back(a, b);  // K8: degree 7
      lines.emplace_back(a, b);  // doubled: degree 14
    }
  }
  Grid g(buses, lines);
  ProtectionPlan plan;
  for (int i = 0; i < 8; ++i) plan.protected_injections.push_back(i);
  plan.protected_pmus = {0};
  // 14^8 > 10^6.
  CHECK_THROWS_AS(brute_force_g_search(g, plan), SizeError);
}

TEST_CASE("witness returned by the oracle always verifies") {
  std::mt19937_64 rng(22);
  int observable = 0;
  for (int iter = 0; iter < 300; ++iter) {
    Grid g = ppp::test::random_graph(rng, 8);
    MeasurementConfig config = measure_everything(g);
    ProtectionPlan plan = ppp::test::random_plan(rng, config);
    auto witness = topological_witness(g, plan);
    if (witness) {
      ++observable;
      CHECK(verify_g(g, plan, *witness));
    }
  }
  CHECK(observable > 20);  // the sample must exercise the positive path
}

TEST_CASE("verify_g rejects bad witnesses") {
  Grid g({1, 2, 3}, {{1, 2}, {2, 3}});
  ProtectionPlan plan;
  plan.protected_injections = {0};
  plan.protected_pmus = {0, 1, 2};
  CHECK(verify_g(g, plan, {}));          // coverage alone spans
  CHECK(verify_g(g, plan, {{0, 0}}));    // incident line
  CHECK_FALSE(verify_g(g, plan, {{0, 1}}));  // non-incident line
  CHECK_FALSE(verify_g(g, plan, {{1, 1}}));  // unprotected injection
}

TEST_CASE("oracle agrees with brute force on random instances") {
  std::mt19937_64 rng(23);
  for (int iter = 0; iter < 400; ++iter) {
    Grid g = ppp::test::random_graph(rng, 8);
    MeasurementConfig config = measure_everything(g);
    ProtectionPlan plan = ppp::test::random_plan(rng, config);
    auto fast = topological_witness(g, plan);
    auto slow = brute_force_g_search(g, plan);
    CHECK(fast.has_value() == slow.has_value());
  }
}

TEST_CASE("observability is monotone in the plan") {
  std::mt19937_64 rng(24);
  for (int iter = 0; iter < 300; ++iter) {
    Grid g = ppp::test::random_graph(rng, 8);
    MeasurementConfig config = measure_everything(g);
    ProtectionPlan plan = ppp::test::random_plan(rng, config, 40);
    if (!is_topologically_observable(g, plan)) continue;
    ProtectionPlan bigger = ppp::test::random_plan(rng, config, 40);
    auto merge = [](std::vector<int> a, const std::vector<int>& b) {
      for (int v : b) a.push_back(v);
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
      return a;
    };
    bigger.protected_injections =
        merge(plan.protected_injections, bigger.protected_injections);
    bigger.protected_lines = merge(plan.protected_lines, bigger.protected_lines);
    bigger.protected_pmus = merge(plan.protected_pmus, bigger.protected_pmus);
    CHECK(is_topologically_observable(g, bigger));
  }
}

TEST_CASE("no-pmu variant decides plain topological observability") {
  Grid path2({1, 2}, {{1, 2}});
  CHECK(is_observable_no_pmu(path2, {}, {0}));
  Grid isolated({1, 2}, {});
  CHECK_FALSE(is_observable_no_pmu(isolated, {}, {}));

  // Random trees with every line protected are always observable.
  std::mt19937_64 rng(25);
  for (int iter = 0; iter < 50; ++iter) {
    Grid tree = ppp::test::random_connected_graph(rng, 6, 0);
    std::vector<int> all_lines(tree.line_count());
    for (int e = 0; e < tree.line_count(); ++e) all_lines[e] = e;
    CHECK(is_observable_no_pmu(tree, {}, all_lines));
  }
}

TEST_CASE("witnesses are deterministic") {
  Grid g = case9();
  auto a = topological_witness(g, study_plan(g));
  auto b = topological_witness(g, study_plan(g));
  REQUIRE(a.has_value());
  CHECK(*a == *b);
}
