#include <sstream>

#include "doctest.h"
#include "hcit/error.hpp"
#include "hcit/report.hpp"
#include "hcit/scenario.hpp"
#include "hcit/trace.hpp"
#include "helpers.hpp"

using namespace hcit;

namespace {

std::string minimal_config_text() {
  return "field_width = 100\n"
         "field_height = 50\n"
         "cell_size = 10\n"
         "base_x = 1\n"
         "base_y = 2\n"
         "min_clusters = 1\n"
         "max_clusters = 4\n"
         "target_clusters = 2\n"
         "split_threshold = 8\n"
         "coverage_radius = 30\n"
         "comm_range = 60\n"
         "ticks = 5\n";
}

}  // namespace

TEST_CASE("config parsing applies keys and defaults") {
  std::istringstream in(minimal_config_text() +
                        "delta = 0.5\nnode_energy.3 = 240\n");
  ScenarioConfig cfg = parse_config(in);
  CHECK(cfg.bounds.x1 == 100.0);
  CHECK(cfg.bounds.y1 == 50.0);
  CHECK(cfg.cluster_bounds.max_clusters == 4);
  CHECK(cfg.delta == 0.5);
  CHECK(cfg.unit_cost == 30.0);  // default
  CHECK(cfg.dedup);              // default
  CHECK(cfg.node_energy.at(3) == 240.0);
}

TEST_CASE("unknown keys are rejected by name") {
  std::istringstream in(minimal_config_text() + "cel_size = 10\n");
  CHECK_THROWS_WITH_AS(parse_config(in), "unknown config key 'cel_size'",
                       Error);
}

TEST_CASE("missing required keys are rejected by name") {
  std::istringstream in("field_width = 100\n");
  try {
    parse_config(in);
    FAIL("expected a config error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::config);
    CHECK(std::string(e.what()).find("field_height") != std::string::npos);
  }
}

TEST_CASE("bad values name the offending key") {
  std::istringstream in(minimal_config_text() + "delta = warm\n");
  try {
    parse_config(in);
    FAIL("expected a config error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("delta") != std::string::npos);
  }
}

TEST_CASE("the emitted config re-parses to an equivalent config") {
  std::istringstream in(minimal_config_text() +
                        "delta = 0.1\nhead_policy = rotation\nseed = 99\n"
                        "node_energy.7 = 12.5\nnote = demo run\n");
  ScenarioConfig cfg = parse_config(in);
  std::istringstream again(emit_config(cfg));
  ScenarioConfig cfg2 = parse_config(again);
  CHECK(emit_config(cfg) == emit_config(cfg2));
  CHECK(cfg2.delta == cfg.delta);
  CHECK(cfg2.seed == cfg.seed);
  CHECK(cfg2.policy.kind == cfg.policy.kind);
  CHECK(cfg2.node_energy == cfg.node_energy);
  CHECK(cfg2.note == cfg.note);
}

TEST_CASE("trace parsing requires the exact header") {
  std::istringstream in("node,x,y,t,value\n0,1,1,0,5\n");
  CHECK_THROWS_AS(parse_trace(in), Error);
}

TEST_CASE("traces must cover every node at every tick") {
  std::istringstream in(
      "node_id,x,y,t,value\n"
      "0,1,1,0,5\n"
      "0,1,1,1,6\n"
      "1,2,2,0,7\n");
  CHECK_THROWS_AS(parse_trace(in), Error);
}

TEST_CASE("inconsistent positions and duplicate readings are rejected") {
  std::istringstream moved(
      "node_id,x,y,t,value\n"
      "0,1,1,0,5\n"
      "0,2,1,1,6\n");
  CHECK_THROWS_AS(parse_trace(moved), Error);

  std::istringstream dup(
      "node_id,x,y,t,value\n"
      "0,1,1,0,5\n"
      "0,1,1,0,6\n");
  CHECK_THROWS_AS(parse_trace(dup), Error);
}

TEST_CASE("a well-formed trace parses into per-node series") {
  std::istringstream in(
      "node_id,x,y,t,value\n"
      "1,2.5,3.5,1,6.25\n"
      "1,2.5,3.5,0,5.0\n"
      "0,1,1,0,2\n"
      "0,1,1,1,3\n");
  TraceTable t = parse_trace(in);
  CHECK(t.ticks == 2);
  CHECK(t.node_ids == std::vector<int>{0, 1});
  CHECK(t.value(1, 0) == 5.0);
  CHECK(t.value(1, 1) == 6.25);
  CHECK(t.positions.at(1).x == 2.5);
}

TEST_CASE("report totals equal the sum of the energy series") {
  auto cfg = test_helpers::base_config();
  cfg.ticks = 3;
  auto trace = test_helpers::make_trace({{0, {{5, 5}, {1, 2, 3}}},
                                         {1, {{6, 5}, {4, 5, 6}}}});
  SimResult r = run_scenario(cfg, trace);
  RunReport report = make_report(cfg, r);
  double sum = 0.0;
  for (const auto& [tick, charge] : report.energy_series) sum += charge;
  CHECK(report.energy_total == doctest::Approx(sum));

  // The [config] section of the rendered report is itself a valid config.
  std::string text = render_report(report);
  size_t start = text.find("[config]\n") + 9;
  size_t end = text.find("[heads]");
  std::istringstream cfg_in(text.substr(start, end - start));
  ScenarioConfig echoed = parse_config(cfg_in);
  CHECK(emit_config(echoed) == emit_config(cfg));
}
