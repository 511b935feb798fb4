#pragma once

#include <map>
#include <utility>
#include <vector>

#include "hcit/scenario.hpp"
#include "hcit/sim.hpp"
#include "hcit/trace.hpp"

namespace test_helpers {

inline hcit::SensorNode make_node(int id, double x, double y, double energy,
                                  double range = 1.0) {
  hcit::SensorNode n;
  n.id = id;
  n.position = {x, y};
  n.residual_energy = energy;
  n.alive = energy > 0.0;
  n.transmission_range = range;
  return n;
}

// Builds an in-memory trace; every node needs the same number of readings.
inline hcit::TraceTable make_trace(
    const std::map<int, std::pair<hcit::Point, std::vector<double>>>& series) {
  hcit::TraceTable t;
  for (const auto& [id, entry] : series) {
    t.node_ids.push_back(id);
    t.positions[id] = entry.first;
    t.values[id] = entry.second;
    t.ticks = static_cast<int>(entry.second.size());
  }
  return t;
}

// A permissive scenario skeleton; tests override what they exercise.
inline hcit::ScenarioConfig base_config() {
  hcit::ScenarioConfig cfg;
  cfg.bounds = {0.0, 0.0, 100.0, 100.0};
  cfg.cell_size = 10.0;
  cfg.base_station = {50.0, 50.0};
  cfg.cluster_bounds = {1, 100, 1000000};
  cfg.target_clusters = 1;
  cfg.policy = {hcit::HeadPolicyKind::weighted_density_energy, 5.0};
  cfg.coverage_radius = 1000.0;
  cfg.comm_range = 1000.0;
  cfg.delta = 0.0;
  cfg.unit_cost = 30.0;
  cfg.dedup = true;
  cfg.seed = 1;
  cfg.ticks = 1;
  cfg.aggregate = hcit::Aggregate::avg;
  cfg.initial_energy = 1.0e9;
  return cfg;
}

}  // namespace test_helpers
