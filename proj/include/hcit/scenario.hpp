#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>

#include "hcit/cluster.hpp"
#include "hcit/election.hpp"
#include "hcit/geometry.hpp"

namespace hcit {

enum class Aggregate { avg, min, max };

const char* aggregate_name(Aggregate a);

struct ScenarioConfig {
  Rect bounds{0.0, 0.0, 0.0, 0.0};
  double cell_size = 0.0;
  Point base_station;
  ClusterBounds cluster_bounds;
  int target_clusters = 1;
  HeadPolicy policy;
  double coverage_radius = 0.0;
  double comm_range = 0.0;
  double delta = 0.0;
  double unit_cost = 30.0;
  bool dedup = true;
  std::uint64_t seed = 0;
  int ticks = 1;
  Aggregate aggregate = Aggregate::avg;
  double initial_energy = 1000.0;
  std::map<int, double> node_energy;  // per-node overrides
  std::string note;
};

// Flat `key = value` text. Unknown keys and malformed values are rejected
// with the offending key named in the message.
ScenarioConfig parse_config(std::istream& in);
ScenarioConfig load_config(const std::string& path);
std::string emit_config(const ScenarioConfig& cfg);

// Exact-enough decimal formatting: shortest representation that parses back
// to the same double.
std::string format_double(double v);

}  // namespace hcit
