#pragma once

#include <vector>

#include "hcit/index_tree.hpp"
#include "hcit/sim.hpp"

namespace hcit {

struct RegionQuery {
  Rect region;  // closed query rectangle
  int t_start = 0;
  int t_end = 0;
  Aggregate fn = Aggregate::avg;
};

// Leaf cells whose bounds intersect the region, found by descending the tree
// and pruning disjoint subtrees.
std::vector<int> route_query(const IndexTree& tree, const Rect& region);

struct QueryAnswer {
  double value = 0.0;
  std::vector<int> cells;
};

// Combines the stored per-tick head values of the tree children covering the
// matched leaves. With exact = true the raw sensed readings of the matched
// cells are aggregated instead, bypassing the nested averaging.
QueryAnswer answer_query(const RegionQuery& query, const IndexTree& tree,
                         const Field& field,
                         const std::vector<TickState>& states,
                         bool exact = false);

// Runs the scenario once per cluster count and reports the mean absolute
// difference between the base-station aggregate and the ground truth.
std::vector<std::pair<int, double>> accuracy_sweep(
    const ScenarioConfig& cfg, const std::vector<int>& counts,
    const TraceTable& trace);

}  // namespace hcit
