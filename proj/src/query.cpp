#include "hcit/query.hpp"

#include <algorithm>
#include <set>

#include "hcit/error.hpp"

namespace hcit {

std::vector<int> route_query(const IndexTree& tree, const Rect& region) {
  std::vector<int> matched;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int index = stack.back();
    stack.pop_back();
    const TreeNode& n = tree.nodes[static_cast<size_t>(index)];
    if (n.kind != TreeKind::base && !cell_overlaps_region(n.bbox, region))
      continue;
    if (n.kind == TreeKind::cell) {
      matched.push_back(n.id);
      continue;
    }
    for (int child : n.children) stack.push_back(child);
  }
  std::sort(matched.begin(), matched.end());
  return matched;
}

QueryAnswer answer_query(const RegionQuery& query, const IndexTree& tree,
                         const Field& field,
                         const std::vector<TickState>& states, bool exact) {
  if (!(query.region.x1 > query.region.x0) ||
      !(query.region.y1 > query.region.y0))
    throw Error(ErrorKind::query, "query region must have positive area");
  if (query.t_start > query.t_end)
    throw Error(ErrorKind::query, "query window start exceeds its end");
  if (query.t_start < 0 || query.t_end >= static_cast<int>(states.size()))
    throw Error(ErrorKind::query, "query window outside simulated ticks");

  QueryAnswer answer;
  answer.cells = route_query(tree, query.region);
  if (answer.cells.empty())
    throw Error(ErrorKind::query, "no cells matched the query region");

  std::vector<double> collected;
  if (exact) {
    for (int t = query.t_start; t <= query.t_end; ++t) {
      const TickState& st = states[static_cast<size_t>(t)];
      for (int cell : answer.cells)
        for (int node : field.cell(cell).members) {
          auto it = st.sensed.find(node);
          if (it != st.sensed.end()) collected.push_back(it->second);
        }
    }
  } else {
    std::set<int> entities;
    for (int cell : answer.cells) entities.insert(tree.cell_owner.at(cell));
    for (int t = query.t_start; t <= query.t_end; ++t) {
      const TickState& st = states[static_cast<size_t>(t)];
      for (int entity : entities) {
        auto it = st.base_values.find(entity);
        if (it != st.base_values.end()) collected.push_back(it->second);
      }
    }
  }
  if (collected.empty())
    throw Error(ErrorKind::query, "no stored values in the query window");
  answer.value = filter_at_head(collected, query.fn);
  return answer;
}

std::vector<std::pair<int, double>> accuracy_sweep(
    const ScenarioConfig& cfg, const std::vector<int>& counts,
    const TraceTable& trace) {
  std::vector<std::pair<int, double>> out;
  for (int count : counts) {
    if (count < cfg.cluster_bounds.min_clusters ||
        count > cfg.cluster_bounds.max_clusters)
      throw Error(ErrorKind::config,
                  "sweep count " + std::to_string(count) + " outside [" +
                      std::to_string(cfg.cluster_bounds.min_clusters) + ", " +
                      std::to_string(cfg.cluster_bounds.max_clusters) + "]");
    ScenarioConfig run_cfg = cfg;
    run_cfg.target_clusters = count;
    SimResult result = run_scenario(run_cfg, trace);
    double sum = 0.0;
    for (const auto& [tick, err] : result.accuracy) sum += err;
    double mean = result.accuracy.empty()
                      ? 0.0
                      : sum / static_cast<double>(result.accuracy.size());
    out.push_back({count, mean});
  }
  return out;
}

}  // namespace hcit
