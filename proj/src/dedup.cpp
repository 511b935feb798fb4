#include "hcit/dedup.hpp"

#include <limits>

#include "hcit/error.hpp"

namespace hcit {

CoverageMap detect_overlaps(const Field& field,
                            const std::vector<Cluster>& clusters,
                            double coverage_radius) {
  if (!(coverage_radius > 0.0))
    throw Error(ErrorKind::config, "coverage_radius must be positive");

  CoverageMap cm;
  cm.coverage_radius = coverage_radius;
  for (const SensorNode& node : field.nodes) {
    if (!node.alive) continue;
    std::vector<int> covering;
    for (const Cluster& c : clusters)
      if (distance(node.position, c.centroid) <= coverage_radius)
        covering.push_back(c.id);
    if (covering.empty())
      throw Error(ErrorKind::simulation,
                  "node " + std::to_string(node.id) +
                      " is not covered by any cluster");
    cm.covers[node.id] = std::move(covering);
  }
  return cm;
}

std::vector<int> overlap_set(const CoverageMap& coverage) {
  std::vector<int> out;
  for (const auto& [node, clusters] : coverage.covers)
    if (clusters.size() >= 2) out.push_back(node);
  return out;
}

std::map<int, int> assign_exclusive(const CoverageMap& coverage,
                                    const std::vector<Cluster>& clusters,
                                    const Field& field) {
  std::map<int, const Cluster*> by_id;
  for (const Cluster& c : clusters) by_id[c.id] = &c;

  std::map<int, int> assignment;
  for (const auto& [node_id, covering] : coverage.covers) {
    const SensorNode& node = field.node(node_id);
    int best = -1;
    double best_d = std::numeric_limits<double>::max();
    for (int cid : covering) {
      auto it = by_id.find(cid);
      if (it == by_id.end())
        throw Error(ErrorKind::simulation,
                    "coverage refers to unknown cluster " +
                        std::to_string(cid));
      double d = distance(node.position, it->second->centroid);
      if (d < best_d) {  // covering ascends by id, so ties keep the lowest
        best_d = d;
        best = cid;
      }
    }
    assignment[node_id] = best;
  }
  return assignment;
}

}  // namespace hcit
