#pragma once

#include <map>
#include <vector>

#include "hcit/cluster.hpp"
#include "hcit/field.hpp"

namespace hcit {

struct CoverageMap {
  double coverage_radius = 0.0;
  std::map<int, std::vector<int>> covers;  // node id -> cluster ids, ascending
};

// Coverage by centroid distance over the top-level clusters. Every alive node
// must end up with at least one covering cluster.
CoverageMap detect_overlaps(const Field& field,
                            const std::vector<Cluster>& clusters,
                            double coverage_radius);

// Nodes covered by two or more clusters.
std::vector<int> overlap_set(const CoverageMap& coverage);

// Maps every node to its nearest covering cluster (ties: lowest cluster id).
std::map<int, int> assign_exclusive(const CoverageMap& coverage,
                                    const std::vector<Cluster>& clusters,
                                    const Field& field);

}  // namespace hcit
