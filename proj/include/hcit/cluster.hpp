#pragma once

#include <cstdint>
#include <vector>

#include "hcit/election.hpp"
#include "hcit/field.hpp"

namespace hcit {

struct ClusterBounds {
  int min_clusters = 1;     // m
  int max_clusters = 1;     // M
  int split_threshold = 1;  // max nodes per cluster before breaking
};

struct Cluster {
  int id = 0;
  std::vector<int> cells;  // cell ids, ascending
  Point centroid;          // mean of member-cell bound centers
  int header = -1;         // node id
  std::vector<Cluster> children;  // present only when split

  bool split() const { return !children.empty(); }
};

// Agglomerative centroid-linkage merging of nonempty cells down to exactly
// `target` clusters. Ties on merge distance break on the lexicographically
// smallest id pair.
std::vector<Cluster> build_clusters(const Field& field,
                                    const ClusterBounds& bounds, int target,
                                    const HeadPolicy& policy,
                                    std::uint64_t seed);

int cluster_alive_count(const Cluster& cluster, const Field& field);

bool should_split(const Cluster& cluster, const Field& field,
                  int split_threshold);

// Breaks an oversized cluster into k = ceil(alive / split_threshold)
// sub-clusters by running k-means over its member-cell centers. Children get
// ids first_child_id, first_child_id + 1, ... ordered by smallest cell id.
std::vector<Cluster> split_cluster(const Cluster& cluster, const Field& field,
                                   int split_threshold,
                                   const HeadPolicy& policy, std::uint64_t seed,
                                   int first_child_id);

}  // namespace hcit
