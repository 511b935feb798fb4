#include "hcit/cluster.hpp"

#include <algorithm>
#include <limits>

#include "hcit/error.hpp"
#include "hcit/kmeans.hpp"

namespace hcit {

namespace {

Point cells_centroid(const std::vector<int>& cell_ids, const Field& field) {
  Point c{0.0, 0.0};
  for (int id : cell_ids) {
    Point p = field.cell(id).bounds.center();
    c.x += p.x;
    c.y += p.y;
  }
  c.x /= static_cast<double>(cell_ids.size());
  c.y /= static_cast<double>(cell_ids.size());
  return c;
}

// Head of the member cell with the largest weight (ties: lowest cell id).
int elect_cluster_header(const std::vector<int>& cell_ids, const Field& field,
                         const HeadPolicy& policy, std::uint64_t seed) {
  int best_cell = -1;
  double best_weight = -1.0;
  for (int id : cell_ids) {
    const GridCell& c = field.cell(id);
    if (c.weight > best_weight) {
      best_weight = c.weight;
      best_cell = id;
    }
  }
  return elect_head(field.cell(best_cell), field.nodes, policy, seed);
}

}  // namespace

std::vector<Cluster> build_clusters(const Field& field,
                                    const ClusterBounds& bounds, int target,
                                    const HeadPolicy& policy,
                                    std::uint64_t seed) {
  if (target < bounds.min_clusters || target > bounds.max_clusters)
    throw Error(ErrorKind::config,
                "target_clusters " + std::to_string(target) + " outside [" +
                    std::to_string(bounds.min_clusters) + ", " +
                    std::to_string(bounds.max_clusters) + "]");
  std::vector<int> occupied = field.nonempty_cells();
  if (occupied.empty())
    throw Error(ErrorKind::config, "field has no nonempty cell");
  if (target > static_cast<int>(occupied.size()))
    throw Error(ErrorKind::config,
                "target_clusters " + std::to_string(target) +
                    " exceeds nonempty cell count " +
                    std::to_string(occupied.size()));

  struct Working {
    int id;
    std::vector<int> cells;
    Point centroid;
  };
  std::vector<Working> working;
  for (size_t i = 0; i < occupied.size(); ++i)
    working.push_back({static_cast<int>(i),
                       {occupied[i]},
                       field.cell(occupied[i]).bounds.center()});

  while (static_cast<int>(working.size()) > target) {
    size_t best_a = 0, best_b = 1;
    double best_d = std::numeric_limits<double>::max();
    for (size_t a = 0; a < working.size(); ++a) {
      for (size_t b = a + 1; b < working.size(); ++b) {
        double d = distance(working[a].centroid, working[b].centroid);
        if (d < best_d) {
          best_d = d;
          best_a = a;
          best_b = b;
        }
        // Working ids ascend with index, so the first minimum found is the
        // lexicographically smallest id pair.
      }
    }
    Working& keep = working[best_a];
    Working& gone = working[best_b];
    keep.cells.insert(keep.cells.end(), gone.cells.begin(), gone.cells.end());
    std::sort(keep.cells.begin(), keep.cells.end());
    keep.centroid = cells_centroid(keep.cells, field);
    working.erase(working.begin() + static_cast<long>(best_b));
  }

  std::sort(working.begin(), working.end(),
            [](const Working& a, const Working& b) {
              return a.cells.front() < b.cells.front();
            });
  std::vector<Cluster> clusters;
  for (size_t i = 0; i < working.size(); ++i) {
    Cluster c;
    c.id = static_cast<int>(i);
    c.cells = working[i].cells;
    c.centroid = working[i].centroid;
    c.header = elect_cluster_header(c.cells, field, policy, seed);
    clusters.push_back(std::move(c));
  }
  return clusters;
}

int cluster_alive_count(const Cluster& cluster, const Field& field) {
  int count = 0;
  for (int cell_id : cluster.cells)
    for (int node_id : field.cell(cell_id).members)
      if (field.node(node_id).alive) ++count;
  return count;
}

bool should_split(const Cluster& cluster, const Field& field,
                  int split_threshold) {
  return cluster_alive_count(cluster, field) > split_threshold;
}

std::vector<Cluster> split_cluster(const Cluster& cluster, const Field& field,
                                   int split_threshold,
                                   const HeadPolicy& policy, std::uint64_t seed,
                                   int first_child_id) {
  int alive = cluster_alive_count(cluster, field);
  if (alive <= split_threshold)
    throw Error(ErrorKind::simulation,
                "cluster " + std::to_string(cluster.id) +
                    " does not exceed the split threshold");
  int k = (alive + split_threshold - 1) / split_threshold;
  if (k > static_cast<int>(cluster.cells.size()))
    throw Error(ErrorKind::simulation,
                "cluster " + std::to_string(cluster.id) +
                    " cannot be split into " + std::to_string(k) +
                    " parts: only " + std::to_string(cluster.cells.size()) +
                    " cells");

  std::vector<Point> centers;
  for (int cell_id : cluster.cells)
    centers.push_back(field.cell(cell_id).bounds.center());
  KMeansResult km = kmeans(centers, k, seed);

  std::vector<std::vector<int>> groups(static_cast<size_t>(k));
  for (size_t i = 0; i < cluster.cells.size(); ++i)
    groups[static_cast<size_t>(km.assignments[i])].push_back(cluster.cells[i]);
  std::sort(groups.begin(), groups.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return a.front() < b.front();
            });

  std::vector<Cluster> children;
  for (size_t g = 0; g < groups.size(); ++g) {
    Cluster child;
    child.id = first_child_id + static_cast<int>(g);
    child.cells = groups[g];
    child.centroid = cells_centroid(child.cells, field);
    child.header = elect_cluster_header(child.cells, field, policy, seed);
    children.push_back(std::move(child));
  }
  return children;
}

}  // namespace hcit
