#include <algorithm>

#include "doctest.h"
#include "hcit/dedup.hpp"
#include "hcit/error.hpp"
#include "helpers.hpp"

using namespace hcit;
using test_helpers::make_node;

namespace {

const HeadPolicy kWeighted{HeadPolicyKind::weighted_density_energy, 1.0};

struct Layout {
  Field field;
  std::vector<Cluster> clusters;
};

Layout build_layout(std::vector<SensorNode> nodes, int target) {
  std::sort(nodes.begin(), nodes.end(),
            [](const SensorNode& a, const SensorNode& b) { return a.id < b.id; });
  Layout layout;
  layout.field = partition_field({0, 0, 100, 100}, 10.0, nodes, {0, 0});
  int cells = static_cast<int>(layout.field.nonempty_cells().size());
  layout.clusters =
      build_clusters(layout.field, {1, cells, 1000000}, target, kWeighted, 0);
  return layout;
}

}  // namespace

TEST_CASE("disjoint coverage disks produce no overlaps") {
  // Single-node cells at (5,5) and (95,5); radius 20 keeps the disks apart.
  Layout layout =
      build_layout({make_node(0, 5, 5, 1), make_node(1, 95, 5, 1)}, 2);
  CoverageMap cm = detect_overlaps(layout.field, layout.clusters, 20.0);
  CHECK(overlap_set(cm).empty());
  CHECK(cm.covers.at(0).size() == 1);
  CHECK(cm.covers.at(1).size() == 1);
}

TEST_CASE("a node inside both disks is in the overlap set") {
  // Centroids (5,5) and (25,5); node 2 sits in the first cell, 4 and 16
  // away, and radius 16 reaches it from both.
  Layout layout = build_layout({make_node(0, 5, 5, 1), make_node(1, 25, 5, 1),
                                make_node(2, 9, 5, 1)},
                               2);
  CoverageMap cm = detect_overlaps(layout.field, layout.clusters, 16.0);
  CHECK(cm.covers.at(2).size() == 2);
  CHECK(overlap_set(cm) == std::vector<int>{2});
  CHECK(cm.covers.at(1).size() == 1);
}

TEST_CASE("a node outside every disk makes the scenario invalid") {
  // The merged cluster's centroid lands at (25,5), twenty away from both of
  // its member nodes; radius 12 covers nobody there.
  Layout layout = build_layout({make_node(0, 5, 5, 1), make_node(1, 45, 5, 1),
                                make_node(2, 95, 95, 1)},
                               2);
  REQUIRE(layout.clusters[0].cells.size() == 2);
  CHECK_THROWS_AS(detect_overlaps(layout.field, layout.clusters, 12.0), Error);
}

TEST_CASE("exclusive assignment keeps singly-covered nodes in place") {
  Layout layout =
      build_layout({make_node(0, 5, 5, 1), make_node(1, 95, 5, 1)}, 2);
  CoverageMap cm = detect_overlaps(layout.field, layout.clusters, 20.0);
  auto assignment = assign_exclusive(cm, layout.clusters, layout.field);
  CHECK(assignment.at(0) == 0);
  CHECK(assignment.at(1) == 1);
}

TEST_CASE("exclusive assignment picks the nearer centroid") {
  // Node 2: 4 from the first centroid, 16 from the second, covered by both.
  Layout layout = build_layout({make_node(0, 5, 5, 1), make_node(1, 25, 5, 1),
                                make_node(2, 9, 5, 1)},
                               2);
  CoverageMap cm = detect_overlaps(layout.field, layout.clusters, 16.0);
  REQUIRE(cm.covers.at(2).size() == 2);
  auto assignment = assign_exclusive(cm, layout.clusters, layout.field);
  CHECK(assignment.at(2) == 0);
}

TEST_CASE("an exact distance tie goes to the lower cluster id") {
  // Three cells merge into clusters with centroids (10,5) and (25,5); the
  // node at (17.5, 5) is exactly 7.5 from both.
  Layout layout = build_layout({make_node(0, 5, 5, 1), make_node(1, 15, 5, 1),
                                make_node(2, 25, 5, 1),
                                make_node(3, 17.5, 5, 1)},
                               2);
  REQUIRE(layout.clusters[0].centroid.x == 10.0);
  REQUIRE(layout.clusters[1].centroid.x == 25.0);
  CoverageMap cm = detect_overlaps(layout.field, layout.clusters, 8.0);
  REQUIRE(cm.covers.at(3).size() == 2);
  auto assignment = assign_exclusive(cm, layout.clusters, layout.field);
  CHECK(assignment.at(3) == 0);
}

TEST_CASE("assignment is stable across repeated evaluation") {
  Layout layout = build_layout({make_node(0, 5, 5, 1), make_node(1, 25, 5, 1),
                                make_node(2, 9, 5, 1)},
                               2);
  CoverageMap cm = detect_overlaps(layout.field, layout.clusters, 16.0);
  auto first = assign_exclusive(cm, layout.clusters, layout.field);
  auto second = assign_exclusive(cm, layout.clusters, layout.field);
  CHECK(first == second);
}
