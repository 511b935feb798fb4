#pragma once

#include <map>
#include <string>
#include <vector>

#include "hcit/cluster.hpp"
#include "hcit/field.hpp"

namespace hcit {

enum class TreeKind { base, header, subheader, cell };

struct TreeNode {
  TreeKind kind = TreeKind::base;
  int id = -1;         // cluster id for headers, cell id for leaves, -1 base
  int head_node = -1;  // sensor node acting for this entry (headers only)
  int parent = -1;     // index into IndexTree::nodes
  std::vector<int> children;  // indices, ordered by id
  Rect bbox;                  // union of descendant cell bounds
};

struct IndexTree {
  std::vector<TreeNode> nodes;       // nodes[0] is the base station
  std::map<int, int> cell_owner;     // cell id -> leaf-owning cluster id
  std::map<int, int> entity_header;  // cluster id (any level) -> head node id
  std::map<int, int> child_parent;   // sub-cluster id -> parent cluster id

  std::vector<int> leaf_cells() const;
};

// Root is the base station; unsplit clusters contribute header -> cell
// subtrees, split clusters header -> subheader -> cell subtrees.
IndexTree build_index_tree(const std::vector<Cluster>& clusters,
                           const Field& field);

// One node per line: depth<TAB>kind<TAB>id<TAB>parent_id, children sorted by
// id. The base station line is `0 base -1 -1`.
std::string serialize_tree(const IndexTree& tree);

struct Route {
  std::vector<int> path;  // head node id, relays..., -1 for the base station
  double length = 0.0;
  int hops() const { return static_cast<int>(path.size()) - 1; }
};

// Minimum-hop paths from every header to the base station over the graph of
// headers within comm_range of each other. Ties prefer smaller total distance,
// then the lexicographically smallest node sequence.
std::map<int, Route> shortest_routes(const IndexTree& tree, const Field& field,
                                     double comm_range);

}  // namespace hcit
