#include "hcit/index_tree.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "hcit/error.hpp"

namespace hcit {

namespace {

const char* kind_name(TreeKind k) {
  switch (k) {
    case TreeKind::base:
      return "base";
    case TreeKind::header:
      return "header";
    case TreeKind::subheader:
      return "subheader";
    case TreeKind::cell:
      return "cell";
  }
  return "?";
}

Rect cells_bbox(const std::vector<int>& cell_ids, const Field& field) {
  Rect box = field.cell(cell_ids.front()).bounds;
  for (int id : cell_ids) box = bbox_union(box, field.cell(id).bounds);
  return box;
}

}  // namespace

std::vector<int> IndexTree::leaf_cells() const {
  std::vector<int> out;
  for (const TreeNode& n : nodes)
    if (n.kind == TreeKind::cell) out.push_back(n.id);
  std::sort(out.begin(), out.end());
  return out;
}

IndexTree build_index_tree(const std::vector<Cluster>& clusters,
                           const Field& field) {
  if (clusters.empty())
    throw Error(ErrorKind::simulation, "cannot build an index tree from zero clusters");

  std::set<int> claimed;
  for (const Cluster& c : clusters)
    for (int cell : c.cells) {
      if (!claimed.insert(cell).second)
        throw Error(ErrorKind::simulation,
                    "cell " + std::to_string(cell) +
                        " claimed by more than one cluster");
    }
  for (int cell : field.nonempty_cells())
    if (!claimed.count(cell))
      throw Error(ErrorKind::simulation,
                  "cell " + std::to_string(cell) + " claimed by zero clusters");

  IndexTree tree;
  TreeNode root;
  root.kind = TreeKind::base;
  root.id = -1;
  root.parent = -1;
  root.bbox = {field.base_station.x, field.base_station.y,
               field.base_station.x, field.base_station.y};
  tree.nodes.push_back(root);

  std::vector<const Cluster*> ordered;
  for (const Cluster& c : clusters) ordered.push_back(&c);
  std::sort(ordered.begin(), ordered.end(),
            [](const Cluster* a, const Cluster* b) { return a->id < b->id; });

  auto add_leaves = [&](int parent_index, const std::vector<int>& cells,
                        int owner_cluster) {
    for (int cell : cells) {
      TreeNode leaf;
      leaf.kind = TreeKind::cell;
      leaf.id = cell;
      leaf.parent = parent_index;
      leaf.bbox = field.cell(cell).bounds;
      int idx = static_cast<int>(tree.nodes.size());
      tree.nodes.push_back(leaf);
      tree.nodes[static_cast<size_t>(parent_index)].children.push_back(idx);
      tree.cell_owner[cell] = owner_cluster;
    }
  };

  for (const Cluster* c : ordered) {
    TreeNode header;
    header.kind = TreeKind::header;
    header.id = c->id;
    header.head_node = c->header;
    header.parent = 0;
    header.bbox = cells_bbox(c->cells, field);
    int header_index = static_cast<int>(tree.nodes.size());
    tree.nodes.push_back(header);
    tree.nodes[0].children.push_back(header_index);
    tree.entity_header[c->id] = c->header;

    if (!c->split()) {
      add_leaves(header_index, c->cells, c->id);
      continue;
    }

    std::vector<const Cluster*> kids;
    for (const Cluster& child : c->children) kids.push_back(&child);
    std::sort(kids.begin(), kids.end(),
              [](const Cluster* a, const Cluster* b) { return a->id < b->id; });
    for (const Cluster* child : kids) {
      TreeNode sub;
      sub.kind = TreeKind::subheader;
      sub.id = child->id;
      sub.head_node = child->header;
      sub.parent = header_index;
      sub.bbox = cells_bbox(child->cells, field);
      int sub_index = static_cast<int>(tree.nodes.size());
      tree.nodes.push_back(sub);
      tree.nodes[static_cast<size_t>(header_index)].children.push_back(
          sub_index);
      tree.entity_header[child->id] = child->header;
      tree.child_parent[child->id] = c->id;
      add_leaves(sub_index, child->cells, child->id);
    }
  }

  // The root bbox spans everything, for query pruning at the top.
  for (int child : tree.nodes[0].children)
    tree.nodes[0].bbox =
        bbox_union(tree.nodes[0].bbox,
                   tree.nodes[static_cast<size_t>(child)].bbox);
  return tree;
}

std::string serialize_tree(const IndexTree& tree) {
  std::ostringstream out;
  struct Frame {
    int index;
    int depth;
  };
  std::vector<Frame> stack{{0, 0}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    const TreeNode& n = tree.nodes[static_cast<size_t>(f.index)];
    int parent_id =
        n.parent < 0 ? -1 : tree.nodes[static_cast<size_t>(n.parent)].id;
    out << f.depth << '\t' << kind_name(n.kind) << '\t' << n.id << '\t'
        << parent_id << '\n';
    for (auto it = n.children.rbegin(); it != n.children.rend(); ++it)
      stack.push_back({*it, f.depth + 1});
  }
  return out.str();
}

std::map<int, Route> shortest_routes(const IndexTree& tree, const Field& field,
                                     double comm_range) {
  if (!(comm_range > 0.0))
    throw Error(ErrorKind::config, "comm_range must be positive");

  std::vector<int> heads;
  for (const auto& [entity, head] : tree.entity_header) heads.push_back(head);
  std::sort(heads.begin(), heads.end());
  heads.erase(std::unique(heads.begin(), heads.end()), heads.end());

  auto position = [&](int id) -> Point {
    return id < 0 ? field.base_station : field.node(id).position;
  };

  // Vertex 0 is the base station; the rest are heads in ascending node id.
  std::vector<int> vertex_ids{-1};
  vertex_ids.insert(vertex_ids.end(), heads.begin(), heads.end());
  size_t n = vertex_ids.size();
  std::vector<std::vector<size_t>> adj(n);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b)
      if (distance(position(vertex_ids[a]), position(vertex_ids[b])) <=
          comm_range) {
        adj[a].push_back(b);
        adj[b].push_back(a);
      }

  const int unreached = std::numeric_limits<int>::max();
  std::vector<int> level(n, unreached);
  level[0] = 0;
  std::vector<size_t> frontier{0};
  std::vector<std::vector<size_t>> layers{{0}};
  while (!frontier.empty()) {
    std::vector<size_t> next;
    for (size_t v : frontier)
      for (size_t u : adj[v])
        if (level[u] == unreached) {
          level[u] = level[v] + 1;
          next.push_back(u);
        }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    if (!next.empty()) layers.push_back(next);
    frontier = std::move(next);
  }

  for (size_t v = 1; v < n; ++v)
    if (level[v] == unreached)
      throw Error(ErrorKind::simulation,
                  "header node " + std::to_string(vertex_ids[v]) +
                      " has no path to the base station");

  std::vector<double> total(n, 0.0);
  std::vector<std::vector<int>> path(n);
  path[0] = {-1};
  for (size_t layer = 1; layer < layers.size(); ++layer) {
    for (size_t v : layers[layer]) {
      bool have = false;
      double best_len = 0.0;
      std::vector<int> best_path;
      for (size_t u : adj[v]) {
        if (level[u] != level[v] - 1) continue;
        double len =
            total[u] + distance(position(vertex_ids[v]), position(vertex_ids[u]));
        if (!have || len < best_len ||
            (len == best_len &&
             std::lexicographical_compare(path[u].begin(), path[u].end(),
                                          best_path.begin() + 1,
                                          best_path.end()))) {
          have = true;
          best_len = len;
          best_path = {vertex_ids[v]};
          best_path.insert(best_path.end(), path[u].begin(), path[u].end());
        }
      }
      total[v] = best_len;
      path[v] = std::move(best_path);
    }
  }

  std::map<int, Route> routes;
  for (size_t v = 1; v < n; ++v)
    routes[vertex_ids[v]] = Route{path[v], total[v]};
  return routes;
}

}  // namespace hcit
