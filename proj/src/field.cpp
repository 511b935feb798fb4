#include "hcit/field.hpp"

#include <algorithm>
#include <cmath>

#include "hcit/error.hpp"

namespace hcit {

const GridCell& Field::cell(int id) const {
  if (id < 0 || id >= static_cast<int>(cells.size()))
    throw Error(ErrorKind::simulation,
                "unknown cell id " + std::to_string(id));
  return cells[static_cast<size_t>(id)];
}

int Field::cell_id_at(const Point& p) const {
  int col = static_cast<int>(std::floor((p.x - bounds.x0) / cell_size));
  int row = static_cast<int>(std::floor((p.y - bounds.y0) / cell_size));
  if (col < 0 || col >= cols || row < 0 || row >= rows)
    throw Error(ErrorKind::simulation, "position outside grid");
  return row * cols + col;
}

const SensorNode* Field::find_node(int id) const {
  return find_node_in(nodes, id);
}

SensorNode* Field::find_node(int id) {
  return const_cast<SensorNode*>(find_node_in(nodes, id));
}

const SensorNode& Field::node(int id) const {
  const SensorNode* n = find_node(id);
  if (!n)
    throw Error(ErrorKind::simulation,
                "unknown node id " + std::to_string(id));
  return *n;
}

std::vector<int> Field::nonempty_cells() const {
  std::vector<int> out;
  for (const GridCell& c : cells)
    if (!c.empty()) out.push_back(c.id);
  return out;
}

int Field::alive_count() const {
  int n = 0;
  for (const SensorNode& node : nodes)
    if (node.alive) ++n;
  return n;
}

const SensorNode* find_node_in(const std::vector<SensorNode>& nodes, int id) {
  auto it = std::lower_bound(
      nodes.begin(), nodes.end(), id,
      [](const SensorNode& n, int v) { return n.id < v; });
  if (it == nodes.end() || it->id != id) return nullptr;
  return &*it;
}

Field partition_field(const Rect& bounds, double cell_size,
                      std::vector<SensorNode> nodes,
                      const Point& base_station) {
  if (!(cell_size > 0.0))
    throw Error(ErrorKind::config, "cell_size must be positive");
  if (!(bounds.width() > 0.0) || !(bounds.height() > 0.0))
    throw Error(ErrorKind::config, "field bounds must have positive area");

  std::sort(nodes.begin(), nodes.end(),
            [](const SensorNode& a, const SensorNode& b) { return a.id < b.id; });
  for (size_t i = 0; i + 1 < nodes.size(); ++i)
    if (nodes[i].id == nodes[i + 1].id)
      throw Error(ErrorKind::trace,
                  "duplicate node id " + std::to_string(nodes[i].id));
  for (const SensorNode& n : nodes) {
    if (n.id < 0)
      throw Error(ErrorKind::trace,
                  "negative node id " + std::to_string(n.id));
    if (!bounds.contains(n.position))
      throw Error(ErrorKind::trace, "node " + std::to_string(n.id) +
                                        " lies outside field bounds");
  }

  Field f;
  f.bounds = bounds;
  f.cell_size = cell_size;
  f.base_station = base_station;
  f.cols = static_cast<int>(std::ceil(bounds.width() / cell_size));
  f.rows = static_cast<int>(std::ceil(bounds.height() / cell_size));
  f.cells.reserve(static_cast<size_t>(f.rows * f.cols));
  for (int row = 0; row < f.rows; ++row) {
    for (int col = 0; col < f.cols; ++col) {
      GridCell c;
      c.id = row * f.cols + col;
      c.row = row;
      c.col = col;
      c.bounds = {bounds.x0 + col * cell_size, bounds.y0 + row * cell_size,
                  bounds.x0 + (col + 1) * cell_size,
                  bounds.y0 + (row + 1) * cell_size};
      f.cells.push_back(c);
    }
  }

  for (const SensorNode& n : nodes)
    f.cells[static_cast<size_t>(f.cell_id_at(n.position))].members.push_back(
        n.id);
  f.nodes = std::move(nodes);
  // Dead-on-arrival nodes keep the alive/energy invariant.
  for (SensorNode& n : f.nodes) n.alive = n.residual_energy > 0.0;
  refresh_weights(f);
  return f;
}

double compute_cell_weight(const GridCell& cell,
                           const std::vector<SensorNode>& nodes) {
  double w = 0.0;
  for (int id : cell.members) {
    const SensorNode* n = find_node_in(nodes, id);
    if (!n)
      throw Error(ErrorKind::simulation,
                  "unknown member node id " + std::to_string(id));
    if (n->alive) w += n->residual_energy;
  }
  return w;
}

void refresh_weights(Field& field) {
  for (GridCell& c : field.cells) c.weight = compute_cell_weight(c, field.nodes);
}

}  // namespace hcit
