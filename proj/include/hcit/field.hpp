#pragma once

#include <optional>
#include <vector>

#include "hcit/geometry.hpp"

namespace hcit {

struct SensorNode {
  int id = 0;
  Point position;
  double residual_energy = 0.0;
  bool alive = true;  // false exactly when residual_energy == 0
  std::optional<double> last_reported;
  double transmission_range = 1.0;
};

struct GridCell {
  int id = 0;
  int row = 0;
  int col = 0;
  Rect bounds;
  std::vector<int> members;  // node ids, ascending
  double weight = 0.0;       // sum of alive members' residual energy
  std::optional<int> head;

  bool empty() const { return members.empty(); }
};

struct Field {
  Rect bounds;
  double cell_size = 0.0;
  int rows = 0;
  int cols = 0;
  std::vector<GridCell> cells;    // row-major, id = row * cols + col
  std::vector<SensorNode> nodes;  // ascending id
  Point base_station;

  const GridCell& cell(int id) const;
  int cell_id_at(const Point& p) const;
  const SensorNode* find_node(int id) const;
  SensorNode* find_node(int id);
  const SensorNode& node(int id) const;  // throws on unknown id
  std::vector<int> nonempty_cells() const;
  int alive_count() const;
};

// Tiles `bounds` with half-open cells of size `cell_size` and assigns every
// node to the unique cell containing its position.
Field partition_field(const Rect& bounds, double cell_size,
                      std::vector<SensorNode> nodes, const Point& base_station);

// Sum of residual energy over the cell's alive members.
double compute_cell_weight(const GridCell& cell,
                           const std::vector<SensorNode>& nodes);

void refresh_weights(Field& field);

const SensorNode* find_node_in(const std::vector<SensorNode>& nodes, int id);

}  // namespace hcit
