#include "hcit/election.hpp"

#include <random>

#include "hcit/error.hpp"

namespace hcit {

int node_density(const SensorNode& node, const std::vector<SensorNode>& nodes) {
  if (!node.alive)
    throw Error(ErrorKind::simulation,
                "density queried on dead node " + std::to_string(node.id));
  int count = 0;
  for (const SensorNode& other : nodes) {
    if (!other.alive) continue;
    if (distance(node.position, other.position) <= node.transmission_range)
      ++count;
  }
  return count;
}

int elect_head(const GridCell& cell, const std::vector<SensorNode>& nodes,
               const HeadPolicy& policy, std::uint64_t seed) {
  std::vector<const SensorNode*> alive;
  for (int id : cell.members) {
    const SensorNode* n = find_node_in(nodes, id);
    if (!n)
      throw Error(ErrorKind::simulation,
                  "unknown member node id " + std::to_string(id));
    if (n->alive) alive.push_back(n);
  }
  if (alive.empty())
    throw Error(ErrorKind::simulation,
                "cell " + std::to_string(cell.id) + " has no alive member");

  if (policy.kind == HeadPolicyKind::weighted_density_energy) {
    int best = alive.front()->id;
    double best_weight = -1.0;
    for (const SensorNode* n : alive) {
      double w = static_cast<double>(node_density(*n, nodes)) *
                 n->residual_energy;
      if (w > best_weight) {  // members ascend by id, so ties keep the lowest
        best_weight = w;
        best = n->id;
      }
    }
    return best;
  }

  std::mt19937_64 rng(seed ^
                      (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(
                                                   cell.id + 1)));
  return alive[static_cast<size_t>(rng() % alive.size())]->id;
}

}  // namespace hcit
