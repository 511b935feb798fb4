#pragma once

#include <cstdint>
#include <vector>

#include "hcit/field.hpp"

namespace hcit {

enum class HeadPolicyKind { random_rotation, weighted_density_energy };

struct HeadPolicy {
  HeadPolicyKind kind = HeadPolicyKind::weighted_density_energy;
  double density_range = 1.0;  // used by the weighted variant
};

// Count of alive nodes within the node's transmission range, itself included.
int node_density(const SensorNode& node, const std::vector<SensorNode>& nodes);

// Picks a head among the cell's alive members. The weighted policy is a
// deterministic argmax of density * residual energy (ties: lowest id); the
// rotation policy is a seeded uniform pick.
int elect_head(const GridCell& cell, const std::vector<SensorNode>& nodes,
               const HeadPolicy& policy, std::uint64_t seed);

}  // namespace hcit
