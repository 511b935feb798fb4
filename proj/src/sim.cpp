#include "hcit/sim.hpp"

#include <algorithm>
#include <cmath>

#include "hcit/error.hpp"

namespace hcit {

double EnergyLedger::total() const {
  double t = 0.0;
  for (const LedgerEntry& e : entries) t += e.charge;
  return t;
}

double EnergyLedger::total_at(int tick) const {
  double t = 0.0;
  for (const LedgerEntry& e : entries)
    if (e.tick == tick) t += e.charge;
  return t;
}

double EnergyLedger::total_for_node(int node) const {
  double t = 0.0;
  for (const LedgerEntry& e : entries)
    if (e.node == node) t += e.charge;
  return t;
}

bool threshold_report(SensorNode& node, double value, const ReportRule& rule) {
  if (!node.alive)
    throw Error(ErrorKind::simulation,
                "report decision on dead node " + std::to_string(node.id));
  bool report =
      !node.last_reported || std::abs(value - *node.last_reported) > rule.delta;
  if (report) node.last_reported = value;
  return report;
}

double filter_at_head(const std::vector<double>& values, Aggregate fn) {
  if (values.empty())
    throw Error(ErrorKind::simulation, "filter over empty value list");
  switch (fn) {
    case Aggregate::min:
      return *std::min_element(values.begin(), values.end());
    case Aggregate::max:
      return *std::max_element(values.begin(), values.end());
    case Aggregate::avg:
      break;
  }
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

bool charge_transmission(EnergyLedger& ledger, SensorNode& sender, int tick,
                         int hops) {
  if (hops < 1)
    throw Error(ErrorKind::simulation, "transmission needs at least one hop");
  double cost = static_cast<double>(hops) * ledger.unit_cost;
  if (!sender.alive || sender.residual_energy < cost) return false;
  sender.residual_energy -= cost;
  if (sender.residual_energy <= 0.0) {
    sender.residual_energy = 0.0;
    sender.alive = false;
  }
  ledger.entries.push_back({tick, sender.id, cost});
  return true;
}

ScenarioSetup prepare_scenario(const ScenarioConfig& cfg,
                               const TraceTable& trace) {
  if (cfg.ticks > trace.ticks)
    throw Error(ErrorKind::trace,
                "config needs " + std::to_string(cfg.ticks) +
                    " ticks but trace has " + std::to_string(trace.ticks));

  std::vector<SensorNode> nodes;
  for (int id : trace.node_ids) {
    SensorNode n;
    n.id = id;
    n.position = trace.positions.at(id);
    auto it = cfg.node_energy.find(id);
    n.residual_energy = it != cfg.node_energy.end() ? it->second
                                                    : cfg.initial_energy;
    n.alive = n.residual_energy > 0.0;
    n.transmission_range = cfg.policy.density_range;
    nodes.push_back(n);
  }

  ScenarioSetup setup;
  setup.field =
      partition_field(cfg.bounds, cfg.cell_size, std::move(nodes),
                      cfg.base_station);
  setup.clusters = build_clusters(setup.field, cfg.cluster_bounds,
                                  cfg.target_clusters, cfg.policy, cfg.seed);

  int next_id = static_cast<int>(setup.clusters.size());
  for (Cluster& c : setup.clusters) {
    if (!should_split(c, setup.field, cfg.cluster_bounds.split_threshold))
      continue;
    try {
      c.children = split_cluster(
          c, setup.field, cfg.cluster_bounds.split_threshold, cfg.policy,
          cfg.seed ^ (0x6a09e667f3bcc909ULL *
                      static_cast<std::uint64_t>(c.id + 1)),
          next_id);
      next_id += static_cast<int>(c.children.size());
    } catch (const Error&) {
      // A cluster finer than its cells cannot be split; keep it whole.
    }
  }

  setup.tree = build_index_tree(setup.clusters, setup.field);
  setup.routes = shortest_routes(setup.tree, setup.field, cfg.comm_range);
  setup.coverage =
      detect_overlaps(setup.field, setup.clusters, cfg.coverage_radius);
  setup.exclusive = assign_exclusive(setup.coverage, setup.clusters,
                                     setup.field);
  return setup;
}

Simulation::Simulation(const ScenarioConfig& cfg, const TraceTable& trace)
    : cfg_(cfg), trace_(trace), setup_(prepare_scenario(cfg, trace)) {
  nodes_ = setup_.field.nodes;
  for (const SensorNode& n : nodes_)
    node_cell_[n.id] = setup_.field.cell_id_at(n.position);
  ledger_.unit_cost = cfg.unit_cost;
}

SensorNode& Simulation::node_state(int id) {
  SensorNode* n = const_cast<SensorNode*>(find_node_in(nodes_, id));
  if (!n)
    throw Error(ErrorKind::simulation, "unknown node id " + std::to_string(id));
  return *n;
}

int Simulation::resolve_entity(int top_cluster, int node_id) const {
  int cell = node_cell_.at(node_id);
  int owner = setup_.tree.cell_owner.at(cell);
  if (owner == top_cluster) return owner;
  auto it = setup_.tree.child_parent.find(owner);
  if (it != setup_.tree.child_parent.end() && it->second == top_cluster)
    return owner;
  return top_cluster;  // foreign coverage reports go to the top header
}

TickState Simulation::step() {
  if (tick_ >= cfg_.ticks)
    throw Error(ErrorKind::simulation,
                "trace exhausted at tick " + std::to_string(tick_));

  TickState st;
  st.tick = tick_;
  ReportRule rule{cfg_.delta};
  std::map<int, std::vector<double>> received;  // entity -> values

  // Sense, decide, and send to the covering heads.
  for (SensorNode& node : nodes_) {
    if (!node.alive) continue;
    double value = trace_.value(node.id, tick_);
    st.sensed[node.id] = value;
    if (!threshold_report(node, value, rule)) continue;

    std::vector<int> tops;
    if (cfg_.dedup) {
      tops.push_back(setup_.exclusive.at(node.id));
    } else {
      tops = setup_.coverage.covers.at(node.id);
    }
    for (int top : tops) {
      int entity = resolve_entity(top, node.id);
      int head = setup_.tree.entity_header.at(entity);
      if (head == node.id) {
        received[entity].push_back(value);  // a head hears itself for free
        continue;
      }
      if (charge_transmission(ledger_, node, tick_, 1))
        received[entity].push_back(value);
      else
        ledger_.drops.push_back({tick_, node.id, ledger_.unit_cost});
    }
  }

  // Heads filter and forward along their routes.
  for (const auto& [entity, values] : received) {
    double filtered = filter_at_head(values, cfg_.aggregate);
    st.head_filtered[entity] = filtered;
    int head_id = setup_.tree.entity_header.at(entity);
    SensorNode& head = node_state(head_id);
    const Route& route = setup_.routes.at(head_id);
    if (charge_transmission(ledger_, head, tick_, route.hops()))
      st.base_values[entity] = filtered;
    else
      ledger_.drops.push_back(
          {tick_, head_id,
           static_cast<double>(route.hops()) * ledger_.unit_cost});
  }

  // Accuracy against the ground truth over what alive nodes actually sensed.
  if (!st.base_values.empty()) {
    std::vector<double> stored;
    for (const auto& [entity, value] : st.base_values) stored.push_back(value);
    std::vector<double> truth;
    for (const auto& [node, value] : st.sensed) truth.push_back(value);
    double base_agg = filter_at_head(stored, cfg_.aggregate);
    double truth_agg = filter_at_head(truth, cfg_.aggregate);
    accuracy_.push_back({tick_, std::abs(base_agg - truth_agg)});
  }

  states_.push_back(st);
  ++tick_;
  return st;
}

SimResult Simulation::run() {
  while (tick_ < cfg_.ticks) step();
  SimResult result;
  result.ledger = ledger_;
  result.states = states_;
  result.accuracy = accuracy_;
  result.setup = setup_;
  result.final_nodes = nodes_;
  return result;
}

SimResult run_scenario(const ScenarioConfig& cfg, const TraceTable& trace) {
  Simulation sim(cfg, trace);
  return sim.run();
}

}  // namespace hcit
