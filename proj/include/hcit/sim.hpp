#pragma once

#include <map>
#include <vector>

#include "hcit/dedup.hpp"
#include "hcit/index_tree.hpp"
#include "hcit/scenario.hpp"
#include "hcit/trace.hpp"

namespace hcit {

struct ReportRule {
  double delta = 0.0;
};

struct LedgerEntry {
  int tick = 0;
  int node = 0;
  double charge = 0.0;
};

struct DropEvent {
  int tick = 0;
  int node = 0;
  double needed = 0.0;
};

struct EnergyLedger {
  double unit_cost = 30.0;
  std::vector<LedgerEntry> entries;
  std::vector<DropEvent> drops;

  double total() const;
  double total_at(int tick) const;
  double total_for_node(int node) const;
};

struct TickState {
  int tick = 0;
  std::map<int, double> sensed;         // alive nodes' readings this tick
  std::map<int, double> head_filtered;  // cluster id -> aggregate computed
  std::map<int, double> base_values;    // cluster id -> value stored at base
};

// True when the node must report: no prior report, or the change exceeds
// delta. Updates last_reported on a positive decision.
bool threshold_report(SensorNode& node, double value, const ReportRule& rule);

double filter_at_head(const std::vector<double>& values, Aggregate fn);

// Appends hops * unit_cost against the sender and deducts it. Returns false
// (and leaves the ledger untouched) when the sender cannot afford the send;
// the caller records the drop.
bool charge_transmission(EnergyLedger& ledger, SensorNode& sender, int tick,
                         int hops);

struct ScenarioSetup {
  Field field;
  std::vector<Cluster> clusters;  // top-level, children attached when split
  IndexTree tree;
  std::map<int, Route> routes;  // head node id -> route to base
  CoverageMap coverage;
  std::map<int, int> exclusive;  // node -> assigned cluster (dedup mode)
};

ScenarioSetup prepare_scenario(const ScenarioConfig& cfg,
                               const TraceTable& trace);

struct SimResult {
  EnergyLedger ledger;
  std::vector<TickState> states;
  std::vector<std::pair<int, double>> accuracy;  // tick -> |base - truth|
  ScenarioSetup setup;
  std::vector<SensorNode> final_nodes;
};

class Simulation {
 public:
  Simulation(const ScenarioConfig& cfg, const TraceTable& trace);

  const ScenarioSetup& setup() const { return setup_; }
  const std::vector<SensorNode>& nodes() const { return nodes_; }
  const EnergyLedger& ledger() const { return ledger_; }

  TickState step();  // advances one tick
  SimResult run();   // runs all remaining ticks

 private:
  int resolve_entity(int top_cluster, int node_id) const;
  SensorNode& node_state(int id);

  ScenarioConfig cfg_;
  const TraceTable& trace_;
  ScenarioSetup setup_;
  std::vector<SensorNode> nodes_;  // mutable copies of the field's nodes
  std::map<int, int> node_cell_;
  EnergyLedger ledger_;
  std::vector<TickState> states_;
  std::vector<std::pair<int, double>> accuracy_;
  int tick_ = 0;
};

SimResult run_scenario(const ScenarioConfig& cfg, const TraceTable& trace);

}  // namespace hcit
