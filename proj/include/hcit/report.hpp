#pragma once

#include <string>

#include "hcit/query.hpp"
#include "hcit/sim.hpp"

namespace hcit {

struct RunReport {
  ScenarioConfig config;
  std::vector<std::pair<int, double>> energy_series;  // per-tick totals
  double energy_total = 0.0;
  std::vector<std::pair<int, double>> accuracy;
  std::map<int, int> heads;       // cluster id -> head node id
  std::map<int, int> route_hops;  // head node id -> hops to base
  std::string tree_text;
  std::vector<DropEvent> drops;
};

RunReport make_report(const ScenarioConfig& cfg, const SimResult& result);
std::string render_report(const RunReport& report);

// Two-mode comparison: identical scenario with dedup off and on.
struct CompareReport {
  ScenarioConfig config;
  std::vector<double> normal_series;  // per tick
  std::vector<double> dedup_series;
  double normal_total = 0.0;
  double dedup_total = 0.0;
};

CompareReport make_compare_report(const ScenarioConfig& cfg,
                                  const SimResult& normal,
                                  const SimResult& dedup);
std::string render_compare_report(const CompareReport& report);

// Key/value + series-block form of the comparison, for report files.
std::string render_compare_structured(const CompareReport& report);

std::string format_fixed(double v);  // two decimals, for series output

}  // namespace hcit
