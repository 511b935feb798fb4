#include "hcit/report.hpp"

#include <cstdio>
#include <sstream>

namespace hcit {

std::string format_fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

RunReport make_report(const ScenarioConfig& cfg, const SimResult& result) {
  RunReport report;
  report.config = cfg;
  for (int t = 0; t < cfg.ticks; ++t)
    report.energy_series.push_back({t, result.ledger.total_at(t)});
  report.energy_total = result.ledger.total();
  report.accuracy = result.accuracy;
  report.heads = result.setup.tree.entity_header;
  for (const auto& [head, route] : result.setup.routes)
    report.route_hops[head] = route.hops();
  report.tree_text = serialize_tree(result.setup.tree);
  report.drops = result.ledger.drops;
  return report;
}

std::string render_report(const RunReport& report) {
  std::ostringstream out;
  out << "[config]\n" << emit_config(report.config);
  out << "[heads]\n";
  for (const auto& [cluster, head] : report.heads)
    out << cluster << " = " << head << '\n';
  out << "[routes]\n";
  for (const auto& [head, hops] : report.route_hops)
    out << head << " = " << hops << '\n';
  out << "[series energy]\n";
  out << "tick,charge\n";
  for (const auto& [tick, charge] : report.energy_series)
    out << tick << ',' << format_fixed(charge) << '\n';
  out << "[series accuracy]\n";
  out << "tick,error\n";
  for (const auto& [tick, err] : report.accuracy)
    out << tick << ',' << format_fixed(err) << '\n';
  out << "[tree]\n" << report.tree_text;
  out << "[drops]\n";
  out << "tick,node,needed\n";
  for (const DropEvent& d : report.drops)
    out << d.tick << ',' << d.node << ',' << format_fixed(d.needed) << '\n';
  out << "[totals]\n";
  double sum = 0.0;
  for (const auto& [tick, charge] : report.energy_series) sum += charge;
  out << "energy = " << format_fixed(sum) << '\n';
  return out.str();
}

CompareReport make_compare_report(const ScenarioConfig& cfg,
                                  const SimResult& normal,
                                  const SimResult& dedup) {
  CompareReport report;
  report.config = cfg;
  for (int t = 0; t < cfg.ticks; ++t) {
    report.normal_series.push_back(normal.ledger.total_at(t));
    report.dedup_series.push_back(dedup.ledger.total_at(t));
  }
  report.normal_total = normal.ledger.total();
  report.dedup_total = dedup.ledger.total();
  return report;
}

std::string render_compare_report(const CompareReport& report) {
  std::ostringstream out;
  if (!report.config.note.empty()) out << "# " << report.config.note << '\n';
  out << "tick,normal,dedup\n";
  double normal_sum = 0.0, dedup_sum = 0.0;
  for (size_t t = 0; t < report.normal_series.size(); ++t) {
    normal_sum += report.normal_series[t];
    dedup_sum += report.dedup_series[t];
    out << t << ',' << format_fixed(report.normal_series[t]) << ','
        << format_fixed(report.dedup_series[t]) << '\n';
  }
  // Totals are re-derived from the emitted series on every emission.
  out << "total," << format_fixed(normal_sum) << ',' << format_fixed(dedup_sum)
      << '\n';
  return out.str();
}

std::string render_compare_structured(const CompareReport& report) {
  std::ostringstream out;
  out << "[config]\n" << emit_config(report.config);
  double normal_sum = 0.0, dedup_sum = 0.0;
  out << "[series energy_normal]\ntick,charge\n";
  for (size_t t = 0; t < report.normal_series.size(); ++t) {
    normal_sum += report.normal_series[t];
    out << t << ',' << format_fixed(report.normal_series[t]) << '\n';
  }
  out << "[series energy_dedup]\ntick,charge\n";
  for (size_t t = 0; t < report.dedup_series.size(); ++t) {
    dedup_sum += report.dedup_series[t];
    out << t << ',' << format_fixed(report.dedup_series[t]) << '\n';
  }
  out << "[totals]\n";
  out << "energy_normal = " << format_fixed(normal_sum) << '\n';
  out << "energy_dedup = " << format_fixed(dedup_sum) << '\n';
  return out.str();
}

}  // namespace hcit
