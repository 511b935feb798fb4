#include "hcit/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include "hcit/error.hpp"

namespace hcit {

const char* aggregate_name(Aggregate a) {
  switch (a) {
    case Aggregate::avg:
      return "avg";
    case Aggregate::min:
      return "min";
    case Aggregate::max:
      return "max";
  }
  return "?";
}

std::string format_double(double v) {
  char buf[64];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) return buf;
  }
  return buf;
}

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double to_double(const std::string& key, const std::string& value) {
  try {
    size_t used = 0;
    double v = std::stod(value, &used);
    if (used != value.size() || !std::isfinite(v))
      throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::config,
                "invalid value for key '" + key + "': '" + value + "'");
  }
}

long long to_int(const std::string& key, const std::string& value) {
  try {
    size_t used = 0;
    long long v = std::stoll(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::config,
                "invalid value for key '" + key + "': '" + value + "'");
  }
}

bool to_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw Error(ErrorKind::config,
              "invalid value for key '" + key + "': '" + value + "'");
}

}  // namespace

ScenarioConfig parse_config(std::istream& in) {
  ScenarioConfig cfg;
  std::set<std::string> seen;
  std::string line;
  int line_no = 0;
  double width = 0.0, height = 0.0;

  while (std::getline(in, line)) {
    ++line_no;
    std::string text = trim(line);
    if (text.empty() || text[0] == '#') continue;
    size_t eq = text.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorKind::config, "config line " + std::to_string(line_no) +
                                         " is not 'key = value'");
    std::string key = trim(text.substr(0, eq));
    std::string value = trim(text.substr(eq + 1));
    if (key.empty())
      throw Error(ErrorKind::config,
                  "config line " + std::to_string(line_no) + " has empty key");
    if (!seen.insert(key).second)
      throw Error(ErrorKind::config, "duplicate config key '" + key + "'");

    if (key == "field_width") {
      width = to_double(key, value);
    } else if (key == "field_height") {
      height = to_double(key, value);
    } else if (key == "cell_size") {
      cfg.cell_size = to_double(key, value);
    } else if (key == "base_x") {
      cfg.base_station.x = to_double(key, value);
    } else if (key == "base_y") {
      cfg.base_station.y = to_double(key, value);
    } else if (key == "min_clusters") {
      cfg.cluster_bounds.min_clusters = static_cast<int>(to_int(key, value));
    } else if (key == "max_clusters") {
      cfg.cluster_bounds.max_clusters = static_cast<int>(to_int(key, value));
    } else if (key == "target_clusters") {
      cfg.target_clusters = static_cast<int>(to_int(key, value));
    } else if (key == "split_threshold") {
      cfg.cluster_bounds.split_threshold = static_cast<int>(to_int(key, value));
    } else if (key == "head_policy") {
      if (value == "weighted")
        cfg.policy.kind = HeadPolicyKind::weighted_density_energy;
      else if (value == "rotation")
        cfg.policy.kind = HeadPolicyKind::random_rotation;
      else
        throw Error(ErrorKind::config,
                    "invalid value for key 'head_policy': '" + value + "'");
    } else if (key == "density_range") {
      cfg.policy.density_range = to_double(key, value);
    } else if (key == "coverage_radius") {
      cfg.coverage_radius = to_double(key, value);
    } else if (key == "comm_range") {
      cfg.comm_range = to_double(key, value);
    } else if (key == "delta") {
      cfg.delta = to_double(key, value);
    } else if (key == "unit_cost") {
      cfg.unit_cost = to_double(key, value);
    } else if (key == "dedup") {
      cfg.dedup = to_bool(key, value);
    } else if (key == "seed") {
      cfg.seed = static_cast<std::uint64_t>(to_int(key, value));
    } else if (key == "ticks") {
      cfg.ticks = static_cast<int>(to_int(key, value));
    } else if (key == "aggregate") {
      if (value == "avg")
        cfg.aggregate = Aggregate::avg;
      else if (value == "min")
        cfg.aggregate = Aggregate::min;
      else if (value == "max")
        cfg.aggregate = Aggregate::max;
      else
        throw Error(ErrorKind::config,
                    "invalid value for key 'aggregate': '" + value + "'");
    } else if (key == "initial_energy") {
      cfg.initial_energy = to_double(key, value);
    } else if (key.rfind("node_energy.", 0) == 0) {
      std::string id_text = key.substr(12);
      long long id = to_int(key, id_text);
      cfg.node_energy[static_cast<int>(id)] = to_double(key, value);
    } else if (key == "note") {
      cfg.note = value;
    } else {
      throw Error(ErrorKind::config, "unknown config key '" + key + "'");
    }
  }

  for (const char* required :
       {"field_width", "field_height", "cell_size", "base_x", "base_y",
        "min_clusters", "max_clusters", "target_clusters", "split_threshold",
        "coverage_radius", "comm_range", "ticks"})
    if (!seen.count(required))
      throw Error(ErrorKind::config,
                  std::string("missing config key '") + required + "'");

  cfg.bounds = {0.0, 0.0, width, height};
  if (!(width > 0.0))
    throw Error(ErrorKind::config, "invalid value for key 'field_width'");
  if (!(height > 0.0))
    throw Error(ErrorKind::config, "invalid value for key 'field_height'");
  if (!(cfg.cell_size > 0.0))
    throw Error(ErrorKind::config, "invalid value for key 'cell_size'");
  if (cfg.cluster_bounds.min_clusters < 1)
    throw Error(ErrorKind::config, "invalid value for key 'min_clusters'");
  if (cfg.cluster_bounds.max_clusters < cfg.cluster_bounds.min_clusters)
    throw Error(ErrorKind::config,
                "'max_clusters' must be at least 'min_clusters'");
  if (cfg.cluster_bounds.split_threshold < 1)
    throw Error(ErrorKind::config, "invalid value for key 'split_threshold'");
  if (!(cfg.policy.density_range > 0.0))
    throw Error(ErrorKind::config, "invalid value for key 'density_range'");
  if (!(cfg.coverage_radius > 0.0))
    throw Error(ErrorKind::config, "invalid value for key 'coverage_radius'");
  if (!(cfg.comm_range > 0.0))
    throw Error(ErrorKind::config, "invalid value for key 'comm_range'");
  if (cfg.delta < 0.0 || !std::isfinite(cfg.delta))
    throw Error(ErrorKind::config, "invalid value for key 'delta'");
  if (!(cfg.unit_cost > 0.0))
    throw Error(ErrorKind::config, "invalid value for key 'unit_cost'");
  if (cfg.ticks < 1)
    throw Error(ErrorKind::config, "invalid value for key 'ticks'");
  if (cfg.initial_energy < 0.0)
    throw Error(ErrorKind::config, "invalid value for key 'initial_energy'");
  for (const auto& [id, energy] : cfg.node_energy)
    if (energy < 0.0)
      throw Error(ErrorKind::config, "invalid value for key 'node_energy." +
                                         std::to_string(id) + "'");
  if (!cfg.bounds.contains(cfg.base_station))
    throw Error(ErrorKind::config,
                "'base_x'/'base_y' must lie inside the field");
  return cfg;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorKind::config, "cannot open config file '" + path + "'");
  return parse_config(in);
}

std::string emit_config(const ScenarioConfig& cfg) {
  std::ostringstream out;
  out << "field_width = " << format_double(cfg.bounds.width()) << '\n';
  out << "field_height = " << format_double(cfg.bounds.height()) << '\n';
  out << "cell_size = " << format_double(cfg.cell_size) << '\n';
  out << "base_x = " << format_double(cfg.base_station.x) << '\n';
  out << "base_y = " << format_double(cfg.base_station.y) << '\n';
  out << "min_clusters = " << cfg.cluster_bounds.min_clusters << '\n';
  out << "max_clusters = " << cfg.cluster_bounds.max_clusters << '\n';
  out << "target_clusters = " << cfg.target_clusters << '\n';
  out << "split_threshold = " << cfg.cluster_bounds.split_threshold << '\n';
  out << "head_policy = "
      << (cfg.policy.kind == HeadPolicyKind::weighted_density_energy
              ? "weighted"
              : "rotation")
      << '\n';
  out << "density_range = " << format_double(cfg.policy.density_range) << '\n';
  out << "coverage_radius = " << format_double(cfg.coverage_radius) << '\n';
  out << "comm_range = " << format_double(cfg.comm_range) << '\n';
  out << "delta = " << format_double(cfg.delta) << '\n';
  out << "unit_cost = " << format_double(cfg.unit_cost) << '\n';
  out << "dedup = " << (cfg.dedup ? "true" : "false") << '\n';
  out << "seed = " << cfg.seed << '\n';
  out << "ticks = " << cfg.ticks << '\n';
  out << "aggregate = " << aggregate_name(cfg.aggregate) << '\n';
  out << "initial_energy = " << format_double(cfg.initial_energy) << '\n';
  for (const auto& [id, energy] : cfg.node_energy)
    out << "node_energy." << id << " = " << format_double(energy) << '\n';
  if (!cfg.note.empty()) out << "note = " << cfg.note << '\n';
  return out.str();
}

}  // namespace hcit
