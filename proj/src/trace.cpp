#include "hcit/trace.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>

#include "hcit/error.hpp"

namespace hcit {

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

double parse_double(const std::string& s, int line_no) {
  try {
    size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size() || !std::isfinite(v)) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::trace, "trace line " + std::to_string(line_no) +
                                      ": bad number '" + s + "'");
  }
}

int parse_int(const std::string& s, int line_no) {
  try {
    size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::trace, "trace line " + std::to_string(line_no) +
                                      ": bad integer '" + s + "'");
  }
}

}  // namespace

double TraceTable::value(int node, int tick) const {
  auto it = values.find(node);
  if (it == values.end())
    throw Error(ErrorKind::trace,
                "trace has no node " + std::to_string(node));
  if (tick < 0 || tick >= static_cast<int>(it->second.size()))
    throw Error(ErrorKind::trace,
                "trace exhausted at tick " + std::to_string(tick));
  return it->second[static_cast<size_t>(tick)];
}

TraceTable parse_trace(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    throw Error(ErrorKind::trace, "trace is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "node_id,x,y,t,value")
    throw Error(ErrorKind::trace,
                "trace header must be 'node_id,x,y,t,value', got '" + line +
                    "'");

  struct Reading {
    int node;
    Point pos;
    int tick;
    double value;
  };
  std::vector<Reading> readings;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    std::vector<std::string> fields = split_csv(line);
    if (fields.size() != 5)
      throw Error(ErrorKind::trace, "trace line " + std::to_string(line_no) +
                                        ": expected 5 fields, got " +
                                        std::to_string(fields.size()));
    Reading r;
    r.node = parse_int(fields[0], line_no);
    r.pos = {parse_double(fields[1], line_no), parse_double(fields[2], line_no)};
    r.tick = parse_int(fields[3], line_no);
    r.value = parse_double(fields[4], line_no);
    if (r.node < 0)
      throw Error(ErrorKind::trace, "trace line " + std::to_string(line_no) +
                                        ": negative node id");
    if (r.tick < 0)
      throw Error(ErrorKind::trace, "trace line " + std::to_string(line_no) +
                                        ": negative tick");
    readings.push_back(r);
  }
  if (readings.empty())
    throw Error(ErrorKind::trace, "trace has no readings");

  TraceTable table;
  int max_tick = 0;
  for (const Reading& r : readings) max_tick = std::max(max_tick, r.tick);
  table.ticks = max_tick + 1;

  for (const Reading& r : readings) {
    auto pos = table.positions.find(r.node);
    if (pos == table.positions.end()) {
      table.positions[r.node] = r.pos;
      table.values[r.node].assign(static_cast<size_t>(table.ticks),
                                  std::numeric_limits<double>::quiet_NaN());
    } else if (pos->second.x != r.pos.x || pos->second.y != r.pos.y) {
      throw Error(ErrorKind::trace, "node " + std::to_string(r.node) +
                                        " has inconsistent positions in trace");
    }
    double& slot = table.values[r.node][static_cast<size_t>(r.tick)];
    if (!std::isnan(slot))
      throw Error(ErrorKind::trace,
                  "duplicate reading for node " + std::to_string(r.node) +
                      " at tick " + std::to_string(r.tick));
    slot = r.value;
  }

  for (const auto& [node, series] : table.values) {
    table.node_ids.push_back(node);
    for (int t = 0; t < table.ticks; ++t)
      if (std::isnan(series[static_cast<size_t>(t)]))
        throw Error(ErrorKind::trace,
                    "trace missing reading for node " + std::to_string(node) +
                        " at tick " + std::to_string(t));
  }
  return table;
}

TraceTable load_trace(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorKind::trace, "cannot open trace file '" + path + "'");
  return parse_trace(in);
}

}  // namespace hcit
