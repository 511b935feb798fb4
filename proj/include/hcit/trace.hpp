#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "hcit/geometry.hpp"

namespace hcit {

// Reading table parsed from delimited text with the header row
// `node_id,x,y,t,value`, one reading per row.
struct TraceTable {
  std::vector<int> node_ids;  // ascending
  int ticks = 0;
  std::map<int, Point> positions;
  std::map<int, std::vector<double>> values;  // per node, length `ticks`

  double value(int node, int tick) const;
};

TraceTable parse_trace(std::istream& in);
TraceTable load_trace(const std::string& path);

}  // namespace hcit
