#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hcit/error.hpp"
#include "hcit/query.hpp"
#include "hcit/report.hpp"
#include "hcit/sim.hpp"

namespace {

struct CommonArgs {
  std::string config_path;
  std::string trace_path;
  std::optional<long long> seed;
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config_path, "scenario config file")
      ->required();
  cmd->add_option("--trace", args.trace_path, "trace file")->required();
  cmd->add_option("--seed", args.seed, "override the config seed");
  cmd->add_option("--out", args.out_path, "also write the output to a file");
}

hcit::ScenarioConfig load(const CommonArgs& args) {
  hcit::ScenarioConfig cfg = hcit::load_config(args.config_path);
  if (args.seed) cfg.seed = static_cast<std::uint64_t>(*args.seed);
  return cfg;
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out)
    throw hcit::Error(hcit::ErrorKind::config,
                      "cannot write report file '" + path + "'");
  out << text;
}

hcit::RegionQuery parse_query_text(const std::string& text) {
  std::istringstream in(text);
  double x0, y0, x1, y1;
  int t0, t1;
  std::string fn;
  if (!(in >> x0 >> y0 >> x1 >> y1 >> t0 >> t1 >> fn))
    throw hcit::Error(hcit::ErrorKind::query,
                      "query must be 'x1 y1 x2 y2 t_start t_end fn'");
  std::string extra;
  if (in >> extra)
    throw hcit::Error(hcit::ErrorKind::query,
                      "unexpected trailing query token '" + extra + "'");
  hcit::RegionQuery q;
  q.region = {x0, y0, x1, y1};
  q.t_start = t0;
  q.t_end = t1;
  if (fn == "avg")
    q.fn = hcit::Aggregate::avg;
  else if (fn == "min")
    q.fn = hcit::Aggregate::min;
  else if (fn == "max")
    q.fn = hcit::Aggregate::max;
  else
    throw hcit::Error(hcit::ErrorKind::query,
                      "query fn must be avg, min, or max, got '" + fn + "'");
  return q;
}

int cmd_build_tree(const CommonArgs& args) {
  hcit::ScenarioConfig cfg = load(args);
  hcit::TraceTable trace = hcit::load_trace(args.trace_path);
  hcit::ScenarioSetup setup = hcit::prepare_scenario(cfg, trace);
  std::string text = hcit::serialize_tree(setup.tree);
  std::cout << text;
  write_out(args.out_path, text);
  return 0;
}

int cmd_run(const CommonArgs& args) {
  hcit::ScenarioConfig cfg = load(args);
  hcit::TraceTable trace = hcit::load_trace(args.trace_path);
  hcit::SimResult result = hcit::run_scenario(cfg, trace);
  std::string text = hcit::render_report(hcit::make_report(cfg, result));
  std::cout << text;
  write_out(args.out_path, text);
  return 0;
}

int cmd_compare_dedup(const CommonArgs& args) {
  hcit::ScenarioConfig cfg = load(args);
  hcit::TraceTable trace = hcit::load_trace(args.trace_path);
  hcit::ScenarioConfig normal_cfg = cfg;
  normal_cfg.dedup = false;
  hcit::ScenarioConfig dedup_cfg = cfg;
  dedup_cfg.dedup = true;
  hcit::SimResult normal = hcit::run_scenario(normal_cfg, trace);
  hcit::SimResult dedup = hcit::run_scenario(dedup_cfg, trace);
  hcit::CompareReport report = hcit::make_compare_report(cfg, normal, dedup);
  std::cout << hcit::render_compare_report(report);
  write_out(args.out_path, hcit::render_compare_structured(report));
  return 0;
}

int cmd_sweep(const CommonArgs& args, const std::string& counts_text) {
  hcit::ScenarioConfig cfg = load(args);
  hcit::TraceTable trace = hcit::load_trace(args.trace_path);

  std::vector<int> counts;
  std::istringstream in(counts_text);
  std::string token;
  while (std::getline(in, token, ',')) {
    try {
      size_t used = 0;
      counts.push_back(std::stoi(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw hcit::Error(hcit::ErrorKind::config,
                        "bad cluster count '" + token + "'");
    }
  }
  if (counts.empty())
    throw hcit::Error(hcit::ErrorKind::config, "no cluster counts given");

  auto rows = hcit::accuracy_sweep(cfg, counts, trace);
  std::ostringstream out;
  out << "clusters,error\n";
  for (const auto& [count, err] : rows)
    out << count << ',' << hcit::format_fixed(err) << '\n';
  std::cout << out.str();
  write_out(args.out_path, out.str());
  return 0;
}

int cmd_query(const CommonArgs& args, const std::string& query_text,
              bool exact) {
  hcit::ScenarioConfig cfg = load(args);
  hcit::TraceTable trace = hcit::load_trace(args.trace_path);
  hcit::RegionQuery query = parse_query_text(query_text);
  hcit::SimResult result = hcit::run_scenario(cfg, trace);
  hcit::QueryAnswer answer = hcit::answer_query(
      query, result.setup.tree, result.setup.field, result.states, exact);
  std::ostringstream line;
  line << "value=" << hcit::format_fixed(answer.value) << " cells=";
  for (size_t i = 0; i < answer.cells.size(); ++i) {
    if (i) line << ',';
    line << answer.cells[i];
  }
  line << '\n';
  std::cout << line.str();
  write_out(args.out_path, line.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"grid-based hierarchical clustering index tree simulator"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string counts_text;
  std::string query_text;
  bool exact = false;

  CLI::App* build_tree =
      app.add_subcommand("build-tree", "print the canonical index tree");
  add_common(build_tree, args);

  CLI::App* run = app.add_subcommand("run", "run the scenario and report");
  add_common(run, args);

  CLI::App* compare = app.add_subcommand(
      "compare-dedup", "energy series with and without duplicate elimination");
  add_common(compare, args);

  CLI::App* sweep =
      app.add_subcommand("sweep", "accuracy across cluster counts");
  add_common(sweep, args);
  sweep->add_option("--counts", counts_text, "comma-separated cluster counts")
      ->required();

  CLI::App* query = app.add_subcommand("query", "answer a region query");
  add_common(query, args);
  query->add_option("--query", query_text, "'x1 y1 x2 y2 t_start t_end fn'")
      ->required();
  query->add_flag("--exact", exact,
                  "aggregate raw leaf reports instead of stored head values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (build_tree->parsed()) return cmd_build_tree(args);
    if (run->parsed()) return cmd_run(args);
    if (compare->parsed()) return cmd_compare_dedup(args);
    if (sweep->parsed()) return cmd_sweep(args, counts_text);
    if (query->parsed()) return cmd_query(args, query_text, exact);
  } catch (const hcit::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return hcit::exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
