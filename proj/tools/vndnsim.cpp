#include <CLI11.hpp>
#include <json.hpp>

#include "vndn/config.hpp"
#include "vndn/replay.hpp"
#include "vndn/runner.hpp"
#include "vndn/sim.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using namespace vndn;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;

/// "A..B" inclusive, or a comma list "1,3,7".
std::vector<std::uint64_t> parse_seeds(const std::string& text)
{
  std::vector<std::uint64_t> seeds;
  auto range = text.find("..");
  if (range != std::string::npos) {
    std::uint64_t a = std::stoull(text.substr(0, range));
    std::uint64_t b = std::stoull(text.substr(range + 2));
    if (b < a)
      throw std::invalid_argument("--seeds range must be ascending: " + text);
    for (std::uint64_t s = a; s <= b; ++s)
      seeds.push_back(s);
    return seeds;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    seeds.push_back(std::stoull(item));
  return seeds;
}

SweepGrid grid_from_json(const nlohmann::json& j)
{
  SweepGrid grid;
  if (j.contains("strategies"))
    grid.strategies = j.at("strategies").get<std::vector<std::string>>();
  if (j.contains("approaches"))
    grid.approaches = j.at("approaches").get<std::vector<int>>();
  if (j.contains("lifetimes_ms"))
    grid.lifetimes_ms = j.at("lifetimes_ms").get<std::vector<std::uint32_t>>();
  if (j.contains("node_counts"))
    grid.node_counts = j.at("node_counts").get<std::vector<std::size_t>>();
  if (j.contains("seeds"))
    grid.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
  return grid;
}

bool write_file(const fs::path& path, const std::string& content)
{
  std::ofstream out(path);
  if (!out)
    return false;
  out << content;
  return out.good();
}

int run_replay_mode()
{
  auto checks = replay_figures();
  bool all = true;
  for (const auto& c : checks) {
    std::printf("[%s] %s: %s\n", c.passed ? "PASS" : "FAIL", c.figure.c_str(),
                c.detail.c_str());
    all = all && c.passed;
  }
  return all ? kExitOk : 1;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Discrete-event simulator for MAC-address-based NDN forwarding in VANETs"};

  std::string config_path;
  std::string strategy;
  int approach = 0;
  std::uint32_t lifetime_ms = 0;
  std::size_t nodes = 0;
  std::optional<std::uint64_t> seed;
  std::string seeds_text;
  std::string trace_path;
  std::string out_dir = ".";
  bool event_trace = false;
  bool replay = false;
  bool print_config = false;

  app.add_option("--config", config_path, "Scenario config file (JSON)");
  app.add_option("--strategy", strategy, "immm|mmm|flooding|codie");
  app.add_option("--approach", approach, "Path selection approach (1-3)");
  app.add_option("--lifetime-ms", lifetime_ms, "Interest lifetime in milliseconds");
  app.add_option("--nodes", nodes, "Node count (synthetic mobility only)");
  app.add_option("--seed", seed, "RNG seed for a single run");
  app.add_option("--seeds", seeds_text, "Seed sweep, e.g. 1..5 or 1,3,7");
  app.add_option("--trace", trace_path, "Mobility trace file (CSV)");
  app.add_option("--out", out_dir, "Output directory");
  app.add_flag("--event-trace", event_trace, "Write the per-event trace log");
  app.add_flag("--replay-figures", replay, "Replay the protocol walkthrough fixture");
  app.add_flag("--print-effective-config", print_config,
               "Print the defaults-applied config and exit");

  CLI11_PARSE(app, argc, argv);

  if (replay)
    return run_replay_mode();

  ScenarioConfig cfg;
  SweepGrid grid;
  try {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) {
        std::fprintf(stderr, "error: cannot open config file: %s\n", config_path.c_str());
        return kExitIo;
      }
      std::stringstream ss;
      ss << in.rdbuf();
      nlohmann::json j = nlohmann::json::parse(ss.str());
      cfg = ScenarioConfig::from_json(ss.str());
      if (j.contains("sweep"))
        grid = grid_from_json(j.at("sweep"));
    }
  }
  catch (const std::exception& e) {
    std::fprintf(stderr, "error: bad config: %s\n", e.what());
    return kExitValidation;
  }

  // flags override file values
  if (!strategy.empty())
    cfg.strategy = strategy;
  if (approach != 0)
    cfg.approach = approach;
  if (lifetime_ms != 0)
    cfg.interest_lifetime_ms = lifetime_ms;
  if (nodes != 0) {
    if (cfg.mobility.kind != MobilitySpec::Kind::Manhattan) {
      std::fprintf(stderr, "error: --nodes applies only to synthetic (manhattan) mobility\n");
      return kExitValidation;
    }
    cfg.mobility.node_count = nodes;
  }
  if (seed)
    cfg.seed = *seed;
  if (!trace_path.empty()) {
    cfg.mobility.kind = MobilitySpec::Kind::Trace;
    cfg.mobility.trace_path = trace_path;
  }
  if (event_trace)
    cfg.event_trace = true;

  if (print_config) {
    std::fputs(cfg.to_json().c_str(), stdout);
    return kExitOk;
  }

  auto violations = cfg.validate();
  if (!violations.empty()) {
    std::fprintf(stderr, "error: invalid scenario configuration:\n");
    for (const auto& v : violations)
      std::fprintf(stderr, "  - %s\n", v.c_str());
    return kExitValidation;
  }

  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) {
    std::fprintf(stderr, "error: cannot create output directory %s: %s\n", out_dir.c_str(),
                 ec.message().c_str());
    return kExitIo;
  }

  std::vector<std::uint64_t> seed_list;
  if (!seeds_text.empty()) {
    try {
      seed_list = parse_seeds(seeds_text);
    }
    catch (const std::exception& e) {
      std::fprintf(stderr, "error: %s\n", e.what());
      return kExitValidation;
    }
  }

  bool sweep_mode = !grid.strategies.empty() || !grid.approaches.empty() ||
                    !grid.lifetimes_ms.empty() || !grid.node_counts.empty() ||
                    !grid.seeds.empty() || seed_list.size() > 1;
  if (sweep_mode) {
    if (grid.strategies.empty())
      grid.strategies = {cfg.strategy};
    if (grid.approaches.empty())
      grid.approaches = {cfg.approach};
    if (grid.lifetimes_ms.empty())
      grid.lifetimes_ms = {cfg.interest_lifetime_ms};
    if (grid.node_counts.empty())
      grid.node_counts = {cfg.node_count()};
    if (!seed_list.empty())
      grid.seeds = seed_list;
    if (grid.seeds.empty())
      grid.seeds = {1, 2, 3, 4, 5};

    SweepResult result;
    try {
      result = run_sweep(cfg, grid);
    }
    catch (const std::exception& e) {
      std::fprintf(stderr, "error: %s\n", e.what());
      return kExitValidation;
    }

    std::string runs = report_csv_header() + "\n";
    for (const auto& r : result.runs)
      runs += report_csv_row(r) + "\n";
    std::string aggs = aggregate_csv_header() + "\n";
    for (const auto& a : result.aggregates)
      aggs += aggregate_csv_row(a) + "\n";

    if (!write_file(fs::path(out_dir) / "runs.csv", runs) ||
        !write_file(fs::path(out_dir) / "aggregate.csv", aggs)) {
      std::fprintf(stderr, "error: cannot write output files under %s\n", out_dir.c_str());
      return kExitIo;
    }
    std::printf("%zu runs, %zu aggregate rows -> %s\n", result.runs.size(),
                result.aggregates.size(), out_dir.c_str());
    return kExitOk;
  }

  if (seed_list.size() == 1)
    cfg.seed = seed_list.front();

  RunResult run;
  try {
    run = run_simulation(cfg);
  }
  catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitValidation;
  }

  std::string csv = report_csv_header() + "\n" + report_csv_row(run.report) + "\n";
  if (!write_file(fs::path(out_dir) / "run.csv", csv)) {
    std::fprintf(stderr, "error: cannot write %s/run.csv\n", out_dir.c_str());
    return kExitIo;
  }
  if (cfg.event_trace) {
    std::string trace;
    for (const auto& line : run.trace_lines)
      trace += line + "\n";
    if (!write_file(fs::path(out_dir) / "trace.txt", trace)) {
      std::fprintf(stderr, "error: cannot write %s/trace.txt\n", out_dir.c_str());
      return kExitIo;
    }
  }
  std::printf("%s\n", report_csv_row(run.report).c_str());
  return kExitOk;
}
