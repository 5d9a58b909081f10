#include "vndn/replay.hpp"

#include <cstdio>

namespace vndn {

namespace {

// Node index -> figure letter: 0:A 1:B 2:D 3:G 4:E 5:F 6:C, giving the
// walkthrough MACs 00:..:01 through 00:..:07. The E-F branch is slightly
// shorter, so the source answers that branch first and the requester ends
// up with the lowest-latency hop pointing at E (:05), added before B (:02).
const Position kFixturePositions[7] = {
    {0, 0},      // A, requester
    {150, 190},  // B
    {390, 190},  // D
    {520, 0},    // G, source
    {155, -185}, // E
    {395, -185}, // F
    {-220, 0},   // C
};

struct GoldenFrame {
  int node;
  bool is_interest;
  const char* oma;
  const char* tma;
};

struct GoldenFigure {
  const char* figure;
  std::vector<GoldenFrame> frames;
};

const char* kBroadcast = "FF:FF:FF:FF:FF:FF";

std::vector<GoldenFigure> golden_sequence()
{
  return {
      {"Fig. 1 flooding phase",
       {{0, true, "00:00:00:00:00:01", kBroadcast},
        {1, true, "00:00:00:00:00:02", kBroadcast}}},
      {"Fig. 2 data processing",
       {{3, false, "00:00:00:00:00:04", "00:00:00:00:00:03"},
        {2, false, "00:00:00:00:00:03", "00:00:00:00:00:02"}}},
      {"Fig. 3 forwarding on FIB entries",
       {{0, true, "00:00:00:00:00:01", "00:00:00:00:00:05"},
        {4, true, "00:00:00:00:00:05", "00:00:00:00:00:06"}}},
  };
}

} // namespace

ScenarioConfig figure_fixture_config(const ReplayOptions& options)
{
  ScenarioConfig cfg;
  cfg.duration_s = 0.5;
  cfg.strategy = "immm";
  cfg.approach = options.approach;
  cfg.interest_lifetime_ms = 4000;
  cfg.interest_rate_hz = 10.0;
  cfg.interfaces_per_node = 1;
  cfg.channels = {0};
  cfg.radio.loss_prob = 0.0;
  cfg.requester_id = 0;
  cfg.source_id = 3;
  cfg.seed = 1;
  cfg.mobility.kind = MobilitySpec::Kind::Static;
  cfg.mobility.positions.assign(std::begin(kFixturePositions), std::end(kFixturePositions));
  if (options.isolate_node_d)
    cfg.mobility.positions[2] = Position{1e6, 1e6};
  return cfg;
}

RunResult replay_run(const ReplayOptions& options)
{
  RunOptions opts;
  opts.collect_trace = true;
  opts.collect_transmissions = true;
  return run_simulation(figure_fixture_config(options), opts);
}

std::vector<FigureCheck> replay_figures(const ReplayOptions& options)
{
  RunResult run = replay_run(options);
  std::vector<FigureCheck> checks;

  std::size_t cursor = 0;
  for (const GoldenFigure& fig : golden_sequence()) {
    FigureCheck check;
    check.figure = fig.figure;
    check.passed = true;
    std::size_t pos = cursor;
    for (const GoldenFrame& want : fig.frames) {
      bool found = false;
      for (std::size_t i = pos; i < run.transmissions.size(); ++i) {
        const TxRecord& tx = run.transmissions[i];
        if (tx.node == want.node && tx.is_interest == want.is_interest &&
            tx.oma.to_string() == want.oma && tx.tma.to_string() == want.tma) {
          pos = i + 1;
          found = true;
          break;
        }
      }
      if (!found) {
        check.passed = false;
        char buf[160];
        std::snprintf(buf, sizeof(buf), "missing frame: node n%d %s OMA=%s TMA=%s", want.node,
                      want.is_interest ? "Interest" : "Data", want.oma, want.tma);
        check.detail = buf;
        break;
      }
    }
    if (check.passed) {
      check.detail = "frame sequence matched";
      cursor = pos;
    }
    checks.push_back(std::move(check));
  }
  return checks;
}

} // namespace vndn
