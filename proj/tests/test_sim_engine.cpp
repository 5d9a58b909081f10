#include <doctest.h>

#include <stdexcept>

#include "vndn/config.hpp"
#include "vndn/replay.hpp"
#include "vndn/sim.hpp"

#include <set>

using namespace vndn;

namespace {

/// Two static nodes 100 m apart, requester and source.
ScenarioConfig two_node_config()
{
  ScenarioConfig cfg;
  cfg.duration_s = 2.0;
  cfg.strategy = "immm";
  cfg.approach = 3;
  cfg.interfaces_per_node = 1;
  cfg.channels = {0};
  cfg.mobility.kind = MobilitySpec::Kind::Static;
  cfg.mobility.positions = {{0, 0}, {100, 0}};
  cfg.requester_id = 0;
  cfg.source_id = 1;
  return cfg;
}

} // namespace

TEST_CASE("tx queue: serialization delay and FIFO ordering")
{
  TxQueue q(8);
  // 1500 bytes at 6 Mbps take 2 ms on the air
  auto first = q.enqueue(0.0, 1500, 6e6);
  REQUIRE(first.has_value());
  CHECK(*first == doctest::Approx(2.0));

  // back-to-back frame starts when the first completes
  auto second = q.enqueue(0.5, 1500, 6e6);
  REQUIRE(second.has_value());
  CHECK(*second == doctest::Approx(4.0));

  // idle gap resets the start time
  auto third = q.enqueue(10.0, 600, 6e6);
  REQUIRE(third.has_value());
  CHECK(*third == doctest::Approx(10.8));
}

TEST_CASE("tx queue: overflow drops and conservation")
{
  TxQueue q(4);
  int accepted = 0;
  for (int i = 0; i < 6; ++i) {
    if (q.enqueue(0.0, 1500, 6e6).has_value())
      ++accepted;
  }
  CHECK(accepted == 4);
  CHECK(q.dropped() == 2);
  CHECK(q.enqueued() == q.transmitted());
  CHECK(q.enqueued() + q.dropped() == 6);

  // capacity frees up once pending frames complete
  CHECK(q.enqueue(100.0, 1500, 6e6).has_value());
}

TEST_CASE("two-node run: every interest satisfied over one hop")
{
  RunResult run = run_simulation(two_node_config());
  const SimulationReport& rep = run.report;
  CHECK(rep.interests_sent == 20); // 2 s at 10 Hz
  CHECK(rep.datas_received == 20);
  CHECK(rep.isr == doctest::Approx(1.0));
  REQUIRE(rep.avg_latency_ms.has_value());
  CHECK(*rep.avg_latency_ms > 0.0);
  CHECK(rep.frames_dropped_total == 0);
}

TEST_CASE("zero duration yields an empty report")
{
  ScenarioConfig cfg = two_node_config();
  cfg.duration_s = 0.0;
  RunResult run = run_simulation(cfg);
  CHECK(run.report.interests_sent == 0);
  CHECK(run.report.datas_received == 0);
  CHECK(run.report.isr == 0.0);
}

TEST_CASE("seed determinism: identical runs byte for byte")
{
  ScenarioConfig cfg;
  cfg.duration_s = 10.0;
  cfg.strategy = "immm";
  cfg.mobility.kind = MobilitySpec::Kind::Manhattan;
  cfg.mobility.node_count = 12;
  cfg.radio.loss_prob = 0.1;
  cfg.seed = 5;
  cfg.event_trace = true;

  RunOptions opts;
  opts.collect_trace = true;
  RunResult a = run_simulation(cfg, opts);
  RunResult b = run_simulation(cfg, opts);

  CHECK(a.trace_lines == b.trace_lines);
  CHECK(a.report.interests_sent == b.report.interests_sent);
  CHECK(a.report.datas_received == b.report.datas_received);
  CHECK(a.report.isr == b.report.isr);

  cfg.seed = 6;
  RunResult c = run_simulation(cfg, opts);
  CHECK(a.trace_lines != c.trace_lines); // loss draws shift with the seed
}

TEST_CASE("event trace times are non-decreasing and stop at sim_end")
{
  ScenarioConfig cfg = two_node_config();
  cfg.event_trace = true;
  RunOptions opts;
  opts.collect_trace = true;
  RunResult run = run_simulation(cfg, opts);

  REQUIRE_FALSE(run.trace_lines.empty());
  double prev = 0.0;
  for (const auto& line : run.trace_lines) {
    double t = std::stod(line.substr(0, line.find(' ')));
    REQUIRE(t >= prev);
    prev = t;
  }
  CHECK(run.trace_lines.back().find("sim_end") != std::string::npos);
  CHECK(prev <= cfg.duration_s * 1000.0);
}

TEST_CASE("broadcast reaches every station inside the disc")
{
  // five static nodes in range of the requester, one isolated far away
  ScenarioConfig cfg;
  cfg.duration_s = 0.05; // a single application tick
  cfg.strategy = "flooding";
  cfg.interfaces_per_node = 1;
  cfg.channels = {0};
  cfg.interest_lifetime_ms = 4000;
  cfg.mobility.kind = MobilitySpec::Kind::Static;
  cfg.mobility.positions = {{0, 0}, {100, 0}, {0, 100}, {-100, 0}, {0, -100}, {5000, 0}};
  cfg.requester_id = 0;
  cfg.source_id = 2;
  cfg.event_trace = true;

  RunOptions opts;
  opts.collect_trace = true;
  RunResult run = run_simulation(cfg, opts);

  // the first transmission is the requester's flood: exactly 4 deliveries
  std::size_t rx = 0;
  for (const auto& line : run.trace_lines) {
    if (line.find(" rx ") != std::string::npos &&
        line.find("I /content/seg=0") != std::string::npos &&
        line.find("00:00:00:00:00:01 FF:FF:FF:FF:FF:FF") != std::string::npos)
      ++rx;
  }
  CHECK(rx == 4);
  for (const auto& line : run.trace_lines)
    CHECK(line.find("rx n5 ") == std::string::npos); // isolated node hears nothing
}

TEST_CASE("hard disc boundary: 251 m hears nothing, 100 m hears everything")
{
  ScenarioConfig cfg = two_node_config();
  cfg.duration_s = 0.2;
  cfg.mobility.positions = {{0, 0}, {251, 0}};
  RunResult run = run_simulation(cfg);
  CHECK(run.report.datas_received == 0);

  cfg.mobility.positions = {{0, 0}, {100, 0}};
  RunResult ok = run_simulation(cfg);
  CHECK(ok.report.datas_received > 0);
}

TEST_CASE("invalid scenarios are rejected with every violation listed")
{
  ScenarioConfig cfg = two_node_config();
  cfg.duration_s = -1.0;
  cfg.approach = 9;
  auto violations = cfg.validate();
  REQUIRE(violations.size() >= 2);
  bool has_duration = false;
  for (const auto& v : violations)
    has_duration = has_duration || v.find("duration_s") != std::string::npos;
  CHECK(has_duration);
  CHECK_THROWS_AS(run_simulation(cfg), std::invalid_argument);
}

TEST_CASE("figure fixture: one interest, one satisfaction")
{
  ScenarioConfig cfg = figure_fixture_config();
  cfg.duration_s = 0.05; // exactly one application tick
  RunResult run = run_simulation(cfg);
  CHECK(run.report.interests_sent == 1);
  CHECK(run.report.datas_received == 1);
}

TEST_CASE("path confinement on a static line after convergence")
{
  // ten nodes on a line, requester at index 2, source at index 7;
  // nodes 0, 1, 8 and 9 sit off the path
  ScenarioConfig cfg;
  cfg.duration_s = 8.0; // inside one rediscovery period
  cfg.strategy = "immm";
  cfg.approach = 3;
  cfg.interfaces_per_node = 1;
  cfg.channels = {0};
  cfg.mobility.kind = MobilitySpec::Kind::Static;
  for (int i = 0; i < 10; ++i)
    cfg.mobility.positions.push_back(Position{i * 200.0, 0});
  cfg.requester_id = 2;
  cfg.source_id = 7;

  RunOptions opts;
  opts.collect_transmissions = true;
  RunResult run = run_simulation(cfg, opts);
  REQUIRE(run.report.isr > 0.9);

  // after the first exchange settles, only path nodes transmit
  const double convergence_ms = 1000.0;
  std::set<int> transmitters;
  for (const TxRecord& tx : run.transmissions) {
    if (tx.t_ms > convergence_ms)
      transmitters.insert(tx.node);
  }
  for (int off : {0, 1, 8, 9})
    CHECK(transmitters.count(off) == 0);
  for (int on : {2, 3, 4, 5, 6, 7})
    CHECK(transmitters.count(on) == 1);
}
