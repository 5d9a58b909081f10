#include "vndn/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <stdexcept>
#include <thread>

namespace vndn {

namespace {

std::string fmt_optional(const std::optional<double>& v)
{
  if (!v)
    return "";
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6f", *v);
  return buf;
}

std::string fmt_summary(const MetricSummary& s)
{
  if (s.n == 0)
    return ",";
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%.6f,%.6f", s.mean, s.ci95_half_width);
  return buf;
}

} // namespace

std::string report_csv_header()
{
  return "strategy,approach,lifetime_ms,nodes,seed,interests_sent,datas_received,isr,"
         "avg_latency_ms,avg_jitter_ms,frames_tx,frames_dropped";
}

std::string report_csv_row(const SimulationReport& r)
{
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%s,%d,%u,%zu,%llu,%llu,%llu,%.6f,", r.strategy.c_str(),
                r.approach, r.lifetime_ms, r.nodes, static_cast<unsigned long long>(r.seed),
                static_cast<unsigned long long>(r.interests_sent),
                static_cast<unsigned long long>(r.datas_received), r.isr);
  std::string row = buf;
  row += fmt_optional(r.avg_latency_ms);
  row += ',';
  row += fmt_optional(r.avg_jitter_ms);
  std::snprintf(buf, sizeof(buf), ",%llu,%llu",
                static_cast<unsigned long long>(r.frames_transmitted_total),
                static_cast<unsigned long long>(r.frames_dropped_total));
  row += buf;
  return row;
}

std::string aggregate_csv_header()
{
  return "strategy,approach,lifetime_ms,nodes,seeds,"
         "interests_sent_mean,interests_sent_ci95,datas_received_mean,datas_received_ci95,"
         "isr_mean,isr_ci95,avg_latency_ms_mean,avg_latency_ms_ci95,"
         "avg_jitter_ms_mean,avg_jitter_ms_ci95,frames_tx_mean,frames_tx_ci95,"
         "frames_dropped_mean,frames_dropped_ci95";
}

std::string aggregate_csv_row(const AggregateReport& a)
{
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%s,%d,%u,%zu,%zu,", a.strategy.c_str(), a.approach,
                a.lifetime_ms, a.nodes, a.seeds);
  std::string row = buf;
  row += fmt_summary(a.interests_sent);
  row += ',';
  row += fmt_summary(a.datas_received);
  row += ',';
  row += fmt_summary(a.isr);
  row += ',';
  row += fmt_summary(a.avg_latency_ms);
  row += ',';
  row += fmt_summary(a.avg_jitter_ms);
  row += ',';
  row += fmt_summary(a.frames_tx);
  row += ',';
  row += fmt_summary(a.frames_dropped);
  return row;
}

ScenarioConfig apply_cell(const ScenarioConfig& base, const std::string& strategy, int approach,
                          std::uint32_t lifetime_ms, std::size_t nodes, std::uint64_t seed)
{
  ScenarioConfig cfg = base;
  cfg.strategy = strategy;
  cfg.approach = approach;
  cfg.interest_lifetime_ms = lifetime_ms;
  cfg.seed = seed;
  if (cfg.mobility.kind == MobilitySpec::Kind::Manhattan)
    cfg.mobility.node_count = nodes;
  return cfg;
}

SweepResult run_sweep(const ScenarioConfig& base, const SweepGrid& grid, unsigned parallelism)
{
  if (grid.empty())
    throw std::invalid_argument("sweep grid is empty (strategies, approaches, lifetimes, "
                                "node_counts and seeds must all be non-empty)");

  struct Cell {
    std::string strategy;
    int approach;
    std::uint32_t lifetime;
    std::size_t nodes;
  };
  std::vector<Cell> cells;
  for (const auto& s : grid.strategies)
    for (int a : grid.approaches)
      for (auto l : grid.lifetimes_ms)
        for (auto n : grid.node_counts)
          cells.push_back(Cell{s, a, l, n});

  struct Job {
    ScenarioConfig cfg;
    std::size_t cell_idx;
  };
  std::vector<Job> jobs;
  for (std::size_t c = 0; c < cells.size(); ++c)
    for (auto seed : grid.seeds)
      jobs.push_back(Job{apply_cell(base, cells[c].strategy, cells[c].approach,
                                    cells[c].lifetime, cells[c].nodes, seed),
                         c});

  unsigned workers = parallelism > 0 ? parallelism : std::thread::hardware_concurrency();
  if (workers == 0)
    workers = 1;
  workers = std::min<unsigned>(workers, static_cast<unsigned>(jobs.size()));

  std::vector<SimulationReport> reports(jobs.size());
  std::vector<std::string> failures(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= jobs.size())
        return;
      try {
        reports[i] = run_simulation(jobs[i].cfg).report;
      }
      catch (const std::exception& e) {
        failures[i] = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back(worker);
  for (auto& t : pool)
    t.join();

  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (!failures[i].empty()) {
      const auto& cfg = jobs[i].cfg;
      char buf[192];
      std::snprintf(buf, sizeof(buf),
                    "sweep cell failed (strategy=%s approach=%d lifetime_ms=%u nodes=%zu "
                    "seed=%llu): ",
                    cfg.strategy.c_str(), cfg.approach, cfg.interest_lifetime_ms,
                    cfg.node_count(), static_cast<unsigned long long>(cfg.seed));
      throw std::runtime_error(buf + failures[i]);
    }
  }

  SweepResult result;
  result.runs = std::move(reports);
  for (std::size_t c = 0; c < cells.size(); ++c) {
    std::vector<SimulationReport> cell_reports;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      if (jobs[i].cell_idx == c)
        cell_reports.push_back(result.runs[i]);
    }
    if (cell_reports.size() >= 2)
      result.aggregates.push_back(aggregate(cell_reports));
  }
  return result;
}

} // namespace vndn
