#pragma once

#include "vndn/config.hpp"
#include "vndn/metrics.hpp"
#include "vndn/sim.hpp"

#include <string>
#include <vector>

namespace vndn {

std::string report_csv_header();
std::string report_csv_row(const SimulationReport& report);
std::string aggregate_csv_header();
std::string aggregate_csv_row(const AggregateReport& report);

struct SweepResult {
  std::vector<SimulationReport> runs;        // cell-major, seed-minor order
  std::vector<AggregateReport> aggregates;   // one per (strategy, approach, lifetime, nodes)
};

/// Expands the grid over the base config and runs every cell x seed.
/// Cells run in parallel up to `parallelism` workers (0 = hardware
/// concurrency); results come back in deterministic grid order. Any
/// failing cell aborts with a message naming it.
SweepResult run_sweep(const ScenarioConfig& base, const SweepGrid& grid,
                      unsigned parallelism = 0);

/// Applies one sweep cell to a base config.
ScenarioConfig apply_cell(const ScenarioConfig& base, const std::string& strategy, int approach,
                          std::uint32_t lifetime_ms, std::size_t nodes, std::uint64_t seed);

} // namespace vndn
