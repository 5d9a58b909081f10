#pragma once

#include "vndn/config.hpp"
#include "vndn/sim.hpp"

#include <string>
#include <vector>

namespace vndn {

/// Outcome of replaying one figure of the protocol walkthrough against
/// the built-in 7-node fixture.
struct FigureCheck {
  std::string figure;
  bool passed = false;
  std::string detail;
};

struct ReplayOptions {
  int approach = 2;          // the walkthrough picks the lowest-latency hop
  bool isolate_node_d = false; // negative control: push node D out of range
};

/// Static A..G topology behind the protocol walkthrough: node A requests,
/// node G holds the content, two disjoint relay branches (B-D and E-F)
/// connect them, C is a dead-end neighbour of A.
ScenarioConfig figure_fixture_config(const ReplayOptions& options = {});

/// Runs the fixture and checks the narrated OMA/TMA frame sequence of
/// each figure, in order, against the transmission log.
std::vector<FigureCheck> replay_figures(const ReplayOptions& options = {});

/// Fixture run with transmissions and trace collected, for tests that
/// inspect the raw sequence.
RunResult replay_run(const ReplayOptions& options = {});

} // namespace vndn
