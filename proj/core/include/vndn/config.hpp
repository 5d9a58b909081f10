#pragma once

#include "vndn/mobility.hpp"
#include "vndn/sim.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace vndn {

struct MobilitySpec {
  enum class Kind { Static, Trace, Manhattan };
  Kind kind = Kind::Manhattan;

  std::vector<Position> positions; // Static
  std::string trace_path;          // Trace

  // Manhattan
  std::size_t node_count = 20;
  double extent_m = 1000.0;
  std::size_t streets_per_axis = 5;
  double speed_min_mps = 12.0;
  double speed_max_mps = 18.0;

  bool operator==(const MobilitySpec&) const = default;
};

/// Full description of one run. Defaults mirror the evaluated scenario
/// parameters (149 s, 10 Interests/s, 1.752 MB content, 10 s rediscovery,
/// three interfaces, 250 m / 6 Mbps radio).
struct ScenarioConfig {
  double duration_s = 149.0;
  std::string strategy = "immm";
  int approach = 3;
  std::uint32_t interest_lifetime_ms = 4000;
  double interest_rate_hz = 10.0;
  std::uint64_t content_size_bytes = 1752000;
  std::uint32_t segment_size_bytes = 1024;
  std::uint32_t rediscovery_period_ms = 10000;
  RadioConfig radio;
  int interfaces_per_node = 3;
  std::vector<int> channels = {0, 1, 2};
  MobilitySpec mobility;
  std::string content_prefix = "/content";
  int requester_id = 0;
  int source_id = -1; // -1 selects the last node
  std::uint64_t seed = 1;
  std::uint32_t codie_max_hops = 8;
  std::size_t cs_capacity = 2048;
  std::size_t tx_queue_depth = 1024;
  WireSizes wire;
  double mobility_update_period_ms = 100.0;
  bool event_trace = false;

  bool operator==(const ScenarioConfig&) const = default;

  std::size_t node_count() const;
  int effective_source_id() const;
  MobilityModel build_mobility(double duration_s_hint) const;

  /// All violations at once, empty when the config is runnable.
  std::vector<std::string> validate() const;

  std::string to_json() const;
  static ScenarioConfig from_json(const std::string& text);
  static ScenarioConfig load_file(const std::string& path);
};

struct SweepGrid {
  std::vector<std::string> strategies;
  std::vector<int> approaches;
  std::vector<std::uint32_t> lifetimes_ms;
  std::vector<std::size_t> node_counts;
  std::vector<std::uint64_t> seeds;

  bool empty() const
  {
    return strategies.empty() || approaches.empty() || lifetimes_ms.empty() ||
           node_counts.empty() || seeds.empty();
  }
  std::size_t cell_count() const
  {
    return strategies.size() * approaches.size() * lifetimes_ms.size() * node_counts.size();
  }
};

} // namespace vndn
