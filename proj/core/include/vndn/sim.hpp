#pragma once

#include "vndn/forwarding.hpp"
#include "vndn/message.hpp"
#include "vndn/metrics.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace vndn {

struct ScenarioConfig;

/// Unit-disc radio, Table-2 defaults for the 802.11p row.
struct RadioConfig {
  double range_m = 250.0;
  double data_rate_bps = 6e6;
  double loss_prob = 0.0;
  double prop_delay_us_per_m = 0.0033; // speed of light, kept for event ordering

  bool operator==(const RadioConfig&) const = default;
};

/// Per-interface transmit FIFO. Serialization delay stands in for MAC
/// contention: congestion shows up as queueing, not collisions.
class TxQueue {
public:
  explicit TxQueue(std::size_t depth = 1024)
    : m_depth(depth)
  {
  }

  /// Returns the transmit completion time, or nullopt when the queue is
  /// full and the frame is dropped.
  std::optional<double> enqueue(double now_ms, std::uint32_t size_bytes, double rate_bps);

  /// Marks the radio busy (receiving) until `t_ms`; the interface is
  /// half-duplex, so queued transmissions start after incoming frames end.
  void block_until(double t_ms) { m_busy_until_ms = std::max(m_busy_until_ms, t_ms); }

  double busy_until_ms() const { return m_busy_until_ms; }
  std::uint64_t enqueued() const { return m_enqueued; }
  std::uint64_t transmitted() const { return m_transmitted; }
  std::uint64_t dropped() const { return m_dropped; }
  std::size_t pending(double now_ms) const;

private:
  std::size_t m_depth;
  double m_busy_until_ms = 0;
  mutable std::deque<double> m_completions; // pending transmit completion times
  std::uint64_t m_enqueued = 0;
  std::uint64_t m_transmitted = 0;
  std::uint64_t m_dropped = 0;
};

enum class EventKind { FrameDelivery, AppTick, PitExpiry, RediscoveryTick, MobilityUpdate, SimEnd };

/// Simulator occurrence; total order is (fire_at_ms, seq) with seq as the
/// FIFO tie-breaker.
struct Event {
  double fire_at_ms = 0;
  std::uint64_t seq = 0;
  EventKind kind = EventKind::SimEnd;

  int node = -1;
  int interface_idx = 0;
  std::shared_ptr<const Frame> frame; // FrameDelivery
  ContentName name;                   // PitExpiry
  std::uint64_t tick = 0;             // AppTick
};

/// One physical transmission, recorded for replay and path checks.
/// oma/tma are the strategy-level addresses (the in-message pair for
/// MMM-VNDN, the frame pair otherwise).
struct TxRecord {
  double t_ms = 0;
  int node = -1;
  int interface_idx = 0;
  bool is_interest = true;
  ContentName name;
  MacAddress oma;
  MacAddress tma;
  std::uint32_t hops = 0;   // CODIE counter carried by the message
  std::uint32_t budget = 0; // CODIE Data budget
};

struct RunOptions {
  bool collect_trace = false;
  bool collect_transmissions = false;
};

struct RunResult {
  SimulationReport report;
  std::vector<std::string> trace_lines;
  std::vector<TxRecord> transmissions;
  std::uint64_t loops_detected = 0;
};

/// Executes the scenario to completion. Bit-identical results for equal
/// configurations (including the seed).
RunResult run_simulation(const ScenarioConfig& config, const RunOptions& options = {});

} // namespace vndn
