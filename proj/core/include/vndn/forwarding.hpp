#pragma once

#include "vndn/mac_address.hpp"
#include "vndn/message.hpp"
#include "vndn/name.hpp"
#include "vndn/tables.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vndn {

enum class StrategyFamily { Immm, Mmm, Flooding, Codie };

struct StrategyKind {
  StrategyFamily family = StrategyFamily::Immm;
  int approach = 3;                 // path selection approach, 1..3 (Immm/Mmm)
  std::uint32_t codie_max_hops = 8; // Interest flood radius and Data budget cap

  static StrategyKind parse(const std::string& family, int approach,
                            std::uint32_t codie_max_hops);
  std::string family_name() const;
};

enum class NodeRole { Requester, Source, Relay };

struct Interface {
  MacAddress mac;
  int channel = 0;
};

/// Outstanding latency measurement: set when a node forwards an Interest
/// along a FIB route, resolved by the matching Data or the PIT expiry.
struct PendingProbe {
  ContentName name;
  MacAddress next_hop_mac;
  double sent_at_ms = 0;
};

/// Per-vehicle NDN stack state. Owned by the simulation loop; the
/// transition functions below are its only mutators.
struct NodeState {
  int node_id = 0;
  std::vector<Interface> interfaces; // 1..3 entries
  ContentStore cs;
  Pit pit;
  Fib fib;
  std::map<ContentName, PendingProbe> probes;
  NodeRole role = NodeRole::Relay;
  StrategyKind strategy;

  // Source-side content description (valid when role == Source).
  NamePrefix content_prefix;
  std::uint64_t content_size_bytes = 0;
  std::uint32_t segment_size_bytes = 1024;

  bool owns_mac(const MacAddress& mac) const;
  std::uint64_t total_segments() const;
};

/// A frame the strategy wants transmitted. out_interface empty means
/// "all interfaces" (broadcast); the engine re-stamps the source MAC
/// per interface in that case.
struct Outbound {
  Frame frame;
  std::optional<int> out_interface;
};

/// Observer for table mutations, used by the event trace.
struct NodeHooks {
  virtual ~NodeHooks() = default;
  virtual void on_fib_add(const NodeState&, const NamePrefix&, const FibNextHop&) {}
  virtual void on_fib_clear(const NodeState&, const NamePrefix&, std::size_t removed) {}
};

struct ForwardingContext {
  WireSizes wire;
  double now_ms = 0;
  NodeHooks* hooks = nullptr;
};

struct Satisfaction {
  ContentName name;
  bool duplicate = false;
};

struct TransitionResult {
  std::vector<Outbound> frames;
  std::optional<Satisfaction> satisfaction; // requester-side Data acceptance
  bool loop_detected = false;               // duplicate nonce on an existing entry
};

/// Interest pipeline: TMA filter, CS, PIT, then strategy-specific
/// forwarding (FIB unicast, flood continuation, or CODIE-gated flood).
TransitionResult on_interest(NodeState& node, const Frame& frame, int in_interface,
                             const ForwardingContext& ctx);

/// Data pipeline: PIT-guarded route learning, caching and downstream
/// forwarding along the recorded in-records.
TransitionResult on_data(NodeState& node, const Frame& frame, int in_interface,
                         const ForwardingContext& ctx);

struct RequesterSchedule {
  NamePrefix content_prefix;
  std::uint64_t total_segments = 1;
  std::uint32_t lifetime_ms = 4000;
  std::uint64_t rediscovery_every_ticks = 100; // 0 disables periodic rediscovery
};

/// One application tick: requests the next sequential segment. On a
/// rediscovery tick the content prefix is cleared from the FIB first, so
/// the Interest goes out as a broadcast flood.
std::vector<Outbound> requester_tick(NodeState& node, std::uint64_t tick_idx,
                                     const RequesterSchedule& schedule,
                                     const ForwardingContext& ctx, std::uint32_t nonce);

/// Retransmission of an Interest whose lifetime expired unsatisfied.
/// Same routing rules as requester_tick; the caller resets the latency
/// clock in its satisfaction records.
std::vector<Outbound> lifetime_expiry(NodeState& node, const ContentName& name,
                                      std::uint32_t lifetime_ms,
                                      const ForwardingContext& ctx, std::uint32_t nonce);

enum class CodieGate { Forward, Discard };

/// CODIE Data budget check: forwarding is allowed only while the hops
/// traveled stay strictly below the budget the source stamped.
CodieGate codie_data_gate(const NodeState& node, const DataMsg& data,
                          std::uint32_t hops_traveled);

} // namespace vndn
