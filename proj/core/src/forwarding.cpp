#include "vndn/forwarding.hpp"

#include <algorithm>
#include <stdexcept>

namespace vndn {

StrategyKind StrategyKind::parse(const std::string& family, int approach,
                                 std::uint32_t codie_max_hops)
{
  StrategyKind k;
  if (family == "immm")
    k.family = StrategyFamily::Immm;
  else if (family == "mmm")
    k.family = StrategyFamily::Mmm;
  else if (family == "flooding")
    k.family = StrategyFamily::Flooding;
  else if (family == "codie")
    k.family = StrategyFamily::Codie;
  else
    throw std::invalid_argument("unknown strategy \"" + family +
                                "\" (expected immm|mmm|flooding|codie)");
  if (approach < 1 || approach > 3)
    throw std::invalid_argument("approach must be 1, 2 or 3");
  k.approach = approach;
  k.codie_max_hops = codie_max_hops;
  return k;
}

std::string StrategyKind::family_name() const
{
  switch (family) {
    case StrategyFamily::Immm: return "immm";
    case StrategyFamily::Mmm: return "mmm";
    case StrategyFamily::Flooding: return "flooding";
    case StrategyFamily::Codie: return "codie";
  }
  return "?";
}

bool NodeState::owns_mac(const MacAddress& mac) const
{
  return std::any_of(interfaces.begin(), interfaces.end(),
                     [&](const Interface& i) { return i.mac == mac; });
}

std::uint64_t NodeState::total_segments() const
{
  if (segment_size_bytes == 0)
    return 0;
  return (content_size_bytes + segment_size_bytes - 1) / segment_size_bytes;
}

namespace {

bool uses_fib(StrategyFamily f)
{
  return f == StrategyFamily::Immm || f == StrategyFamily::Mmm;
}

/// Previous-hop address as seen by this strategy: the frame source for
/// iMMM/flooding, the in-message OMA for MMM.
MacAddress origin_mac(const NodeState& node, const Frame& frame)
{
  if (node.strategy.family == StrategyFamily::Mmm) {
    const auto* hdr = frame.is_interest() ? (frame.interest().variant_header
                                                 ? &*frame.interest().variant_header
                                                 : nullptr)
                                          : (frame.data().variant_header
                                                 ? &*frame.data().variant_header
                                                 : nullptr);
    if (hdr != nullptr)
      return hdr->oma;
  }
  return frame.src_mac;
}

/// Destination address as seen by this strategy (TMA).
MacAddress target_mac(const NodeState& node, const Frame& frame)
{
  if (node.strategy.family == StrategyFamily::Mmm) {
    if (frame.is_interest() && frame.interest().variant_header)
      return frame.interest().variant_header->tma;
    if (frame.is_data() && frame.data().variant_header)
      return frame.data().variant_header->tma;
  }
  return frame.dst_mac;
}

void note_fib_add(NodeState& node, const ForwardingContext& ctx, const NamePrefix& prefix,
                  const FibNextHop& hop)
{
  if (ctx.hooks != nullptr)
    ctx.hooks->on_fib_add(node, prefix, hop);
}

void fib_clear(NodeState& node, const ForwardingContext& ctx, const NamePrefix& prefix)
{
  std::size_t removed = node.fib.clear_prefix(prefix);
  if (ctx.hooks != nullptr)
    ctx.hooks->on_fib_clear(node, prefix, removed);
}

/// Broadcast emission; the engine fans it out over every interface and
/// re-stamps the per-interface source MAC.
Outbound broadcast_outbound(const NodeState& node, std::variant<InterestMsg, DataMsg> body,
                            const ForwardingContext& ctx)
{
  Frame f = make_frame(node.interfaces.front().mac, MacAddress::broadcast(),
                       node.interfaces.front().channel, std::move(body), ctx.wire);
  return Outbound{std::move(f), std::nullopt};
}

Outbound unicast_outbound(const NodeState& node, int out_iface, MacAddress dst,
                          std::variant<InterestMsg, DataMsg> body, const ForwardingContext& ctx)
{
  const Interface& iface = node.interfaces.at(static_cast<std::size_t>(out_iface));
  Frame f = make_frame(iface.mac, dst, iface.channel, std::move(body), ctx.wire);
  return Outbound{std::move(f), out_iface};
}

/// Interest emission shared by requesters and forwarding relays. Routes
/// over the FIB when one exists, otherwise continues the flood.
void emit_interest(NodeState& node, InterestMsg msg, std::vector<Outbound>& out,
                   const ForwardingContext& ctx)
{
  switch (node.strategy.family) {
    case StrategyFamily::Immm: {
      msg.variant_header.reset();
      auto hop = node.fib.select_next_hop(msg.name, node.strategy.approach);
      if (hop) {
        node.probes[msg.name] = PendingProbe{msg.name, hop->mac, ctx.now_ms};
        out.push_back(unicast_outbound(node, hop->interface_idx, hop->mac, std::move(msg), ctx));
      }
      else {
        out.push_back(broadcast_outbound(node, std::move(msg), ctx));
      }
      break;
    }
    case StrategyFamily::Mmm: {
      auto hop = node.fib.select_next_hop(msg.name, node.strategy.approach);
      MacAddress tma = hop ? hop->mac : MacAddress::broadcast();
      if (hop)
        node.probes[msg.name] = PendingProbe{msg.name, hop->mac, ctx.now_ms};
      msg.variant_header = VariantHeader{node.interfaces.front().mac, tma};
      out.push_back(broadcast_outbound(node, std::move(msg), ctx));
      break;
    }
    case StrategyFamily::Flooding:
    case StrategyFamily::Codie:
      msg.variant_header.reset();
      out.push_back(broadcast_outbound(node, std::move(msg), ctx));
      break;
  }
}

/// Builds the Data for one segment held by a source node.
DataMsg produce_segment(const NodeState& node, const ContentName& name)
{
  DataMsg d;
  d.name = name;
  std::uint64_t last = node.total_segments() - 1;
  if (name.segment == last) {
    std::uint64_t tail = node.content_size_bytes -
                         last * static_cast<std::uint64_t>(node.segment_size_bytes);
    d.payload_len_bytes = static_cast<std::uint32_t>(tail == 0 ? node.segment_size_bytes : tail);
  }
  else {
    d.payload_len_bytes = node.segment_size_bytes;
  }
  return d;
}

/// Single Data reply towards the previous hop (CS hit or source production).
void reply_data(NodeState& node, DataMsg data, MacAddress requester_mac, int in_iface,
                std::uint32_t interest_hops, std::vector<Outbound>& out,
                const ForwardingContext& ctx)
{
  switch (node.strategy.family) {
    case StrategyFamily::Immm:
      data.variant_header.reset();
      out.push_back(unicast_outbound(node, in_iface, requester_mac, std::move(data), ctx));
      break;
    case StrategyFamily::Mmm:
      data.variant_header = VariantHeader{node.interfaces.front().mac, requester_mac};
      out.push_back(broadcast_outbound(node, std::move(data), ctx));
      break;
    case StrategyFamily::Flooding:
      data.variant_header.reset();
      out.push_back(broadcast_outbound(node, std::move(data), ctx));
      break;
    case StrategyFamily::Codie:
      data.variant_header.reset();
      data.hop_count = std::min(interest_hops, node.strategy.codie_max_hops);
      data.hops_traveled = 1;
      out.push_back(broadcast_outbound(node, std::move(data), ctx));
      break;
  }
}

bool source_can_produce(const NodeState& node, const ContentName& name)
{
  return node.role == NodeRole::Source &&
         name_matches(node.content_prefix, name) &&
         node.total_segments() > 0 && name.segment < node.total_segments();
}

} // namespace

TransitionResult on_interest(NodeState& node, const Frame& frame, int in_interface,
                             const ForwardingContext& ctx)
{
  TransitionResult result;
  const InterestMsg& interest = frame.interest();

  MacAddress tma = target_mac(node, frame);
  if (!tma.is_broadcast() && !node.owns_mac(tma))
    return result; // not for us, drop silently

  MacAddress oma = origin_mac(node, frame);
  const ContentName& name = interest.name;

  // CS first: a cached Data satisfies the Interest locally.
  if (auto cached = node.cs.lookup(name)) {
    reply_data(node, *cached, oma, in_interface, interest.hop_count, result.frames, ctx);
    return result;
  }

  // Source production: answer every arriving copy, so each previous hop
  // that flooded the Interest to us gets its own unicast Data.
  if (source_can_produce(node, name)) {
    node.pit.upsert(name, oma, in_interface, ctx.now_ms, interest.lifetime_ms);
    PitEntry* entry = node.pit.find(name);
    DataMsg data = produce_segment(node, name);
    for (const PitInRecord& rec : entry->in_records)
      reply_data(node, data, rec.mac, rec.interface_idx, interest.hop_count, result.frames, ctx);
    node.pit.erase(name);
    node.cs.insert(name, data, ctx.now_ms);
    return result;
  }

  // PIT: an existing entry means the request is already on its way.
  if (PitEntry* entry = node.pit.find(name)) {
    if (entry->seen_nonces.count(interest.nonce) > 0)
      result.loop_detected = true;
    entry->seen_nonces.insert(interest.nonce);
    node.pit.upsert(name, oma, in_interface, ctx.now_ms, interest.lifetime_ms,
                    !tma.is_broadcast());
    return result;
  }

  node.pit.upsert(name, oma, in_interface, ctx.now_ms, interest.lifetime_ms);
  node.pit.find(name)->seen_nonces.insert(interest.nonce);

  switch (node.strategy.family) {
    case StrategyFamily::Immm:
    case StrategyFamily::Mmm: {
      if (tma.is_broadcast()) {
        // Discovery flood: drop our stale route for this prefix and keep
        // flooding, so the periodic rediscovery rebuilds paths end-to-end.
        if (node.fib.longest_prefix_match(name) != nullptr)
          fib_clear(node, ctx, prefix_of(name));
        InterestMsg fwd = interest;
        if (node.strategy.family == StrategyFamily::Mmm)
          fwd.variant_header =
              VariantHeader{node.interfaces.front().mac, MacAddress::broadcast()};
        else
          fwd.variant_header.reset();
        result.frames.push_back(broadcast_outbound(node, std::move(fwd), ctx));
      }
      else {
        InterestMsg fwd = interest;
        emit_interest(node, std::move(fwd), result.frames, ctx);
      }
      break;
    }
    case StrategyFamily::Flooding: {
      InterestMsg fwd = interest;
      result.frames.push_back(broadcast_outbound(node, std::move(fwd), ctx));
      break;
    }
    case StrategyFamily::Codie: {
      if (interest.hop_count < node.strategy.codie_max_hops) {
        InterestMsg fwd = interest;
        fwd.hop_count = interest.hop_count + 1;
        result.frames.push_back(broadcast_outbound(node, std::move(fwd), ctx));
      }
      break;
    }
  }
  return result;
}

TransitionResult on_data(NodeState& node, const Frame& frame, int in_interface,
                         const ForwardingContext& ctx)
{
  TransitionResult result;
  const DataMsg& data = frame.data();
  const ContentName& name = data.name;

  PitEntry* entry = node.pit.find(name);
  if (entry == nullptr)
    return result; // no pending request, drop

  MacAddress oma = origin_mac(node, frame);

  if (node.strategy.family == StrategyFamily::Flooding ||
      node.strategy.family == StrategyFamily::Codie) {
    node.cs.insert(name, data, ctx.now_ms);
    if (node.role == NodeRole::Requester) {
      result.satisfaction = Satisfaction{name, entry->satisfied};
      entry->satisfied = true;
      return result;
    }
    if (node.strategy.family == StrategyFamily::Flooding ||
        codie_data_gate(node, data, data.hops_traveled) == CodieGate::Forward) {
      // one broadcast copy per dependent in-record, never unicast
      for (const PitInRecord& rec : entry->in_records) {
        if (!rec.requested_through_us)
          continue;
        DataMsg fwd = data;
        if (node.strategy.family == StrategyFamily::Codie)
          fwd.hops_traveled = data.hops_traveled + 1;
        result.frames.push_back(broadcast_outbound(node, std::move(fwd), ctx));
      }
    }
    node.pit.erase(name);
    return result;
  }

  // iMMM / MMM, mirroring the intermediate-node Data procedure.
  MacAddress tma = target_mac(node, frame);
  NamePrefix prefix = prefix_of(name);

  if (!node.owns_mac(tma)) {
    // Overheard Data still teaches us the route towards the content.
    double latency = ctx.now_ms - entry->created_at_ms;
    const FibNextHop& hop = node.fib.upsert_next_hop(prefix, oma, latency, in_interface);
    note_fib_add(node, ctx, prefix, hop);
    return result;
  }

  double latency;
  if (auto probe = node.probes.find(name); probe != node.probes.end()) {
    latency = ctx.now_ms - probe->second.sent_at_ms;
    node.probes.erase(probe);
  }
  else {
    // Flooding phase: measure from the moment the request passed through us.
    latency = ctx.now_ms - entry->created_at_ms;
  }
  const FibNextHop& hop = node.fib.upsert_next_hop(prefix, oma, latency, in_interface);
  note_fib_add(node, ctx, prefix, hop);

  node.cs.insert(name, data, ctx.now_ms);

  if (node.role == NodeRole::Requester) {
    // Keep the entry alive so Data copies arriving over other paths also
    // land in the FIB; that is what fills the table with multiple hops.
    result.satisfaction = Satisfaction{name, entry->satisfied};
    entry->satisfied = true;
    return result;
  }

  // Downstream delivery follows the PIT records of previous hops that
  // requested through us; overheard-flood aggregations have their own
  // pending copies elsewhere and take no frame.
  for (const PitInRecord& rec : entry->in_records) {
    if (!rec.requested_through_us)
      continue;
    DataMsg fwd = data;
    if (node.strategy.family == StrategyFamily::Mmm) {
      fwd.variant_header = VariantHeader{node.interfaces.front().mac, rec.mac};
      result.frames.push_back(broadcast_outbound(node, std::move(fwd), ctx));
    }
    else {
      fwd.variant_header.reset();
      result.frames.push_back(
          unicast_outbound(node, rec.interface_idx, rec.mac, std::move(fwd), ctx));
    }
  }
  node.pit.erase(name);
  return result;
}

namespace {

std::vector<Outbound> emit_request(NodeState& node, const ContentName& name,
                                   std::uint32_t lifetime_ms, const ForwardingContext& ctx,
                                   std::uint32_t nonce)
{
  std::vector<Outbound> out;
  node.pit.upsert(name, node.interfaces.front().mac, 0, ctx.now_ms, lifetime_ms);
  node.pit.find(name)->seen_nonces.insert(nonce);

  InterestMsg msg;
  msg.name = name;
  msg.lifetime_ms = lifetime_ms;
  msg.nonce = nonce;
  if (node.strategy.family == StrategyFamily::Codie)
    msg.hop_count = 1;
  emit_interest(node, std::move(msg), out, ctx);
  return out;
}

} // namespace

std::vector<Outbound> requester_tick(NodeState& node, std::uint64_t tick_idx,
                                     const RequesterSchedule& schedule,
                                     const ForwardingContext& ctx, std::uint32_t nonce)
{
  ContentName name;
  name.prefix = schedule.content_prefix.components;
  name.segment = schedule.total_segments > 0 ? tick_idx % schedule.total_segments : 0;

  if (uses_fib(node.strategy.family) && schedule.rediscovery_every_ticks > 0 &&
      tick_idx % schedule.rediscovery_every_ticks == 0) {
    fib_clear(node, ctx, schedule.content_prefix);
  }
  return emit_request(node, name, schedule.lifetime_ms, ctx, nonce);
}

std::vector<Outbound> lifetime_expiry(NodeState& node, const ContentName& name,
                                      std::uint32_t lifetime_ms,
                                      const ForwardingContext& ctx, std::uint32_t nonce)
{
  // The route just failed to deliver for a whole lifetime: treat it as
  // unavailable, so the retransmission goes out as a discovery flood and
  // rebuilds the path immediately instead of waiting for the periodic tick.
  if (uses_fib(node.strategy.family) && node.fib.longest_prefix_match(name) != nullptr)
    fib_clear(node, ctx, prefix_of(name));
  return emit_request(node, name, lifetime_ms, ctx, nonce);
}

CodieGate codie_data_gate(const NodeState&, const DataMsg& data, std::uint32_t hops_traveled)
{
  return hops_traveled < data.hop_count ? CodieGate::Forward : CodieGate::Discard;
}

} // namespace vndn
