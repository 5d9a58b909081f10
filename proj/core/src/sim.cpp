#include "vndn/sim.hpp"

#include "vndn/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <queue>
#include <random>
#include <stdexcept>

namespace vndn {

// -------------------------------------------------------------------- TxQueue

std::optional<double> TxQueue::enqueue(double now_ms, std::uint32_t size_bytes, double rate_bps)
{
  while (!m_completions.empty() && m_completions.front() <= now_ms)
    m_completions.pop_front();
  if (m_completions.size() >= m_depth) {
    ++m_dropped;
    return std::nullopt;
  }
  double start = std::max(now_ms, m_busy_until_ms);
  double completion = start + static_cast<double>(size_bytes) * 8000.0 / rate_bps;
  m_busy_until_ms = completion;
  m_completions.push_back(completion);
  ++m_enqueued;
  ++m_transmitted;
  return completion;
}

std::size_t TxQueue::pending(double now_ms) const
{
  while (!m_completions.empty() && m_completions.front() <= now_ms)
    m_completions.pop_front();
  return m_completions.size();
}

// ------------------------------------------------------------------ Simulator

namespace {

struct EventAfter {
  bool operator()(const Event& a, const Event& b) const
  {
    if (a.fire_at_ms != b.fire_at_ms)
      return a.fire_at_ms > b.fire_at_ms;
    return a.seq > b.seq;
  }
};

class Simulator : public NodeHooks {
public:
  Simulator(const ScenarioConfig& cfg, const RunOptions& opts)
    : m_cfg(cfg)
    , m_opts(opts)
    , m_duration_ms(cfg.duration_s * 1000.0)
    , m_model(cfg.build_mobility(cfg.duration_s + 1.0))
    , m_rng(cfg.seed * 0x9E3779B97F4A7C15ull + 0x2545F4914F6CDD1Dull)
  {
  }

  RunResult run();

  void on_fib_add(const NodeState& node, const NamePrefix& prefix,
                  const FibNextHop& hop) override
  {
    if (m_opts.collect_trace) {
      char buf[192];
      std::snprintf(buf, sizeof(buf), "%.6f fib_add n%d %s %s %.6f %llu %llu", m_now,
                    node.node_id, prefix.to_string().c_str(), hop.mac.to_string().c_str(),
                    hop.latency_ms, static_cast<unsigned long long>(hop.counter),
                    static_cast<unsigned long long>(hop.insertion_seq));
      m_result.trace_lines.emplace_back(buf);
    }
  }

  void on_fib_clear(const NodeState& node, const NamePrefix& prefix,
                    std::size_t removed) override
  {
    if (m_opts.collect_trace) {
      char buf[160];
      std::snprintf(buf, sizeof(buf), "%.6f fib_clear n%d %s %zu", m_now, node.node_id,
                    prefix.to_string().c_str(), removed);
      m_result.trace_lines.emplace_back(buf);
    }
  }

private:
  void setup();
  void schedule(Event ev);
  void trace(const char* kind, int node, const std::string& detail);
  double rand01() { return static_cast<double>(m_rng() >> 11) * 0x1.0p-53; }
  std::uint32_t next_nonce() { return static_cast<std::uint32_t>(m_rng()); }

  void handle_app_tick(const Event& ev);
  void handle_delivery(const Event& ev);
  void handle_pit_expiry(const Event& ev);
  void refresh_positions();

  void dispatch(NodeState& node, std::vector<Outbound>&& frames);
  void transmit(NodeState& node, int iface_idx, Frame frame);
  void note_request_tx(const ContentName& name);
  void maybe_schedule_pit_expiry(NodeState& node, const ContentName& name);
  ForwardingContext make_ctx() { return ForwardingContext{m_cfg.wire, m_now, this}; }

  const ScenarioConfig& m_cfg;
  RunOptions m_opts;
  double m_duration_ms;
  MobilityModel m_model;
  std::mt19937_64 m_rng;

  std::vector<NodeState> m_nodes;
  std::vector<std::vector<TxQueue>> m_queues;        // [node][iface]
  std::vector<std::optional<Position>> m_positions;  // refreshed on MobilityUpdate
  std::priority_queue<Event, std::vector<Event>, EventAfter> m_events;
  std::uint64_t m_next_seq = 0;
  double m_now = 0;

  RequesterSchedule m_schedule;
  std::map<ContentName, SatisfactionRecord> m_records;
  std::uint64_t m_duplicates = 0;
  std::uint64_t m_frames_tx = 0;
  std::uint64_t m_frames_dropped = 0;
  RunResult m_result;
};

void Simulator::schedule(Event ev)
{
  ev.seq = m_next_seq++;
  m_events.push(std::move(ev));
}

void Simulator::trace(const char* kind, int node, const std::string& detail)
{
  if (!m_opts.collect_trace)
    return;
  char head[64];
  if (node >= 0)
    std::snprintf(head, sizeof(head), "%.6f %s n%d ", m_now, kind, node);
  else
    std::snprintf(head, sizeof(head), "%.6f %s - ", m_now, kind);
  m_result.trace_lines.push_back(head + detail);
}

void Simulator::setup()
{
  std::size_t n = m_model.node_count();
  int source = m_cfg.effective_source_id();
  StrategyKind strategy =
      StrategyKind::parse(m_cfg.strategy, m_cfg.approach, m_cfg.codie_max_hops);
  NamePrefix prefix = NamePrefix::parse(m_cfg.content_prefix);

  m_nodes.reserve(n);
  m_queues.resize(n);
  m_positions.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    NodeState node;
    node.node_id = static_cast<int>(i);
    for (int k = 0; k < m_cfg.interfaces_per_node; ++k) {
      int channel = m_cfg.channels[static_cast<std::size_t>(k) % m_cfg.channels.size()];
      MacAddress mac = MacAddress::from_value(
          static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(m_cfg.interfaces_per_node) +
          static_cast<std::uint64_t>(k) + 1);
      node.interfaces.push_back(Interface{mac, channel});
    }
    node.cs = ContentStore(m_cfg.cs_capacity);
    node.strategy = strategy;
    node.content_prefix = prefix;
    node.content_size_bytes = m_cfg.content_size_bytes;
    node.segment_size_bytes = m_cfg.segment_size_bytes;
    if (static_cast<int>(i) == m_cfg.requester_id)
      node.role = NodeRole::Requester;
    else if (static_cast<int>(i) == source)
      node.role = NodeRole::Source;
    else
      node.role = NodeRole::Relay;
    m_nodes.push_back(std::move(node));
    m_queues[i].assign(static_cast<std::size_t>(m_cfg.interfaces_per_node),
                       TxQueue(m_cfg.tx_queue_depth));
  }

  double tick_ms = 1000.0 / m_cfg.interest_rate_hz;
  m_schedule.content_prefix = prefix;
  m_schedule.total_segments =
      (m_cfg.content_size_bytes + m_cfg.segment_size_bytes - 1) / m_cfg.segment_size_bytes;
  m_schedule.lifetime_ms = m_cfg.interest_lifetime_ms;
  m_schedule.rediscovery_every_ticks =
      m_cfg.rediscovery_period_ms > 0
          ? static_cast<std::uint64_t>(std::llround(m_cfg.rediscovery_period_ms / tick_ms))
          : 0;

  refresh_positions();

  // SimEnd goes in first: same-time events scheduled later lose the tie.
  schedule(Event{m_duration_ms, 0, EventKind::SimEnd, -1, 0, nullptr, {}, 0});
  if (m_duration_ms > 0) {
    if (m_schedule.rediscovery_every_ticks > 0)
      schedule(Event{0, 0, EventKind::RediscoveryTick, m_cfg.requester_id, 0, nullptr, {}, 0});
    schedule(Event{0, 0, EventKind::AppTick, m_cfg.requester_id, 0, nullptr, {}, 0});
    if (m_cfg.mobility_update_period_ms > 0)
      schedule(Event{m_cfg.mobility_update_period_ms, 0, EventKind::MobilityUpdate, -1, 0,
                     nullptr, {}, 0});
  }
}

void Simulator::refresh_positions()
{
  for (std::size_t i = 0; i < m_positions.size(); ++i)
    m_positions[i] = m_model.position_at(i, m_now / 1000.0);
}

void Simulator::note_request_tx(const ContentName& name)
{
  auto it = m_records.find(name);
  if (it == m_records.end()) {
    SatisfactionRecord rec;
    rec.name = name;
    rec.sent_at_ms = m_now;
    rec.transmissions = 1;
    m_records.emplace(name, rec);
  }
  else {
    it->second.transmissions += 1;
    it->second.sent_at_ms = m_now;
  }
}

void Simulator::maybe_schedule_pit_expiry(NodeState& node, const ContentName& name)
{
  if (const PitEntry* entry = node.pit.find(name))
    schedule(Event{entry->expiry_ms, 0, EventKind::PitExpiry, node.node_id, 0, nullptr, name, 0});
}

void Simulator::handle_app_tick(const Event& ev)
{
  NodeState& node = m_nodes[static_cast<std::size_t>(ev.node)];
  ContentName name;
  name.prefix = m_schedule.content_prefix.components;
  name.segment = m_schedule.total_segments > 0 ? ev.tick % m_schedule.total_segments : 0;
  trace("app_tick", ev.node, name.to_string());

  auto frames = requester_tick(node, ev.tick, m_schedule, make_ctx(), next_nonce());
  note_request_tx(name);
  schedule(Event{m_now + m_cfg.interest_lifetime_ms, 0, EventKind::PitExpiry, ev.node, 0,
                 nullptr, name, 0});
  dispatch(node, std::move(frames));

  double tick_ms = 1000.0 / m_cfg.interest_rate_hz;
  double next = static_cast<double>(ev.tick + 1) * tick_ms;
  if (next < m_duration_ms)
    schedule(Event{next, 0, EventKind::AppTick, ev.node, 0, nullptr, {}, ev.tick + 1});
}

void Simulator::handle_pit_expiry(const Event& ev)
{
  NodeState& node = m_nodes[static_cast<std::size_t>(ev.node)];
  PitEntry* entry = node.pit.find(ev.name);

  if (node.role == NodeRole::Requester) {
    auto rec = m_records.find(ev.name);
    bool satisfied = rec != m_records.end() && rec->second.received_at_ms.has_value();
    if (entry == nullptr)
      return;
    if (satisfied) {
      // Satisfied entries are only kept to absorb late Data copies; the
      // retransmission deadline doubles as their cleanup point.
      node.pit.erase(ev.name);
      node.probes.erase(ev.name);
      return;
    }
    trace("pit_expire", ev.node, ev.name.to_string());
    node.pit.erase(ev.name);
    node.probes.erase(ev.name);
    auto frames = lifetime_expiry(node, ev.name, m_cfg.interest_lifetime_ms, make_ctx(),
                                  next_nonce());
    note_request_tx(ev.name);
    schedule(Event{m_now + m_cfg.interest_lifetime_ms, 0, EventKind::PitExpiry, ev.node, 0,
                   nullptr, ev.name, 0});
    dispatch(node, std::move(frames));
    return;
  }

  if (entry == nullptr)
    return;
  if (entry->expiry_ms > m_now) {
    schedule(Event{entry->expiry_ms, 0, EventKind::PitExpiry, ev.node, 0, nullptr, ev.name, 0});
    return;
  }
  trace("pit_expire", ev.node, ev.name.to_string());
  node.pit.erase(ev.name);
  node.probes.erase(ev.name);
}

void Simulator::handle_delivery(const Event& ev)
{
  NodeState& node = m_nodes[static_cast<std::size_t>(ev.node)];
  const Frame& frame = *ev.frame;
  if (m_opts.collect_trace) {
    char buf[224];
    const char* kind = frame.is_interest() ? "I" : "D";
    std::snprintf(buf, sizeof(buf), "%.6f rx n%d %s %s %s %s", m_now, ev.node, kind,
                  frame.name().to_string().c_str(), frame.src_mac.to_string().c_str(),
                  frame.dst_mac.to_string().c_str());
    m_result.trace_lines.emplace_back(buf);
  }

  bool had_pit = frame.is_interest() && node.pit.find(frame.name()) != nullptr;
  TransitionResult result = frame.is_interest()
                                ? on_interest(node, frame, ev.interface_idx, make_ctx())
                                : on_data(node, frame, ev.interface_idx, make_ctx());
  if (result.loop_detected)
    ++m_result.loops_detected;

  if (result.satisfaction) {
    auto it = m_records.find(result.satisfaction->name);
    if (it != m_records.end()) {
      if (it->second.received_at_ms)
        ++m_duplicates;
      else
        it->second.received_at_ms = m_now;
    }
  }

  if (frame.is_interest() && !had_pit)
    maybe_schedule_pit_expiry(node, frame.name());
  dispatch(node, std::move(result.frames));
}

void Simulator::dispatch(NodeState& node, std::vector<Outbound>&& frames)
{
  for (Outbound& out : frames) {
    if (out.out_interface) {
      transmit(node, *out.out_interface, std::move(out.frame));
    }
    else {
      for (std::size_t k = 0; k < node.interfaces.size(); ++k) {
        Frame copy = out.frame;
        copy.src_mac = node.interfaces[k].mac;
        copy.channel = node.interfaces[k].channel;
        // the in-message OMA names the transmitting interface
        if (copy.is_interest() && copy.interest().variant_header)
          copy.interest().variant_header->oma = copy.src_mac;
        if (copy.is_data() && copy.data().variant_header)
          copy.data().variant_header->oma = copy.src_mac;
        transmit(node, static_cast<int>(k), std::move(copy));
      }
    }
  }
}

void Simulator::transmit(NodeState& node, int iface_idx, Frame frame)
{
  TxQueue& queue = m_queues[static_cast<std::size_t>(node.node_id)][static_cast<std::size_t>(iface_idx)];
  auto completion = queue.enqueue(m_now, frame.size_bytes, m_cfg.radio.data_rate_bps);
  const char* kind = frame.is_interest() ? "I" : "D";
  if (!completion) {
    ++m_frames_dropped;
    if (m_opts.collect_trace) {
      char buf[192];
      std::snprintf(buf, sizeof(buf), "%.6f txdrop n%d %s %s", m_now, node.node_id, kind,
                    frame.name().to_string().c_str());
      m_result.trace_lines.emplace_back(buf);
    }
    return;
  }
  ++m_frames_tx;

  MacAddress oma = frame.src_mac;
  MacAddress tma = frame.dst_mac;
  std::uint32_t hops = 0;
  std::uint32_t budget = 0;
  if (frame.is_interest()) {
    if (frame.interest().variant_header) {
      oma = frame.interest().variant_header->oma;
      tma = frame.interest().variant_header->tma;
    }
    hops = frame.interest().hop_count;
  }
  else {
    if (frame.data().variant_header) {
      oma = frame.data().variant_header->oma;
      tma = frame.data().variant_header->tma;
    }
    hops = frame.data().hops_traveled;
    budget = frame.data().hop_count;
  }
  if (m_opts.collect_transmissions) {
    m_result.transmissions.push_back(TxRecord{m_now, node.node_id, iface_idx,
                                              frame.is_interest(), frame.name(), oma, tma, hops,
                                              budget});
  }
  if (m_opts.collect_trace) {
    char buf[224];
    std::snprintf(buf, sizeof(buf), "%.6f tx n%d %s %s %s %s", m_now, node.node_id, kind,
                  frame.name().to_string().c_str(), oma.to_string().c_str(),
                  tma.to_string().c_str());
    m_result.trace_lines.emplace_back(buf);
  }

  auto sender_pos = m_positions[static_cast<std::size_t>(node.node_id)];
  if (!sender_pos)
    return; // transmitter is not on the map yet; the frame reaches nobody

  auto shared = std::make_shared<const Frame>(std::move(frame));
  for (std::size_t other = 0; other < m_nodes.size(); ++other) {
    if (static_cast<int>(other) == node.node_id)
      continue;
    const auto& pos = m_positions[other];
    if (!pos)
      continue;
    double dx = pos->x_m - sender_pos->x_m;
    double dy = pos->y_m - sender_pos->y_m;
    double dist = std::sqrt(dx * dx + dy * dy);
    if (dist > m_cfg.radio.range_m)
      continue;
    int rx_iface = -1;
    const NodeState& peer = m_nodes[other];
    for (std::size_t k = 0; k < peer.interfaces.size(); ++k) {
      if (peer.interfaces[k].channel == shared->channel) {
        rx_iface = static_cast<int>(k);
        break;
      }
    }
    if (rx_iface < 0)
      continue;
    double arrival = *completion + dist * m_cfg.radio.prop_delay_us_per_m * 1e-3;
    // half-duplex: the incoming frame occupies the peer's radio either way
    m_queues[other][static_cast<std::size_t>(rx_iface)].block_until(arrival);
    // Addressed unicast stands in for an acknowledged 802.11 exchange and
    // is not subject to the random loss; broadcast and overheard frames are.
    bool acked_unicast = !shared->dst_mac.is_broadcast() &&
                         peer.interfaces[static_cast<std::size_t>(rx_iface)].mac ==
                             shared->dst_mac;
    if (!acked_unicast && m_cfg.radio.loss_prob > 0 && rand01() < m_cfg.radio.loss_prob) {
      ++m_frames_dropped;
      continue;
    }
    schedule(Event{arrival, 0, EventKind::FrameDelivery, static_cast<int>(other), rx_iface,
                   shared, {}, 0});
  }
}

RunResult Simulator::run()
{
  setup();

  while (!m_events.empty()) {
    Event ev = m_events.top();
    m_events.pop();
    m_now = ev.fire_at_ms;

    if (ev.kind == EventKind::SimEnd) {
      trace("sim_end", -1, "-");
      break;
    }
    switch (ev.kind) {
      case EventKind::AppTick:
        handle_app_tick(ev);
        break;
      case EventKind::FrameDelivery:
        handle_delivery(ev);
        break;
      case EventKind::PitExpiry:
        handle_pit_expiry(ev);
        break;
      case EventKind::RediscoveryTick:
        trace("rediscovery", ev.node, "-");
        schedule(Event{m_now + m_cfg.rediscovery_period_ms, 0, EventKind::RediscoveryTick,
                       ev.node, 0, nullptr, {}, 0});
        break;
      case EventKind::MobilityUpdate:
        refresh_positions();
        trace("mobility_update", -1, "-");
        schedule(Event{m_now + m_cfg.mobility_update_period_ms, 0, EventKind::MobilityUpdate, -1,
                       0, nullptr, {}, 0});
        break;
      case EventKind::SimEnd:
        break;
    }
  }

  std::vector<SatisfactionRecord> records;
  records.reserve(m_records.size());
  for (auto& [name, rec] : m_records)
    records.push_back(rec);

  m_result.report = summarize(records, m_duplicates, m_frames_tx, m_frames_dropped);
  m_result.report.strategy = m_cfg.strategy;
  m_result.report.approach = m_cfg.approach;
  m_result.report.lifetime_ms = m_cfg.interest_lifetime_ms;
  m_result.report.nodes = m_nodes.size();
  m_result.report.seed = m_cfg.seed;
  return m_result;
}

} // namespace

RunResult run_simulation(const ScenarioConfig& config, const RunOptions& options)
{
  auto violations = config.validate();
  if (!violations.empty()) {
    std::string msg = "invalid scenario:";
    for (const auto& v : violations)
      msg += "\n  - " + v;
    throw std::invalid_argument(msg);
  }
  RunOptions opts = options;
  opts.collect_trace = opts.collect_trace || config.event_trace;
  Simulator sim(config, opts);
  return sim.run();
}

} // namespace vndn
