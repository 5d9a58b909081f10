#include "vndn/tables.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace vndn {

// ---------------------------------------------------------------- ContentStore

std::optional<DataMsg> ContentStore::lookup(const ContentName& name) const
{
  auto it = m_index.find(name);
  if (it == m_index.end())
    return std::nullopt;
  return it->second->data;
}

void ContentStore::insert(const ContentName& name, const DataMsg& data, double now_ms)
{
  if (m_capacity == 0)
    return;
  auto it = m_index.find(name);
  if (it != m_index.end()) {
    it->second->data = data;
    it->second->inserted_at_ms = now_ms;
    return;
  }
  if (m_entries.size() >= m_capacity) {
    m_index.erase(m_entries.front().name);
    m_entries.pop_front();
  }
  m_entries.push_back(CsEntry{name, data, now_ms});
  m_index[name] = std::prev(m_entries.end());
}

// ------------------------------------------------------------------------ PIT

PitUpsertResult Pit::upsert(const ContentName& name, MacAddress mac, int interface_idx,
                            double now_ms, double lifetime_ms, bool addressed_to_us)
{
  if (mac.is_broadcast())
    throw std::invalid_argument("pit upsert: broadcast MAC is not a valid in-record");

  auto it = m_entries.find(name);
  if (it == m_entries.end()) {
    PitEntry entry;
    entry.name = name;
    entry.in_records.push_back(PitInRecord{mac, interface_idx, now_ms, true});
    entry.expiry_ms = now_ms + lifetime_ms;
    entry.created_at_ms = now_ms;
    m_entries.emplace(name, std::move(entry));
    return PitUpsertResult::Created;
  }

  PitEntry& entry = it->second;
  auto rec = std::find_if(entry.in_records.begin(), entry.in_records.end(),
                          [&](const PitInRecord& r) { return r.mac == mac; });
  if (rec != entry.in_records.end()) {
    rec->arrival_ms = now_ms;
    rec->interface_idx = interface_idx;
    rec->requested_through_us = rec->requested_through_us || addressed_to_us;
  }
  else {
    entry.in_records.push_back(PitInRecord{mac, interface_idx, now_ms, addressed_to_us});
  }
  entry.expiry_ms = std::max(entry.expiry_ms, now_ms + lifetime_ms);
  return PitUpsertResult::Aggregated;
}

PitEntry* Pit::find(const ContentName& name)
{
  auto it = m_entries.find(name);
  return it == m_entries.end() ? nullptr : &it->second;
}

const PitEntry* Pit::find(const ContentName& name) const
{
  auto it = m_entries.find(name);
  return it == m_entries.end() ? nullptr : &it->second;
}

void Pit::erase(const ContentName& name)
{
  m_entries.erase(name);
}

std::vector<ContentName> Pit::expire(double now_ms)
{
  std::vector<ContentName> expired;
  for (auto it = m_entries.begin(); it != m_entries.end();) {
    if (it->second.expiry_ms <= now_ms) {
      expired.push_back(it->first);
      it = m_entries.erase(it);
    }
    else {
      ++it;
    }
  }
  return expired;
}

// ------------------------------------------------------------------------ FIB

FibNextHop& Fib::upsert_next_hop(const NamePrefix& prefix, MacAddress mac,
                                 double latency_ms, int interface_idx)
{
  if (mac.is_broadcast())
    throw std::invalid_argument("fib upsert: broadcast MAC is not a valid next hop");

  FibEntry& entry = m_entries.try_emplace(prefix, FibEntry{prefix, {}}).first->second;
  auto hop = std::find_if(entry.next_hops.begin(), entry.next_hops.end(),
                          [&](const FibNextHop& h) { return h.mac == mac; });
  if (hop != entry.next_hops.end()) {
    hop->latency_ms = latency_ms;
    hop->insertion_seq = m_next_seq++;
    hop->interface_idx = interface_idx;
    // keep next_hops ordered by insertion_seq
    std::rotate(hop, hop + 1, entry.next_hops.end());
    return entry.next_hops.back();
  }
  entry.next_hops.push_back(FibNextHop{mac, latency_ms, 0, m_next_seq++, interface_idx});
  return entry.next_hops.back();
}

std::optional<FibNextHop> Fib::select_next_hop(const ContentName& name, int approach)
{
  FibEntry* entry = nullptr;
  // longest prefix match, mutable
  std::size_t best_len = 0;
  for (auto& [prefix, e] : m_entries) {
    if (!e.next_hops.empty() && name_matches(prefix, name) &&
        prefix.components.size() >= best_len) {
      best_len = prefix.components.size();
      entry = &e;
    }
  }
  if (entry == nullptr)
    return std::nullopt;

  auto newer = [](const FibNextHop& a, const FibNextHop& b) {
    return a.insertion_seq > b.insertion_seq;
  };
  FibNextHop* best = &entry->next_hops.front();
  for (auto& hop : entry->next_hops) {
    switch (approach) {
      case 1:
        if (hop.counter < best->counter ||
            (hop.counter == best->counter && newer(hop, *best)))
          best = &hop;
        break;
      case 2:
        if (hop.latency_ms < best->latency_ms ||
            (hop.latency_ms == best->latency_ms && newer(hop, *best)))
          best = &hop;
        break;
      case 3:
        if (hop.counter < best->counter ||
            (hop.counter == best->counter &&
             (hop.latency_ms < best->latency_ms ||
              (hop.latency_ms == best->latency_ms && newer(hop, *best)))))
          best = &hop;
        break;
      default:
        throw std::invalid_argument("path selection approach must be 1, 2 or 3");
    }
  }
  best->counter += 1;
  return *best;
}

std::size_t Fib::clear_prefix(const NamePrefix& prefix)
{
  auto it = m_entries.find(prefix);
  if (it == m_entries.end())
    return 0;
  std::size_t hops = it->second.next_hops.size();
  m_entries.erase(it);
  return hops;
}

const FibEntry* Fib::longest_prefix_match(const ContentName& name) const
{
  const FibEntry* best = nullptr;
  std::size_t best_len = 0;
  for (const auto& [prefix, e] : m_entries) {
    if (!e.next_hops.empty() && name_matches(prefix, name) &&
        prefix.components.size() >= best_len) {
      best_len = prefix.components.size();
      best = &e;
    }
  }
  return best;
}

FibEntry* Fib::find(const NamePrefix& prefix)
{
  auto it = m_entries.find(prefix);
  return it == m_entries.end() ? nullptr : &it->second;
}

std::string Fib::debug_dump() const
{
  std::string out;
  for (const auto& [prefix, e] : m_entries) {
    for (const auto& hop : e.next_hops) {
      char line[160];
      std::snprintf(line, sizeof(line), "%s %s %.6f %llu %llu\n",
                    prefix.to_string().c_str(), hop.mac.to_string().c_str(),
                    hop.latency_ms,
                    static_cast<unsigned long long>(hop.counter),
                    static_cast<unsigned long long>(hop.insertion_seq));
      out += line;
    }
  }
  return out;
}

} // namespace vndn
