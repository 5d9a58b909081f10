#pragma once

#include "vndn/mac_address.hpp"
#include "vndn/message.hpp"
#include "vndn/name.hpp"

#include <cstdint>
#include <deque>
#include <list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace vndn {

// ---------------------------------------------------------------- ContentStore

struct CsEntry {
  ContentName name;
  DataMsg data;
  double inserted_at_ms = 0;
};

/// Exact-name Data cache with FIFO eviction. Re-inserting an existing
/// name refreshes the payload without consuming extra capacity.
class ContentStore {
public:
  explicit ContentStore(std::size_t capacity = 2048)
    : m_capacity(capacity)
  {
  }

  std::optional<DataMsg> lookup(const ContentName& name) const;
  void insert(const ContentName& name, const DataMsg& data, double now_ms);
  std::size_t size() const { return m_entries.size(); }
  std::size_t capacity() const { return m_capacity; }

private:
  std::size_t m_capacity;
  std::list<CsEntry> m_entries;                              // FIFO order, oldest first
  std::map<ContentName, std::list<CsEntry>::iterator> m_index;
};

// ------------------------------------------------------------------------ PIT

struct PitInRecord {
  MacAddress mac;
  int interface_idx = 0;
  double arrival_ms = 0;
  // true when the Interest was addressed to us (or created the entry):
  // the previous hop requested through this node and awaits our Data.
  // Aggregated overheard floods leave this false; their senders have
  // pending copies of their own.
  bool requested_through_us = false;
};

struct PitEntry {
  ContentName name;
  std::vector<PitInRecord> in_records; // insertion order, no duplicate MACs
  double expiry_ms = 0;
  double created_at_ms = 0;            // when this entry (re-)entered the table
  std::set<std::uint32_t> seen_nonces;
  bool satisfied = false;              // set at a requester once Data arrived
};

enum class PitUpsertResult { Created, Aggregated };

class Pit {
public:
  /// Adds or refreshes the record for `mac`. Broadcast MACs are a contract
  /// violation. Aggregation extends expiry to max(old, now + lifetime).
  /// The creating record is always marked requested_through_us.
  PitUpsertResult upsert(const ContentName& name, MacAddress mac, int interface_idx,
                         double now_ms, double lifetime_ms, bool addressed_to_us = false);

  PitEntry* find(const ContentName& name);
  const PitEntry* find(const ContentName& name) const;
  void erase(const ContentName& name);

  /// Removes every entry with expiry_ms <= now and returns their names.
  std::vector<ContentName> expire(double now_ms);

  std::size_t size() const { return m_entries.size(); }

private:
  std::map<ContentName, PitEntry> m_entries;
};

// ------------------------------------------------------------------------ FIB

struct FibNextHop {
  MacAddress mac;
  double latency_ms = 0;          // always the last measured value
  std::uint64_t counter = 0;      // times this hop was selected for forwarding
  std::uint64_t insertion_seq = 0;
  int interface_idx = 0;          // interface the hop was learned on
};

struct FibEntry {
  NamePrefix prefix;
  std::vector<FibNextHop> next_hops; // ordered by insertion_seq
};

/// FIB keyed by name prefix; next hops carry the latency/counter fields
/// used by the three path selection approaches.
class Fib {
public:
  /// New hops start with counter 0 and a fresh insertion_seq; re-learning
  /// overwrites latency and refreshes insertion_seq, preserving the counter.
  FibNextHop& upsert_next_hop(const NamePrefix& prefix, MacAddress mac,
                              double latency_ms, int interface_idx);

  /// Picks a next hop per the given approach and increments its counter.
  ///   1: lowest counter, ties -> last added
  ///   2: lowest latency, ties -> last added
  ///   3: lowest counter, ties -> lowest latency, ties -> last added
  /// Returns nullopt when no route exists (caller falls back to flooding).
  std::optional<FibNextHop> select_next_hop(const ContentName& name, int approach);

  /// Removes the entry for `prefix`; returns the number of removed hops.
  std::size_t clear_prefix(const NamePrefix& prefix);

  const FibEntry* longest_prefix_match(const ContentName& name) const;
  FibEntry* find(const NamePrefix& prefix);
  std::size_t entry_count() const { return m_entries.size(); }

  /// One line per hop: "prefix mac latency_ms counter seq".
  std::string debug_dump() const;

private:
  std::map<NamePrefix, FibEntry> m_entries;
  std::uint64_t m_next_seq = 1;
};

} // namespace vndn
