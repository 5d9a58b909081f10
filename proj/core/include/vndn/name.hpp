#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace vndn {

/// Hierarchical content name: a component prefix plus a segment index.
/// Text form is "/comp1/comp2/seg=N". Equality covers both prefix and
/// segment; prefix matching ignores the segment.
struct ContentName {
  std::vector<std::string> prefix;
  std::uint64_t segment = 0;

  auto operator<=>(const ContentName&) const = default;

  std::string to_string() const;

  /// "/a/b/seg=3" -> {{"a","b"}, 3}. Throws std::invalid_argument on
  /// malformed text (empty component, missing/bad seg suffix).
  static ContentName parse(const std::string& text);
};

/// Prefix of a ContentName without the segment, e.g. the FIB key.
struct NamePrefix {
  std::vector<std::string> components;

  auto operator<=>(const NamePrefix&) const = default;

  std::string to_string() const;
  static NamePrefix parse(const std::string& text);
};

NamePrefix prefix_of(const ContentName& name);

/// True iff entry_prefix is a component-wise prefix of name's prefix.
bool name_matches(const NamePrefix& entry_prefix, const ContentName& name);

} // namespace vndn
