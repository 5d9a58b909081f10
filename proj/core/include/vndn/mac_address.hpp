#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace vndn {

/// 48-bit link-layer address. The canonical text form is six
/// colon-separated hex octets, rendered uppercase ("00:00:00:00:00:01").
struct MacAddress {
  std::array<std::uint8_t, 6> octets{};

  auto operator<=>(const MacAddress&) const = default;

  bool is_broadcast() const;
  std::string to_string() const;

  static MacAddress broadcast();
  /// Sequentially numbered address: value 1 -> 00:00:00:00:00:01.
  static MacAddress from_value(std::uint64_t value);
  std::uint64_t value() const;
};

/// Parses "XX:XX:XX:XX:XX:XX" (case-insensitive). Throws std::invalid_argument
/// naming the offending token on malformed input.
MacAddress parse_mac(const std::string& text);

} // namespace vndn

template <>
struct std::hash<vndn::MacAddress> {
  std::size_t operator()(const vndn::MacAddress& m) const noexcept {
    return std::hash<std::uint64_t>{}(m.value());
  }
};
