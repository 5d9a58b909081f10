#pragma once

#include "vndn/mac_address.hpp"
#include "vndn/name.hpp"

#include <cstdint>
#include <optional>
#include <variant>

namespace vndn {

/// MMM-VNDN carries the origin/target MAC pair as extra message fields;
/// iMMM-VNDN keeps the message untouched and addresses the frame instead.
struct VariantHeader {
  MacAddress oma;
  MacAddress tma;

  bool operator==(const VariantHeader&) const = default;
};

struct InterestMsg {
  ContentName name;
  std::uint32_t lifetime_ms = 4000;
  std::uint32_t nonce = 0;
  std::uint32_t hop_count = 0; // transmissions so far; used only by CODIE
  std::optional<VariantHeader> variant_header;

  bool operator==(const InterestMsg&) const = default;
};

struct DataMsg {
  ContentName name;
  std::uint32_t payload_len_bytes = 0;
  std::uint32_t hop_count = 0;     // CODIE dissemination budget, set by the source
  std::uint32_t hops_traveled = 0; // transmissions so far; used only by CODIE
  std::optional<VariantHeader> variant_header;

  bool operator==(const DataMsg&) const = default;
};

/// Serialized-size constants. The protocol under test never depends on
/// exact wire encodings; these only drive transmit delay.
struct WireSizes {
  std::uint32_t header_overhead_bytes = 36;
  std::uint32_t interest_base_bytes = 64;
  std::uint32_t data_base_bytes = 64;
  std::uint32_t variant_header_bytes = 12;

  bool operator==(const WireSizes&) const = default;
};

std::uint32_t body_size_bytes(const InterestMsg& msg, const WireSizes& s);
std::uint32_t body_size_bytes(const DataMsg& msg, const WireSizes& s);

/// Link-layer envelope. Under iMMM-VNDN src_mac/dst_mac are the OMA/TMA;
/// under MMM-VNDN dst_mac is always broadcast and the body's
/// variant_header carries the addressing.
struct Frame {
  MacAddress src_mac;
  MacAddress dst_mac;
  int channel = 0;
  std::variant<InterestMsg, DataMsg> body;
  std::uint32_t size_bytes = 0;

  bool is_interest() const { return std::holds_alternative<InterestMsg>(body); }
  bool is_data() const { return std::holds_alternative<DataMsg>(body); }
  const InterestMsg& interest() const { return std::get<InterestMsg>(body); }
  const DataMsg& data() const { return std::get<DataMsg>(body); }
  InterestMsg& interest() { return std::get<InterestMsg>(body); }
  DataMsg& data() { return std::get<DataMsg>(body); }

  const ContentName& name() const
  {
    return is_interest() ? interest().name : data().name;
  }
};

Frame make_frame(MacAddress src, MacAddress dst, int channel,
                 std::variant<InterestMsg, DataMsg> body, const WireSizes& s);

} // namespace vndn
