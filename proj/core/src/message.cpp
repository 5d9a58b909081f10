#include "vndn/message.hpp"

namespace vndn {

namespace {

std::uint32_t name_len(const ContentName& n)
{
  return static_cast<std::uint32_t>(n.to_string().size());
}

} // namespace

std::uint32_t body_size_bytes(const InterestMsg& msg, const WireSizes& s)
{
  std::uint32_t size = s.interest_base_bytes + name_len(msg.name);
  if (msg.variant_header)
    size += s.variant_header_bytes;
  return size;
}

std::uint32_t body_size_bytes(const DataMsg& msg, const WireSizes& s)
{
  std::uint32_t size = s.data_base_bytes + name_len(msg.name) + msg.payload_len_bytes;
  if (msg.variant_header)
    size += s.variant_header_bytes;
  return size;
}

Frame make_frame(MacAddress src, MacAddress dst, int channel,
                 std::variant<InterestMsg, DataMsg> body, const WireSizes& s)
{
  Frame f;
  f.src_mac = src;
  f.dst_mac = dst;
  f.channel = channel;
  f.size_bytes = s.header_overhead_bytes +
                 std::visit([&](const auto& b) { return body_size_bytes(b, s); }, body);
  f.body = std::move(body);
  return f;
}

} // namespace vndn
