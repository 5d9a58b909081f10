#include "vndn/mac_address.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace vndn {

bool MacAddress::is_broadcast() const
{
  for (auto b : octets) {
    if (b != 0xFF)
      return false;
  }
  return true;
}

std::string MacAddress::to_string() const
{
  char buf[18];
  std::snprintf(buf, sizeof(buf), "%02X:%02X:%02X:%02X:%02X:%02X",
                octets[0], octets[1], octets[2], octets[3], octets[4], octets[5]);
  return buf;
}

MacAddress MacAddress::broadcast()
{
  MacAddress m;
  m.octets.fill(0xFF);
  return m;
}

MacAddress MacAddress::from_value(std::uint64_t value)
{
  MacAddress m;
  for (int i = 5; i >= 0; --i) {
    m.octets[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(value & 0xFF);
    value >>= 8;
  }
  return m;
}

std::uint64_t MacAddress::value() const
{
  std::uint64_t v = 0;
  for (auto b : octets)
    v = (v << 8) | b;
  return v;
}

namespace {

int hex_digit(char c)
{
  if (c >= '0' && c <= '9')
    return c - '0';
  if (c >= 'a' && c <= 'f')
    return c - 'a' + 10;
  if (c >= 'A' && c <= 'F')
    return c - 'A' + 10;
  return -1;
}

} // namespace

MacAddress parse_mac(const std::string& text)
{
  std::vector<std::string> groups;
  std::string cur;
  for (char c : text) {
    if (c == ':') {
      groups.push_back(cur);
      cur.clear();
    }
    else {
      cur.push_back(c);
    }
  }
  groups.push_back(cur);

  if (groups.size() != 6)
    throw std::invalid_argument("bad MAC address \"" + text + "\": expected 6 groups, got " +
                                std::to_string(groups.size()));

  MacAddress m;
  for (std::size_t i = 0; i < 6; ++i) {
    const std::string& g = groups[i];
    if (g.size() != 2 || hex_digit(g[0]) < 0 || hex_digit(g[1]) < 0)
      throw std::invalid_argument("bad MAC address \"" + text + "\": bad group \"" + g + "\"");
    m.octets[i] = static_cast<std::uint8_t>(hex_digit(g[0]) * 16 + hex_digit(g[1]));
  }
  return m;
}

} // namespace vndn
