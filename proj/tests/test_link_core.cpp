#include <doctest.h>

#include <stdexcept>

#include "vndn/mac_address.hpp"
#include "vndn/message.hpp"
#include "vndn/name.hpp"

#include <random>

using namespace vndn;

TEST_CASE("parse_mac accepts the walkthrough addresses")
{
  MacAddress a = parse_mac("00:00:00:00:00:01");
  CHECK(a.octets == std::array<std::uint8_t, 6>{0, 0, 0, 0, 0, 1});
  CHECK(a.to_string() == "00:00:00:00:00:01");
  CHECK_FALSE(a.is_broadcast());

  MacAddress bcast = parse_mac("FF:FF:FF:FF:FF:FF");
  CHECK(bcast.is_broadcast());
  CHECK(bcast == MacAddress::broadcast());

  // lowercase parses, render is uppercase
  CHECK(parse_mac("ab:cd:ef:01:23:45").to_string() == "AB:CD:EF:01:23:45");
}

TEST_CASE("parse_mac rejects malformed input naming the token")
{
  CHECK_THROWS_WITH_AS(parse_mac("00:00:00:00:00"),
                       doctest::Contains("expected 6 groups, got 5"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_mac("00:00:00:00:00:zz"), doctest::Contains("\"zz\""),
                       std::invalid_argument);
  CHECK_THROWS_AS(parse_mac("00:00:00:00:00:001"), std::invalid_argument);
  CHECK_THROWS_AS(parse_mac(""), std::invalid_argument);
}

TEST_CASE("mac parse/render round-trips for random addresses")
{
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    MacAddress m;
    for (auto& b : m.octets)
      b = static_cast<std::uint8_t>(rng() & 0xFF);
    CHECK(parse_mac(m.to_string()) == m);
  }
}

TEST_CASE("content name text form and equality")
{
  ContentName n;
  n.prefix = {"video", "hd"};
  n.segment = 3;
  CHECK(n.to_string() == "/video/hd/seg=3");
  CHECK(ContentName::parse("/video/hd/seg=3") == n);

  ContentName other = n;
  other.segment = 4;
  CHECK(n != other);
  CHECK(prefix_of(n) == prefix_of(other));

  CHECK_THROWS_AS(ContentName::parse("/video/hd"), std::invalid_argument);
  CHECK_THROWS_AS(ContentName::parse("video/seg=1"), std::invalid_argument);
  CHECK_THROWS_AS(ContentName::parse("/video//seg=1"), std::invalid_argument);
}

TEST_CASE("name_matches is component-wise prefix matching")
{
  NamePrefix video = NamePrefix::parse("/video");
  NamePrefix video_hd = NamePrefix::parse("/video/hd");
  ContentName seg3 = ContentName::parse("/video/seg=3");

  CHECK(name_matches(video, seg3));
  CHECK_FALSE(name_matches(video_hd, seg3));

  // a 1.752 MB object in 1024-byte segments has 1711 segments; the prefix
  // matches every one of them
  const std::uint64_t segments = (1752000 + 1024 - 1) / 1024;
  CHECK(segments == 1711);
  for (std::uint64_t s = 0; s < segments; ++s) {
    ContentName n;
    n.prefix = {"video"};
    n.segment = s;
    REQUIRE(name_matches(video, n));
  }
  // component boundary, not string prefix
  CHECK_FALSE(name_matches(NamePrefix::parse("/vid"), seg3));
}

TEST_CASE("frame sizes: Data outweighs Interest for the same name")
{
  WireSizes wire;
  ContentName n = ContentName::parse("/content/seg=0");

  InterestMsg interest;
  interest.name = n;
  DataMsg data;
  data.name = n;
  data.payload_len_bytes = 1024;

  Frame fi = make_frame(MacAddress::from_value(1), MacAddress::broadcast(), 0, interest, wire);
  Frame fd = make_frame(MacAddress::from_value(1), MacAddress::from_value(2), 0, data, wire);

  CHECK(fi.size_bytes == wire.header_overhead_bytes + wire.interest_base_bytes +
                             n.to_string().size());
  CHECK(fd.size_bytes == wire.header_overhead_bytes + wire.data_base_bytes +
                             n.to_string().size() + 1024);
  CHECK(fd.size_bytes > fi.size_bytes);

  // the MMM in-message address pair costs extra bytes
  interest.variant_header = VariantHeader{MacAddress::from_value(1), MacAddress::broadcast()};
  Frame fv = make_frame(MacAddress::from_value(1), MacAddress::broadcast(), 0, interest, wire);
  CHECK(fv.size_bytes == fi.size_bytes + wire.variant_header_bytes);
}
