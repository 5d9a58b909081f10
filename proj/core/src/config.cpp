#include "vndn/config.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace vndn {

using nlohmann::json;

std::size_t ScenarioConfig::node_count() const
{
  switch (mobility.kind) {
    case MobilitySpec::Kind::Static:
      return mobility.positions.size();
    case MobilitySpec::Kind::Manhattan:
      return mobility.node_count;
    case MobilitySpec::Kind::Trace:
      return MobilityModel::load_trace(mobility.trace_path).node_count();
  }
  return 0;
}

int ScenarioConfig::effective_source_id() const
{
  if (source_id >= 0)
    return source_id;
  std::size_t n = node_count();
  return n > 0 ? static_cast<int>(n - 1) : 0;
}

MobilityModel ScenarioConfig::build_mobility(double duration_s_hint) const
{
  switch (mobility.kind) {
    case MobilitySpec::Kind::Static:
      return MobilityModel::static_placement(mobility.positions);
    case MobilitySpec::Kind::Trace:
      return MobilityModel::load_trace(mobility.trace_path);
    case MobilitySpec::Kind::Manhattan:
      return MobilityModel::manhattan_grid(mobility.node_count, seed, duration_s_hint,
                                           mobility.extent_m, mobility.streets_per_axis,
                                           mobility.speed_min_mps, mobility.speed_max_mps);
  }
  throw std::logic_error("unreachable mobility kind");
}

std::vector<std::string> ScenarioConfig::validate() const
{
  std::vector<std::string> errors;
  if (duration_s < 0)
    errors.push_back("duration_s must be >= 0");
  if (strategy != "immm" && strategy != "mmm" && strategy != "flooding" && strategy != "codie")
    errors.push_back("strategy must be one of immm|mmm|flooding|codie");
  if (approach < 1 || approach > 3)
    errors.push_back("approach must be 1, 2 or 3");
  if (interest_lifetime_ms == 0)
    errors.push_back("interest_lifetime_ms must be positive");
  if (interest_rate_hz <= 0)
    errors.push_back("interest_rate_hz must be positive");
  if (content_size_bytes == 0)
    errors.push_back("content_size_bytes must be positive");
  if (segment_size_bytes == 0)
    errors.push_back("segment_size_bytes must be positive");
  if (radio.range_m <= 0)
    errors.push_back("radio.range_m must be positive");
  if (radio.data_rate_bps <= 0)
    errors.push_back("radio.data_rate_bps must be positive");
  if (radio.loss_prob < 0 || radio.loss_prob > 1)
    errors.push_back("radio.loss_prob must be in [0, 1]");
  if (radio.prop_delay_us_per_m < 0)
    errors.push_back("radio.prop_delay_us_per_m must be >= 0");
  if (interfaces_per_node < 1 || interfaces_per_node > 3)
    errors.push_back("interfaces_per_node must be 1..3");
  if (channels.empty())
    errors.push_back("channels must not be empty");
  if (tx_queue_depth == 0)
    errors.push_back("tx_queue_depth must be positive");
  if (mobility_update_period_ms <= 0)
    errors.push_back("mobility_update_period_ms must be positive");
  if (mobility.kind == MobilitySpec::Kind::Manhattan) {
    if (mobility.node_count == 0)
      errors.push_back("mobility.node_count must be positive");
    if (mobility.streets_per_axis < 2)
      errors.push_back("mobility.streets_per_axis must be >= 2");
    if (mobility.speed_min_mps <= 0 || mobility.speed_max_mps < mobility.speed_min_mps)
      errors.push_back("mobility speed range must satisfy 0 < min <= max");
  }
  if (mobility.kind == MobilitySpec::Kind::Trace && mobility.trace_path.empty())
    errors.push_back("mobility.trace_path must be set for trace mobility");
  if (mobility.kind == MobilitySpec::Kind::Static && mobility.positions.empty())
    errors.push_back("mobility.positions must not be empty for static mobility");

  try {
    NamePrefix::parse(content_prefix);
  }
  catch (const std::exception& e) {
    errors.push_back(std::string("content_prefix: ") + e.what());
  }

  std::size_t n = 0;
  bool node_count_known = true;
  try {
    n = node_count();
  }
  catch (const std::exception& e) {
    node_count_known = false;
    errors.push_back(std::string("mobility: ") + e.what());
  }
  if (node_count_known) {
    if (n < 2)
      errors.push_back("scenario needs at least 2 nodes (one requester, one source)");
    if (requester_id < 0 || static_cast<std::size_t>(requester_id) >= n)
      errors.push_back("requester_id out of range");
    int src = effective_source_id();
    if (src < 0 || static_cast<std::size_t>(src) >= n)
      errors.push_back("source_id out of range");
    if (n >= 2 && requester_id == effective_source_id())
      errors.push_back("requester_id and source_id must differ");
  }
  return errors;
}

namespace {

json to_json_obj(const ScenarioConfig& c)
{
  json j;
  j["duration_s"] = c.duration_s;
  j["strategy"] = c.strategy;
  j["approach"] = c.approach;
  j["interest_lifetime_ms"] = c.interest_lifetime_ms;
  j["interest_rate_hz"] = c.interest_rate_hz;
  j["content_size_bytes"] = c.content_size_bytes;
  j["segment_size_bytes"] = c.segment_size_bytes;
  j["rediscovery_period_ms"] = c.rediscovery_period_ms;
  j["radio"] = {{"range_m", c.radio.range_m},
                {"data_rate_bps", c.radio.data_rate_bps},
                {"loss_prob", c.radio.loss_prob},
                {"prop_delay_us_per_m", c.radio.prop_delay_us_per_m}};
  j["interfaces_per_node"] = c.interfaces_per_node;
  j["channels"] = c.channels;

  json m;
  switch (c.mobility.kind) {
    case MobilitySpec::Kind::Static: {
      m["type"] = "static";
      json pos = json::array();
      for (const auto& p : c.mobility.positions)
        pos.push_back({p.x_m, p.y_m});
      m["positions"] = pos;
      break;
    }
    case MobilitySpec::Kind::Trace:
      m["type"] = "trace";
      m["path"] = c.mobility.trace_path;
      break;
    case MobilitySpec::Kind::Manhattan:
      m["type"] = "manhattan";
      m["node_count"] = c.mobility.node_count;
      m["extent_m"] = c.mobility.extent_m;
      m["streets_per_axis"] = c.mobility.streets_per_axis;
      m["speed_min_mps"] = c.mobility.speed_min_mps;
      m["speed_max_mps"] = c.mobility.speed_max_mps;
      break;
  }
  j["mobility"] = m;

  j["content_prefix"] = c.content_prefix;
  j["requester_id"] = c.requester_id;
  j["source_id"] = c.source_id;
  j["seed"] = c.seed;
  j["codie_max_hops"] = c.codie_max_hops;
  j["cs_capacity"] = c.cs_capacity;
  j["tx_queue_depth"] = c.tx_queue_depth;
  j["wire"] = {{"header_overhead_bytes", c.wire.header_overhead_bytes},
               {"interest_base_bytes", c.wire.interest_base_bytes},
               {"data_base_bytes", c.wire.data_base_bytes},
               {"variant_header_bytes", c.wire.variant_header_bytes}};
  j["mobility_update_period_ms"] = c.mobility_update_period_ms;
  j["event_trace"] = c.event_trace;
  return j;
}

template <typename T>
void read_field(const json& j, const char* key, T& out)
{
  if (j.contains(key))
    out = j.at(key).get<T>();
}

ScenarioConfig from_json_obj(const json& j)
{
  ScenarioConfig c;
  read_field(j, "duration_s", c.duration_s);
  read_field(j, "strategy", c.strategy);
  read_field(j, "approach", c.approach);
  read_field(j, "interest_lifetime_ms", c.interest_lifetime_ms);
  read_field(j, "interest_rate_hz", c.interest_rate_hz);
  read_field(j, "content_size_bytes", c.content_size_bytes);
  read_field(j, "segment_size_bytes", c.segment_size_bytes);
  read_field(j, "rediscovery_period_ms", c.rediscovery_period_ms);
  if (j.contains("radio")) {
    const json& r = j.at("radio");
    read_field(r, "range_m", c.radio.range_m);
    read_field(r, "data_rate_bps", c.radio.data_rate_bps);
    read_field(r, "loss_prob", c.radio.loss_prob);
    read_field(r, "prop_delay_us_per_m", c.radio.prop_delay_us_per_m);
  }
  read_field(j, "interfaces_per_node", c.interfaces_per_node);
  read_field(j, "channels", c.channels);
  if (j.contains("mobility")) {
    const json& m = j.at("mobility");
    std::string type = m.value("type", "manhattan");
    if (type == "static") {
      c.mobility.kind = MobilitySpec::Kind::Static;
      c.mobility.positions.clear();
      for (const auto& p : m.at("positions"))
        c.mobility.positions.push_back(Position{p.at(0).get<double>(), p.at(1).get<double>()});
    }
    else if (type == "trace") {
      c.mobility.kind = MobilitySpec::Kind::Trace;
      c.mobility.trace_path = m.at("path").get<std::string>();
    }
    else if (type == "manhattan") {
      c.mobility.kind = MobilitySpec::Kind::Manhattan;
      read_field(m, "node_count", c.mobility.node_count);
      read_field(m, "extent_m", c.mobility.extent_m);
      read_field(m, "streets_per_axis", c.mobility.streets_per_axis);
      read_field(m, "speed_min_mps", c.mobility.speed_min_mps);
      read_field(m, "speed_max_mps", c.mobility.speed_max_mps);
    }
    else {
      throw std::invalid_argument("mobility.type must be static|trace|manhattan");
    }
  }
  read_field(j, "content_prefix", c.content_prefix);
  read_field(j, "requester_id", c.requester_id);
  read_field(j, "source_id", c.source_id);
  read_field(j, "seed", c.seed);
  read_field(j, "codie_max_hops", c.codie_max_hops);
  read_field(j, "cs_capacity", c.cs_capacity);
  read_field(j, "tx_queue_depth", c.tx_queue_depth);
  if (j.contains("wire")) {
    const json& w = j.at("wire");
    read_field(w, "header_overhead_bytes", c.wire.header_overhead_bytes);
    read_field(w, "interest_base_bytes", c.wire.interest_base_bytes);
    read_field(w, "data_base_bytes", c.wire.data_base_bytes);
    read_field(w, "variant_header_bytes", c.wire.variant_header_bytes);
  }
  read_field(j, "mobility_update_period_ms", c.mobility_update_period_ms);
  read_field(j, "event_trace", c.event_trace);
  return c;
}

} // namespace

std::string ScenarioConfig::to_json() const
{
  return to_json_obj(*this).dump(2) + "\n";
}

ScenarioConfig ScenarioConfig::from_json(const std::string& text)
{
  return from_json_obj(json::parse(text));
}

ScenarioConfig ScenarioConfig::load_file(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

} // namespace vndn
