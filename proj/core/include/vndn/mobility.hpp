#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vndn {

struct Position {
  double x_m = 0;
  double y_m = 0;

  bool operator==(const Position&) const = default;
};

struct TracePoint {
  double time_s = 0;
  double x_m = 0;
  double y_m = 0;
  std::optional<double> speed_mps;
};

/// Node position as a function of time. Immutable after construction;
/// piecewise-linear between samples, clamped at the ends, absent before a
/// node's first sample.
class MobilityModel {
public:
  static MobilityModel static_placement(std::vector<Position> positions);

  /// Parses the flat CSV trace format "time_s,node_id,x_m,y_m[,speed_mps]".
  /// '#' comment lines and an optional header line are skipped. Throws
  /// std::runtime_error with a line number on malformed input and names the
  /// node on non-monotone timestamps.
  static MobilityModel load_trace(const std::string& path);
  static MobilityModel load_trace_stream(std::istream& in, const std::string& origin);

  /// Random waypoint movement on a street grid (default 1 km x 1 km,
  /// 5 x 5 streets, speeds uniform in [12, 18] m/s).
  static MobilityModel manhattan_grid(std::size_t node_count, std::uint64_t seed,
                                      double duration_s = 200.0, double extent_m = 1000.0,
                                      std::size_t streets_per_axis = 5,
                                      double speed_min_mps = 12.0, double speed_max_mps = 18.0);

  std::optional<Position> position_at(std::size_t node_idx, double t_s) const;

  std::size_t node_count() const { return m_tracks.size(); }
  const std::vector<std::string>& node_names() const { return m_names; }
  std::optional<std::size_t> index_of(const std::string& node_name) const;

  /// Writes the CSV trace format; load_trace on the output reproduces
  /// positions at the sample times.
  void export_csv(std::ostream& out) const;

private:
  std::vector<std::vector<TracePoint>> m_tracks; // per node, times strictly increasing
  std::vector<std::string> m_names;
  std::map<std::string, std::size_t> m_name_index;
};

} // namespace vndn
