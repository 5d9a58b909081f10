#include "vndn/mobility.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace vndn {

namespace {

std::vector<std::string> split_csv(const std::string& line)
{
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    }
    else if (c != '\r') {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

bool parse_double(const std::string& s, double& out)
{
  try {
    std::size_t pos = 0;
    out = std::stod(s, &pos);
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
    return pos == s.size();
  }
  catch (const std::exception&) {
    return false;
  }
}

double uniform_in(std::mt19937_64& rng, double lo, double hi)
{
  double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

} // namespace

MobilityModel MobilityModel::static_placement(std::vector<Position> positions)
{
  MobilityModel m;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    m.m_tracks.push_back({TracePoint{0.0, positions[i].x_m, positions[i].y_m, std::nullopt}});
    m.m_names.push_back("n" + std::to_string(i));
    m.m_name_index[m.m_names.back()] = i;
  }
  return m;
}

MobilityModel MobilityModel::load_trace(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open trace file: " + path);
  return load_trace_stream(in, path);
}

MobilityModel MobilityModel::load_trace_stream(std::istream& in, const std::string& origin)
{
  MobilityModel m;
  std::string line;
  std::size_t line_no = 0;
  bool saw_content = false;

  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#')
      continue;

    auto fields = split_csv(line);
    if (fields.size() < 4 || fields.size() > 5)
      throw std::runtime_error(origin + ":" + std::to_string(line_no) +
                               ": expected time_s,node_id,x_m,y_m[,speed_mps]");

    double t, x, y;
    if (!parse_double(fields[0], t)) {
      if (!saw_content)
        continue; // optional header line
      throw std::runtime_error(origin + ":" + std::to_string(line_no) + ": bad time \"" +
                               fields[0] + "\"");
    }
    if (!parse_double(fields[2], x) || !parse_double(fields[3], y))
      throw std::runtime_error(origin + ":" + std::to_string(line_no) + ": bad coordinate");

    TracePoint p;
    p.time_s = t;
    p.x_m = x;
    p.y_m = y;
    if (fields.size() == 5 && !fields[4].empty()) {
      double v;
      if (!parse_double(fields[4], v))
        throw std::runtime_error(origin + ":" + std::to_string(line_no) + ": bad speed");
      p.speed_mps = v;
    }

    const std::string& id = fields[1];
    auto [it, inserted] = m.m_name_index.try_emplace(id, m.m_tracks.size());
    if (inserted) {
      m.m_tracks.emplace_back();
      m.m_names.push_back(id);
    }
    auto& track = m.m_tracks[it->second];
    if (!track.empty() && p.time_s <= track.back().time_s)
      throw std::runtime_error(origin + ":" + std::to_string(line_no) +
                               ": non-monotone time for node \"" + id + "\"");
    track.push_back(p);
    saw_content = true;
  }
  return m;
}

MobilityModel MobilityModel::manhattan_grid(std::size_t node_count, std::uint64_t seed,
                                            double duration_s, double extent_m,
                                            std::size_t streets_per_axis,
                                            double speed_min_mps, double speed_max_mps)
{
  if (node_count == 0)
    throw std::invalid_argument("manhattan grid needs at least one node");
  if (streets_per_axis < 2)
    throw std::invalid_argument("manhattan grid needs at least two streets per axis");

  const double spacing = extent_m / static_cast<double>(streets_per_axis - 1);
  const int n = static_cast<int>(streets_per_axis);
  std::mt19937_64 rng(seed);

  // Stratified spawn: a seeded shuffle of the intersections, reshuffled per
  // block, spreads vehicles over the grid instead of clumping them.
  std::vector<int> spawn_order;
  auto refill_spawns = [&]() {
    spawn_order.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < spawn_order.size(); ++i)
      spawn_order[i] = static_cast<int>(i);
    for (std::size_t i = spawn_order.size(); i > 1; --i)
      std::swap(spawn_order[i - 1], spawn_order[rng() % i]);
  };

  MobilityModel m;
  for (std::size_t node = 0; node < node_count; ++node) {
    if (spawn_order.empty())
      refill_spawns();
    int cell = spawn_order.back();
    spawn_order.pop_back();
    int ix = cell % n;
    int iy = cell / n;
    double speed = uniform_in(rng, speed_min_mps, speed_max_mps);

    std::vector<TracePoint> track;
    double t = 0.0;
    track.push_back(TracePoint{t, ix * spacing, iy * spacing, speed});

    int prev_dir = -1; // 0:+x 1:-x 2:+y 3:-y
    while (t < duration_s) {
      int choices[4];
      int n_choices = 0;
      const int dx[4] = {1, -1, 0, 0};
      const int dy[4] = {0, 0, 1, -1};
      const int opposite[4] = {1, 0, 3, 2};
      for (int d = 0; d < 4; ++d) {
        int nx = ix + dx[d];
        int ny = iy + dy[d];
        if (nx < 0 || nx >= n || ny < 0 || ny >= n)
          continue;
        if (prev_dir >= 0 && d == opposite[prev_dir])
          continue;
        choices[n_choices++] = d;
      }
      int dir;
      if (n_choices == 0)
        dir = opposite[prev_dir]; // dead end, turn back
      else
        dir = choices[rng() % static_cast<std::uint64_t>(n_choices)];

      ix += dx[dir];
      iy += dy[dir];
      t += spacing / speed;
      track.push_back(TracePoint{t, ix * spacing, iy * spacing, speed});
      prev_dir = dir;
    }

    m.m_tracks.push_back(std::move(track));
    m.m_names.push_back("n" + std::to_string(node));
    m.m_name_index[m.m_names.back()] = node;
  }
  return m;
}

std::optional<Position> MobilityModel::position_at(std::size_t node_idx, double t_s) const
{
  if (node_idx >= m_tracks.size())
    return std::nullopt;
  const auto& track = m_tracks[node_idx];
  if (track.empty() || t_s < track.front().time_s)
    return std::nullopt;
  if (t_s >= track.back().time_s)
    return Position{track.back().x_m, track.back().y_m};

  auto after = std::upper_bound(track.begin(), track.end(), t_s,
                                [](double t, const TracePoint& p) { return t < p.time_s; });
  const TracePoint& b = *after;
  const TracePoint& a = *std::prev(after);
  double f = (t_s - a.time_s) / (b.time_s - a.time_s);
  return Position{a.x_m + f * (b.x_m - a.x_m), a.y_m + f * (b.y_m - a.y_m)};
}

std::optional<std::size_t> MobilityModel::index_of(const std::string& node_name) const
{
  auto it = m_name_index.find(node_name);
  if (it == m_name_index.end())
    return std::nullopt;
  return it->second;
}

void MobilityModel::export_csv(std::ostream& out) const
{
  out << "time_s,node_id,x_m,y_m,speed_mps\n";
  for (std::size_t i = 0; i < m_tracks.size(); ++i) {
    for (const TracePoint& p : m_tracks[i]) {
      char buf[160];
      if (p.speed_mps)
        std::snprintf(buf, sizeof(buf), "%.17g,%s,%.17g,%.17g,%.17g\n", p.time_s,
                      m_names[i].c_str(), p.x_m, p.y_m, *p.speed_mps);
      else
        std::snprintf(buf, sizeof(buf), "%.17g,%s,%.17g,%.17g,\n", p.time_s, m_names[i].c_str(),
                      p.x_m, p.y_m);
      out << buf;
    }
  }
}

} // namespace vndn
