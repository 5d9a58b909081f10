#include "vndn/metrics.hpp"

#include <boost/math/distributions/students_t.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vndn {

double compute_isr(const std::vector<SatisfactionRecord>& records)
{
  std::uint64_t sent = 0;
  std::uint64_t satisfied = 0;
  for (const auto& r : records) {
    sent += r.transmissions;
    if (r.received_at_ms)
      ++satisfied;
  }
  if (sent == 0)
    return 0.0;
  return static_cast<double>(satisfied) / static_cast<double>(sent);
}

std::optional<double> compute_avg_latency(const std::vector<SatisfactionRecord>& records)
{
  double sum = 0;
  std::size_t n = 0;
  for (const auto& r : records) {
    if (r.received_at_ms) {
      sum += *r.received_at_ms - r.sent_at_ms;
      ++n;
    }
  }
  if (n == 0)
    return std::nullopt;
  return sum / static_cast<double>(n);
}

std::optional<double> compute_jitter(const std::vector<ArrivalPair>& arrivals, bool smoothed)
{
  if (arrivals.size() < 2)
    return std::nullopt;
  std::vector<ArrivalPair> sorted = arrivals;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const ArrivalPair& a, const ArrivalPair& b) { return a.recv_ms < b.recv_ms; });

  if (smoothed) {
    // RTP-style running estimate: J += (|D| - J) / 16.
    double j = 0;
    for (std::size_t i = 1; i < sorted.size(); ++i) {
      double d = (sorted[i].recv_ms - sorted[i - 1].recv_ms) -
                 (sorted[i].send_ms - sorted[i - 1].send_ms);
      j += (std::abs(d) - j) / 16.0;
    }
    return j;
  }

  double sum = 0;
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    double d = (sorted[i].recv_ms - sorted[i - 1].recv_ms) -
               (sorted[i].send_ms - sorted[i - 1].send_ms);
    sum += std::abs(d);
  }
  return sum / static_cast<double>(sorted.size() - 1);
}

SimulationReport summarize(const std::vector<SatisfactionRecord>& records,
                           std::uint64_t duplicate_datas, std::uint64_t frames_tx,
                           std::uint64_t frames_dropped)
{
  SimulationReport rep;
  for (const auto& r : records) {
    rep.interests_sent += r.transmissions;
    if (r.received_at_ms)
      ++rep.datas_received;
  }
  rep.duplicate_datas = duplicate_datas;
  rep.isr = compute_isr(records);
  rep.avg_latency_ms = compute_avg_latency(records);

  std::vector<ArrivalPair> arrivals;
  for (const auto& r : records) {
    if (r.received_at_ms)
      arrivals.push_back(ArrivalPair{r.sent_at_ms, *r.received_at_ms});
  }
  rep.avg_jitter_ms = compute_jitter(arrivals);

  rep.frames_transmitted_total = frames_tx;
  rep.frames_dropped_total = frames_dropped;
  return rep;
}

double student_t_975(std::size_t degrees_of_freedom)
{
  boost::math::students_t dist(static_cast<double>(degrees_of_freedom));
  return boost::math::quantile(dist, 0.975);
}

namespace {

MetricSummary summarize_metric(const std::vector<double>& values)
{
  MetricSummary s;
  s.n = values.size();
  if (values.empty())
    return s;
  double sum = 0;
  for (double v : values)
    sum += v;
  s.mean = sum / static_cast<double>(values.size());
  if (values.size() < 2)
    return s;
  double ss = 0;
  for (double v : values)
    ss += (v - s.mean) * (v - s.mean);
  double sd = std::sqrt(ss / static_cast<double>(values.size() - 1));
  s.ci95_half_width = student_t_975(values.size() - 1) * sd /
                      std::sqrt(static_cast<double>(values.size()));
  return s;
}

} // namespace

AggregateReport aggregate(const std::vector<SimulationReport>& reports)
{
  if (reports.size() < 2)
    throw std::invalid_argument("aggregate needs at least two reports (more seeds)");

  AggregateReport agg;
  agg.strategy = reports.front().strategy;
  agg.approach = reports.front().approach;
  agg.lifetime_ms = reports.front().lifetime_ms;
  agg.nodes = reports.front().nodes;
  agg.seeds = reports.size();

  std::vector<double> sent, received, isr, latency, jitter, tx, dropped;
  for (const auto& r : reports) {
    sent.push_back(static_cast<double>(r.interests_sent));
    received.push_back(static_cast<double>(r.datas_received));
    isr.push_back(r.isr);
    if (r.avg_latency_ms)
      latency.push_back(*r.avg_latency_ms);
    if (r.avg_jitter_ms)
      jitter.push_back(*r.avg_jitter_ms);
    tx.push_back(static_cast<double>(r.frames_transmitted_total));
    dropped.push_back(static_cast<double>(r.frames_dropped_total));
  }

  agg.interests_sent = summarize_metric(sent);
  agg.datas_received = summarize_metric(received);
  agg.isr = summarize_metric(isr);
  agg.avg_latency_ms = summarize_metric(latency);
  agg.avg_jitter_ms = summarize_metric(jitter);
  agg.frames_tx = summarize_metric(tx);
  agg.frames_dropped = summarize_metric(dropped);
  return agg;
}

} // namespace vndn
