#pragma once

#include "vndn/name.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vndn {

/// Requester-side bookkeeping for one Interest name. sent_at_ms tracks the
/// most recent transmission: a retransmission resets the latency clock.
struct SatisfactionRecord {
  ContentName name;
  double sent_at_ms = 0;
  std::optional<double> received_at_ms;
  std::uint64_t transmissions = 1;
};

struct SimulationReport {
  std::string strategy;
  int approach = 0;
  std::uint32_t lifetime_ms = 0;
  std::size_t nodes = 0;
  std::uint64_t seed = 0;

  std::uint64_t interests_sent = 0;
  std::uint64_t datas_received = 0;
  std::uint64_t duplicate_datas = 0;
  double isr = 0.0;
  std::optional<double> avg_latency_ms;
  std::optional<double> avg_jitter_ms;
  std::uint64_t frames_transmitted_total = 0;
  std::uint64_t frames_dropped_total = 0;
};

/// Satisfied transmissions over total transmissions; 0 when nothing was sent.
double compute_isr(const std::vector<SatisfactionRecord>& records);

/// Mean of received - sent over satisfied records; absent when none.
std::optional<double> compute_avg_latency(const std::vector<SatisfactionRecord>& records);

struct ArrivalPair {
  double send_ms = 0;
  double recv_ms = 0;
};

/// Mean |D(i,i+1)| with D(i,j) = (R_j - R_i) - (S_j - S_i) over arrivals
/// ordered by receive time; absent with fewer than two pairs. The
/// exponentially smoothed estimator from the RTP spec is available behind
/// the `smoothed` flag for comparison.
std::optional<double> compute_jitter(const std::vector<ArrivalPair>& arrivals,
                                     bool smoothed = false);

/// Builds a report from the per-name records plus frame counters.
SimulationReport summarize(const std::vector<SatisfactionRecord>& records,
                           std::uint64_t duplicate_datas, std::uint64_t frames_tx,
                           std::uint64_t frames_dropped);

struct MetricSummary {
  double mean = 0;
  double ci95_half_width = 0;
  std::size_t n = 0;
};

struct AggregateReport {
  std::string strategy;
  int approach = 0;
  std::uint32_t lifetime_ms = 0;
  std::size_t nodes = 0;
  std::size_t seeds = 0;

  MetricSummary interests_sent;
  MetricSummary datas_received;
  MetricSummary isr;
  MetricSummary avg_latency_ms;
  MetricSummary avg_jitter_ms;
  MetricSummary frames_tx;
  MetricSummary frames_dropped;
};

/// Mean and Student-t 95% confidence half-width per metric. Requires at
/// least two reports.
AggregateReport aggregate(const std::vector<SimulationReport>& reports);

/// t-distribution quantile used for the confidence intervals, exposed for
/// the unit tests.
double student_t_975(std::size_t degrees_of_freedom);

} // namespace vndn
