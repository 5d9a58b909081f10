#include <doctest.h>

#include <stdexcept>

#include "vndn/metrics.hpp"

#include <cmath>
#include <random>

using namespace vndn;

namespace {

ContentName seg(std::uint64_t s)
{
  ContentName n;
  n.prefix = {"v"};
  n.segment = s;
  return n;
}

SatisfactionRecord rec(std::uint64_t s, double sent, std::optional<double> recv,
                       std::uint64_t transmissions = 1)
{
  SatisfactionRecord r;
  r.name = seg(s);
  r.sent_at_ms = sent;
  r.received_at_ms = recv;
  r.transmissions = transmissions;
  return r;
}

/// Independent brute-force evaluation of the pairwise spacing deviation.
double jitter_oracle(std::vector<ArrivalPair> arrivals)
{
  std::stable_sort(arrivals.begin(), arrivals.end(),
                   [](const ArrivalPair& a, const ArrivalPair& b) { return a.recv_ms < b.recv_ms; });
  double sum = 0;
  for (std::size_t i = 1; i < arrivals.size(); ++i) {
    double d = (arrivals[i].recv_ms - arrivals[i - 1].recv_ms) -
               (arrivals[i].send_ms - arrivals[i - 1].send_ms);
    sum += d < 0 ? -d : d;
  }
  return sum / static_cast<double>(arrivals.size() - 1);
}

} // namespace

TEST_CASE("isr counts transmissions in the denominator")
{
  std::vector<SatisfactionRecord> all;
  for (int i = 0; i < 10; ++i)
    all.push_back(rec(i, 0, 1.0));
  CHECK(compute_isr(all) == 1.0);

  std::vector<SatisfactionRecord> none;
  for (int i = 0; i < 10; ++i)
    none.push_back(rec(i, 0, std::nullopt));
  CHECK(compute_isr(none) == 0.0);

  // 8 satisfied names + 2 unsatisfied names retransmitted once = 12 sends
  std::vector<SatisfactionRecord> mixed;
  for (int i = 0; i < 8; ++i)
    mixed.push_back(rec(i, 0, 1.0));
  mixed.push_back(rec(8, 0, std::nullopt, 2));
  mixed.push_back(rec(9, 0, std::nullopt, 2));
  CHECK(compute_isr(mixed) == doctest::Approx(8.0 / 12.0));

  CHECK(compute_isr({}) == 0.0);
}

TEST_CASE("average latency over satisfied records only")
{
  std::vector<SatisfactionRecord> records{rec(0, 0, 2.0), rec(1, 0, 4.0)};
  auto lat = compute_avg_latency(records);
  REQUIRE(lat.has_value());
  CHECK(*lat == doctest::Approx(3.0));

  // the retransmission reset the clock: latency counts from the last send
  std::vector<SatisfactionRecord> reset{rec(7, 4000.0, 4005.0, 2)};
  CHECK(*compute_avg_latency(reset) == doctest::Approx(5.0));

  std::vector<SatisfactionRecord> unsat{rec(0, 0, std::nullopt)};
  CHECK_FALSE(compute_avg_latency(unsat).has_value());
}

TEST_CASE("latency is translation-equivariant")
{
  std::mt19937_64 rng(3);
  std::vector<SatisfactionRecord> records;
  for (int i = 0; i < 20; ++i) {
    double sent = static_cast<double>(rng() % 10000);
    records.push_back(rec(i, sent, sent + static_cast<double>(rng() % 50)));
  }
  double base = *compute_avg_latency(records);
  for (auto& r : records) {
    r.sent_at_ms += 12345.0;
    *r.received_at_ms += 12345.0;
  }
  CHECK(*compute_avg_latency(records) == doctest::Approx(base));
}

TEST_CASE("jitter on regular and perturbed spacing")
{
  // perfectly regular: deviations vanish
  CHECK(*compute_jitter({{0, 2}, {100, 102}}) == doctest::Approx(0.0));

  // hand-evaluated through the D formula: D(1,2) = (103-2)-(100-0) = 1,
  // D(2,3) = (202-103)-(200-100) = -1, mean |D| = 1
  auto j = compute_jitter({{0, 2}, {100, 103}, {200, 202}});
  REQUIRE(j.has_value());
  CHECK(*j == doctest::Approx(1.0));

  CHECK_FALSE(compute_jitter({{0, 2}}).has_value());
  CHECK_FALSE(compute_jitter({}).has_value());
}

TEST_CASE("jitter matches the brute-force oracle on random sequences")
{
  std::mt19937_64 rng(17);
  for (int round = 0; round < 1000; ++round) {
    std::vector<ArrivalPair> arrivals;
    std::size_t n = 2 + rng() % 30;
    double send = 0;
    for (std::size_t i = 0; i < n; ++i) {
      send += static_cast<double>(rng() % 200) / 2.0;
      double transit = static_cast<double>(rng() % 1000) / 100.0;
      arrivals.push_back(ArrivalPair{send, send + transit});
    }
    auto got = compute_jitter(arrivals);
    REQUIRE(got.has_value());
    REQUIRE(std::abs(*got - jitter_oracle(arrivals)) < 1e-9);
  }
}

TEST_CASE("jitter is invariant under a constant receive delay")
{
  std::mt19937_64 rng(29);
  std::vector<ArrivalPair> arrivals;
  for (int i = 0; i < 25; ++i)
    arrivals.push_back(ArrivalPair{i * 100.0, i * 100.0 + static_cast<double>(rng() % 40)});
  double base = *compute_jitter(arrivals);
  for (auto& a : arrivals)
    a.recv_ms += 777.0;
  CHECK(*compute_jitter(arrivals) == doctest::Approx(base));
}

TEST_CASE("smoothed jitter variant stays positive and bounded")
{
  std::vector<ArrivalPair> arrivals;
  for (int i = 0; i < 50; ++i)
    arrivals.push_back(ArrivalPair{i * 100.0, i * 100.0 + (i % 2 ? 8.0 : 2.0)});
  auto smooth = compute_jitter(arrivals, true);
  auto plain = compute_jitter(arrivals, false);
  REQUIRE(smooth.has_value());
  CHECK(*smooth > 0.0);
  CHECK(*smooth < *plain * 2.0);
}

TEST_CASE("aggregate: identical reports collapse the interval")
{
  SimulationReport r;
  r.isr = 0.9;
  r.avg_latency_ms = 3.0;
  r.avg_jitter_ms = 0.5;
  auto agg = aggregate({r, r, r});
  CHECK(agg.isr.mean == doctest::Approx(0.9));
  CHECK(agg.isr.ci95_half_width == doctest::Approx(0.0));
}

TEST_CASE("aggregate: two-sample Student-t half width")
{
  SimulationReport a;
  a.isr = 0.9;
  SimulationReport b;
  b.isr = 1.0;
  auto agg = aggregate({a, b});
  CHECK(agg.isr.mean == doctest::Approx(0.95));
  // t_{0.975,1} * s / sqrt(2) = 12.7062 * 0.070711 / 1.41421
  CHECK(agg.isr.ci95_half_width == doctest::Approx(0.63531).epsilon(1e-3));
}

TEST_CASE("aggregate refuses a single report")
{
  SimulationReport r;
  CHECK_THROWS_AS(aggregate({r}), std::invalid_argument);
  CHECK_THROWS_AS(aggregate({}), std::invalid_argument);
}

TEST_CASE("report conservation: received never exceeds sent")
{
  std::mt19937_64 rng(41);
  for (int round = 0; round < 200; ++round) {
    std::vector<SatisfactionRecord> records;
    std::size_t n = rng() % 20;
    for (std::size_t i = 0; i < n; ++i) {
      bool sat = rng() % 2 == 0;
      records.push_back(rec(i, 0, sat ? std::optional<double>(1.0) : std::nullopt,
                            1 + rng() % 3));
    }
    SimulationReport rep = summarize(records, 0, 0, 0);
    CHECK(rep.datas_received <= rep.interests_sent);
    CHECK(rep.isr >= 0.0);
    CHECK(rep.isr <= 1.0);
  }
}

TEST_CASE("student t quantile sanity")
{
  CHECK(student_t_975(1) == doctest::Approx(12.7062).epsilon(1e-4));
  CHECK(student_t_975(4) == doctest::Approx(2.7764).epsilon(1e-4));
  CHECK(student_t_975(100) == doctest::Approx(1.9840).epsilon(1e-4));
}
