#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "rig/formulas.hpp"
#include "rig/montecarlo.hpp"
#include "rig/oracle.hpp"
#include "rig/stats.hpp"

using namespace rig;

TEST_CASE("wilson interval properties") {
  CHECK(wilson_interval(0, 100).low == 0.0);
  CHECK(wilson_interval(100, 100).high == 1.0);
  for (std::uint64_t k : {0ull, 1ull, 25ull, 50ull, 99ull, 100ull}) {
    const Interval ci = wilson_interval(k, 100);
    const double phat = k / 100.0;
    CHECK(ci.low >= 0.0);
    CHECK(ci.high <= 1.0);
    CHECK(ci.low <= phat);
    CHECK(phat <= ci.high);
  }
  // tighter with more trials
  CHECK(wilson_interval(2500, 10000).high - wilson_interval(2500, 10000).low <
        wilson_interval(25, 100).high - wilson_interval(25, 100).low);
}

TEST_CASE("sample_coloring basics") {
  const LabelDistribution single = LabelDistribution::uniform(1);
  SplitMix64 s1(42);
  const Coloring ones = sample_coloring(5, single, s1);
  CHECK(ones.labels == std::vector<int>{1, 1, 1, 1, 1});

  const LabelDistribution p = LabelDistribution::parse("1/2,1/4,1/4");
  SplitMix64 a(7), b(7);
  CHECK(sample_coloring(50, p, a).labels == sample_coloring(50, p, b).labels);
}

TEST_CASE("empirical frequencies concentrate") {
  const LabelDistribution p = LabelDistribution::uniform(4);
  SplitMix64 stream(20240810);
  const int draws = 1'000'000;
  const Coloring c = sample_coloring(draws, p, stream);
  std::vector<int> counts(4, 0);
  for (int label : c.labels) ++counts[label - 1];
  const double sigma = std::sqrt(0.25 * 0.75 / draws);
  for (int i = 0; i < 4; ++i) {
    const double freq = static_cast<double>(counts[i]) / draws;
    CHECK(std::abs(freq - 0.25) <= 3 * sigma);
  }
}

TEST_CASE("estimate_event: determinism and serial equivalence") {
  const LabelDistribution p = LabelDistribution::uniform(2);
  const EventQuery q = EventQuery::edge(1, 2);
  const McEstimate a = estimate_event(3, p, q, 20000, 99);
  const McEstimate b = estimate_event(3, p, q, 20000, 99);
  const McEstimate c = estimate_event_serial(3, p, q, 20000, 99);
  CHECK(a.point_estimate == b.point_estimate);
  CHECK(a.point_estimate == c.point_estimate);
  CHECK(a.ci_low == c.ci_low);
  CHECK(a.ci_high == c.ci_high);

  // different seed, different stream
  const McEstimate d = estimate_event(3, p, q, 20000, 100);
  CHECK(a.point_estimate != d.point_estimate);
}

TEST_CASE("estimate_event brackets oracle values") {
  const LabelDistribution u2 = LabelDistribution::uniform(2);
  const McEstimate edge = estimate_event(3, u2, EventQuery::edge(1, 2), 100000, 7);
  CHECK(edge.ci_low <= 0.25);
  CHECK(0.25 <= edge.ci_high);

  const McEstimate deg = estimate_event(4, u2, EventQuery::max_degree_equals(1), 100000, 7);
  CHECK(deg.ci_low <= 0.5);
  CHECK(0.5 <= deg.ci_high);

  // impossible event: exactly zero in every trial
  const McEstimate zero =
      estimate_event(2, LabelDistribution::uniform(3), EventQuery::is_complete(), 5000, 7);
  CHECK(zero.point_estimate == 0.0);
  CHECK(zero.ci_low == 0.0);
}

TEST_CASE("wilson calibration across meta-runs") {
  // With 1e5 trials per run, the true value should land inside the 95%
  // interval in at least 90 of 100 runs.
  const LabelDistribution u2 = LabelDistribution::uniform(2);
  int covered = 0;
  for (int run = 0; run < 100; ++run) {
    const McEstimate e =
        estimate_event(3, u2, EventQuery::edge(1, 2), 100000, 1000 + run);
    if (e.ci_low <= 0.25 && 0.25 <= e.ci_high) ++covered;
  }
  CHECK(covered >= 90);
}

TEST_CASE("estimate_statistic matches oracle expectation") {
  const LabelDistribution u2 = LabelDistribution::uniform(2);
  const Rational exact = enumerate_expectation(4, u2, Statistic::CliqueNumber);  // 3/2
  const McEstimate e = estimate_statistic(4, u2, Statistic::CliqueNumber, 100000, 11);
  CHECK(e.ci_low <= static_cast<double>(exact));
  CHECK(static_cast<double>(exact) <= e.ci_high);
  CHECK(e.point_estimate ==
        estimate_statistic_serial(4, u2, Statistic::CliqueNumber, 100000, 11).point_estimate);
}

TEST_CASE("waiting time: trivial single label") {
  const WaitingTimeEstimate w = estimate_waiting_time(LabelDistribution::uniform(1), 2000, 5);
  CHECK(w.estimate.point_estimate == 1.0);
  CHECK(w.truncated == 0);
}

TEST_CASE("waiting time stays between the collection bounds") {
  for (int m : {2, 3}) {
    const LabelDistribution p = LabelDistribution::uniform(m);
    const WaitingTimeEstimate w = estimate_waiting_time(p, 20000, 17);
    const double lower = static_cast<double>(coupon_expected_time_uniform(m));
    const double upper = static_cast<double>(waiting_time_upper_bound_uniform(m));
    const double margin = 3 * (w.estimate.ci_high - w.estimate.point_estimate) / 1.959963984540054;
    CHECK(w.estimate.point_estimate >= lower - margin);
    CHECK(w.estimate.point_estimate <= upper + margin);
    CHECK(w.truncated == 0);

    const WaitingTimeEstimate serial = estimate_waiting_time_serial(p, 20000, 17);
    CHECK(serial.estimate.point_estimate == w.estimate.point_estimate);
    CHECK(serial.truncated == w.truncated);
  }
}

TEST_CASE("waiting time cap truncation is reported") {
  // An absurdly small cap forces truncation; nothing is silently dropped.
  const WaitingTimeEstimate w =
      estimate_waiting_time(LabelDistribution::uniform(4), 500, 3, /*cap=*/3);
  CHECK(w.cap == 3);
  CHECK(w.truncated > 0);
  CHECK(w.truncated <= 500);
}

TEST_CASE("default waiting cap") {
  CHECK(default_waiting_cap(1) == 40);
  CHECK(default_waiting_cap(2) == 120);   // 40 * 2 * 3/2
  CHECK(default_waiting_cap(3) == 220);   // 40 * 3 * 11/6
}

TEST_CASE("scheinerman estimate") {
  // Order-statistics oracle for m = 2: of the 24 equally likely orderings of
  // four i.i.d. endpoints, the two intervals are disjoint in 8, so they meet
  // with probability 2/3.
  {
    int meet = 0, total = 0;
    int perm[4] = {0, 1, 2, 3};
    std::sort(perm, perm + 4);
    do {
      // positions of the endpoint ranks; interval A owns ranks of draws 0,1
      int rank[4];
      for (int pos = 0; pos < 4; ++pos) rank[perm[pos]] = pos;
      const int a_lo = std::min(rank[0], rank[1]), a_hi = std::max(rank[0], rank[1]);
      const int b_lo = std::min(rank[2], rank[3]), b_hi = std::max(rank[2], rank[3]);
      meet += (a_lo <= b_hi && b_lo <= a_hi);
      ++total;
    } while (std::next_permutation(perm, perm + 4));
    CHECK(total == 24);
    CHECK(Rational(meet, total) == Rational(2, 3));
  }

  const McEstimate two = scheinerman_max_degree_estimate(2, 100000, 7);
  CHECK(two.ci_low <= 2.0 / 3.0);
  CHECK(2.0 / 3.0 <= two.ci_high);

  const McEstimate fifty = scheinerman_max_degree_estimate(50, 50000, 7);
  CHECK(std::abs(fifty.point_estimate - 2.0 / 3.0) < 0.02);

  CHECK(scheinerman_max_degree_estimate_serial(10, 30000, 3).point_estimate ==
        scheinerman_max_degree_estimate(10, 30000, 3).point_estimate);

  CHECK_THROWS_AS(scheinerman_max_degree_estimate(1, 10, 1), std::invalid_argument);
}
