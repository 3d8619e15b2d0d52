#pragma once

#include <cstdint>

#include "rig/distribution.hpp"
#include "rig/model.hpp"
#include "rig/oracle.hpp"
#include "rig/rng.hpp"

namespace rig {

struct McEstimate {
  double point_estimate = 0;
  double ci_low = 0;   // 95%
  double ci_high = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

// n i.i.d. draws; label i is drawn with probability p_i by inverse CDF over
// the cumulative p vector.
Coloring sample_coloring(int n, const LabelDistribution& p, SplitMix64& stream);

// Proportion of trials where the event holds on the sampled nerve, with a
// Wilson 95% interval. Trials run on independent sub-streams and success
// counts aggregate exactly, so results are identical at any thread count;
// the _serial variants are the reference implementations kept for testing.
McEstimate estimate_event(int n, const LabelDistribution& p, const EventQuery& q,
                          std::uint64_t trials, std::uint64_t seed);
McEstimate estimate_event_serial(int n, const LabelDistribution& p, const EventQuery& q,
                                 std::uint64_t trials, std::uint64_t seed);

// Mean of a nerve statistic with a normal-approximation 95% interval.
McEstimate estimate_statistic(int n, const LabelDistribution& p, Statistic stat,
                              std::uint64_t trials, std::uint64_t seed);
McEstimate estimate_statistic_serial(int n, const LabelDistribution& p, Statistic stat,
                                     std::uint64_t trials, std::uint64_t seed);

struct WaitingTimeEstimate {
  McEstimate estimate;       // mean over completed trials
  std::uint64_t truncated = 0;  // trials that hit the cap; reported, never dropped
  std::uint64_t cap = 0;
};

std::uint64_t default_waiting_cap(unsigned label_count);  // ceil(40 m H_m)

// Mean first index at which the running nerve becomes the full simplex.
// cap = 0 selects the default cap.
WaitingTimeEstimate estimate_waiting_time(const LabelDistribution& p, std::uint64_t trials,
                                          std::uint64_t seed, std::uint64_t cap = 0);
WaitingTimeEstimate estimate_waiting_time_serial(const LabelDistribution& p,
                                                 std::uint64_t trials, std::uint64_t seed,
                                                 std::uint64_t cap = 0);

// Reference model with m intervals whose 2m endpoints are i.i.d. uniform
// draws, paired consecutively. Estimates P(some interval meets all others),
// which is 2/3 for every m.
McEstimate scheinerman_max_degree_estimate(int m, std::uint64_t trials, std::uint64_t seed);
McEstimate scheinerman_max_degree_estimate_serial(int m, std::uint64_t trials,
                                                  std::uint64_t seed);

}  // namespace rig
