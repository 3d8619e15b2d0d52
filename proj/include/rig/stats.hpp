#pragma once

#include <cstdint>

namespace rig {

struct Interval {
  double low = 0;
  double high = 0;
};

// 95% Wilson score interval for a binomial proportion; behaves sensibly at
// observed proportions of exactly 0 or 1.
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials);

// 95% normal-approximation interval for a sample mean, from exact totals.
struct MeanSummary {
  double mean = 0;
  Interval ci;
};
MeanSummary mean_interval(double sum, double sum_of_squares, std::uint64_t count);

}  // namespace rig
