#include "rig/stats.hpp"

#include <algorithm>
#include <cmath>

namespace rig {

namespace {
constexpr double kZ95 = 1.959963984540054;
}

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials) {
  if (trials == 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / n;
  const double z2 = kZ95 * kZ95;
  const double denom = 1 + z2 / n;
  const double center = (phat + z2 / (2 * n)) / denom;
  const double half = kZ95 * std::sqrt(phat * (1 - phat) / n + z2 / (4 * n * n)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

MeanSummary mean_interval(double sum, double sum_of_squares, std::uint64_t count) {
  MeanSummary out;
  if (count == 0) return out;
  const double n = static_cast<double>(count);
  out.mean = sum / n;
  double variance = 0;
  if (count > 1) variance = std::max(0.0, (sum_of_squares - sum * sum / n) / (n - 1));
  const double half = kZ95 * std::sqrt(variance / n);
  out.ci = {out.mean - half, out.mean + half};
  return out;
}

}  // namespace rig
