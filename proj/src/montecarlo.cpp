#include "rig/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "rig/formulas.hpp"
#include "rig/stats.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rig {

namespace {

// Cumulative thresholds for inverse-CDF sampling; the last entry is pinned
// to 1 so a draw can never fall off the end.
std::vector<double> cumulative_thresholds(const LabelDistribution& p) {
  std::vector<double> cum(p.label_count());
  Rational running = 0;
  for (unsigned i = 0; i < p.label_count(); ++i) {
    running += p.probs()[i];
    cum[i] = static_cast<double>(running);
  }
  cum.back() = 1.0;
  return cum;
}

inline std::uint8_t draw_label(SplitMix64& stream, const std::vector<double>& cum) {
  const double u = stream.next_unit();
  std::uint8_t label = 0;
  while (u >= cum[label]) ++label;
  return label;
}

// Sums worker.run(seed, t) over all trials. Aggregates are integers, so the
// result does not depend on how trials are scheduled.
template <typename MakeWorker>
std::uint64_t sum_over_trials(std::uint64_t trials, std::uint64_t seed, bool parallel,
                              MakeWorker&& make_worker) {
  std::uint64_t total = 0;
#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel reduction(+ : total)
    {
      auto worker = make_worker();
#pragma omp for schedule(static)
      for (long long t = 0; t < static_cast<long long>(trials); ++t)
        total += worker.run(seed, static_cast<std::uint64_t>(t));
    }
    return total;
  }
#endif
  (void)parallel;
  auto worker = make_worker();
  for (std::uint64_t t = 0; t < trials; ++t) total += worker.run(seed, t);
  return total;
}

struct NerveTrialWorker {
  int n, m;
  const std::vector<double>& cum;
  std::vector<std::uint8_t> digits;
  SupportScratch scratch;

  NerveTrialWorker(int n_, int m_, const std::vector<double>& cum_)
      : n(n_), m(m_), cum(cum_), digits(n_) {}

  void sample(std::uint64_t seed, std::uint64_t trial) {
    SplitMix64 stream = trial_stream(seed, trial);
    for (int i = 0; i < n; ++i) digits[i] = draw_label(stream, cum);
    scratch.absorb(digits.data(), n, m);
  }
};

struct EventWorker : NerveTrialWorker {
  const EventQuery& query;
  EventWorker(int n_, int m_, const std::vector<double>& cum_, const EventQuery& q)
      : NerveTrialWorker(n_, m_, cum_), query(q) {}
  std::uint64_t run(std::uint64_t seed, std::uint64_t trial) {
    sample(seed, trial);
    return evaluate_event(scratch, query, m) ? 1 : 0;
  }
};

struct StatisticWorker : NerveTrialWorker {
  Statistic stat;
  StatisticWorker(int n_, int m_, const std::vector<double>& cum_, Statistic s)
      : NerveTrialWorker(n_, m_, cum_), stat(s) {}
  std::uint64_t run(std::uint64_t seed, std::uint64_t trial) {
    sample(seed, trial);
    return static_cast<std::uint64_t>(evaluate_statistic(scratch, stat, m));
  }
};

McEstimate event_core(int n, const LabelDistribution& p, const EventQuery& q,
                      std::uint64_t trials, std::uint64_t seed, bool parallel) {
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  q.validate(n, p.label_count());
  const auto cum = cumulative_thresholds(p);
  const int m = static_cast<int>(p.label_count());
  const std::uint64_t successes = sum_over_trials(
      trials, seed, parallel, [&] { return EventWorker(n, m, cum, q); });
  const Interval ci = wilson_interval(successes, trials);
  return {static_cast<double>(successes) / static_cast<double>(trials), ci.low, ci.high, trials,
          seed};
}

McEstimate statistic_core(int n, const LabelDistribution& p, Statistic stat,
                          std::uint64_t trials, std::uint64_t seed, bool parallel) {
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  const auto cum = cumulative_thresholds(p);
  const int m = static_cast<int>(p.label_count());

  std::uint64_t sum = 0, sum_sq = 0;
#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel reduction(+ : sum, sum_sq)
    {
      StatisticWorker worker(n, m, cum, stat);
#pragma omp for schedule(static)
      for (long long t = 0; t < static_cast<long long>(trials); ++t) {
        const std::uint64_t v = worker.run(seed, static_cast<std::uint64_t>(t));
        sum += v;
        sum_sq += v * v;
      }
    }
  } else
#endif
  {
    (void)parallel;
    StatisticWorker worker(n, m, cum, stat);
    for (std::uint64_t t = 0; t < trials; ++t) {
      const std::uint64_t v = worker.run(seed, t);
      sum += v;
      sum_sq += v * v;
    }
  }

  const MeanSummary ms =
      mean_interval(static_cast<double>(sum), static_cast<double>(sum_sq), trials);
  return {ms.mean, ms.ci.low, ms.ci.high, trials, seed};
}

// First index at which the running nerve is the full simplex: all labels
// must be collected once, then all collected again no earlier than the
// completion point of the first collection.
struct WaitingWorker {
  int m;
  const std::vector<double>& cum;
  std::uint64_t cap;
  std::vector<char> seen, seen_again;

  WaitingWorker(int m_, const std::vector<double>& cum_, std::uint64_t cap_)
      : m(m_), cum(cum_), cap(cap_), seen(m_), seen_again(m_) {}

  // Returns the waiting time, or 0 if the trial hit the cap.
  std::uint64_t run(std::uint64_t seed, std::uint64_t trial) {
    SplitMix64 stream = trial_stream(seed, trial);
    std::fill(seen.begin(), seen.end(), 0);
    int distinct = 0;
    std::uint64_t step = 0;
    std::uint8_t label = 0;
    while (distinct < m && step < cap) {
      ++step;
      label = draw_label(stream, cum);
      if (!seen[label]) {
        seen[label] = 1;
        ++distinct;
      }
    }
    if (distinct < m) return 0;

    std::fill(seen_again.begin(), seen_again.end(), 0);
    seen_again[label] = 1;
    int distinct_again = 1;
    while (distinct_again < m && step < cap) {
      ++step;
      label = draw_label(stream, cum);
      if (!seen_again[label]) {
        seen_again[label] = 1;
        ++distinct_again;
      }
    }
    return distinct_again == m ? step : 0;
  }
};

WaitingTimeEstimate waiting_core(const LabelDistribution& p, std::uint64_t trials,
                                 std::uint64_t seed, std::uint64_t cap, bool parallel) {
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  if (cap == 0) cap = default_waiting_cap(p.label_count());
  const auto cum = cumulative_thresholds(p);
  const int m = static_cast<int>(p.label_count());

  std::uint64_t sum = 0, sum_sq = 0, completed = 0;
#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel reduction(+ : sum, sum_sq, completed)
    {
      WaitingWorker worker(m, cum, cap);
#pragma omp for schedule(static)
      for (long long t = 0; t < static_cast<long long>(trials); ++t) {
        const std::uint64_t w = worker.run(seed, static_cast<std::uint64_t>(t));
        if (w > 0) {
          sum += w;
          sum_sq += w * w;
          ++completed;
        }
      }
    }
  } else
#endif
  {
    (void)parallel;
    WaitingWorker worker(m, cum, cap);
    for (std::uint64_t t = 0; t < trials; ++t) {
      const std::uint64_t w = worker.run(seed, t);
      if (w > 0) {
        sum += w;
        sum_sq += w * w;
        ++completed;
      }
    }
  }

  WaitingTimeEstimate out;
  out.truncated = trials - completed;
  out.cap = cap;
  const MeanSummary ms =
      mean_interval(static_cast<double>(sum), static_cast<double>(sum_sq), completed);
  out.estimate = {ms.mean, ms.ci.low, ms.ci.high, trials, seed};
  return out;
}

struct ScheinermanWorker {
  int m;
  std::vector<double> lo, hi;

  explicit ScheinermanWorker(int m_) : m(m_), lo(m_), hi(m_) {}

  std::uint64_t run(std::uint64_t seed, std::uint64_t trial) {
    SplitMix64 stream = trial_stream(seed, trial);
    for (int i = 0; i < m; ++i) {
      const double a = stream.next_unit();
      const double b = stream.next_unit();
      lo[i] = std::min(a, b);
      hi[i] = std::max(a, b);
    }

    // Track the two largest left endpoints and two smallest right endpoints
    // so max/min over "all other intervals" is O(1) per interval.
    int lo1 = 0, lo2 = -1;
    int hi1 = 0, hi2 = -1;
    for (int i = 1; i < m; ++i) {
      if (lo[i] > lo[lo1]) {
        lo2 = lo1;
        lo1 = i;
      } else if (lo2 < 0 || lo[i] > lo[lo2]) {
        lo2 = i;
      }
      if (hi[i] < hi[hi1]) {
        hi2 = hi1;
        hi1 = i;
      } else if (hi2 < 0 || hi[i] < hi[hi2]) {
        hi2 = i;
      }
    }
    for (int i = 0; i < m; ++i) {
      const double max_other_lo = (i == lo1) ? (lo2 >= 0 ? lo[lo2] : lo[i]) : lo[lo1];
      const double min_other_hi = (i == hi1) ? (hi2 >= 0 ? hi[hi2] : hi[i]) : hi[hi1];
      if (hi[i] >= max_other_lo && lo[i] <= min_other_hi) return 1;
    }
    return 0;
  }
};

McEstimate scheinerman_core(int m, std::uint64_t trials, std::uint64_t seed, bool parallel) {
  if (m < 2) throw std::invalid_argument("need m >= 2 intervals");
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  const std::uint64_t successes =
      sum_over_trials(trials, seed, parallel, [&] { return ScheinermanWorker(m); });
  const Interval ci = wilson_interval(successes, trials);
  return {static_cast<double>(successes) / static_cast<double>(trials), ci.low, ci.high, trials,
          seed};
}

}  // namespace

Coloring sample_coloring(int n, const LabelDistribution& p, SplitMix64& stream) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  const auto cum = cumulative_thresholds(p);
  Coloring c;
  c.labels.reserve(n);
  for (int i = 0; i < n; ++i) c.labels.push_back(draw_label(stream, cum) + 1);
  return c;
}

McEstimate estimate_event(int n, const LabelDistribution& p, const EventQuery& q,
                          std::uint64_t trials, std::uint64_t seed) {
  return event_core(n, p, q, trials, seed, true);
}

McEstimate estimate_event_serial(int n, const LabelDistribution& p, const EventQuery& q,
                                 std::uint64_t trials, std::uint64_t seed) {
  return event_core(n, p, q, trials, seed, false);
}

McEstimate estimate_statistic(int n, const LabelDistribution& p, Statistic stat,
                              std::uint64_t trials, std::uint64_t seed) {
  return statistic_core(n, p, stat, trials, seed, true);
}

McEstimate estimate_statistic_serial(int n, const LabelDistribution& p, Statistic stat,
                                     std::uint64_t trials, std::uint64_t seed) {
  return statistic_core(n, p, stat, trials, seed, false);
}

std::uint64_t default_waiting_cap(unsigned label_count) {
  const Rational bound = 40 * Rational(label_count) * harmonic(label_count);
  const Integer ceiling = (numerator(bound) + denominator(bound) - 1) / denominator(bound);
  return ceiling.convert_to<std::uint64_t>();
}

WaitingTimeEstimate estimate_waiting_time(const LabelDistribution& p, std::uint64_t trials,
                                          std::uint64_t seed, std::uint64_t cap) {
  return waiting_core(p, trials, seed, cap, true);
}

WaitingTimeEstimate estimate_waiting_time_serial(const LabelDistribution& p,
                                                 std::uint64_t trials, std::uint64_t seed,
                                                 std::uint64_t cap) {
  return waiting_core(p, trials, seed, cap, false);
}

McEstimate scheinerman_max_degree_estimate(int m, std::uint64_t trials, std::uint64_t seed) {
  return scheinerman_core(m, trials, seed, true);
}

McEstimate scheinerman_max_degree_estimate_serial(int m, std::uint64_t trials,
                                                  std::uint64_t seed) {
  return scheinerman_core(m, trials, seed, false);
}

}  // namespace rig
