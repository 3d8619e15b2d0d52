// Times the OpenMP kernels against their serial reference implementations
// and checks that both produce identical results.
//
//   rig_bench [--oracle-n N] [--oracle-m M] [--trials T]

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#include "rig/formulas.hpp"
#include "rig/montecarlo.hpp"
#include "rig/oracle.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(const char* kernel, double serial_s, double parallel_s, bool identical) {
  std::printf("%-28s serial %8.3fs  parallel %8.3fs  speedup %5.2fx  identical %s\n", kernel,
              serial_s, parallel_s, serial_s / parallel_s, identical ? "yes" : "NO");
}

}  // namespace

int main(int argc, char** argv) {
  int oracle_n = 12, oracle_m = 3;
  std::uint64_t trials = 500000;
  for (int i = 1; i + 1 < argc; i += 2) {
    if (!std::strcmp(argv[i], "--oracle-n")) oracle_n = std::atoi(argv[i + 1]);
    if (!std::strcmp(argv[i], "--oracle-m")) oracle_m = std::atoi(argv[i + 1]);
    if (!std::strcmp(argv[i], "--trials")) trials = std::strtoull(argv[i + 1], nullptr, 10);
  }

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif

  using namespace rig;
  const OracleLimits limits{1ull << 40};

  {
    const LabelDistribution p = LabelDistribution::parse("1/2,1/4,1/4");
    const EventQuery q = EventQuery::edge(1, 2);
    auto t0 = Clock::now();
    const Rational serial = enumerate_event_prob_serial(oracle_n, p, q, limits);
    const double ts = seconds_since(t0);
    t0 = Clock::now();
    const Rational parallel = enumerate_event_prob(oracle_n, p, q, limits);
    report("oracle event enumeration", ts, seconds_since(t0), serial == parallel);
  }

  {
    const LabelDistribution p = LabelDistribution::uniform(oracle_m);
    auto t0 = Clock::now();
    const Rational serial = enumerate_expectation_serial(oracle_n, p, Statistic::CliqueNumber,
                                                         limits);
    const double ts = seconds_since(t0);
    t0 = Clock::now();
    const Rational parallel = enumerate_expectation(oracle_n, p, Statistic::CliqueNumber, limits);
    report("oracle clique expectation", ts, seconds_since(t0), serial == parallel);
  }

  {
    const LabelDistribution p = LabelDistribution::uniform(5);
    const EventQuery q = EventQuery::is_complete();
    auto t0 = Clock::now();
    const McEstimate serial = estimate_event_serial(40, p, q, trials, 7);
    const double ts = seconds_since(t0);
    t0 = Clock::now();
    const McEstimate parallel = estimate_event(40, p, q, trials, 7);
    report("mc event estimate", ts, seconds_since(t0),
           serial.point_estimate == parallel.point_estimate);
  }

  {
    auto t0 = Clock::now();
    const McEstimate serial = scheinerman_max_degree_estimate_serial(50, trials, 7);
    const double ts = seconds_since(t0);
    t0 = Clock::now();
    const McEstimate parallel = scheinerman_max_degree_estimate(50, trials, 7);
    report("mc scheinerman estimate", ts, seconds_since(t0),
           serial.point_estimate == parallel.point_estimate);
  }

  {
    const LabelDistribution p = LabelDistribution::uniform(4);
    auto t0 = Clock::now();
    const WaitingTimeEstimate serial = estimate_waiting_time_serial(p, trials, 7);
    const double ts = seconds_since(t0);
    t0 = Clock::now();
    const WaitingTimeEstimate parallel = estimate_waiting_time(p, trials, 7);
    report("mc waiting time", ts, seconds_since(t0),
           serial.estimate.point_estimate == parallel.estimate.point_estimate &&
               serial.truncated == parallel.truncated);
  }

  return 0;
}
