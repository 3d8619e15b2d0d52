#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "rig/distribution.hpp"
#include "rig/model.hpp"
#include "rig/rational.hpp"

namespace rig {

// A graph/nerve event, evaluated on the structure a coloring induces.
struct EventQuery {
  enum class Kind {
    EdgePresent,              // {i,j} is an edge
    EmptyGraphWithKVertices,  // exactly k vertices, no edges
    MaxDegreeEquals,          // maximum degree == d
    IsComplete,               // all m supports share a point
    PointInInterval,          // position x lies in the support of label i
    CliqueNumberAtLeast,      // clique number >= t
  };

  Kind kind;
  int a = 0;
  int b = 0;

  static EventQuery edge(int i, int j) { return {Kind::EdgePresent, i, j}; }
  static EventQuery empty_graph(int k) { return {Kind::EmptyGraphWithKVertices, k}; }
  static EventQuery max_degree_equals(int d) { return {Kind::MaxDegreeEquals, d}; }
  static EventQuery is_complete() { return {Kind::IsComplete}; }
  static EventQuery point_in_interval(int x, int i) { return {Kind::PointInInterval, x, i}; }
  static EventQuery clique_at_least(int t) { return {Kind::CliqueNumberAtLeast, t}; }

  // "edge:1,2", "empty:2", "maxdeg:1", "complete", "point:2,1", "clique-ge:2"
  static EventQuery parse(const std::string& text);
  std::string to_string() const;

  // Throws std::invalid_argument when parameters fall outside [1..m]/[1..n].
  void validate(int n, int m) const;
};

enum class Statistic { EdgeCount, CliqueNumber, MaxDegree };

Statistic parse_statistic(const std::string& text);  // "edges" | "clique" | "maxdeg"
std::string statistic_name(Statistic s);

// Event/statistic evaluation on extracted supports. Equivalent to building
// the full IntervalGraph (property-tested); kept allocation-free for the
// enumeration and sampling hot loops.
bool evaluate_event(const SupportScratch& s, const EventQuery& q, int label_count);
int evaluate_statistic(const SupportScratch& s, Statistic stat, int label_count);

struct OracleLimits {
  std::uint64_t max_states = 10'000'000;
};

// Enumeration is refused, not truncated, when m^n exceeds the budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const Integer& required, std::uint64_t budget);
  std::uint64_t budget;
  std::string required_states;  // decimal; may exceed uint64 range
};

// Ground truth: sums the exact probability of every coloring satisfying the
// event, over all m^n colorings. Never touches floating point. The parallel
// kernel partitions the mixed-radix coloring space; partial sums are exact
// rationals, so the result is bit-identical at any thread count.
Rational enumerate_event_prob(int n, const LabelDistribution& p, const EventQuery& q,
                              const OracleLimits& limits = {});
Rational enumerate_event_prob_serial(int n, const LabelDistribution& p, const EventQuery& q,
                                     const OracleLimits& limits = {});

Rational enumerate_expectation(int n, const LabelDistribution& p, Statistic stat,
                               const OracleLimits& limits = {});
Rational enumerate_expectation_serial(int n, const LabelDistribution& p, Statistic stat,
                                      const OracleLimits& limits = {});

}  // namespace rig
