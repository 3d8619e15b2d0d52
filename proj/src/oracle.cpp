#include "rig/oracle.hpp"

#include <algorithm>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rig {

namespace {

int parse_int(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("expected a non-negative integer, got '" + s + "'");
  return std::stoi(s);
}

}  // namespace

EventQuery EventQuery::parse(const std::string& text) {
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  std::vector<int> args;
  if (colon != std::string::npos) {
    std::string rest = text.substr(colon + 1);
    size_t pos = 0;
    while (pos <= rest.size()) {
      size_t comma = rest.find(',', pos);
      if (comma == std::string::npos) comma = rest.size();
      args.push_back(parse_int(rest.substr(pos, comma - pos)));
      pos = comma + 1;
      if (comma == rest.size()) break;
    }
  }

  auto want = [&](size_t k) {
    if (args.size() != k)
      throw std::invalid_argument("event '" + head + "' takes " + std::to_string(k) +
                                  " parameter(s): " + text);
  };
  if (head == "edge") {
    want(2);
    return edge(args[0], args[1]);
  }
  if (head == "empty") {
    want(1);
    return empty_graph(args[0]);
  }
  if (head == "maxdeg") {
    want(1);
    return max_degree_equals(args[0]);
  }
  if (head == "complete") {
    want(0);
    return is_complete();
  }
  if (head == "point") {
    want(2);
    return point_in_interval(args[0], args[1]);
  }
  if (head == "clique-ge") {
    want(1);
    return clique_at_least(args[0]);
  }
  throw std::invalid_argument("unknown event: " + text);
}

std::string EventQuery::to_string() const {
  switch (kind) {
    case Kind::EdgePresent:
      return "edge:" + std::to_string(a) + "," + std::to_string(b);
    case Kind::EmptyGraphWithKVertices:
      return "empty:" + std::to_string(a);
    case Kind::MaxDegreeEquals:
      return "maxdeg:" + std::to_string(a);
    case Kind::IsComplete:
      return "complete";
    case Kind::PointInInterval:
      return "point:" + std::to_string(a) + "," + std::to_string(b);
    case Kind::CliqueNumberAtLeast:
      return "clique-ge:" + std::to_string(a);
  }
  return "?";
}

void EventQuery::validate(int n, int m) const {
  auto in_labels = [&](int v, const char* what) {
    if (v < 1 || v > m)
      throw std::invalid_argument(std::string(what) + " must lie in [1.." + std::to_string(m) +
                                  "]");
  };
  switch (kind) {
    case Kind::EdgePresent:
      in_labels(a, "edge endpoint");
      in_labels(b, "edge endpoint");
      if (a == b) throw std::invalid_argument("edge endpoints must differ");
      break;
    case Kind::EmptyGraphWithKVertices:
      if (a < 0 || a > m)
        throw std::invalid_argument("vertex count must lie in [0.." + std::to_string(m) + "]");
      break;
    case Kind::MaxDegreeEquals:
      if (a < 0 || a > m - 1)
        throw std::invalid_argument("degree must lie in [0.." + std::to_string(m - 1) + "]");
      break;
    case Kind::IsComplete:
      break;
    case Kind::PointInInterval:
      if (a < 1 || a > n)
        throw std::invalid_argument("position must lie in [1.." + std::to_string(n) + "]");
      in_labels(b, "label");
      break;
    case Kind::CliqueNumberAtLeast:
      if (a < 0) throw std::invalid_argument("clique threshold must be >= 0");
      break;
  }
}

Statistic parse_statistic(const std::string& text) {
  if (text == "edges") return Statistic::EdgeCount;
  if (text == "clique") return Statistic::CliqueNumber;
  if (text == "maxdeg") return Statistic::MaxDegree;
  throw std::invalid_argument("unknown statistic: " + text);
}

std::string statistic_name(Statistic s) {
  switch (s) {
    case Statistic::EdgeCount:
      return "edges";
    case Statistic::CliqueNumber:
      return "clique";
    case Statistic::MaxDegree:
      return "maxdeg";
  }
  return "?";
}

namespace {

inline bool spans_intersect(const SupportScratch& s, int i, int j) {
  return s.first[i] <= s.last[j] && s.first[j] <= s.last[i];
}

bool graph_is_edgeless(const SupportScratch& s, int m) {
  for (int i = 0; i < m; ++i) {
    if (s.first[i] == 0) continue;
    for (int j = i + 1; j < m; ++j)
      if (s.first[j] != 0 && spans_intersect(s, i, j)) return false;
  }
  return true;
}

int scratch_max_degree(const SupportScratch& s, int m) {
  int best = 0;
  for (int i = 0; i < m; ++i) {
    if (s.first[i] == 0) continue;
    int deg = 0;
    for (int j = 0; j < m; ++j)
      if (j != i && s.first[j] != 0 && spans_intersect(s, i, j)) ++deg;
    best = std::max(best, deg);
  }
  return best;
}

// By the 1D Helly property the clique number equals the maximum number of
// supports over a common point, attained at some support's left endpoint.
int scratch_clique_number(const SupportScratch& s, int m) {
  int best = 0;
  for (int i = 0; i < m; ++i) {
    if (s.first[i] == 0) continue;
    const int x = s.first[i];
    int covering = 0;
    for (int j = 0; j < m; ++j)
      if (s.first[j] != 0 && s.first[j] <= x && x <= s.last[j]) ++covering;
    best = std::max(best, covering);
  }
  return best;
}

int scratch_edge_count(const SupportScratch& s, int m) {
  int count = 0;
  for (int i = 0; i < m; ++i) {
    if (s.first[i] == 0) continue;
    for (int j = i + 1; j < m; ++j)
      if (s.first[j] != 0 && spans_intersect(s, i, j)) ++count;
  }
  return count;
}

}  // namespace

bool evaluate_event(const SupportScratch& s, const EventQuery& q, int label_count) {
  const int m = label_count;
  switch (q.kind) {
    case EventQuery::Kind::EdgePresent: {
      const int i = q.a - 1, j = q.b - 1;
      return s.first[i] != 0 && s.first[j] != 0 && spans_intersect(s, i, j);
    }
    case EventQuery::Kind::EmptyGraphWithKVertices:
      return s.present == q.a && graph_is_edgeless(s, m);
    case EventQuery::Kind::MaxDegreeEquals:
      return scratch_max_degree(s, m) == q.a;
    case EventQuery::Kind::IsComplete: {
      if (s.present != m) return false;
      int max_first = 0, min_last = s.n + 1;
      for (int i = 0; i < m; ++i) {
        max_first = std::max(max_first, s.first[i]);
        min_last = std::min(min_last, s.last[i]);
      }
      return max_first <= min_last;
    }
    case EventQuery::Kind::PointInInterval: {
      const int i = q.b - 1;
      return s.first[i] != 0 && s.first[i] <= q.a && q.a <= s.last[i];
    }
    case EventQuery::Kind::CliqueNumberAtLeast:
      return scratch_clique_number(s, m) >= q.a;
  }
  return false;
}

int evaluate_statistic(const SupportScratch& s, Statistic stat, int label_count) {
  switch (stat) {
    case Statistic::EdgeCount:
      return scratch_edge_count(s, label_count);
    case Statistic::CliqueNumber:
      return scratch_clique_number(s, label_count);
    case Statistic::MaxDegree:
      return scratch_max_degree(s, label_count);
  }
  return 0;
}

BudgetExceeded::BudgetExceeded(const Integer& required, std::uint64_t budget_states)
    : std::runtime_error("enumeration budget exceeded: " + required.str() + " states > budget " +
                         std::to_string(budget_states)),
      budget(budget_states),
      required_states(required.str()) {}

namespace {

// Writes p_i = c_i / common_denominator; a coloring with label counts
// (k_1,...,k_m) then has probability (prod c_i^{k_i}) / common^n, so the
// whole enumeration runs on integers and divides once at the end.
struct WeightTables {
  std::vector<std::vector<Integer>> power;  // power[i][k] = c_i^k
  Integer denominator;                      // common^n
};

WeightTables make_weight_tables(int n, const LabelDistribution& p) {
  Integer common = 1;
  for (const Rational& pi : p.probs()) common = lcm(common, Integer(denominator(pi)));
  WeightTables t;
  t.power.resize(p.label_count());
  for (unsigned i = 0; i < p.label_count(); ++i) {
    const Integer c = Integer(numerator(p.probs()[i])) * (common / Integer(denominator(p.probs()[i])));
    auto& row = t.power[i];
    row.resize(n + 1);
    row[0] = 1;
    for (int k = 1; k <= n; ++k) row[k] = row[k - 1] * c;
  }
  t.denominator = ipow(common, static_cast<unsigned>(n));
  return t;
}

std::uint64_t checked_state_count(int n, int m, const OracleLimits& limits) {
  const Integer states = ipow(m, static_cast<unsigned>(n));
  if (states > limits.max_states) throw BudgetExceeded(states, limits.max_states);
  return states.convert_to<std::uint64_t>();
}

// Sum of term(coloring) * weight_numerator over colorings in [begin, end),
// enumerated as a base-m counter with the last position least significant.
template <typename Term>
Integer sum_range(std::uint64_t begin, std::uint64_t end, int n, int m,
                  const WeightTables& tables, Term&& term) {
  std::vector<std::uint8_t> digits(n, 0);
  std::uint64_t idx = begin;
  for (int pos = n - 1; pos >= 0; --pos) {
    digits[pos] = static_cast<std::uint8_t>(idx % m);
    idx /= m;
  }

  SupportScratch scratch;
  Integer sum = 0;
  for (std::uint64_t state = begin; state < end; ++state) {
    scratch.absorb(digits.data(), n, m);
    const long long value = term(scratch);
    if (value != 0) {
      Integer weight = 1;
      for (int i = 0; i < m; ++i)
        if (scratch.count[i] > 0) weight *= tables.power[i][scratch.count[i]];
      if (value != 1) weight *= value;
      sum += weight;
    }
    for (int pos = n - 1; pos >= 0; --pos) {
      if (++digits[pos] < m) break;
      digits[pos] = 0;
    }
  }
  return sum;
}

template <typename Term>
Rational enumerate_core(int n, int m, const LabelDistribution& p, const OracleLimits& limits,
                        bool parallel, Term&& term) {
  const std::uint64_t states = checked_state_count(n, m, limits);
  const WeightTables tables = make_weight_tables(n, p);

  Integer total = 0;
#ifdef _OPENMP
  if (parallel) {
    const int threads = omp_get_max_threads();
    std::vector<Integer> partial(threads);
#pragma omp parallel num_threads(threads)
    {
      const int t = omp_get_thread_num();
      const std::uint64_t lo = states / threads * t + std::min<std::uint64_t>(t, states % threads);
      const std::uint64_t hi =
          states / threads * (t + 1) + std::min<std::uint64_t>(t + 1, states % threads);
      partial[t] = sum_range(lo, hi, n, m, tables, term);
    }
    for (const Integer& part : partial) total += part;
  } else
#endif
  {
    (void)parallel;
    total = sum_range(0, states, n, m, tables, term);
  }
  return Rational(total, tables.denominator);
}

}  // namespace

Rational enumerate_event_prob(int n, const LabelDistribution& p, const EventQuery& q,
                              const OracleLimits& limits) {
  q.validate(n, p.label_count());
  return enumerate_core(n, p.label_count(), p, limits, true,
                        [&](const SupportScratch& s) -> long long {
                          return evaluate_event(s, q, static_cast<int>(p.label_count())) ? 1 : 0;
                        });
}

Rational enumerate_event_prob_serial(int n, const LabelDistribution& p, const EventQuery& q,
                                     const OracleLimits& limits) {
  q.validate(n, p.label_count());
  return enumerate_core(n, p.label_count(), p, limits, false,
                        [&](const SupportScratch& s) -> long long {
                          return evaluate_event(s, q, static_cast<int>(p.label_count())) ? 1 : 0;
                        });
}

Rational enumerate_expectation(int n, const LabelDistribution& p, Statistic stat,
                               const OracleLimits& limits) {
  return enumerate_core(n, p.label_count(), p, limits, true,
                        [&](const SupportScratch& s) -> long long {
                          return evaluate_statistic(s, stat, static_cast<int>(p.label_count()));
                        });
}

Rational enumerate_expectation_serial(int n, const LabelDistribution& p, Statistic stat,
                                      const OracleLimits& limits) {
  return enumerate_core(n, p.label_count(), p, limits, false,
                        [&](const SupportScratch& s) -> long long {
                          return evaluate_statistic(s, stat, static_cast<int>(p.label_count()));
                        });
}

}  // namespace rig
