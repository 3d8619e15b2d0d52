#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "rig/formulas.hpp"
#include "rig/model.hpp"
#include "rig/oracle.hpp"

using namespace rig;

namespace {

void for_each_coloring(int n, int m, auto&& fn) {
  Coloring c;
  c.labels.assign(n, 1);
  while (true) {
    fn(c);
    int pos = n - 1;
    while (pos >= 0 && c.labels[pos] == m) c.labels[pos--] = 1;
    if (pos < 0) break;
    ++c.labels[pos];
  }
}

Rational coloring_weight(const Coloring& c, const LabelDistribution& p) {
  Rational w = 1;
  for (int label : c.labels) w *= p.prob(label);
  return w;
}

// The complement of an edge event, split into the three mutually exclusive
// ways supports i and j can fail to meet: both labels absent, exactly one
// absent, or both present with one support entirely left of the other.
Rational three_case_complement(int n, const LabelDistribution& p, int i, int j) {
  Rational both_absent = 0, one_absent = 0, separated = 0;
  for_each_coloring(n, p.label_count(), [&](const Coloring& c) {
    const SupportSet s = derive_supports(c, p.label_count());
    const Rational w = coloring_weight(c, p);
    if (!s.present(i) && !s.present(j)) {
      both_absent += w;
    } else if (s.present(i) != s.present(j)) {
      one_absent += w;
    } else if (s.span(i).last < s.span(j).first || s.span(j).last < s.span(i).first) {
      separated += w;
    }
  });
  return both_absent + one_absent + separated;
}

}  // namespace

TEST_CASE("oracle event examples") {
  const LabelDistribution u2 = LabelDistribution::uniform(2);
  CHECK(enumerate_event_prob(3, u2, EventQuery::edge(1, 2)) == Rational(1, 4));
  CHECK(enumerate_event_prob(3, u2, EventQuery::empty_graph(2)) == Rational(1, 2));
  CHECK(enumerate_event_prob(2, LabelDistribution::parse("1/2,1/3,1/6"),
                             EventQuery::is_complete()) == 0);
  CHECK(enumerate_event_prob(3, LabelDistribution::parse("1/2,1/4,1/4"),
                             EventQuery::edge(1, 2)) == Rational(3, 32));
}

TEST_CASE("oracle expectation examples") {
  const LabelDistribution u2 = LabelDistribution::uniform(2);
  CHECK(enumerate_expectation(3, u2, Statistic::EdgeCount) == Rational(1, 4));
  CHECK(enumerate_expectation(2, u2, Statistic::CliqueNumber) == 1);
  CHECK(enumerate_expectation(4, u2, Statistic::CliqueNumber) == Rational(3, 2));
}

TEST_CASE("edgeless vertex counts partition the no-edge event") {
  // sum_k P(K_k^c) + P(clique number >= 2) = 1
  for (const auto& p : {LabelDistribution::uniform(2), LabelDistribution::uniform(3),
                        LabelDistribution::parse("1/2,1/4,1/4")})
    for (int n = 1; n <= 6; ++n) {
      Rational total = enumerate_event_prob(n, p, EventQuery::clique_at_least(2));
      for (int k = 0; k <= static_cast<int>(p.label_count()); ++k)
        total += enumerate_event_prob(n, p, EventQuery::empty_graph(k));
      CHECK(total == 1);
    }
}

TEST_CASE("point-in-interval event matches the closed form everywhere") {
  for (const auto& p : {LabelDistribution::uniform(3), LabelDistribution::parse("2/3,1/3")})
    for (int n = 1; n <= 8; ++n)
      for (int x = 1; x <= n; ++x)
        for (int i = 1; i <= static_cast<int>(p.label_count()); ++i)
          CHECK(enumerate_event_prob(n, p, EventQuery::point_in_interval(x, i)) ==
                point_in_interval_prob(n, x, p.prob(i)).value);
}

TEST_CASE("edge complement equals the three-case enumeration") {
  for (const auto& p : {LabelDistribution::uniform(2), LabelDistribution::parse("1/2,1/4,1/4")})
    for (int n = 1; n <= 6; ++n)
      for (int i = 1; i <= static_cast<int>(p.label_count()); ++i)
        for (int j = i + 1; j <= static_cast<int>(p.label_count()); ++j)
          CHECK(enumerate_event_prob(n, p, EventQuery::edge(i, j)) +
                    three_case_complement(n, p, i, j) ==
                1);
}

TEST_CASE("oracle is invariant under relabeling") {
  const LabelDistribution p = LabelDistribution::parse("1/2,1/3,1/6");
  const LabelDistribution rotated = LabelDistribution::parse("1/6,1/2,1/3");
  // label i under p corresponds to label i+1 under rotated
  for (int n = 1; n <= 6; ++n) {
    CHECK(enumerate_event_prob(n, p, EventQuery::edge(1, 2)) ==
          enumerate_event_prob(n, rotated, EventQuery::edge(2, 3)));
    CHECK(enumerate_event_prob(n, p, EventQuery::point_in_interval(1, 3)) ==
          enumerate_event_prob(n, rotated, EventQuery::point_in_interval(1, 1)));
    CHECK(enumerate_event_prob(n, p, EventQuery::is_complete()) ==
          enumerate_event_prob(n, rotated, EventQuery::is_complete()));
  }
}

TEST_CASE("parallel enumeration is bit-identical to the serial reference") {
  const std::vector<LabelDistribution> dists = {LabelDistribution::uniform(3),
                                                LabelDistribution::parse("1/2,1/4,1/4")};
  const std::vector<EventQuery> queries = {
      EventQuery::edge(1, 2),     EventQuery::empty_graph(2),
      EventQuery::is_complete(),  EventQuery::max_degree_equals(2),
      EventQuery::clique_at_least(2), EventQuery::point_in_interval(3, 1)};
  for (const auto& p : dists)
    for (int n : {5, 8}) {
      for (const auto& q : queries)
        CHECK(enumerate_event_prob(n, p, q) == enumerate_event_prob_serial(n, p, q));
      for (auto stat :
           {Statistic::EdgeCount, Statistic::CliqueNumber, Statistic::MaxDegree})
        CHECK(enumerate_expectation(n, p, stat) == enumerate_expectation_serial(n, p, stat));
    }
}

TEST_CASE("budget refusal names the required state count") {
  const LabelDistribution p = LabelDistribution::uniform(3);
  OracleLimits limits{1000};
  CHECK_THROWS_AS(enumerate_event_prob(10, p, EventQuery::edge(1, 2), limits), BudgetExceeded);
  try {
    enumerate_event_prob(10, p, EventQuery::edge(1, 2), limits);
  } catch (const BudgetExceeded& e) {
    CHECK(e.required_states == "59049");
    CHECK(e.budget == 1000);
  }
  // exactly at the budget is allowed
  limits.max_states = 59049;
  CHECK(enumerate_event_prob(10, p, EventQuery::edge(1, 2), limits) > 0);
}

TEST_CASE("query validation") {
  const LabelDistribution p = LabelDistribution::uniform(3);
  CHECK_THROWS_AS(enumerate_event_prob(4, p, EventQuery::edge(1, 4)), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_event_prob(4, p, EventQuery::edge(2, 2)), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_event_prob(4, p, EventQuery::point_in_interval(5, 1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(enumerate_event_prob(4, p, EventQuery::empty_graph(4)),
                  std::invalid_argument);
}

TEST_CASE("event grammar round-trips") {
  for (const char* text :
       {"edge:1,2", "empty:2", "maxdeg:1", "complete", "point:2,1", "clique-ge:2"})
    CHECK(EventQuery::parse(text).to_string() == text);
  CHECK_THROWS_AS(EventQuery::parse("edge:1"), std::invalid_argument);
  CHECK_THROWS_AS(EventQuery::parse("nonsense"), std::invalid_argument);
  CHECK_THROWS_AS(EventQuery::parse("edge:1,x"), std::invalid_argument);
}

TEST_CASE("scratch evaluation matches the full model construction") {
  SupportScratch scratch;
  std::vector<std::uint8_t> digits;
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 6; ++n)
      for_each_coloring(n, m, [&](const Coloring& c) {
        digits.assign(c.labels.size(), 0);
        for (size_t i = 0; i < c.labels.size(); ++i)
          digits[i] = static_cast<std::uint8_t>(c.labels[i] - 1);
        scratch.absorb(digits.data(), n, m);

        const IntervalGraph g = build_interval_graph(derive_supports(c, m));
        REQUIRE(evaluate_statistic(scratch, Statistic::EdgeCount, m) ==
                static_cast<int>(g.edges.size()));
        REQUIRE(evaluate_statistic(scratch, Statistic::CliqueNumber, m) == clique_number(g));
        REQUIRE(evaluate_statistic(scratch, Statistic::MaxDegree, m) == max_degree(g));

        for (int i = 1; i <= m; ++i)
          for (int j = i + 1; j <= m; ++j)
            REQUIRE(evaluate_event(scratch, EventQuery::edge(i, j), m) == g.has_edge(i, j));
        for (int k = 0; k <= m; ++k)
          REQUIRE(evaluate_event(scratch, EventQuery::empty_graph(k), m) ==
                  (static_cast<int>(g.vertices.size()) == k && g.edges.empty()));
        REQUIRE(evaluate_event(scratch, EventQuery::is_complete(), m) ==
                (static_cast<int>(g.vertices.size()) == m &&
                 static_cast<int>(g.edges.size()) == m * (m - 1) / 2));
        for (int x = 1; x <= n; ++x)
          for (int i = 1; i <= m; ++i) {
            const SupportSet s = derive_supports(c, m);
            REQUIRE(evaluate_event(scratch, EventQuery::point_in_interval(x, i), m) ==
                    (s.present(i) && s.span(i).contains(x)));
          }
      });
}
