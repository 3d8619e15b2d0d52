#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>
#include <vector>

#include "rig/combinatorics.hpp"

using namespace rig;

namespace {

// Independent routes used as oracles: Pascal's triangle for binomials, the
// factorial quotient for multinomials, and inclusion-exclusion for Stirling
// numbers.
Integer pascal_binomial(unsigned n, unsigned k) {
  std::vector<std::vector<Integer>> tri(n + 1);
  for (unsigned r = 0; r <= n; ++r) {
    tri[r].assign(r + 1, 1);
    for (unsigned c = 1; c < r; ++c) tri[r][c] = tri[r - 1][c - 1] + tri[r - 1][c];
  }
  return k <= n ? tri[n][k] : 0;
}

Integer factorial_multinomial(const WeakComposition& x) {
  Integer result = factorial(x.total());
  for (unsigned xi : x.parts) result /= factorial(xi);
  return result;
}

Integer inclusion_exclusion_stirling2(unsigned n, unsigned k) {
  // k! S(n,k) = sum_j (-1)^j C(k,j) (k-j)^n
  Integer sum = 0;
  for (unsigned j = 0; j <= k; ++j) {
    const Integer term = binomial(k, j) * ipow(k - j, n);
    sum += (j % 2 == 0) ? term : -term;
  }
  return sum / factorial(k);
}

std::vector<std::vector<unsigned>> collect(WeakCompositionStream stream) {
  std::vector<std::vector<unsigned>> all;
  WeakComposition x;
  while (stream.next(x)) all.push_back(x.parts);
  return all;
}

// Every length-m vector over 0..n, filtered; the dumb route the stream is
// checked against.
std::vector<std::vector<unsigned>> filtered_vectors(unsigned n, unsigned m, int k) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> v(m, 0);
  while (true) {
    unsigned total = 0, nonzero = 0;
    for (unsigned x : v) {
      total += x;
      nonzero += (x > 0);
    }
    if (total == n && (k < 0 || nonzero == static_cast<unsigned>(k))) out.push_back(v);
    int pos = static_cast<int>(m) - 1;
    while (pos >= 0 && v[pos] == n) v[pos--] = 0;
    if (pos < 0) break;
    ++v[pos];
  }
  return out;
}

}  // namespace

TEST_CASE("binomial basics") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(4, 5) == 0);
  CHECK(binomial(4, -1) == 0);
  for (unsigned n = 0; n <= 25; ++n)
    for (unsigned k = 0; k <= n; ++k) CHECK(binomial(n, k) == pascal_binomial(n, k));
}

TEST_CASE("multinomial coefficient") {
  CHECK(multinomial_coefficient({{2, 1, 0}}) == 3);
  CHECK(multinomial_coefficient({{1, 1, 1}}) == 6);
  CHECK(multinomial_coefficient({{0, 0}}) == 1);
  CHECK(multinomial_coefficient({{}}) == 1);

  WeakCompositionStream stream(7, 4);
  WeakComposition x;
  while (stream.next(x)) CHECK(multinomial_coefficient(x) == factorial_multinomial(x));
}

TEST_CASE("stirling2 values and recurrence") {
  CHECK(stirling2(3, 2) == 3);
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling2(0, 0) == 1);
  CHECK(stirling2(5, 0) == 0);
  for (unsigned n = 1; n <= 12; ++n) CHECK(stirling2(n, 1) == 1);

  for (unsigned n = 1; n <= 20; ++n)
    for (unsigned k = 1; k <= n; ++k)
      CHECK(stirling2(n, k) == Integer(k) * stirling2(n - 1, k) + stirling2(n - 1, k - 1));

  for (unsigned n = 0; n <= 15; ++n)
    for (unsigned k = 0; k <= n; ++k)
      CHECK(stirling2(n, k) == inclusion_exclusion_stirling2(n, k));
}

TEST_CASE("weak composition stream: spec examples") {
  auto a = collect(WeakCompositionStream(3, 2, 2));
  REQUIRE(a.size() == 2);
  CHECK(a[0] == std::vector<unsigned>{2, 1});
  CHECK(a[1] == std::vector<unsigned>{1, 2});

  auto b = collect(WeakCompositionStream(2, 3, 1));
  REQUIRE(b.size() == 3);
  CHECK(std::set<std::vector<unsigned>>(b.begin(), b.end()) ==
        std::set<std::vector<unsigned>>{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
}

TEST_CASE("weak composition stream matches filtered enumeration and counts") {
  for (unsigned n = 0; n <= 7; ++n)
    for (unsigned m = 1; m <= 4; ++m) {
      for (unsigned k = 0; k <= m; ++k) {
        auto streamed = collect(WeakCompositionStream(n, m, k));
        auto brute = filtered_vectors(n, m, static_cast<int>(k));
        CHECK(Integer(streamed.size()) == weak_composition_count(n, m, k));
        CHECK(std::set<std::vector<unsigned>>(streamed.begin(), streamed.end()) ==
              std::set<std::vector<unsigned>>(brute.begin(), brute.end()));
        // each exactly once
        CHECK(std::set<std::vector<unsigned>>(streamed.begin(), streamed.end()).size() ==
              streamed.size());
      }
      auto all = collect(WeakCompositionStream(n, m));
      CHECK(all.size() == filtered_vectors(n, m, -1).size());
    }
}

TEST_CASE("weak composition stream is colexicographic") {
  auto colex_less = [](const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
    for (size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  };
  for (auto [n, m, k] : std::vector<std::array<unsigned, 3>>{
           {6, 3, 2}, {5, 4, 3}, {8, 4, 4}, {4, 4, 1}}) {
    auto seq = collect(WeakCompositionStream(n, m, k));
    for (size_t i = 1; i < seq.size(); ++i) CHECK(colex_less(seq[i - 1], seq[i]));
  }
}

TEST_CASE("strictly positive compositions are the nonzero-count = length slice") {
  auto seq = collect(WeakCompositionStream(6, 3, 3));
  CHECK(Integer(seq.size()) == binomial(5, 2));
  for (const auto& parts : seq)
    for (unsigned v : parts) CHECK(v >= 1);
}

TEST_CASE("multinomial_prob examples") {
  const LabelDistribution p13 = LabelDistribution::parse("1/3,2/3");
  CHECK(multinomial_prob({{1, 2}}, p13) == Rational(4, 9));
  CHECK(multinomial_prob({{1, 1, 1}}, LabelDistribution::uniform(3)) == Rational(2, 9));

  const LabelDistribution skew = LabelDistribution::parse("1/2,1/4,1/4");
  CHECK(multinomial_prob({{5, 0, 0}}, skew) == rpow(Rational(1, 2), 5));
  CHECK_THROWS_AS(multinomial_prob({{1, 1}}, skew), std::invalid_argument);
}

TEST_CASE("multinomial masses sum to one") {
  const std::vector<LabelDistribution> dists = {
      LabelDistribution::uniform(2), LabelDistribution::uniform(4),
      LabelDistribution::parse("1/2,1/4,1/4"), LabelDistribution::parse("2/3,1/3")};
  for (const auto& p : dists)
    for (unsigned n = 1; n <= 8; ++n) {
      Rational sum = 0;
      WeakCompositionStream stream(n, p.label_count());
      WeakComposition x;
      while (stream.next(x)) sum += multinomial_prob(x, p);
      CHECK(sum == 1);
    }
}

TEST_CASE("uniform composition mass identities") {
  // The direct sum always equals C(m,k) k! S(n,k) / m^n; the alternate form
  // k!/k^n S(n,k) only matches on the full-support slice k = m.
  for (unsigned m = 1; m <= 4; ++m) {
    const LabelDistribution uniform = LabelDistribution::uniform(m);
    for (unsigned n = 1; n <= 8; ++n)
      for (unsigned k = 1; k <= m; ++k) {
        Rational sum = 0;
        WeakCompositionStream stream(n, m, k);
        WeakComposition x;
        while (stream.next(x)) sum += multinomial_prob(x, uniform);
        CHECK(sum == uniform_composition_mass(n, m, k));
        if (k == m) CHECK(sum == uniform_composition_mass_alt(n, k));
      }
  }
  // Counterexample pinning the mismatch for k < m: n=2, m=3, k=1.
  CHECK(uniform_composition_mass(2, 3, 1) == Rational(1, 3));
  CHECK(uniform_composition_mass_alt(2, 1) == Rational(1, 1));
  CHECK(uniform_composition_mass(2, 3, 1) != uniform_composition_mass_alt(2, 1));
}

TEST_CASE("uniform full-support mass equals m! S(n,m) / m^n") {
  for (unsigned m = 1; m <= 4; ++m)
    for (unsigned n = 1; n <= 8; ++n) {
      Rational sum = 0;
      WeakCompositionStream stream(n, m, m);
      WeakComposition x;
      while (stream.next(x)) sum += multinomial_prob(x, LabelDistribution::uniform(m));
      CHECK(sum == Rational(factorial(m) * stirling2(n, m), ipow(m, n)));
    }
}
