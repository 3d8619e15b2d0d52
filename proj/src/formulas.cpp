#include "rig/formulas.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace rig {

ProbabilityResult::ProbabilityResult(Rational v, Method m, const char* id)
    : value(std::move(v)), method(m), provenance(id) {
  if (value < 0 || value > 1)
    throw std::logic_error(std::string("probability out of range in ") + id + ": " +
                           to_fraction_string(value));
}

PairComplement::PairComplement(const Rational& p_i, const Rational& p_j)
    : q_i(1 - p_i), q_j(1 - p_j), q_ij(1 - p_i - p_j) {
  if (p_i <= 0 || p_j <= 0 || q_ij < 0)
    throw std::invalid_argument("need p_i, p_j > 0 with p_i + p_j <= 1");
}

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

// Total M(x) mass of X^total_{m,k}. Uniform distributions use the closed
// form C(m,k) k! S(total,k) / m^total, which equals the composition sum
// exactly (property-tested); other distributions stream the compositions.
Rational composition_mass(unsigned total, unsigned nonzero, const LabelDistribution& p) {
  if (p.is_uniform()) return uniform_composition_mass(total, p.label_count(), nonzero);
  Rational sum = 0;
  WeakCompositionStream stream(total, p.label_count(), nonzero);
  WeakComposition x;
  while (stream.next(x)) sum += multinomial_prob(x, p);
  return sum;
}

}  // namespace

ProbabilityResult empty_graph_prob_uniform(int n, int m, int k) {
  require(n >= 1 && m >= 1, "need n >= 1 and m >= 1");
  require(0 <= k && k <= m, "need 0 <= k <= m");
  const Rational value(factorial(k) * binomial(m, k) * binomial(n - 1, k - 1),
                       ipow(m, static_cast<unsigned>(n)));
  return {value, Method::Exact, "empty_graph_prob_uniform"};
}

ProbabilityResult empty_graph_prob_lower(int n, const LabelDistribution& p, int k) {
  require(n >= 1, "need n >= 1");
  require(0 <= k && k <= static_cast<int>(p.label_count()), "need 0 <= k <= m");
  const Rational value = rpow(p.min_prob(), static_cast<unsigned>(n)) *
                         Rational(factorial(k) * binomial(p.label_count(), k) *
                                  binomial(n - 1, k - 1));
  return {value, Method::LowerBound, "empty_graph_prob_lower"};
}

ProbabilityResult edge_prob(int n, const Rational& p_i, const Rational& p_j) {
  require(n >= 1, "need n >= 1");
  const PairComplement qc(p_i, p_j);

  std::vector<Rational> pi_pow(n + 1), pj_pow(n + 1), q_pow(n + 1);
  pi_pow[0] = pj_pow[0] = q_pow[0] = 1;
  for (int k = 1; k <= n; ++k) {
    pi_pow[k] = pi_pow[k - 1] * p_i;
    pj_pow[k] = pj_pow[k - 1] * p_j;
    q_pow[k] = q_pow[k - 1] * qc.q_ij;
  }

  // Complement: both labels absent, one absent, or both present with all of
  // one label left of all of the other.
  Rational miss = q_pow[n];
  for (int k = 1; k <= n; ++k) {
    Rational bracket = pi_pow[k] + pj_pow[k];
    for (int r = 1; r <= k - 1; ++r) bracket += 2 * pi_pow[r] * pj_pow[k - r];
    miss += Rational(binomial(n, k)) * bracket * q_pow[n - k];
  }
  return {1 - miss, Method::Exact, "edge_prob"};
}

ProbabilityResult edge_prob_uniform(int n, int m) {
  require(n >= 1 && m >= 2, "need n >= 1 and m >= 2");
  const Integer misses = 2 * Integer(n) * ipow(m - 1, static_cast<unsigned>(n - 1)) +
                         ipow(m - 2, static_cast<unsigned>(n));
  return {1 - Rational(misses, ipow(m, static_cast<unsigned>(n))), Method::Exact,
          "edge_prob_uniform"};
}

Rational expected_edge_count(int n, const LabelDistribution& p) {
  Rational sum = 0;
  const unsigned m = p.label_count();
  for (unsigned i = 1; i <= m; ++i)
    for (unsigned j = i + 1; j <= m; ++j) sum += edge_prob(n, p.prob(i), p.prob(j)).value;
  return sum;
}

Rational expected_edge_count_uniform(int n, int m) {
  require(m >= 1, "need m >= 1");
  if (m == 1) return 0;
  return Rational(binomial(m, 2)) * edge_prob_uniform(n, m).value;
}

ProbabilityResult point_in_interval_prob(int n, int x, const Rational& p_i) {
  require(n >= 1, "need n >= 1");
  require(1 <= x && x <= n, "need 1 <= x <= n");
  require(p_i > 0 && p_i <= 1, "need 0 < p_i <= 1");
  const Rational q = 1 - p_i;
  const Rational value = 1 - rpow(q, static_cast<unsigned>(x)) -
                         rpow(q, static_cast<unsigned>(n - x + 1)) +
                         rpow(q, static_cast<unsigned>(n));
  return {value, Method::Exact, "point_in_interval_prob"};
}

Rational expected_clique_lower_bound(int n, const LabelDistribution& p) {
  require(n >= 1, "need n >= 1");
  const int x = (n + 1) / 2;  // ceil(n/2), where the point formula peaks
  Rational sum = 0;
  for (unsigned i = 1; i <= p.label_count(); ++i)
    sum += point_in_interval_prob(n, x, p.prob(i)).value;
  return sum;
}

Rational expected_clique_lower_bound_uniform(int n, int m) {
  return expected_clique_lower_bound(n, LabelDistribution::uniform(m));
}

Rational expected_clique_lower_bound_uniform_alt(int n, int m) {
  require(n >= 1 && m >= 1, "need n >= 1 and m >= 1");
  const Rational q(m - 1, m);
  const int x = (n + 1) / 2;
  return Rational(m) - rpow(q, static_cast<unsigned>(x)) -
         rpow(q, static_cast<unsigned>(n - x + 1)) + rpow(q, static_cast<unsigned>(n));
}

ProbabilityResult max_degree_lower_bound(int n, const LabelDistribution& p) {
  require(n >= 1, "need n >= 1");
  const int m = static_cast<int>(p.label_count());
  Rational best = 0;
  const Rational p_star = p.max_prob();
  for (int r = 1; 2 * r <= n - m; ++r) {
    Rational miss = 0;
    for (int k = 1; k <= m - 1; ++k) {
      miss += Rational(ipow(k, static_cast<unsigned>(r)), ipow(m, static_cast<unsigned>(r))) *
              Rational(binomial(m, k)) * composition_mass(r, k, p) *
              Rational(ipow(m - k, static_cast<unsigned>(r))) *
              rpow(p_star, static_cast<unsigned>(r));
    }
    Rational spanning = 1 - miss;
    if (spanning < 0) spanning = 0;  // the union bound may overshoot 1
    const unsigned middle = static_cast<unsigned>(n - 2 * r);
    const Rational crowded =
        composition_mass(middle, m, p) + composition_mass(middle, m - 1, p);
    const Rational candidate = spanning * crowded;
    if (candidate > best) best = candidate;
  }
  return {best, Method::LowerBound, "max_degree_lower_bound"};
}

ProbabilityResult max_degree_lower_bound_uniform(int n, int m) {
  return max_degree_lower_bound(n, LabelDistribution::uniform(m));
}

Rational max_degree_lower_bound_uniform_alt(int n, int m) {
  require(n >= 1 && m >= 2, "need n >= 1 and m >= 2");
  Rational best = 0;
  for (int r = 1; 2 * r <= n - m; ++r) {
    Rational miss = 0;
    for (int k = 1; k <= m - 1; ++k) {
      miss += Rational(factorial(m), ipow(m, static_cast<unsigned>(2 * r))) *
              Rational(ipow(m - k, static_cast<unsigned>(r)), factorial(m - k)) *
              Rational(stirling2(static_cast<unsigned>(r), static_cast<unsigned>(k)));
    }
    const unsigned middle = static_cast<unsigned>(n - 2 * r);
    const Rational crowded =
        Rational(factorial(m) * stirling2(middle, m), ipow(m, middle)) +
        Rational(factorial(m - 1) * stirling2(middle, m - 1), ipow(m - 1, middle));
    const Rational candidate = (1 - miss) * crowded;
    if (candidate > best) best = candidate;
  }
  return best;
}

ProbabilityResult simplex_prob_lower_bound(int n, const LabelDistribution& p) {
  require(n >= 1, "need n >= 1");
  const Rational mass =
      composition_mass(static_cast<unsigned>(n / 2), p.label_count(), p);
  return {mass * mass, Method::LowerBound, "simplex_prob_lower_bound"};
}

ProbabilityResult simplex_prob_lower_bound_uniform(int n, int m) {
  require(n >= 1 && m >= 1, "need n >= 1 and m >= 1");
  const unsigned half = static_cast<unsigned>(n / 2);
  const Rational mass(factorial(m) * stirling2(half, static_cast<unsigned>(m)), ipow(m, half));
  return {mass * mass, Method::LowerBound, "simplex_prob_lower_bound_uniform"};
}

double coupon_expected_time(const LabelDistribution& p) {
  std::vector<double> rates;
  rates.reserve(p.label_count());
  double min_rate = 1.0;
  for (const Rational& pi : p.probs()) {
    const double r = static_cast<double>(pi);
    rates.push_back(r);
    min_rate = std::min(min_rate, r);
  }

  double upper = std::log(static_cast<double>(rates.size()) / 1e-14) / min_rate;
  auto tail = [&](double u) {
    double s = 0;
    for (double r : rates) s += std::exp(-r * u);
    return s;
  };
  while (tail(upper) >= 1e-14) upper *= 1.25;

  auto integrand = [&](double x) {
    double prod = 1;
    for (double r : rates) prod *= 1 - std::exp(-r * x);
    return 1 - prod;
  };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, 0.0, upper, 15,
                                                                       1e-12);
}

Rational coupon_expected_time_uniform(int m) {
  require(m >= 1, "need m >= 1");
  return Rational(m) * harmonic(static_cast<unsigned>(m));
}

double waiting_time_upper_bound(const LabelDistribution& p) {
  return 2 * coupon_expected_time(p);
}

Rational waiting_time_upper_bound_uniform(int m) {
  return 2 * coupon_expected_time_uniform(m);
}

}  // namespace rig
