#pragma once

#include "rig/combinatorics.hpp"
#include "rig/distribution.hpp"
#include "rig/rational.hpp"

namespace rig {

enum class Method { Exact, LowerBound, UpperBound };

// A probability with its provenance: exact value or a directed bound.
struct ProbabilityResult {
  Rational value;
  Method method;
  const char* provenance;

  ProbabilityResult(Rational v, Method m, const char* id);
};

// Complement masses q_i = 1 - p_i and q_ij = 1 - (p_i + p_j). Requires
// p_i, p_j > 0 and p_i + p_j <= 1.
struct PairComplement {
  Rational q_i, q_j, q_ij;
  PairComplement(const Rational& p_i, const Rational& p_j);
};

// --- edgeless graphs -------------------------------------------------------

// P(the graph is K_k^c): exact in the uniform case, a lower bound in general
// (with p_* = min_i p_i).
ProbabilityResult empty_graph_prob_uniform(int n, int m, int k);
ProbabilityResult empty_graph_prob_lower(int n, const LabelDistribution& p, int k);

// --- single edges and edge counts ------------------------------------------

// Exact probability that supports i and j intersect.
ProbabilityResult edge_prob(int n, const Rational& p_i, const Rational& p_j);
// Uniform closed form 1 - (2n(m-1)^{n-1} + (m-2)^n) / m^n; m >= 2.
ProbabilityResult edge_prob_uniform(int n, int m);

Rational expected_edge_count(int n, const LabelDistribution& p);
Rational expected_edge_count_uniform(int n, int m);

// --- point membership and cliques ------------------------------------------

// Exact P(position x lies in the support of a label with mass p_i):
// 1 - q^x - q^{n-x+1} + q^n.
ProbabilityResult point_in_interval_prob(int n, int x, const Rational& p_i);

// Lower bound on the expected clique number: the point formula summed over
// labels at the midpoint x = ceil(n/2).
Rational expected_clique_lower_bound(int n, const LabelDistribution& p);
Rational expected_clique_lower_bound_uniform(int n, int m);
// Alternate printed uniform form (single q-power terms, not scaled by m).
// Not a validated bound; exposed for side-by-side comparison.
Rational expected_clique_lower_bound_uniform_alt(int n, int m);

// --- maximum degree ---------------------------------------------------------

// Lower bound on P(max degree = m-1), maximized over the window half-width
// r in [1, (n-m)/2]; 0 when that range is empty. The first factor is clamped
// at 0 and the star probability is max_i p_i.
ProbabilityResult max_degree_lower_bound(int n, const LabelDistribution& p);
ProbabilityResult max_degree_lower_bound_uniform(int n, int m);
// Alternate printed uniform form; can exceed 1, so it is returned raw.
Rational max_degree_lower_bound_uniform_alt(int n, int m);

// --- the full simplex -------------------------------------------------------

// Lower bound on P(the nerve is the full (m-1)-simplex): the squared mass of
// strictly positive occupancy vectors over floor(n/2) samples. Uniform case
// reduces to (m! S(floor(n/2), m) / m^floor(n/2))^2.
ProbabilityResult simplex_prob_lower_bound(int n, const LabelDistribution& p);
ProbabilityResult simplex_prob_lower_bound_uniform(int n, int m);

// --- waiting time -----------------------------------------------------------

// E[time to collect all m labels]: the integral of 1 - prod(1 - e^{-p_i x})
// over [0, inf), evaluated by adaptive quadrature on [0, U] with the tail
// bound sum_i e^{-p_i U} < 1e-14 and tolerance 1e-12.
double coupon_expected_time(const LabelDistribution& p);
// Uniform case is exact: m * H_m.
Rational coupon_expected_time_uniform(int m);

// Upper bound on the expected waiting time until the nerve is complete:
// twice the collection time.
double waiting_time_upper_bound(const LabelDistribution& p);
Rational waiting_time_upper_bound_uniform(int m);

}  // namespace rig
