#pragma once

#include <vector>

#include "rig/distribution.hpp"
#include "rig/rational.hpp"

namespace rig {

// An occupancy vector (x_1, ..., x_m): how many sample points carry each
// label. `parts` sums to the composed total; the constrained stream below
// additionally fixes the number of nonzero parts.
struct WeakComposition {
  std::vector<unsigned> parts;

  unsigned total() const;
  unsigned nonzero_count() const;
};

Integer factorial(unsigned n);

// C(n, k); 0 when k < 0 or k > n.
Integer binomial(unsigned n, long long k);

// (sum x_i)! / prod x_i!
Integer multinomial_coefficient(const WeakComposition& x);

// Partitions of an n-set into k nonempty blocks. S(0,0) = 1, S(n,0) = 0 for
// n > 0. Memoized via the recurrence S(n,k) = k*S(n-1,k) + S(n-1,k-1);
// the table is guarded, so concurrent callers are fine.
Integer stirling2(unsigned n, unsigned k);

// |X^n_{m,k}| = C(m,k) * C(n-1,k-1), with the k = 0 degenerate case spelled
// out (a single empty composition when n = 0).
Integer weak_composition_count(unsigned total, unsigned length, unsigned nonzero);

// Lazily streams weak compositions in colexicographic order with O(length)
// state. Two modes: exactly `nonzero` nonzero parts, or unconstrained.
class WeakCompositionStream {
 public:
  WeakCompositionStream(unsigned total, unsigned length, unsigned nonzero);
  WeakCompositionStream(unsigned total, unsigned length);

  // Fills `out` with the next composition; false once exhausted.
  bool next(WeakComposition& out);

 private:
  struct Frame {
    unsigned rem_total;
    unsigned rem_nonzero;
    long long value;  // -1 before the first candidate at this position
  };

  bool suffix_feasible(unsigned slots, unsigned total, unsigned nonzero) const;

  unsigned total_, length_, nonzero_;
  bool constrained_;
  bool started_ = false;
  bool finished_ = false;
  std::vector<Frame> stack_;
  std::vector<unsigned> parts_;
};

// M(x) = multinomial_coefficient(x) * prod p_i^{x_i}. Throws on a length
// mismatch between x and p.
Rational multinomial_prob(const WeakComposition& x, const LabelDistribution& p);

// Exact total mass of X^n_{m,k} under the uniform distribution on m labels:
// C(m,k) * k! * S(n,k) / m^n.
Rational uniform_composition_mass(unsigned total, unsigned length, unsigned nonzero);

// Alternate closed form k!/k^n * S(n,k). Has no dependence on the vector
// length; agrees with uniform_composition_mass only when nonzero == length.
// Kept callable so the two claims can be compared directly.
Rational uniform_composition_mass_alt(unsigned total, unsigned nonzero);

}  // namespace rig
