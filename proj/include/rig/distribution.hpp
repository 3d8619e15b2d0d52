#pragma once

#include <string>
#include <vector>

#include "rig/rational.hpp"

namespace rig {

// The label distribution (p_1, ..., p_m): the model's only parameter besides
// the sample count. Every p_i must be strictly positive and the vector must
// sum to exactly 1; there is no silent renormalization.
class LabelDistribution {
 public:
  explicit LabelDistribution(std::vector<Rational> probabilities);

  static LabelDistribution uniform(unsigned label_count);

  // Parses "1/2,1/4,1/4" (rationals or plain decimals, comma separated).
  static LabelDistribution parse(const std::string& csv);

  unsigned label_count() const { return static_cast<unsigned>(p_.size()); }

  // Labels are 1-based throughout the public API.
  const Rational& prob(unsigned label) const { return p_.at(label - 1); }
  const std::vector<Rational>& probs() const { return p_; }

  const Rational& min_prob() const { return min_; }
  const Rational& max_prob() const { return max_; }

  bool is_uniform() const;

  std::string to_string() const;

 private:
  std::vector<Rational> p_;
  Rational min_, max_;
};

}  // namespace rig
