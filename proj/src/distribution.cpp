#include "rig/distribution.hpp"

#include <sstream>
#include <stdexcept>

namespace rig {

LabelDistribution::LabelDistribution(std::vector<Rational> probabilities)
    : p_(std::move(probabilities)) {
  if (p_.empty()) throw std::invalid_argument("label distribution needs at least one label");
  Rational sum = 0;
  min_ = p_.front();
  max_ = p_.front();
  for (const Rational& pi : p_) {
    if (pi <= 0) throw std::invalid_argument("every label probability must be > 0");
    sum += pi;
    if (pi < min_) min_ = pi;
    if (pi > max_) max_ = pi;
  }
  if (sum != 1) {
    throw std::invalid_argument("label probabilities must sum to exactly 1, got " +
                                to_fraction_string(sum));
  }
}

LabelDistribution LabelDistribution::uniform(unsigned label_count) {
  if (label_count == 0) throw std::invalid_argument("label count must be >= 1");
  return LabelDistribution(std::vector<Rational>(label_count, Rational(1, label_count)));
}

LabelDistribution LabelDistribution::parse(const std::string& csv) {
  std::vector<Rational> p;
  std::stringstream ss(csv);
  std::string token;
  while (std::getline(ss, token, ',')) p.push_back(parse_rational(token));
  if (p.empty()) throw std::invalid_argument("empty probability vector");
  return LabelDistribution(std::move(p));
}

bool LabelDistribution::is_uniform() const {
  const Rational share(1, label_count());
  for (const Rational& pi : p_)
    if (pi != share) return false;
  return true;
}

std::string LabelDistribution::to_string() const {
  std::string out;
  for (size_t i = 0; i < p_.size(); ++i) {
    if (i) out += ',';
    out += to_fraction_string(p_[i]);
  }
  return out;
}

}  // namespace rig
