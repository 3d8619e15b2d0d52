#include "rig/combinatorics.hpp"

#include <mutex>
#include <stdexcept>

namespace rig {

unsigned WeakComposition::total() const {
  unsigned s = 0;
  for (unsigned v : parts) s += v;
  return s;
}

unsigned WeakComposition::nonzero_count() const {
  unsigned c = 0;
  for (unsigned v : parts) c += (v != 0);
  return c;
}

Integer factorial(unsigned n) {
  Integer f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

Integer binomial(unsigned n, long long k) {
  if (k < 0 || k > static_cast<long long>(n)) return 0;
  unsigned kk = static_cast<unsigned>(k);
  if (kk > n - kk) kk = n - kk;
  Integer result = 1;
  for (unsigned i = 1; i <= kk; ++i) {
    result *= (n - kk + i);
    result /= i;  // exact at every step
  }
  return result;
}

Integer multinomial_coefficient(const WeakComposition& x) {
  Integer result = 1;
  unsigned placed = 0;
  for (unsigned xi : x.parts) {
    placed += xi;
    result *= binomial(placed, xi);
  }
  return result;
}

Integer stirling2(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (n == 0) return 1;
  if (k == 0) return 0;

  static std::mutex table_mutex;
  static std::vector<std::vector<Integer>> table = {{Integer(1)}};
  std::lock_guard<std::mutex> lock(table_mutex);
  while (table.size() <= n) {
    const unsigned r = static_cast<unsigned>(table.size());
    std::vector<Integer> row(r + 1);
    row[0] = 0;
    for (unsigned c = 1; c < r; ++c)
      row[c] = Integer(c) * table[r - 1][c] + table[r - 1][c - 1];
    row[r] = 1;
    table.push_back(std::move(row));
  }
  return table[n][k];
}

Integer weak_composition_count(unsigned total, unsigned length, unsigned nonzero) {
  if (nonzero > length || nonzero > total) return 0;
  if (nonzero == 0) return total == 0 ? 1 : 0;
  return binomial(length, nonzero) * binomial(total - 1, static_cast<long long>(nonzero) - 1);
}

WeakCompositionStream::WeakCompositionStream(unsigned total, unsigned length, unsigned nonzero)
    : total_(total), length_(length), nonzero_(nonzero), constrained_(true) {
  if (nonzero > length) finished_ = true;
  parts_.assign(length_, 0);
}

WeakCompositionStream::WeakCompositionStream(unsigned total, unsigned length)
    : total_(total), length_(length), nonzero_(0), constrained_(false) {
  parts_.assign(length_, 0);
}

bool WeakCompositionStream::suffix_feasible(unsigned slots, unsigned total,
                                            unsigned nonzero) const {
  if (slots == 0) return total == 0 && (!constrained_ || nonzero == 0);
  if (!constrained_) return true;
  if (nonzero > slots) return false;
  return nonzero == 0 ? total == 0 : total >= nonzero;
}

bool WeakCompositionStream::next(WeakComposition& out) {
  if (finished_) return false;
  if (!started_) {
    started_ = true;
    if (length_ == 0) {
      finished_ = true;
      if (total_ == 0 && (!constrained_ || nonzero_ == 0)) {
        out.parts.clear();
        return true;
      }
      return false;
    }
    stack_.push_back({total_, nonzero_, -1});
  }

  while (!stack_.empty()) {
    Frame& frame = stack_.back();
    const unsigned depth = static_cast<unsigned>(stack_.size());
    const unsigned slots_left = length_ - depth;

    bool advanced = false;
    unsigned next_total = 0, next_nonzero = 0;
    for (long long v = frame.value + 1; v <= static_cast<long long>(frame.rem_total); ++v) {
      if (constrained_ && v > 0 && frame.rem_nonzero == 0) break;
      next_total = frame.rem_total - static_cast<unsigned>(v);
      next_nonzero = constrained_ ? frame.rem_nonzero - (v > 0 ? 1 : 0) : 0;
      if (suffix_feasible(slots_left, next_total, next_nonzero)) {
        frame.value = v;
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      stack_.pop_back();
      continue;
    }

    // Frames fill positions right to left, so ascending values at the
    // rightmost varying coordinate give colexicographic order.
    parts_[length_ - depth] = static_cast<unsigned>(frame.value);
    if (depth == length_) {
      out.parts = parts_;
      return true;
    }
    stack_.push_back({next_total, next_nonzero, -1});
  }
  finished_ = true;
  return false;
}

Rational multinomial_prob(const WeakComposition& x, const LabelDistribution& p) {
  if (x.parts.size() != p.label_count())
    throw std::invalid_argument("composition length does not match label count");
  Rational result(multinomial_coefficient(x));
  for (unsigned i = 0; i < x.parts.size(); ++i)
    if (x.parts[i] > 0) result *= rpow(p.prob(i + 1), x.parts[i]);
  return result;
}

Rational uniform_composition_mass(unsigned total, unsigned length, unsigned nonzero) {
  const Integer s = stirling2(total, nonzero);
  if (s == 0 && !(total == 0 && nonzero == 0)) return 0;
  return Rational(binomial(length, nonzero) * factorial(nonzero) * s, ipow(length, total));
}

Rational uniform_composition_mass_alt(unsigned total, unsigned nonzero) {
  const Integer s = stirling2(total, nonzero);
  if (s == 0) return 0;
  return Rational(factorial(nonzero) * s, ipow(nonzero, total));
}

}  // namespace rig
