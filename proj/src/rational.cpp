#include "rig/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace rig {

Integer ipow(const Integer& base, unsigned exponent) {
  Integer result = 1;
  Integer b = base;
  unsigned e = exponent;
  while (e > 0) {
    if (e & 1u) result *= b;
    e >>= 1u;
    if (e) b *= b;
  }
  return result;
}

Rational rpow(const Rational& base, unsigned exponent) {
  return Rational(ipow(numerator(base), exponent), ipow(denominator(base), exponent));
}

Rational harmonic(unsigned m) {
  Rational h = 0;
  for (unsigned i = 1; i <= m; ++i) h += Rational(1, i);
  return h;
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = (s[0] == '-');
    s.erase(0, 1);
  }

  Rational value;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("malformed fraction: " + text);
    Integer d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + text);
    value = Rational(Integer(num), d);
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string intpart = s.substr(0, dot), frac = s.substr(dot + 1);
    if (intpart.empty()) intpart = "0";
    if (frac.empty()) frac = "0";
    if (!all_digits(intpart) || !all_digits(frac))
      throw std::invalid_argument("malformed decimal: " + text);
    value = Rational(Integer(intpart + frac), ipow(10, static_cast<unsigned>(frac.size())));
  } else {
    if (!all_digits(s)) throw std::invalid_argument("malformed number: " + text);
    value = Rational(Integer(s));
  }
  return negative ? -value : value;
}

std::string to_fraction_string(const Rational& v) {
  return v.str();
}

std::string to_decimal_string(const Rational& v, int significant) {
  if (significant < 1) significant = 1;
  if (v == 0) {
    std::string s = "0.";
    s.append(static_cast<size_t>(significant), '0');
    return s;
  }

  const bool negative = v < 0;
  const Rational a = negative ? Rational(-v) : v;

  // Decimal exponent e with 10^e <= a < 10^(e+1).
  long long e = 0;
  {
    Rational t = a;
    while (t >= 10) {
      t /= 10;
      ++e;
    }
    while (t < 1) {
      t *= 10;
      --e;
    }
  }

  // First `significant` digits, rounded half away from zero.
  const long long shift = significant - 1 - e;
  Rational scaled = a;
  if (shift >= 0)
    scaled *= ipow(10, static_cast<unsigned>(shift));
  else
    scaled /= ipow(10, static_cast<unsigned>(-shift));
  Integer digits = Integer((numerator(scaled) * 2 + denominator(scaled)) / (denominator(scaled) * 2));
  if (digits == ipow(10, static_cast<unsigned>(significant))) {
    digits /= 10;
    ++e;
  }

  std::string d = digits.str();
  std::string out = negative ? "-" : "";
  if (e < 0) {
    out += "0.";
    out.append(static_cast<size_t>(-e - 1), '0');
    out += d;
  } else if (e + 1 >= static_cast<long long>(d.size())) {
    out += d;
    out.append(static_cast<size_t>(e + 1 - static_cast<long long>(d.size())), '0');
    out += ".0";
  } else {
    out += d.substr(0, static_cast<size_t>(e + 1));
    out += '.';
    out += d.substr(static_cast<size_t>(e + 1));
  }
  return out;
}

std::string to_decimal_string(double v, int significant) {
  return to_decimal_string(Rational(v), significant);  // doubles convert exactly
}

}  // namespace rig
