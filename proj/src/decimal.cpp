#include "markov/decimal.hpp"

#include <algorithm>
#include <stdexcept>

namespace markov {

const Int& FixedDecimal::scale_factor() {
  static const Int factor = [] {
    Int f = 1;
    for (int i = 0; i < kScale; ++i) f *= 10;
    return f;
  }();
  return factor;
}

FixedDecimal FixedDecimal::from_units(Int units) {
  FixedDecimal d;
  d.units_ = std::move(units);
  return d;
}

namespace {

// Quotient rounded to nearest (ties away from zero); keeps the 1-ulp error
// bound symmetric for both signs.
Int div_nearest(const Int& num, const Int& den) {
  Int q = num / den;
  Int r = num - q * den;
  Int twice = 2 * (r < 0 ? -r : r);
  if (twice >= (den < 0 ? -den : den)) q += (num < 0) == (den < 0) ? 1 : -1;
  return q;
}

}  // namespace

FixedDecimal FixedDecimal::from_ratio(const Int& num, const Int& den) {
  if (den == 0) throw DomainError("fixed decimal: zero denominator");
  return from_units(div_nearest(num * scale_factor(), den));
}

FixedDecimal FixedDecimal::from_rational(const Rat& r) {
  return from_ratio(numerator(r), denominator(r));
}

FixedDecimal FixedDecimal::parse(const std::string& text) {
  std::string digits;
  int frac_digits = 0;
  bool seen_point = false, negative = false;
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) negative = text[i++] == '-';
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c == '.') {
      if (seen_point) throw DomainError("fixed decimal: malformed literal " + text);
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      digits += c;
      if (seen_point) ++frac_digits;
    } else {
      throw DomainError("fixed decimal: malformed literal " + text);
    }
  }
  if (digits.empty() || frac_digits > kScale)
    throw DomainError("fixed decimal: malformed literal " + text);
  Int mantissa(digits);
  for (int k = frac_digits; k < kScale; ++k) mantissa *= 10;
  return from_units(negative ? -mantissa : mantissa);
}

FixedDecimal FixedDecimal::sqrt_of(const Int& n) {
  if (n < 0) throw DomainError("fixed decimal: sqrt of negative integer");
  Int radicand = n * scale_factor() * scale_factor();
  return from_units(boost::multiprecision::sqrt(radicand));
}

FixedDecimal FixedDecimal::operator*(const FixedDecimal& o) const {
  return from_units(div_nearest(units_ * o.units_, scale_factor()));
}

FixedDecimal FixedDecimal::operator/(const FixedDecimal& o) const {
  if (o.units_ == 0) throw DomainError("fixed decimal: division by zero");
  return from_units(div_nearest(units_ * scale_factor(), o.units_));
}

FixedDecimal FixedDecimal::pow(int exponent) const {
  if (exponent < 0) return FixedDecimal(1) / pow(-exponent);
  FixedDecimal result(1);
  FixedDecimal base = *this;
  int e = exponent;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Int FixedDecimal::round_to_int() const {
  return div_nearest(units_, scale_factor());
}

std::string FixedDecimal::to_string(int significant_digits) const {
  if (units_ == 0) return "0";
  Int mag = units_ < 0 ? -units_ : units_;
  std::string all = mag.str();  // integer digits followed by kScale fraction digits
  std::string digits;
  int point;  // number of digits before the decimal point
  if (static_cast<int>(all.size()) > kScale) {
    point = static_cast<int>(all.size()) - kScale;
    digits = all;
  } else {
    point = 1;
    digits = std::string(static_cast<std::size_t>(kScale) - all.size() + 1, '0') + all;
  }
  int first = 0;
  while (first < static_cast<int>(digits.size()) && digits[first] == '0') ++first;
  int keep_until = std::clamp(first + significant_digits, point, static_cast<int>(digits.size()));

  std::string out = units_ < 0 ? "-" : "";
  out += digits.substr(0, static_cast<std::size_t>(point));
  if (keep_until > point) {
    out += '.';
    out += digits.substr(static_cast<std::size_t>(point),
                         static_cast<std::size_t>(keep_until - point));
  }
  return out;
}

}  // namespace markov
