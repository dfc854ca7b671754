#pragma once

#include <string>

#include "markov/numeric.hpp"

namespace markov {

/// Fixed-point decimal on big integers: value = units / 10^kScale. Carries 72
/// fractional digits so that results quoted to 60 significant digits have
/// ample guard; square roots come from the exact integer square root of a
/// scaled radicand. No hardware floating point anywhere.
class FixedDecimal {
 public:
  static constexpr int kScale = 72;

  FixedDecimal() = default;
  explicit FixedDecimal(const Int& integer_value) : units_(integer_value * scale_factor()) {}
  explicit FixedDecimal(std::int64_t integer_value) : units_(Int(integer_value) * scale_factor()) {}

  static FixedDecimal from_units(Int units);
  static FixedDecimal from_ratio(const Int& num, const Int& den);
  static FixedDecimal from_rational(const Rat& r);
  /// Parse a plain decimal literal like "1.00200118" (optionally signed).
  static FixedDecimal parse(const std::string& text);
  /// sqrt of a non-negative integer.
  static FixedDecimal sqrt_of(const Int& n);

  FixedDecimal operator+(const FixedDecimal& o) const { return from_units(units_ + o.units_); }
  FixedDecimal operator-(const FixedDecimal& o) const { return from_units(units_ - o.units_); }
  FixedDecimal operator-() const { return from_units(-units_); }
  FixedDecimal operator*(const FixedDecimal& o) const;
  FixedDecimal operator/(const FixedDecimal& o) const;

  /// Integer power, negative exponents via the reciprocal.
  FixedDecimal pow(int exponent) const;

  bool operator==(const FixedDecimal& o) const { return units_ == o.units_; }
  bool operator<(const FixedDecimal& o) const { return units_ < o.units_; }
  bool operator<=(const FixedDecimal& o) const { return units_ <= o.units_; }
  bool operator>(const FixedDecimal& o) const { return units_ > o.units_; }
  bool operator>=(const FixedDecimal& o) const { return units_ >= o.units_; }

  FixedDecimal abs() const { return from_units(units_ < 0 ? -units_ : units_); }

  /// Nearest integer (ties away from zero).
  Int round_to_int() const;

  /// Decimal string with the given number of significant digits (default the
  /// 60 the reports quote).
  std::string to_string(int significant_digits = 60) const;

  const Int& units() const { return units_; }

  static const Int& scale_factor();

 private:
  Int units_ = 0;
};

}  // namespace markov
