#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace markov {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Matching counts and Markov numbers; overflows 64 bits near q ~ 30,
/// so everything is arbitrary precision from the start.
using MarkovValue = Int;

inline std::int64_t gcd_abs(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// num/den as an exact rational; accepts negative denominators.
inline Rat make_rat(Int num, Int den) {
  if (den == 0) throw std::domain_error("rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rat(std::move(num), std::move(den));
}

/// floor(p/q) for exact rationals.
inline Int rat_floor(const Rat& r) {
  Int n = numerator(r), d = denominator(r);
  Int q = n / d;
  if (n < 0 && q * d != n) --q;
  return q;
}

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace markov
