#pragma once

#include "markov/numeric.hpp"

namespace markov {

/// Exact rational plus a first-order infinitesimal: base + eps * E where E is
/// a fixed positive infinitesimal. Ordering is lexicographic on (base, eps).
/// Supported arithmetic stays linear in E; products of two perturbed values
/// never occur in any computation built on this type.
struct PerturbedRational {
  Rat base;
  Rat eps;

  PerturbedRational() = default;
  PerturbedRational(Rat b, Rat e) : base(std::move(b)), eps(std::move(e)) {}
  explicit PerturbedRational(Rat b) : base(std::move(b)), eps(0) {}

  PerturbedRational operator+(const PerturbedRational& o) const {
    return {base + o.base, eps + o.eps};
  }
  PerturbedRational operator-(const PerturbedRational& o) const {
    return {base - o.base, eps - o.eps};
  }
  PerturbedRational operator-() const { return {-base, -eps}; }

  /// Scale by an exact (unperturbed) rational.
  PerturbedRational scaled(const Rat& s) const { return {base * s, eps * s}; }
  PerturbedRational divided(const Rat& s) const {
    if (s == 0) throw DomainError("perturbed rational: division by zero");
    return {base / s, eps / s};
  }

  bool operator==(const PerturbedRational& o) const {
    return base == o.base && eps == o.eps;
  }
  bool operator<(const PerturbedRational& o) const {
    if (base != o.base) return base < o.base;
    return eps < o.eps;
  }
  bool operator<=(const PerturbedRational& o) const { return *this < o || *this == o; }
  bool operator>(const PerturbedRational& o) const { return o < *this; }
  bool operator>=(const PerturbedRational& o) const { return o <= *this; }
};

}  // namespace markov
