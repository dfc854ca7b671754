#pragma once

#include "markov/lattice.hpp"
#include "markov/perturbed.hpp"

namespace markov {

/// Crossing sequence of the deformation of segment AB computed directly from
/// the infinitesimally offset polyline A, P1 + En, ..., P_{t-1} + En, B
/// (n the bypass-side normal, E a positive infinitesimal): every crossing is
/// a segment/line intersection with a PerturbedRational parameter, compared
/// lexicographically. Shares no logic with the base + fan construction and
/// serves as its oracle.
CrossingSequence offset_deformation_crossings(const LatticePoint& a, const LatticePoint& b,
                                              Side side);

}  // namespace markov
