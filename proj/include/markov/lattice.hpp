#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "markov/numeric.hpp"

namespace markov {

// The plane is triangulated by three families of lattice lines:
//   label 1: horizontal edges (i,j)--(i+1,j), lying on lines y = k
//   label 2: vertical   edges (i,j)--(i,j+1), lying on lines x = k
//   label 3: diagonal   edges (i,j)--(i+1,j-1), lying on lines x + y = k
// A crossing sequence records the labels of the edges an arc crosses, in
// order along the arc.

struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
  LatticePoint operator+(const LatticePoint& o) const { return {x + o.x, y + o.y}; }
  LatticePoint operator-(const LatticePoint& o) const { return {x - o.x, y - o.y}; }
};

/// A nonzero integer vector stored in primitive form (gcd of coordinates 1).
struct Direction {
  std::int64_t dx = 1;
  std::int64_t dy = 0;

  friend bool operator==(const Direction&, const Direction&) = default;
};

/// Construct the primitive form of (dx, dy); throws on the zero vector.
Direction make_direction(std::int64_t dx, std::int64_t dy);

enum class EdgeLabel : std::uint8_t { Horizontal = 1, Vertical = 2, Diagonal = 3 };

inline int label_value(EdgeLabel l) { return static_cast<int>(l); }
EdgeLabel label_from_value(int v);

using CrossingSequence = std::vector<EdgeLabel>;

std::string to_string(const CrossingSequence& seq);

enum class Side { Left, Right };

/// B - A = t * d with d primitive; pegs are the t-1 interior lattice points.
struct PrimitiveDecomposition {
  Direction d;
  std::int64_t t = 1;
  std::vector<LatticePoint> pegs;
};

PrimitiveDecomposition primitive_decomposition(const LatticePoint& a, const LatticePoint& b);

/// Labels of the triangulation edges crossed by the open segment from a to
/// a + d, ordered by the crossing parameter. Requires d primitive, which
/// guarantees there are no interior lattice points and no parameter ties.
CrossingSequence base_crossing_sequence(const LatticePoint& a, const Direction& d);

/// The labels a deformation crosses while bypassing one lattice point on the
/// given side, traveling in direction d on both sides of the point. Three
/// labels in general, two when d is parallel to an edge family.
CrossingSequence fan_sequence(const Direction& d, Side side);

/// Fan for a path that enters the bypassed point with direction `in` and
/// leaves with direction `out`: the incident edges met while walking around
/// the point on the given side, in walk order.
CrossingSequence fan_between(const Direction& in, const Direction& out, Side side);

/// Crossing sequence of the deformation of segment AB that bypasses every
/// interior lattice point on the given side: t copies of the base sequence
/// interleaved with t-1 fans.
CrossingSequence deformed_crossing_sequence(const LatticePoint& a, const LatticePoint& b,
                                            Side side);

struct Waypoint {
  LatticePoint point;
  Side side = Side::Left;
};

/// Crossing sequence of the taut curve A -> waypoints -> B that bypasses each
/// waypoint on its given side. Every leg between consecutive anchors must be
/// primitive; a leg through an unlisted lattice point is rejected.
CrossingSequence peg_path_crossing_sequence(const LatticePoint& a,
                                            const std::vector<Waypoint>& waypoints,
                                            const LatticePoint& b);

/// True iff ABC is non-degenerate with |cross(B-A, C-A)| = 1; by Pick's
/// theorem such a triangle contains no lattice points beyond its vertices.
bool is_empty_triangle(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c);

/// True iff ABCD in this cyclic order is strictly convex and both diagonal
/// triangulations consist of empty triangles.
bool is_empty_convex_quadrilateral(const LatticePoint& a, const LatticePoint& b,
                                   const LatticePoint& c, const LatticePoint& d);

/// True iff ABCD in this cyclic order is strictly convex (all four turns
/// nonzero and of equal sign).
bool is_strictly_convex_quadrilateral(const LatticePoint& a, const LatticePoint& b,
                                      const LatticePoint& c, const LatticePoint& d);

std::int64_t cross(const LatticePoint& u, const LatticePoint& v);

}  // namespace markov
