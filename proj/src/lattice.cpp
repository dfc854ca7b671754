#include "markov/lattice.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <stdexcept>

namespace markov {

namespace {

// The six edge directions incident to every lattice point, with the label of
// the edge family each belongs to.
struct IncidentEdge {
  std::int64_t ex, ey;
  EdgeLabel label;
};

constexpr std::array<IncidentEdge, 6> kIncidentEdges = {{
    {1, 0, EdgeLabel::Horizontal},
    {-1, 0, EdgeLabel::Horizontal},
    {0, 1, EdgeLabel::Vertical},
    {0, -1, EdgeLabel::Vertical},
    {1, -1, EdgeLabel::Diagonal},
    {-1, 1, EdgeLabel::Diagonal},
}};

std::int64_t cross2(std::int64_t ax, std::int64_t ay, std::int64_t bx, std::int64_t by) {
  return ax * by - ay * bx;
}

std::int64_t dot2(std::int64_t ax, std::int64_t ay, std::int64_t bx, std::int64_t by) {
  return ax * bx + ay * by;
}

void check_no_equal_neighbors(const CrossingSequence& seq, const char* what) {
  for (std::size_t i = 1; i < seq.size(); ++i) {
    if (seq[i] == seq[i - 1])
      throw std::logic_error(std::string(what) + ": equal consecutive labels in " +
                             to_string(seq));
  }
}

}  // namespace

std::int64_t cross(const LatticePoint& u, const LatticePoint& v) {
  return cross2(u.x, u.y, v.x, v.y);
}

Direction make_direction(std::int64_t dx, std::int64_t dy) {
  if (dx == 0 && dy == 0) throw DomainError("direction: zero vector");
  std::int64_t g = gcd_abs(dx, dy);
  return Direction{dx / g, dy / g};
}

EdgeLabel label_from_value(int v) {
  if (v < 1 || v > 3) throw DomainError("edge label must be 1, 2 or 3");
  return static_cast<EdgeLabel>(v);
}

std::string to_string(const CrossingSequence& seq) {
  std::string s = "(";
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) s += ',';
    s += static_cast<char>('0' + label_value(seq[i]));
  }
  s += ')';
  return s;
}

PrimitiveDecomposition primitive_decomposition(const LatticePoint& a, const LatticePoint& b) {
  if (a == b) throw DomainError("degenerate segment: endpoints coincide");
  std::int64_t dx = b.x - a.x, dy = b.y - a.y;
  std::int64_t g = gcd_abs(dx, dy);
  PrimitiveDecomposition out;
  out.d = Direction{dx / g, dy / g};
  out.t = g;
  for (std::int64_t i = 1; i < g; ++i)
    out.pegs.push_back({a.x + i * out.d.dx, a.y + i * out.d.dy});
  return out;
}

CrossingSequence base_crossing_sequence(const LatticePoint& a, const Direction& d) {
  if (gcd_abs(d.dx, d.dy) != 1) throw DomainError("base crossing sequence: direction not primitive");

  // One linear form per family; a crossing of f = k at parameter
  // t = (k - f(a)) / f(d) is a crossing of an edge labeled by the family.
  struct Family {
    std::int64_t fa, fd;
    EdgeLabel label;
  };
  const Family families[3] = {
      {a.y, d.dy, EdgeLabel::Horizontal},
      {a.x, d.dx, EdgeLabel::Vertical},
      {a.x + a.y, d.dx + d.dy, EdgeLabel::Diagonal},
  };

  std::vector<std::pair<Rat, EdgeLabel>> hits;
  for (const auto& f : families) {
    if (f.fd == 0) continue;
    std::int64_t lo = std::min(f.fa, f.fa + f.fd) + 1;
    std::int64_t hi = std::max(f.fa, f.fa + f.fd) - 1;
    for (std::int64_t k = lo; k <= hi; ++k)
      hits.emplace_back(make_rat(k - f.fa, f.fd), f.label);
  }
  std::sort(hits.begin(), hits.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  for (std::size_t i = 1; i < hits.size(); ++i) {
    if (hits[i].first == hits[i - 1].first)
      throw std::logic_error("crossing parameter tie on a primitive segment");
  }

  CrossingSequence seq;
  seq.reserve(hits.size());
  for (auto& h : hits) seq.push_back(h.second);
  return seq;
}

CrossingSequence fan_sequence(const Direction& d, Side side) {
  if (gcd_abs(d.dx, d.dy) != 1) throw DomainError("fan sequence: direction not primitive");

  // The deformation line passes the point at offset E on the bypass side.
  // An incident edge e is crossed iff it points into that side, and the
  // crossing parameter along the line is dot(d,e) / |cross(d,e)| times E.
  struct Hit {
    std::int64_t num, den;  // dot / |cross|, den > 0
    EdgeLabel label;
  };
  std::vector<Hit> hits;
  for (const auto& e : kIncidentEdges) {
    std::int64_t c = cross2(d.dx, d.dy, e.ex, e.ey);
    if (side == Side::Left ? c <= 0 : c >= 0) continue;
    hits.push_back({dot2(d.dx, d.dy, e.ex, e.ey), std::llabs(c), e.label});
  }
  std::sort(hits.begin(), hits.end(), [](const Hit& l, const Hit& r) {
    return l.num * r.den < r.num * l.den;
  });

  CrossingSequence seq;
  for (auto& h : hits) seq.push_back(h.label);
  return seq;
}

namespace {

// Exact circular order used by the fan walk. Rank of a vector around the
// start direction s, measured counterclockwise in (0, 8): vectors parallel
// to s rank 0 (same direction, excluded from walks) or 4 (opposite).
// Comparisons within an open halfplane use the cross product.
struct AngularFrame {
  std::int64_t sx, sy;

  int coarse(std::int64_t vx, std::int64_t vy) const {
    std::int64_t c = cross2(sx, sy, vx, vy);
    std::int64_t d = dot2(sx, sy, vx, vy);
    if (c == 0) return d > 0 ? 0 : 4;
    return c > 0 ? 2 : 6;
  }
  // True iff u comes strictly before v counterclockwise from s.
  bool ccw_before(std::int64_t ux, std::int64_t uy, std::int64_t vx, std::int64_t vy) const {
    int cu = coarse(ux, uy), cv = coarse(vx, vy);
    if (cu != cv) return cu < cv;
    return cross2(ux, uy, vx, vy) > 0;
  }
};

}  // namespace

CrossingSequence fan_between(const Direction& in, const Direction& out, Side side) {
  // Walk a small circle around the bypassed point from the reversed incoming
  // direction to the outgoing direction; left bypass walks clockwise (the
  // point stays on the traveler's right), right bypass counterclockwise.
  AngularFrame frame{-in.dx, -in.dy};

  auto walk_before = [&](std::int64_t ux, std::int64_t uy, std::int64_t vx, std::int64_t vy) {
    if (side == Side::Left) return frame.ccw_before(vx, vy, ux, uy);
    return frame.ccw_before(ux, uy, vx, vy);
  };

  const bool full_wrap = frame.coarse(out.dx, out.dy) == 0;  // out opposite to in

  std::vector<const IncidentEdge*> crossed;
  for (const auto& e : kIncidentEdges) {
    if (frame.coarse(e.ex, e.ey) == 0) continue;  // at the walk start
    // cross the edge iff it lies strictly before the walk's endpoint
    if (full_wrap || walk_before(e.ex, e.ey, out.dx, out.dy)) crossed.push_back(&e);
  }
  std::sort(crossed.begin(), crossed.end(), [&](const IncidentEdge* l, const IncidentEdge* r) {
    return walk_before(l->ex, l->ey, r->ex, r->ey);
  });

  CrossingSequence seq;
  for (auto* e : crossed) seq.push_back(e->label);
  return seq;
}

CrossingSequence deformed_crossing_sequence(const LatticePoint& a, const LatticePoint& b,
                                            Side side) {
  auto dec = primitive_decomposition(a, b);
  CrossingSequence base = base_crossing_sequence(a, dec.d);
  CrossingSequence fan = fan_sequence(dec.d, side);

  CrossingSequence seq;
  seq.reserve(base.size() * dec.t + fan.size() * (dec.t - 1));
  for (std::int64_t i = 0; i < dec.t; ++i) {
    if (i) seq.insert(seq.end(), fan.begin(), fan.end());
    seq.insert(seq.end(), base.begin(), base.end());
  }
  check_no_equal_neighbors(seq, "deformed crossing sequence");
  return seq;
}

CrossingSequence peg_path_crossing_sequence(const LatticePoint& a,
                                            const std::vector<Waypoint>& waypoints,
                                            const LatticePoint& b) {
  std::vector<LatticePoint> anchors;
  anchors.push_back(a);
  for (const auto& w : waypoints) anchors.push_back(w.point);
  anchors.push_back(b);
  for (std::size_t i = 1; i < anchors.size(); ++i) {
    if (anchors[i] == anchors[i - 1])
      throw DomainError("peg path: consecutive anchors coincide");
  }

  // Legs must be primitive so that every bypassed lattice point is an
  // explicit waypoint with a declared side.
  std::vector<Direction> legs;
  for (std::size_t i = 1; i < anchors.size(); ++i) {
    std::int64_t dx = anchors[i].x - anchors[i - 1].x;
    std::int64_t dy = anchors[i].y - anchors[i - 1].y;
    if (gcd_abs(dx, dy) != 1)
      throw DomainError("peg path: leg passes through a lattice point that is not a waypoint");
    legs.push_back(Direction{dx, dy});
  }

  // A leg parallel to an edge family lies on a line of that family. Such a
  // leg contributes one crossing of that line iff the bypass sides at its two
  // ends differ (the curve changes sides mid-leg); pinned endpoints at A or B
  // start and end exactly on the line and contribute nothing. Grid-parallel
  // primitive legs have no transversal crossings, so the position within the
  // leg is unambiguous.
  auto parallel_label = [](const Direction& d) -> int {
    if (d.dy == 0) return label_value(EdgeLabel::Horizontal);
    if (d.dx == 0) return label_value(EdgeLabel::Vertical);
    if (d.dx + d.dy == 0) return label_value(EdgeLabel::Diagonal);
    return 0;
  };

  CrossingSequence seq;
  for (std::size_t i = 0; i < legs.size(); ++i) {
    CrossingSequence leg = base_crossing_sequence(anchors[i], legs[i]);
    seq.insert(seq.end(), leg.begin(), leg.end());
    if (int fam = parallel_label(legs[i]); fam != 0 && i >= 1 && i < waypoints.size()) {
      if (waypoints[i - 1].side != waypoints[i].side) seq.push_back(label_from_value(fam));
    }
    if (i + 1 < legs.size()) {
      CrossingSequence fan = fan_between(legs[i], legs[i + 1], waypoints[i].side);
      seq.insert(seq.end(), fan.begin(), fan.end());
    }
  }
  check_no_equal_neighbors(seq, "peg path crossing sequence");
  return seq;
}

bool is_empty_triangle(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
  std::int64_t ar = cross(b - a, c - a);
  return ar == 1 || ar == -1;
}

bool is_strictly_convex_quadrilateral(const LatticePoint& a, const LatticePoint& b,
                                      const LatticePoint& c, const LatticePoint& d) {
  const LatticePoint pts[4] = {a, b, c, d};
  int sign = 0;
  for (int i = 0; i < 4; ++i) {
    LatticePoint u = pts[(i + 1) % 4] - pts[i];
    LatticePoint v = pts[(i + 2) % 4] - pts[(i + 1) % 4];
    std::int64_t cr = cross(u, v);
    if (cr == 0) return false;
    int s = cr > 0 ? 1 : -1;
    if (sign == 0) sign = s;
    if (s != sign) return false;
  }
  return true;
}

bool is_empty_convex_quadrilateral(const LatticePoint& a, const LatticePoint& b,
                                   const LatticePoint& c, const LatticePoint& d) {
  if (!is_strictly_convex_quadrilateral(a, b, c, d)) return false;
  return is_empty_triangle(a, b, c) && is_empty_triangle(a, c, d) &&
         is_empty_triangle(a, b, d) && is_empty_triangle(b, c, d);
}

}  // namespace markov
