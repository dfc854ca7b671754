#include "markov/offset_model.hpp"

#include <algorithm>
#include <vector>

namespace markov {

CrossingSequence offset_deformation_crossings(const LatticePoint& a, const LatticePoint& b,
                                              Side side) {
  auto dec = primitive_decomposition(a, b);
  const auto& d = dec.d;

  // Normal pointing into the bypass side of the travel direction.
  std::int64_t nx = side == Side::Left ? -d.dy : d.dy;
  std::int64_t ny = side == Side::Left ? d.dx : -d.dx;

  struct Family {
    std::int64_t fd, fn;
    std::int64_t (*of)(const LatticePoint&);
    EdgeLabel label;
  };
  const Family families[3] = {
      {d.dy, ny, [](const LatticePoint& p) { return p.y; }, EdgeLabel::Horizontal},
      {d.dx, nx, [](const LatticePoint& p) { return p.x; }, EdgeLabel::Vertical},
      {d.dx + d.dy, nx + ny, [](const LatticePoint& p) { return p.x + p.y; },
       EdgeLabel::Diagonal},
  };

  struct Hit {
    std::int64_t segment;
    PerturbedRational t;
    EdgeLabel label;
  };
  std::vector<Hit> hits;

  // Segment i runs from P_{i-1} + En to P_i + En with integer direction d.
  // The pinned endpoints at A and B only suppress crossings whose parameter
  // has base part exactly 0 (first segment) or 1 (last segment); these are
  // precisely the lines through A or B.
  for (std::int64_t seg = 0; seg < dec.t; ++seg) {
    LatticePoint start{a.x + seg * d.dx, a.y + seg * d.dy};
    for (const auto& f : families) {
      if (f.fd == 0) continue;
      std::int64_t fs = f.of(start);
      std::int64_t lo = std::min(fs, fs + f.fd);
      std::int64_t hi = std::max(fs, fs + f.fd);
      for (std::int64_t k = lo; k <= hi; ++k) {
        // f(start + En + t d) = k  =>  t = (k - fs)/fd - (fn/fd) E
        PerturbedRational t(make_rat(k - fs, f.fd), make_rat(-f.fn, f.fd));
        if (t < PerturbedRational(Rat(0)) || t >= PerturbedRational(Rat(1))) continue;
        if (seg == 0 && t.base <= 0) continue;
        if (seg == dec.t - 1 && t.base >= 1) continue;
        hits.push_back({seg, t, f.label});
      }
    }
  }

  std::sort(hits.begin(), hits.end(), [](const Hit& l, const Hit& r) {
    if (l.segment != r.segment) return l.segment < r.segment;
    return l.t < r.t;
  });
  for (std::size_t i = 1; i < hits.size(); ++i) {
    if (hits[i].segment == hits[i - 1].segment && hits[i].t == hits[i - 1].t)
      throw std::logic_error("offset model: crossing parameter tie");
  }

  CrossingSequence seq;
  seq.reserve(hits.size());
  for (auto& h : hits) seq.push_back(h.label);
  return seq;
}

}  // namespace markov
