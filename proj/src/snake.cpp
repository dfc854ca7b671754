#include "markov/snake.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace markov {

namespace {

// 1 -> 2 -> 3 -> 1
int next_label(int i) { return i % 3 + 1; }

}  // namespace

int north_label(const Tile& t) {
  int i = label_value(t.label);
  return t.sign == TileSign::Plus ? next_label(i) : next_label(next_label(i));
}

int east_label(const Tile& t) {
  int i = label_value(t.label);
  return t.sign == TileSign::Plus ? next_label(next_label(i)) : next_label(i);
}

SnakeGraph build_snake_graph(const CrossingSequence& seq) {
  SnakeGraph g;
  g.tiles.reserve(seq.size());
  for (std::size_t j = 0; j < seq.size(); ++j) {
    g.tiles.push_back({seq[j], j % 2 == 0 ? TileSign::Plus : TileSign::Minus});
    if (j + 1 < seq.size()) {
      int ij = label_value(seq[j]);
      int ijn = label_value(seq[j + 1]);
      if (ij == ijn)
        throw DomainError("crossing sequence has equal consecutive labels at position " +
                          std::to_string(j));
      int b = 6 - ij - ijn;  // the label distinct from both
      g.glues.push_back(b == north_label(g.tiles[j]) ? GlueDirection::North
                                                     : GlueDirection::East);
    }
  }
  return g;
}

MarkovValue count_matchings_fast(const SnakeGraph& g) {
  const std::size_t n = g.tiles.size();
  if (n == 0) return 1;
  if (n == 1) return 2;

  // Sweep tile by tile. State after tile j: either both endpoints of the
  // glue edge into tile j+1 are still unmatched (open) or both are already
  // matched (closed); parity rules out the mixed case. Tile 1 leaves
  // (open, closed) = (1, 1). An interior tile glued straight through maps
  // (o, c) -> (o + c, o); a turn tile maps (o, c) -> (o, o + c). The last
  // tile closes with 2*o + c.
  MarkovValue open = 1, closed = 1;
  for (std::size_t j = 1; j + 1 < n; ++j) {
    if (g.glues[j - 1] == g.glues[j]) {
      MarkovValue no = open + closed;
      closed = std::move(open);
      open = std::move(no);
    } else {
      closed += open;
    }
  }
  return 2 * open + closed;
}

MarkovValue count_matchings_bruteforce(const SnakeGraph& g) {
  const std::size_t n = g.tiles.size();
  if (n > 24) throw DomainError("brute-force matching count limited to 24 tiles");
  if (n == 0) return 1;

  // Place tile j at a grid cell walking north/east; vertices are the cell
  // corners, edges the cell sides, shared sides identified.
  std::map<std::pair<std::int64_t, std::int64_t>, int> vertex_ids;
  auto vid = [&](std::int64_t x, std::int64_t y) {
    auto [it, fresh] = vertex_ids.try_emplace({x, y}, static_cast<int>(vertex_ids.size()));
    (void)fresh;
    return it->second;
  };

  std::vector<std::pair<int, int>> edges;
  auto add_edge = [&](int u, int v) {
    if (u > v) std::swap(u, v);
    if (std::find(edges.begin(), edges.end(), std::make_pair(u, v)) == edges.end())
      edges.emplace_back(u, v);
  };

  std::int64_t cx = 0, cy = 0;
  for (std::size_t j = 0; j < n; ++j) {
    int sw = vid(cx, cy), se = vid(cx + 1, cy), nw = vid(cx, cy + 1), ne = vid(cx + 1, cy + 1);
    add_edge(sw, se);
    add_edge(nw, ne);
    add_edge(sw, nw);
    add_edge(se, ne);
    if (j + 1 < n) {
      if (g.glues[j] == GlueDirection::North)
        ++cy;
      else
        ++cx;
    }
  }

  const int nv = static_cast<int>(vertex_ids.size());
  std::vector<std::vector<int>> incident(nv);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    incident[edges[e].first].push_back(static_cast<int>(e));
    incident[edges[e].second].push_back(static_cast<int>(e));
  }

  std::vector<bool> covered(nv, false);
  MarkovValue count = 0;
  auto rec = [&](auto&& self, int from) -> void {
    int v = from;
    while (v < nv && covered[v]) ++v;
    if (v == nv) {
      ++count;
      return;
    }
    for (int e : incident[v]) {
      int u = edges[e].first == v ? edges[e].second : edges[e].first;
      if (covered[u]) continue;
      covered[v] = covered[u] = true;
      self(self, v + 1);
      covered[v] = covered[u] = false;
    }
  };
  rec(rec, 0);
  return count;
}

SnakeGraph reversed(const SnakeGraph& g) {
  SnakeGraph out;
  out.tiles.reserve(g.tiles.size());
  for (std::size_t j = 0; j < g.tiles.size(); ++j) {
    EdgeLabel label = g.tiles[g.tiles.size() - 1 - j].label;
    out.tiles.push_back({label, j % 2 == 0 ? TileSign::Plus : TileSign::Minus});
  }
  out.glues.assign(g.glues.rbegin(), g.glues.rend());
  return out;
}

Int continuant(const ContinuedFraction& cf) {
  // K(a1..ak) via the standard forward recurrence.
  Int prev = 1, cur = cf.terms.empty() ? Int(1) : cf.terms[0];
  for (std::size_t i = 1; i < cf.terms.size(); ++i) {
    Int next = cf.terms[i] * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

ContinuedFraction continued_fraction_of(const SnakeGraph& g) {
  const std::size_t n = g.tiles.size();
  if (n == 0) throw DomainError("continued fraction of an empty snake graph is undefined");
  if (n == 1) return {{Int(2)}};

  // The matching count factors through continuant matrices: every tile
  // contributes C(1), every turn additionally C(0), and the end contributes
  // C(1) C(1). Zero entries are removed with K(..., x, 0, y, ...) =
  // K(..., x + y, ...), which always terminates in positive terms because
  // zeros are never adjacent.
  std::vector<Int> raw;
  raw.push_back(1);
  for (std::size_t j = 1; j + 1 < n; ++j) {
    raw.push_back(1);
    if (g.glues[j - 1] != g.glues[j]) raw.push_back(0);
  }
  raw.push_back(1);
  raw.push_back(1);

  std::vector<Int> terms;
  for (const Int& a : raw) {
    if (!terms.empty() && terms.back() == 0) {
      terms.pop_back();
      terms.back() += a;
    } else {
      terms.push_back(a);
    }
  }
  return {std::move(terms)};
}

std::string to_string(const SnakeGraph& g) {
  std::string s;
  for (std::size_t j = 0; j < g.tiles.size(); ++j) {
    if (j) {
      s += ' ';
      s += g.glues[j - 1] == GlueDirection::North ? 'N' : 'E';
      s += ' ';
    }
    s += static_cast<char>('0' + label_value(g.tiles[j].label));
    s += g.tiles[j].sign == TileSign::Plus ? '+' : '-';
  }
  return s;
}

std::string to_string(const ContinuedFraction& cf) {
  std::string s = "[";
  for (std::size_t i = 0; i < cf.terms.size(); ++i) {
    if (i) s += ",";
    s += cf.terms[i].str();
  }
  s += "]";
  return s;
}

}  // namespace markov
