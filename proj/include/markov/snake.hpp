#pragma once

#include <string>
#include <vector>

#include "markov/lattice.hpp"
#include "markov/numeric.hpp"

namespace markov {

enum class TileSign : std::uint8_t { Plus, Minus };
enum class GlueDirection : std::uint8_t { North, East };

/// One square tile of a snake graph. The diagonal label together with the
/// sign fixes the boundary labels: a plus tile with diagonal i carries
/// i+1 (mod 3, onto {1,2,3}) on north/south and i+2 on east/west; a minus
/// tile swaps the two.
struct Tile {
  EdgeLabel label;
  TileSign sign;

  friend bool operator==(const Tile&, const Tile&) = default;
};

int north_label(const Tile& t);
int east_label(const Tile& t);

/// A chain of tiles glued north or east, signs alternating starting with
/// plus. Zero or one tiles are allowed.
struct SnakeGraph {
  std::vector<Tile> tiles;
  std::vector<GlueDirection> glues;  // size = tiles.size() - 1 (or 0)

  friend bool operator==(const SnakeGraph&, const SnakeGraph&) = default;
};

/// Build the snake graph of a crossing sequence: tiles G_{i1}+, G_{i2}-, ...
/// glued along the edge labeled b_j, the label distinct from both i_j and
/// i_{j+1}. Throws on consecutive equal labels.
SnakeGraph build_snake_graph(const CrossingSequence& seq);

/// Number of perfect matchings, linear-time transfer recurrence over tiles.
MarkovValue count_matchings_fast(const SnakeGraph& g);

/// Number of perfect matchings by materializing the vertex/edge graph and
/// enumerating exhaustively. Guard: at most 24 tiles.
MarkovValue count_matchings_bruteforce(const SnakeGraph& g);

/// The snake graph rotated by 180 degrees: tiles and glues reversed, signs
/// re-alternated from plus.
SnakeGraph reversed(const SnakeGraph& g);

struct ContinuedFraction {
  std::vector<Int> terms;  // all >= 1
};

/// Numerator of [a1; a2, ..., ak].
Int continuant(const ContinuedFraction& cf);

/// A positive continued fraction whose continuant equals the matching count,
/// read off the straight/turn pattern of the glue sequence. Requires at
/// least one tile.
ContinuedFraction continued_fraction_of(const SnakeGraph& g);

/// Text form `3+ E 1- E 3+ N 2- N 3+`.
std::string to_string(const SnakeGraph& g);
std::string to_string(const ContinuedFraction& cf);

}  // namespace markov
