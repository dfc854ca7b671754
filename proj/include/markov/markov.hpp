#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "markov/lattice.hpp"
#include "markov/numeric.hpp"
#include "markov/snake.hpp"

namespace markov {

/// a^2 + b^2 + c^2 = 3abc holds for the values attached to an empty lattice
/// triangle.
struct MarkovTriple {
  MarkovValue a, b, c;

  bool satisfies_equation() const { return a * a + b * b + c * c == 3 * a * b * c; }
};

/// Markov distance |AB|: the matching count of the snake graph of the left
/// deformation of segment AB; 0 when A = B. Pure, uncached.
MarkovValue markov_distance(const LatticePoint& a, const LatticePoint& b);

/// Markov number m_{p/q} through the geometric pipeline. Requires gcd(p,q)=1
/// and 1 <= p <= q with p = q only for (1,1).
MarkovValue markov_number(std::int64_t p, std::int64_t q);

/// m_{p/q} from the Stern-Brocot descent with the Vieta exchange
/// m' = 3 * left * right - opposite; entirely independent of snake graphs.
/// Accepts 0 <= p <= q with gcd(p,q)=1 (anchors m_{0/1}=1, m_{1/1}=2).
MarkovValue stern_brocot_oracle(std::int64_t p, std::int64_t q);

/// m_{q,p} for an arbitrary nonzero pair via the multiplicity recurrence
/// f_0 = 0, f_1 = m of the primitive direction, f_n = 3 f_1 f_{n-1} - f_{n-2},
/// evaluated at n = gcd.
MarkovValue multiplicity_value(std::int64_t q, std::int64_t p);

enum class ClassicalKind { Fibonacci, Pell };

/// Fibonacci (0,1,1,2,...) or Pell (0,1,2,5,...) numbers.
MarkovValue classical_value(ClassicalKind kind, int n);

/// Memoizing front end for Markov distances. Entries are keyed by the
/// displacement normalized under the symmetry group generated by negation and
/// transposition, all of which preserve the distance. Not thread-safe; use
/// one instance per worker.
class MarkovCalculator {
 public:
  MarkovValue distance(const LatticePoint& a, const LatticePoint& b);
  MarkovValue number(std::int64_t p, std::int64_t q);
  MarkovValue generalized(std::int64_t q, std::int64_t p) { return distance({0, 0}, {q, p}); }

  std::size_t cache_size() const { return cache_.size(); }

  /// One `dx,dy,value` record per line, decimal.
  void save_cache(const std::string& path) const;
  /// Loads records and revalidates one of them by recomputing its snake
  /// graph; throws on parse failure or mismatch.
  void load_cache(const std::string& path);

  static std::pair<std::int64_t, std::int64_t> normalized_key(std::int64_t dx, std::int64_t dy);

 private:
  std::map<std::pair<std::int64_t, std::int64_t>, MarkovValue> cache_;
};

}  // namespace markov
