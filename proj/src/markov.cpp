#include "markov/markov.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <random>
#include <sstream>

namespace markov {

namespace {

void validate_markov_index(std::int64_t p, std::int64_t q) {
  if (q < 1 || p < 1) throw DomainError("markov number: need p >= 1 and q >= 1");
  if (p > q || (p == q && p != 1))
    throw DomainError("markov number: need p <= q (p = q only for 1/1)");
  if (gcd_abs(p, q) != 1) throw DomainError("markov number: p/q must be reduced");
}

}  // namespace

MarkovValue markov_distance(const LatticePoint& a, const LatticePoint& b) {
  if (a == b) return 0;
  return count_matchings_fast(build_snake_graph(deformed_crossing_sequence(a, b, Side::Left)));
}

MarkovValue markov_number(std::int64_t p, std::int64_t q) {
  validate_markov_index(p, q);
  return markov_distance({0, 0}, {q, p});
}

MarkovValue stern_brocot_oracle(std::int64_t p, std::int64_t q) {
  if (q < 1 || p < 0 || p > q) throw DomainError("stern-brocot oracle: need 0 <= p <= q, q >= 1");
  if (gcd_abs(p, q) != 1) throw DomainError("stern-brocot oracle: p/q must be reduced");
  if (p == 0) return 1;
  if (p == q) return 2;

  struct Node {
    std::int64_t num, den;
    MarkovValue value;
  };
  Node left{0, 1, 1}, mid{1, 2, 5}, right{1, 1, 2};
  for (;;) {
    std::int64_t cmp = p * mid.den - mid.num * q;
    if (cmp == 0) return mid.value;
    if (cmp < 0) {
      Node next{left.num + mid.num, left.den + mid.den, 3 * left.value * mid.value - right.value};
      right = std::move(mid);
      mid = std::move(next);
    } else {
      Node next{mid.num + right.num, mid.den + right.den, 3 * mid.value * right.value - left.value};
      left = std::move(mid);
      mid = std::move(next);
    }
  }
}

MarkovValue multiplicity_value(std::int64_t q, std::int64_t p) {
  if (q == 0 && p == 0) throw DomainError("multiplicity value: undefined at the origin");
  std::int64_t g = gcd_abs(q, p);
  MarkovValue f1 = markov_distance({0, 0}, {q / g, p / g});
  MarkovValue prev = 0, cur = f1;  // f_0, f_1
  for (std::int64_t n = 2; n <= g; ++n) {
    MarkovValue next = 3 * f1 * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

MarkovValue classical_value(ClassicalKind kind, int n) {
  if (n < 0) throw DomainError("classical value: negative index");
  MarkovValue a = 0, b = 1;  // F_0, F_1 or P_0, P_1
  if (n == 0) return a;
  const int mult = kind == ClassicalKind::Fibonacci ? 1 : 2;
  for (int i = 2; i <= n; ++i) {
    MarkovValue next = mult * b + a;
    a = std::move(b);
    b = std::move(next);
  }
  return b;
}

std::pair<std::int64_t, std::int64_t> MarkovCalculator::normalized_key(std::int64_t dx,
                                                                       std::int64_t dy) {
  // Orbit under negation and transposition; pick the lexicographic maximum.
  std::array<std::pair<std::int64_t, std::int64_t>, 4> orbit = {
      {{dx, dy}, {-dx, -dy}, {dy, dx}, {-dy, -dx}}};
  return *std::max_element(orbit.begin(), orbit.end());
}

MarkovValue MarkovCalculator::distance(const LatticePoint& a, const LatticePoint& b) {
  if (a == b) return 0;
  auto key = normalized_key(b.x - a.x, b.y - a.y);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  MarkovValue v = markov_distance(a, b);
  cache_.emplace(key, v);
  return v;
}

MarkovValue MarkovCalculator::number(std::int64_t p, std::int64_t q) {
  validate_markov_index(p, q);
  return distance({0, 0}, {q, p});
}

void MarkovCalculator::save_cache(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw DomainError("cache: cannot write " + path);
  for (const auto& [key, value] : cache_)
    out << key.first << ',' << key.second << ',' << value << '\n';
}

void MarkovCalculator::load_cache(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cache: cannot read " + path);
  std::vector<std::pair<std::pair<std::int64_t, std::int64_t>, MarkovValue>> loaded;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    std::int64_t dx, dy;
    std::string value_text;
    if (!(fields >> dx >> dy >> value_text))
      throw DomainError("cache: malformed record at line " + std::to_string(lineno));
    loaded.emplace_back(normalized_key(dx, dy), MarkovValue(value_text));
  }
  if (!loaded.empty()) {
    std::mt19937_64 rng(loaded.size());
    const auto& probe = loaded[rng() % loaded.size()];
    MarkovValue recomputed =
        markov_distance({0, 0}, {probe.first.first, probe.first.second});
    if (recomputed != probe.second)
      throw DomainError("cache: revalidation failed for displacement " +
                        std::to_string(probe.first.first) + "," +
                        std::to_string(probe.first.second));
  }
  for (auto& entry : loaded) cache_.insert(std::move(entry));
}

}  // namespace markov
