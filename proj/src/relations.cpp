#include "markov/relations.hpp"

#include <algorithm>
#include <sstream>

namespace markov {

namespace {

int sign_of(const MarkovValue& a, const MarkovValue& b) {
  if (a < b) return 1;
  if (a > b) return -1;
  return 0;
}

// A witness triple exists whenever the sequence is neither strictly
// increasing nor strictly decreasing: either two strict pairs of opposite
// direction (a genuine valley or peak, possibly across a plateau) or a tie
// pair combined with any strict pair.
ScanWitness find_witness(const std::vector<ScanPoint>& pts) {
  const std::size_t n = pts.size();
  int last_dir = 0;
  std::size_t last_pos = 0;
  std::ptrdiff_t tie_pos = -1, strict_pos = -1;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    int d = sign_of(pts[i].value, pts[i + 1].value);
    if (d == 0) {
      if (tie_pos < 0) tie_pos = static_cast<std::ptrdiff_t>(i);
      continue;
    }
    if (last_dir != 0 && d != last_dir) {
      // values between the two strict pairs are constant
      return {pts[last_pos].point.x, pts[i].point.x, pts[i + 1].point.x};
    }
    last_dir = d;
    last_pos = i;
    if (strict_pos < 0) strict_pos = static_cast<std::ptrdiff_t>(i);
  }
  if (tie_pos >= 0 && strict_pos >= 0) {
    auto t = static_cast<std::size_t>(tie_pos);
    auto s = static_cast<std::size_t>(strict_pos);
    if (s < t) return {pts[s].point.x, pts[t].point.x, pts[t + 1].point.x};
    return {pts[t].point.x, pts[t + 1].point.x, pts[s + 1].point.x};
  }
  // all values equal
  return {pts[0].point.x, pts[1].point.x, pts[n - 1].point.x};
}

}  // namespace

ScanReport scan_line(const Rat& a, const Rat& b, std::int64_t x_min, std::int64_t x_max,
                     DomainFilter filter, MarkovCalculator& calc) {
  if (x_min > x_max) throw DomainError("scan line: empty x range");
  ScanReport report;
  report.slope = a;
  report.intercept = b;
  report.filter = filter;

  for (std::int64_t x = x_min; x <= x_max; ++x) {
    Rat y_exact = a * x + b;
    if (!is_integer(y_exact)) continue;
    Int y_big = numerator(y_exact);
    std::int64_t y = static_cast<std::int64_t>(y_big);
    if (filter == DomainFilter::FareyDomainF) {
      if (!(y >= 1 && y < x && gcd_abs(x, y) == 1)) continue;
      report.points.push_back({{x, y}, calc.number(y, x)});
    } else {
      if (x == 0 && y == 0) continue;
      report.points.push_back({{x, y}, calc.generalized(x, y)});
    }
  }

  const std::size_t n = report.points.size();
  if (n == 0) {
    report.verdict = ScanVerdict::EmptyLine;
    return report;
  }
  bool incr_violated = false, decr_violated = false;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    int d = sign_of(report.points[i].value, report.points[i + 1].value);
    if (d <= 0) incr_violated = true;
    if (d >= 0) decr_violated = true;
  }
  if (!incr_violated) {
    report.verdict = ScanVerdict::Increasing;
  } else if (!decr_violated) {
    report.verdict = ScanVerdict::Decreasing;
  } else {
    report.verdict = ScanVerdict::NonMonotonic;
    report.witness = find_witness(report.points);
  }
  return report;
}

std::string to_string(ScanVerdict v) {
  switch (v) {
    case ScanVerdict::Increasing: return "increasing";
    case ScanVerdict::Decreasing: return "decreasing";
    case ScanVerdict::NonMonotonic: return "non-monotonic";
    case ScanVerdict::EmptyLine: return "empty";
  }
  return "?";
}

std::string to_csv(const ScanReport& report) {
  std::ostringstream out;
  out << "x,y,m_value\n";
  for (const auto& p : report.points)
    out << p.point.x << ',' << p.point.y << ',' << p.value << '\n';
  out << "# verdict=" << to_string(report.verdict);
  if (report.witness)
    out << " witness=" << report.witness->x1 << ',' << report.witness->x2 << ','
        << report.witness->x3;
  out << '\n';
  return out.str();
}

RegionMap classify_neighborhood(const LatticePoint& center, std::int64_t radius,
                                MarkovCalculator& calc) {
  if (radius < 1) throw DomainError("region map: radius must be >= 1");
  if (center.x < 0 || center.y < 0)
    throw DomainError("region map: center must lie in the first quadrant");
  if (center.x == 0 && center.y == 0)
    throw DomainError("region map: center value undefined at the origin");

  RegionMap map;
  map.center = center;
  map.radius = radius;
  MarkovValue center_value = calc.generalized(center.x, center.y);
  for (std::int64_t x = center.x - radius; x <= center.x + radius; ++x) {
    for (std::int64_t y = center.y - radius; y <= center.y + radius; ++y) {
      RegionCell cell{{x, y}, CellClass::OutOfDomain};
      if (x == center.x && y == center.y) {
        cell.cls = CellClass::Center;
      } else if (x == 0 && y == 0) {
        cell.cls = CellClass::OutOfDomain;
      } else {
        MarkovValue v = calc.generalized(x, y);
        cell.cls = v < center_value ? CellClass::Smaller
                   : v > center_value ? CellClass::Larger
                                      : CellClass::Equal;
      }
      map.cells.push_back(cell);
    }
  }
  return map;
}

std::string to_string(CellClass c) {
  switch (c) {
    case CellClass::Smaller: return "smaller";
    case CellClass::Larger: return "larger";
    case CellClass::Equal: return "equal";
    case CellClass::Center: return "center";
    case CellClass::OutOfDomain: return "out";
  }
  return "?";
}

std::string to_csv(const RegionMap& map) {
  std::ostringstream out;
  out << "x,y,class\n";
  for (const auto& cell : map.cells)
    out << cell.point.x << ',' << cell.point.y << ',' << to_string(cell.cls) << '\n';
  return out.str();
}

namespace {

bool weakly_decreasing(const std::vector<RatioSample>& samples) {
  for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
    // s_i >= s_{i+1} as exact fractions
    if (samples[i].numerator * samples[i + 1].denominator <
        samples[i + 1].numerator * samples[i].denominator)
      return false;
  }
  return true;
}

}  // namespace

RatioReport ratio_fibonacci_limit(int a, std::int64_t q_min, std::int64_t q_max,
                                  MarkovCalculator& calc) {
  if (a < 3 || a > 7) throw DomainError("fibonacci ratio: parameter must be in [3,7]");
  if (q_min <= a || q_min > q_max) throw DomainError("fibonacci ratio: bad q range");

  RatioReport report;
  report.parameter = a;
  for (std::int64_t q = q_min; q <= q_max; ++q) {
    if (gcd_abs(q, a) != 1) continue;
    MarkovValue num = calc.generalized(q, a);
    MarkovValue den = calc.generalized(q + a - 2, 1);
    report.samples.push_back(
        {q, num, den, FixedDecimal::from_ratio(num, den)});
  }
  if (report.samples.empty()) throw DomainError("fibonacci ratio: empty sample set");

  FixedDecimal three_over_sqrt5 = FixedDecimal(3) / FixedDecimal::sqrt_of(5);
  FixedDecimal phi = (FixedDecimal(1) + FixedDecimal::sqrt_of(5)) / FixedDecimal(2);
  report.target = three_over_sqrt5.pow(a - 1) * phi.pow(3 - a);
  report.monotone_weakly_decreasing = weakly_decreasing(report.samples);
  return report;
}

PellBoundReport ratio_pell_bound(std::int64_t q_min, std::int64_t q_max, MarkovCalculator& calc) {
  if (q_min < 11 || q_min > q_max) throw DomainError("pell bound: need 11 <= q_min <= q_max");

  PellBoundReport report;
  report.ratios.parameter = 0;
  bool above_one = true;
  for (std::int64_t q = q_min; q <= q_max; ++q) {
    MarkovValue num = calc.generalized(q + 7, q - 9);
    MarkovValue den = calc.generalized(q, q - 1);
    above_one = above_one && num > den;
    report.ratios.samples.push_back({q, num, den, FixedDecimal::from_ratio(num, den)});
  }
  report.all_ratios_above_one = above_one;
  report.ratios.monotone_weakly_decreasing = weakly_decreasing(report.ratios.samples);

  FixedDecimal sqrt2 = FixedDecimal::sqrt_of(2);
  FixedDecimal psi = FixedDecimal(3) + FixedDecimal::sqrt_of(8);
  FixedDecimal coeff = (FixedDecimal(2) - sqrt2) / FixedDecimal(4);
  report.constant = (FixedDecimal(3) * coeff).pow(15) * psi.pow(7);
  report.ratios.target = report.constant;
  report.constant_exceeds_bound = report.constant > FixedDecimal::parse("1.00200118");

  // m_{q,q-1} tracks ((2 - sqrt2)/4) psi^q closely already at moderate q.
  bool psi_close = true;
  for (std::int64_t q = std::max<std::int64_t>(8, q_min - 4); q <= q_min; ++q) {
    FixedDecimal approx = coeff * psi.pow(static_cast<int>(q));
    FixedDecimal exact(calc.generalized(q, q - 1));
    FixedDecimal rel = (approx - exact).abs() / exact;
    psi_close = psi_close && rel < FixedDecimal::from_ratio(1, 1000);
  }
  report.psi_form_close = psi_close;
  return report;
}

std::string to_csv(const RatioReport& report) {
  std::ostringstream out;
  out << "q,ratio_60digits\n";
  for (const auto& s : report.samples) out << s.q << ',' << s.ratio.to_string(60) << '\n';
  return out.str();
}

MarkovEquationCheck check_markov_equation(const LatticePoint& a, const LatticePoint& b,
                                          const LatticePoint& c, MarkovCalculator& calc) {
  if (!is_empty_triangle(a, b, c))
    throw DomainError("markov equation: triangle is not empty");
  MarkovEquationCheck out;
  out.triple = {calc.distance(a, b), calc.distance(a, c), calc.distance(b, c)};
  out.holds = out.triple.satisfies_equation();
  return out;
}

bool check_ptolemy_equality(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c,
                            const LatticePoint& d, MarkovCalculator& calc) {
  if (!is_empty_convex_quadrilateral(a, b, c, d))
    throw DomainError("ptolemy equality: quadrilateral is not empty convex");
  return calc.distance(a, c) * calc.distance(b, d) ==
         calc.distance(a, b) * calc.distance(c, d) + calc.distance(a, d) * calc.distance(b, c);
}

PtolemyInequalityCheck check_ptolemy_inequality(const LatticePoint& a, const LatticePoint& b,
                                                const LatticePoint& c, const LatticePoint& d,
                                                MarkovCalculator& calc) {
  if (!is_strictly_convex_quadrilateral(a, b, c, d))
    throw DomainError("ptolemy inequality: quadrilateral is not strictly convex");
  PtolemyInequalityCheck out;
  out.slack = calc.distance(a, c) * calc.distance(b, d) -
              calc.distance(a, b) * calc.distance(c, d) -
              calc.distance(a, d) * calc.distance(b, c);
  out.holds = out.slack >= 0;
  return out;
}

bool check_additive_inequality(std::int64_t q, std::int64_t p, std::int64_t i,
                               MarkovCalculator& calc) {
  if (!(0 <= p && p <= q) || i < 1)
    throw DomainError("additive inequality: need 0 <= p <= q and i >= 1");
  if (i == 1)
    return calc.generalized(q + 1, p) >=
           calc.generalized(q, p) + calc.generalized(q + 1, p - 1);
  Int lhs = calc.generalized(q + i, p + i);
  Int rhs = 0;
  Int binom = 1;
  for (std::int64_t j = 0; j <= i; ++j) {
    rhs += binom * calc.generalized(q + j, p + i - j);
    binom = binom * (i - j) / (j + 1);
  }
  return lhs >= rhs;
}

AignerCheck check_aigner(std::int64_t q, std::int64_t p, std::int64_t i, MarkovCalculator& calc) {
  if (!(0 <= p && p <= q) || i < 1)
    throw DomainError("aigner inequalities: need 0 <= p <= q and i >= 1");
  if (p < 1) throw DomainError("aigner inequalities: constant-sum check needs p >= 1");
  if (i > p) throw DomainError("aigner inequalities: constant-sum step exceeds p");
  AignerCheck out;
  MarkovValue base = calc.generalized(q, p);
  out.constant_numerator = base < calc.generalized(q + i, p);
  out.constant_denominator = base < calc.generalized(q, p + i);
  out.constant_sum = base < calc.generalized(q + i, p - i);
  return out;
}

LogTriangleCheck check_log_triangle(const LatticePoint& a, const LatticePoint& b,
                                    const LatticePoint& c, MarkovCalculator& calc) {
  if (a == b || b == c || a == c)
    throw DomainError("log triangle: points must be pairwise distinct");
  LogTriangleCheck out;
  MarkovValue lhs = 3 * calc.distance(a, b) * calc.distance(b, c);
  MarkovValue rhs = calc.distance(a, c);
  out.holds = lhs >= rhs;
  out.equality = lhs == rhs;
  return out;
}

ShortestPathCheck check_shortest_path(const LatticePoint& a, const std::vector<Waypoint>& waypoints,
                                      const LatticePoint& b, MarkovCalculator& calc) {
  ShortestPathCheck out;
  out.path_length =
      count_matchings_fast(build_snake_graph(peg_path_crossing_sequence(a, waypoints, b)));
  out.distance = calc.distance(a, b);
  out.holds = out.path_length >= out.distance;
  out.equality = out.path_length == out.distance;
  return out;
}

}  // namespace markov
