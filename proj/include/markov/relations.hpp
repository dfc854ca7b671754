#pragma once

#include <optional>
#include <string>
#include <vector>

#include "markov/decimal.hpp"
#include "markov/lattice.hpp"
#include "markov/markov.hpp"
#include "markov/numeric.hpp"

namespace markov {

// ---------------------------------------------------------------------------
// Line scans

enum class DomainFilter { FareyDomainF, AllLattice };
enum class ScanVerdict { Increasing, Decreasing, NonMonotonic, EmptyLine };

struct ScanPoint {
  LatticePoint point;
  MarkovValue value;
};

/// Three x-coordinates certifying that the values are neither strictly
/// increasing nor strictly decreasing (a valley or peak; ties can stand in
/// on one side when the scan contains equal values).
struct ScanWitness {
  std::int64_t x1, x2, x3;
};

struct ScanReport {
  Rat slope;
  Rat intercept;
  DomainFilter filter = DomainFilter::FareyDomainF;
  std::vector<ScanPoint> points;  // sorted by x, strictly increasing
  ScanVerdict verdict = ScanVerdict::EmptyLine;
  std::optional<ScanWitness> witness;  // present iff NonMonotonic
};

/// Values of the Markov function on the lattice points of y = ax + b with
/// x_min <= x <= x_max, classified for monotonicity. FareyDomainF keeps
/// points with 1 <= y < x and gcd(x,y) = 1; AllLattice keeps every lattice
/// point except the origin and uses the generalized values.
ScanReport scan_line(const Rat& a, const Rat& b, std::int64_t x_min, std::int64_t x_max,
                     DomainFilter filter, MarkovCalculator& calc);

std::string to_string(ScanVerdict v);
std::string to_csv(const ScanReport& report);

// ---------------------------------------------------------------------------
// Neighborhood classification

enum class CellClass { Smaller, Larger, Equal, Center, OutOfDomain };

struct RegionCell {
  LatticePoint point;
  CellClass cls;
};

struct RegionMap {
  LatticePoint center;
  std::int64_t radius = 1;
  std::vector<RegionCell> cells;  // sorted by (x, y)
};

/// Compare the generalized value at every lattice point within Chebyshev
/// distance `radius` of the center against the center's value. The origin
/// (where the value degenerates to 0) is marked OutOfDomain.
RegionMap classify_neighborhood(const LatticePoint& center, std::int64_t radius,
                                MarkovCalculator& calc);

std::string to_string(CellClass c);
std::string to_csv(const RegionMap& map);

// ---------------------------------------------------------------------------
// Ratio and limit reports

struct RatioSample {
  std::int64_t q;
  MarkovValue numerator;
  MarkovValue denominator;
  FixedDecimal ratio;
};

struct RatioReport {
  int parameter = 0;
  std::vector<RatioSample> samples;
  FixedDecimal target;
  bool monotone_weakly_decreasing = false;  // exact cross-multiplied comparison
};

/// Samples m_{q,a} / m_{q+a-2,1} for coprime q in [q_min, q_max] against the
/// closed-form limit (3/sqrt5)^(a-1) phi^(3-a).
RatioReport ratio_fibonacci_limit(int a, std::int64_t q_min, std::int64_t q_max,
                                  MarkovCalculator& calc);

struct PellBoundReport {
  RatioReport ratios;              // samples of m_{q+7,q-9} / m_{q,q-1}
  FixedDecimal constant;           // 3^15 ((2-sqrt2)/4)^15 (3+sqrt8)^7
  bool constant_exceeds_bound = false;  // > 1.00200118
  bool all_ratios_above_one = false;    // exact; the slope -8/7 consequence
  bool psi_form_close = false;     // m_{q,q-1} vs ((2-sqrt2)/4) psi^q, rel err < 1e-3
};

PellBoundReport ratio_pell_bound(std::int64_t q_min, std::int64_t q_max, MarkovCalculator& calc);

std::string to_csv(const RatioReport& report);

// ---------------------------------------------------------------------------
// Identity and inequality checks

struct MarkovEquationCheck {
  bool holds = false;
  MarkovTriple triple;
};

/// |AB|^2 + |AC|^2 + |BC|^2 = 3 |AB| |AC| |BC| on an empty triangle.
MarkovEquationCheck check_markov_equation(const LatticePoint& a, const LatticePoint& b,
                                          const LatticePoint& c, MarkovCalculator& calc);

/// |AC| |BD| = |AB| |CD| + |AD| |BC| on an empty convex quadrilateral.
bool check_ptolemy_equality(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c,
                            const LatticePoint& d, MarkovCalculator& calc);

struct PtolemyInequalityCheck {
  bool holds = false;
  Int slack = 0;  // |AC||BD| - |AB||CD| - |AD||BC|
};

/// |AC| |BD| >= |AB| |CD| + |AD| |BC| on any strictly convex quadrilateral.
PtolemyInequalityCheck check_ptolemy_inequality(const LatticePoint& a, const LatticePoint& b,
                                                const LatticePoint& c, const LatticePoint& d,
                                                MarkovCalculator& calc);

/// i = 1: m_{q+1,p} >= m_{q,p} + m_{q+1,p-1};
/// i > 1: m_{q+i,p+i} >= sum_j C(i,j) m_{q+j,p+i-j}.
bool check_additive_inequality(std::int64_t q, std::int64_t p, std::int64_t i,
                               MarkovCalculator& calc);

struct AignerCheck {
  bool constant_numerator = false;    // m_{q,p} < m_{q+i,p}
  bool constant_denominator = false;  // m_{q,p} < m_{q,p+i}
  bool constant_sum = false;          // m_{q,p} < m_{q+i,p-i}
};

AignerCheck check_aigner(std::int64_t q, std::int64_t p, std::int64_t i, MarkovCalculator& calc);

struct LogTriangleCheck {
  bool holds = false;
  bool equality = false;
};

/// 3 |AB| |BC| >= |AC| for distinct points; equality exactly when B is the
/// midpoint step of a doubled primitive segment.
LogTriangleCheck check_log_triangle(const LatticePoint& a, const LatticePoint& b,
                                    const LatticePoint& c, MarkovCalculator& calc);

struct ShortestPathCheck {
  bool holds = false;     // peg path length >= |AB|
  bool equality = false;  // the bypass is homotopic to a deformation
  MarkovValue path_length;
  MarkovValue distance;
};

ShortestPathCheck check_shortest_path(const LatticePoint& a, const std::vector<Waypoint>& waypoints,
                                      const LatticePoint& b, MarkovCalculator& calc);

}  // namespace markov
