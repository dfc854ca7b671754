#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "markov/numeric.hpp"
#include "markov/relations.hpp"

namespace markov::sweeps {

/// Every exhaustive kernel exists twice: a plain serial reference and an
/// OpenMP kernel that distributes independent configurations across workers,
/// each with its own value cache. Both produce identical results; the tests
/// compare them and the bench target times them against each other.
enum class ExecMode { Serial, Parallel };

struct CheckFailure {
  std::string case_id;
  std::string expected;
  std::string actual;

  friend bool operator==(const CheckFailure&, const CheckFailure&) = default;
};

struct SuiteResult {
  std::string suite;
  std::int64_t cases_run = 0;
  std::vector<CheckFailure> failures;

  bool ok() const { return failures.empty(); }
};

/// Markov equation on every empty lattice triangle with coordinates in
/// [0, max_coord]^2.
SuiteResult sweep_markov_equation(std::int64_t max_coord, ExecMode mode);

/// Ptolemy equality on every empty convex lattice quadrilateral with
/// coordinates in [0, max_coord]^2.
SuiteResult sweep_ptolemy_equality(std::int64_t max_coord, ExecMode mode);

/// Geometric pipeline against the Stern-Brocot recursion for every reduced
/// p/q with 1 <= p < q <= q_max.
SuiteResult sweep_oracle_agreement(std::int64_t q_max, ExecMode mode);

/// Fast matching count against exhaustive enumeration on the snake graph of
/// every segment with endpoints in [0, max_coord]^2, plus `random_shapes`
/// random glue sequences of length <= 14.
SuiteResult sweep_matching_equivalence(std::int64_t max_coord, int random_shapes,
                                       std::uint64_t seed, ExecMode mode);

/// Monotonicity along rational slopes: every adjacent pair of domain-F points
/// with x in [1, x_max] and gap <= window_width on a line of the given slope
/// must move in the expected direction; a sample of explicit windows is also
/// run through scan_line and its verdict checked.
struct SlopeExpectation {
  Rat slope;
  ScanVerdict expected;
};
SuiteResult sweep_monotonic_windows(const std::vector<SlopeExpectation>& slopes,
                                    std::int64_t x_max, std::int64_t window_width, ExecMode mode);

/// Ptolemy inequality (slack >= 0) on randomly sampled strictly convex
/// quadrilaterals with coordinates in [0, coord_max]^2.
SuiteResult sweep_ptolemy_inequality_random(int samples, std::int64_t coord_max,
                                            std::uint64_t seed, ExecMode mode);

/// |OE| |OF'| >= |OE'| |OF| on sampled parallelogram configurations with
/// F' = F + s(O - E) + t(F - O), s,t >= 1.
SuiteResult sweep_parallelogram(int samples, std::uint64_t seed, ExecMode mode);

/// 3 |AB| |BC| >= |AC| on sampled triples in [-coord_max, coord_max]^2, with
/// exact equality on doubled primitive steps.
SuiteResult sweep_log_triangle(int samples, std::int64_t coord_max, std::uint64_t seed,
                               ExecMode mode);

/// Additive inequality and the three Aigner inequalities on a coordinate
/// grid with steps i in [1, i_max].
SuiteResult sweep_additive_aigner(std::int64_t q_max, std::int64_t i_max, ExecMode mode);

/// Fibonacci/Pell identities, the multiplicity recurrence, ratio limits and
/// the Pell bound constant.
SuiteResult sweep_ratio_and_classical(ExecMode mode);

/// Non-monotone witness lines and the neighborhood classification checks.
SuiteResult sweep_scan_witnesses(ExecMode mode);

struct VerifyOptions {
  std::int64_t max_coord = 7;
  std::uint64_t seed = 42;
  ExecMode mode = ExecMode::Parallel;
};

/// Suites wired to the CLI: identities, inequalities, scans, ratios, all.
std::vector<SuiteResult> run_verify_suites(const std::string& suite, const VerifyOptions& options);

}  // namespace markov::sweeps
