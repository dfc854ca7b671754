// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "markov/decimal.hpp"
#include "markov/markov.hpp"
#include "markov/relations.hpp"
#include "markov/snake.hpp"
#include "markov/sweeps.hpp"

using namespace markov;
using sweeps::ExecMode;

namespace {

struct Criterion {
  int id;
  std::string description;
  std::function<bool(std::string&)> run;
};

bool expect(bool condition, const std::string& detail, std::string& message) {
  if (!condition && message.empty()) message = detail;
  return condition;
}

bool within_seconds(std::chrono::steady_clock::time_point start, double budget,
                    std::string& message) {
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return expect(elapsed < budget,
                "time budget exceeded: " + std::to_string(elapsed) + "s", message);
}

bool suite_clean(const sweeps::SuiteResult& result, std::string& message) {
  if (result.ok()) return true;
  message = result.suite + ": " + std::to_string(result.failures.size()) +
            " failures, first: " + result.failures.front().case_id;
  return false;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria;

  criteria.push_back({1, "base Markov numbers via the geometric pipeline", [](std::string& msg) {
    auto start = std::chrono::steady_clock::now();
    bool ok = expect(markov_number(1, 1) == 2, "m_1/1 != 2", msg) &&
              expect(markov_number(1, 2) == 5, "m_1/2 != 5", msg) &&
              expect(markov_number(1, 3) == 13, "m_1/3 != 13", msg) &&
              expect(markov_number(2, 3) == 29, "m_2/3 != 29", msg);
    return ok && within_seconds(start, 1.0, msg);
  }});

  criteria.push_back({2, "Markov distance witnesses", [](std::string& msg) {
    return expect(markov_distance({0, 0}, {2, 0}) == 3, "|O,(2,0)| != 3", msg) &&
           expect(markov_distance({0, 0}, {3, 0}) == 8, "|O,(3,0)| != 8", msg) &&
           expect(markov_distance({0, 0}, {1, 1}) == 2, "|O,(1,1)| != 2", msg);
  }});

  criteria.push_back({3, "non-monotone line witnesses", [](std::string& msg) {
    auto start = std::chrono::steady_clock::now();
    MarkovCalculator calc;
    ScanReport first =
        scan_line(Rat(-6, 5), Rat(149, 5), 14, 24, DomainFilter::FareyDomainF, calc);
    ScanReport second =
        scan_line(Rat(-7, 6), Rat(215, 6), 17, 29, DomainFilter::FareyDomainF, calc);
    bool ok =
        expect(first.points.size() == 3, "first line point count", msg) &&
        expect(first.points[0].value == MarkovValue("7645370045"), "m_13/14", msg) &&
        expect(first.points[1].value == MarkovValue("6684339842"), "m_7/19", msg) &&
        expect(first.points[2].value == MarkovValue("7778742049"), "m_1/24", msg) &&
        expect(first.verdict == ScanVerdict::NonMonotonic, "first verdict", msg) &&
        expect(second.points.size() == 3, "second line point count", msg) &&
        expect(second.points[0].value == MarkovValue("1513744654945"), "m_16/17", msg) &&
        expect(second.points[1].value == MarkovValue("1490542435045"), "m_9/23", msg) &&
        expect(second.points[2].value == MarkovValue("2076871684802"), "m_2/29", msg) &&
        expect(second.verdict == ScanVerdict::NonMonotonic, "second verdict", msg);
    return ok && within_seconds(start, 10.0, msg);
  }});

  criteria.push_back({4, "strengthened inequality instance with slack 70", [](std::string& msg) {
    MarkovCalculator calc;
    MarkovValue lhs = calc.generalized(5, 3);
    MarkovValue rhs = calc.generalized(4, 3) + calc.generalized(5, 2);
    return expect(lhs == 433, "m_5,3 != 433", msg) &&
           expect(calc.generalized(4, 3) == 169, "m_4,3 != 169", msg) &&
           expect(calc.generalized(5, 2) == 194, "m_5,2 != 194", msg) &&
           expect(lhs - rhs == 70, "slack != 70", msg) &&
           expect(check_additive_inequality(4, 3, 1, calc), "inequality violated", msg);
  }});

  criteria.push_back({5, "pipeline equals Stern-Brocot recursion for q <= 20", [](std::string& msg) {
    auto start = std::chrono::steady_clock::now();
    auto result = sweeps::sweep_oracle_agreement(20, ExecMode::Parallel);
    return expect(result.cases_run == 127, "expected 127 reduced fractions", msg) &&
           suite_clean(result, msg) && within_seconds(start, 30.0, msg);
  }});

  criteria.push_back({6, "exhaustive identity sweeps", [](std::string& msg) {
    return suite_clean(sweeps::sweep_markov_equation(7, ExecMode::Parallel), msg) &&
           suite_clean(sweeps::sweep_ptolemy_equality(6, ExecMode::Parallel), msg);
  }});

  criteria.push_back({7, "fast matching count equals brute force", [](std::string& msg) {
    return suite_clean(sweeps::sweep_matching_equivalence(6, 500, 42, ExecMode::Parallel), msg);
  }});

  criteria.push_back({8, "monotonicity along slopes at desk scale", [](std::string& msg) {
    auto result = sweeps::sweep_monotonic_windows({{Rat(0), ScanVerdict::Increasing},
                                                   {Rat(1), ScanVerdict::Increasing},
                                                   {Rat(-1), ScanVerdict::Increasing},
                                                   {Rat(-8, 7), ScanVerdict::Increasing},
                                                   {Rat(-5, 4), ScanVerdict::Decreasing},
                                                   {Rat(-3, 2), ScanVerdict::Decreasing},
                                                   {Rat(-2), ScanVerdict::Decreasing}},
                                                  60, 30, ExecMode::Parallel);
    return suite_clean(result, msg);
  }});

  criteria.push_back({9, "ratio and constant checks at 60 digits", [](std::string& msg) {
    MarkovCalculator calc;
    RatioReport fib = ratio_fibonacci_limit(3, 4, 40, calc);
    bool ok = expect(fib.monotone_weakly_decreasing, "ratio not weakly decreasing", msg);
    for (const auto& s : fib.samples)
      ok = ok && expect(5 * s.numerator > 9 * s.denominator,
                        "sample q=" + std::to_string(s.q) + " not above 9/5", msg);
    FixedDecimal gap = (fib.samples.back().ratio - fib.target).abs();
    ok = ok && expect(gap < FixedDecimal::from_ratio(2, 100),
                      "final sample not within 0.02 of 1.8", msg);
    PellBoundReport pell = ratio_pell_bound(12, 24, calc);
    ok = ok && expect(pell.constant_exceeds_bound,
                      "constant " + pell.constant.to_string(20) + " <= 1.00200118", msg);
    return ok;
  }});

  criteria.push_back({10, "Fibonacci and Pell identities", [](std::string& msg) {
    MarkovCalculator calc;
    bool ok = true;
    for (std::int64_t q = 2; q <= 12; ++q)
      ok = ok && expect(calc.number(1, q) ==
                            classical_value(ClassicalKind::Fibonacci, static_cast<int>(2 * q + 1)),
                        "m_1/" + std::to_string(q), msg);
    for (std::int64_t n = 1; n <= 10; ++n)
      ok = ok && expect(calc.number(n, n + 1) ==
                            classical_value(ClassicalKind::Pell, static_cast<int>(2 * n + 1)),
                        "m_" + std::to_string(n) + "/" + std::to_string(n + 1), msg);
    return ok;
  }});

  criteria.push_back({11, "multiplicity recurrence equals direct counts", [](std::string& msg) {
    MarkovCalculator calc;
    bool ok = true;
    for (std::int64_t q = 0; q <= 8; ++q)
      for (std::int64_t p = 0; p <= q; ++p) {
        if (p == 0 && q == 0) continue;
        if (gcd_abs(p, q) != 1) continue;
        for (std::int64_t g = 1; g <= 4; ++g)
          ok = ok && expect(multiplicity_value(g * q, g * p) == calc.generalized(g * q, g * p),
                            "q=" + std::to_string(q) + " p=" + std::to_string(p) +
                                " g=" + std::to_string(g),
                            msg);
      }
    return ok;
  }});

  int failures = 0;
  for (auto& criterion : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string message;
    bool ok = false;
    try {
      ok = criterion.run(message);
    } catch (const std::exception& e) {
      message = std::string("exception: ") + e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %2d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", criterion.id,
                criterion.description.c_str(), elapsed, message.empty() ? "" : " - ",
                message.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
