#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>
#include <json.hpp>

#include "markov/markov.hpp"
#include "markov/relations.hpp"
#include "markov/snake.hpp"
#include "markov/sweeps.hpp"

namespace {

using json = nlohmann::json;
using namespace markov;

Rat parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(text));
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den == 0) throw DomainError("rational flag: zero denominator in " + text);
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw DomainError("rational flag: cannot parse '" + text + "' (use p/q or an integer)");
  }
}

LatticePoint parse_point(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw DomainError("coordinate flag: expected x,y but got '" + text + "'");
  try {
    return {std::stoll(text.substr(0, comma)), std::stoll(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw DomainError("coordinate flag: cannot parse '" + text + "'");
  }
}

struct CacheGuard {
  MarkovCalculator& calc;
  std::string path;

  CacheGuard(MarkovCalculator& c, const std::string& flag_path) : calc(c) {
    const char* env = std::getenv("MARKOV_CACHE");
    path = env && *env ? env : flag_path;
    if (!path.empty() && std::filesystem::exists(path)) calc.load_cache(path);
  }
  ~CacheGuard() {
    if (!path.empty()) {
      try {
        calc.save_cache(path);
      } catch (const std::exception& e) {
        std::cerr << "warning: " << e.what() << "\n";
      }
    }
  }
};

json scan_to_json(const ScanReport& report) {
  json points = json::array();
  for (const auto& p : report.points)
    points.push_back({{"x", p.point.x}, {"y", p.point.y}, {"m", p.value.str()}});
  json out{{"verdict", to_string(report.verdict)}, {"points", points}};
  if (report.witness)
    out["witness"] = {report.witness->x1, report.witness->x2, report.witness->x3};
  return out;
}

void print_scan_text(const ScanReport& report) {
  for (const auto& p : report.points)
    std::cout << p.point.x << ' ' << p.point.y << ' ' << p.value << '\n';
  std::cout << "verdict: " << to_string(report.verdict);
  if (report.witness)
    std::cout << " (witness x = " << report.witness->x1 << ", " << report.witness->x2 << ", "
              << report.witness->x3 << ")";
  std::cout << '\n';
}

int run(int argc, char** argv) {
  CLI::App app{"Markov numbers, snake-graph distances and relation checks on the triangulated lattice"};
  app.require_subcommand(1);
  std::string cache_path;
  app.add_option("--cache", cache_path, "cache file for computed values (env MARKOV_CACHE overrides)");

  // number
  auto* number = app.add_subcommand("number", "Markov number m_{p/q} via the geometric pipeline");
  std::int64_t num_p = 0, num_q = 0;
  bool with_oracle = false;
  number->add_option("--p", num_p, "numerator")->required();
  number->add_option("--q", num_q, "denominator")->required();
  number->add_flag("--oracle", with_oracle, "also print the Stern-Brocot value and compare");

  // distance
  auto* distance = app.add_subcommand("distance", "Markov distance |AB| between lattice points");
  std::string from_text, to_text;
  distance->add_option("--from", from_text, "x,y")->required();
  distance->add_option("--to", to_text, "x,y")->required();

  // snake
  auto* snake = app.add_subcommand("snake", "snake graph of the segment from the origin to (q,p)");
  std::int64_t snake_p = 0, snake_q = 0;
  std::string show = "tiles,glues,cf,count";
  snake->add_option("--p", snake_p, "numerator")->required();
  snake->add_option("--q", snake_q, "denominator")->required();
  snake->add_option("--show", show, "comma-separated subset of tiles,glues,cf,count");

  // scan
  auto* scan = app.add_subcommand("scan", "Markov values along a rational line");
  std::string slope_text, intercept_text, filter_text = "all", scan_format = "text";
  std::int64_t x_min = 0, x_max = 0;
  scan->add_option("--slope", slope_text, "rational slope a (p/q or integer)")->required();
  scan->add_option("--intercept", intercept_text, "rational intercept b")->required();
  scan->add_option("--x-min", x_min)->required();
  scan->add_option("--x-max", x_max)->required();
  scan->add_option("--filter", filter_text,
                   "all (generalized values, default) or farey (domain F only)");
  scan->add_option("--format", scan_format, "text, csv or json");

  // region
  auto* region = app.add_subcommand("region", "classify a neighborhood against its center value");
  std::string center_text, region_format = "csv";
  std::int64_t radius = 1;
  region->add_option("--center", center_text, "q,p")->required();
  region->add_option("--radius", radius, "Chebyshev radius")->required();
  region->add_option("--format", region_format, "csv or json");

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all", verify_format = "text";
  std::int64_t max_coord = 7;
  std::uint64_t seed = 42;
  int threads = 0;
  verify->add_option("--suite", suite, "identities, inequalities, scans, ratios or all");
  verify->add_option("--max-coord", max_coord, "coordinate bound for exhaustive sweeps");
  verify->add_option("--seed", seed, "seed for sampled checks");
  verify->add_option("--threads", threads, "0 = default parallel, 1 = serial reference, n = n workers");
  verify->add_option("--format", verify_format, "text or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  MarkovCalculator calc;
  CacheGuard cache(calc, cache_path);

  if (number->parsed()) {
    MarkovValue value = calc.number(num_p, num_q);
    if (with_oracle) {
      MarkovValue oracle = stern_brocot_oracle(num_p, num_q);
      std::cout << value << ' ' << oracle << '\n';
      return value == oracle ? 0 : 1;
    }
    std::cout << value << '\n';
    return 0;
  }

  if (distance->parsed()) {
    std::cout << calc.distance(parse_point(from_text), parse_point(to_text)) << '\n';
    return 0;
  }

  if (snake->parsed()) {
    if (!(snake_p >= 1 && snake_q >= 1 && snake_p <= snake_q &&
          (snake_p < snake_q || snake_p == 1) && gcd_abs(snake_p, snake_q) == 1))
      throw DomainError("snake: p/q must be reduced with 1 <= p <= q (p = q only for 1/1)");
    SnakeGraph g =
        build_snake_graph(deformed_crossing_sequence({0, 0}, {snake_q, snake_p}, Side::Left));
    std::set<std::string> parts;
    for (std::size_t pos = 0; pos < show.size();) {
      auto comma = show.find(',', pos);
      if (comma == std::string::npos) comma = show.size();
      parts.insert(show.substr(pos, comma - pos));
      pos = comma + 1;
    }
    for (const auto& part : parts)
      if (part != "tiles" && part != "glues" && part != "cf" && part != "count")
        throw DomainError("snake: unknown --show part '" + part + "'");
    if (parts.count("tiles")) std::cout << to_string(g) << '\n';
    if (parts.count("glues")) {
      std::string s;
      for (auto glue : g.glues) {
        if (!s.empty()) s += ' ';
        s += glue == GlueDirection::North ? 'N' : 'E';
      }
      std::cout << s << '\n';
    }
    if (parts.count("cf")) std::cout << to_string(continued_fraction_of(g)) << '\n';
    if (parts.count("count")) std::cout << count_matchings_fast(g) << '\n';
    return 0;
  }

  if (scan->parsed()) {
    DomainFilter filter;
    if (filter_text == "farey")
      filter = DomainFilter::FareyDomainF;
    else if (filter_text == "all")
      filter = DomainFilter::AllLattice;
    else
      throw DomainError("scan: unknown filter '" + filter_text + "'");
    ScanReport report =
        scan_line(parse_rational(slope_text), parse_rational(intercept_text), x_min, x_max, filter, calc);
    if (scan_format == "text")
      print_scan_text(report);
    else if (scan_format == "csv")
      std::cout << to_csv(report);
    else if (scan_format == "json")
      std::cout << scan_to_json(report).dump() << '\n';
    else
      throw DomainError("scan: unknown format '" + scan_format + "'");
    return 0;
  }

  if (region->parsed()) {
    LatticePoint center = parse_point(center_text);
    RegionMap map = classify_neighborhood(center, radius, calc);
    if (region_format == "csv") {
      std::cout << to_csv(map);
    } else if (region_format == "json") {
      json cells = json::array();
      for (const auto& cell : map.cells)
        cells.push_back({{"x", cell.point.x}, {"y", cell.point.y}, {"class", to_string(cell.cls)}});
      std::cout << json{{"cells", cells}}.dump() << '\n';
    } else {
      throw DomainError("region: unknown format '" + region_format + "'");
    }
    return 0;
  }

  if (verify->parsed()) {
    sweeps::VerifyOptions options;
    options.max_coord = max_coord;
    options.seed = seed;
    options.mode = threads == 1 ? sweeps::ExecMode::Serial : sweeps::ExecMode::Parallel;
#ifdef _OPENMP
    if (threads > 1) omp_set_num_threads(threads);
#endif
    auto results = sweeps::run_verify_suites(suite, options);
    bool ok = true;
    if (verify_format == "json") {
      json out = json::array();
      for (const auto& r : results) {
        json failures = json::array();
        for (const auto& f : r.failures)
          failures.push_back({{"case", f.case_id}, {"expected", f.expected}, {"actual", f.actual}});
        out.push_back({{"suite", r.suite}, {"cases", r.cases_run}, {"failures", failures}});
        ok = ok && r.ok();
      }
      std::cout << out.dump() << '\n';
    } else if (verify_format == "text") {
      for (const auto& r : results) {
        std::cout << r.suite << ": " << r.cases_run << " cases, " << r.failures.size()
                  << " failures\n";
        for (const auto& f : r.failures)
          std::cout << "  " << f.case_id << ": expected " << f.expected << ", got " << f.actual
                    << '\n';
        ok = ok && r.ok();
      }
    } else {
      throw DomainError("verify: unknown format '" + verify_format + "'");
    }
    return ok ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
