// Timing comparison between the serial reference kernels and the OpenMP
// kernels, plus the two matching counters.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "markov/markov.hpp"
#include "markov/snake.hpp"
#include "markov/sweeps.hpp"

using namespace markov;
using sweeps::ExecMode;

namespace {

double time_once(const std::function<void()>& fn) {
  auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report_pair(const char* name, double serial, double parallel) {
  std::printf("%-28s serial %8.3fs   parallel %8.3fs   speedup %5.2fx\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = argc > 1 && std::string(argv[1]) == "--quick";
#ifdef _OPENMP
  std::printf("openmp workers: %d\n", omp_get_max_threads());
#else
  std::printf("openmp not enabled; parallel kernels run serially\n");
#endif

  // matching counters on a mid-sized snake graph
  {
    SnakeGraph g = build_snake_graph(deformed_crossing_sequence({0, 0}, {6, 5}, Side::Left));
    const int reps = quick ? 200 : 2000;
    double fast = time_once([&] {
      for (int i = 0; i < reps; ++i) count_matchings_fast(g);
    });
    double brute = time_once([&] {
      for (int i = 0; i < reps; ++i) count_matchings_bruteforce(g);
    });
    std::printf("%-28s fast   %8.1fus   brute    %8.1fus   ratio %7.1fx  (%zu tiles, %d reps)\n",
                "matching count", 1e6 * fast / reps, 1e6 * brute / reps,
                fast > 0 ? brute / fast : 0.0, g.tiles.size(), reps);
  }

  const std::int64_t triangle_coord = quick ? 6 : 8;
  report_pair("markov equation sweep",
              time_once([&] { sweeps::sweep_markov_equation(triangle_coord, ExecMode::Serial); }),
              time_once([&] { sweeps::sweep_markov_equation(triangle_coord, ExecMode::Parallel); }));

  const std::int64_t quad_coord = quick ? 4 : 5;
  report_pair("ptolemy equality sweep",
              time_once([&] { sweeps::sweep_ptolemy_equality(quad_coord, ExecMode::Serial); }),
              time_once([&] { sweeps::sweep_ptolemy_equality(quad_coord, ExecMode::Parallel); }));

  const std::int64_t oracle_q = quick ? 20 : 30;
  report_pair("oracle agreement sweep",
              time_once([&] { sweeps::sweep_oracle_agreement(oracle_q, ExecMode::Serial); }),
              time_once([&] { sweeps::sweep_oracle_agreement(oracle_q, ExecMode::Parallel); }));

  const std::int64_t window_x = quick ? 40 : 60;
  const std::vector<sweeps::SlopeExpectation> slopes = {
      {Rat(-8, 7), ScanVerdict::Increasing}, {Rat(-3, 2), ScanVerdict::Decreasing}};
  report_pair("monotonic window sweep",
              time_once([&] { sweeps::sweep_monotonic_windows(slopes, window_x, 30, ExecMode::Serial); }),
              time_once([&] { sweeps::sweep_monotonic_windows(slopes, window_x, 30, ExecMode::Parallel); }));

  return 0;
}
