#include <chrono>
#include <cstdio>
#include <string>

#include <CLI11.hpp>
#include <omp.h>

#include "cavityqed/sweep.hpp"

using namespace cavityqed;

namespace {

template <class F>
double best_of(int repeats, F&& f) {
  double best = 1e300;
  for (int n = 0; n < repeats; ++n) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial vs OpenMP sweep timing"};
  std::vector<std::string> presets{"fig4", "fig6-d2", "fig7"};
  int repeats = 3;
  int threads = 0;
  app.add_option("--preset", presets, "Presets to time");
  app.add_option("--repeats", repeats, "Repetitions per driver (best time is reported)");
  app.add_option("--threads", threads, "OpenMP threads (0: default)");
  CLI11_PARSE(app, argc, argv);

  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
  std::printf("%-10s %8s %12s %12s %8s %s\n", "preset", "points", "serial_s", "parallel_s", "speedup", "identical");
  for (const auto& name : presets) {
    const SweepConfig c = preset(name);
    SweepResult serial, parallel;
    const double ts = best_of(repeats, [&] { serial = run_sweep_serial(c); });
    const double tp = best_of(repeats, [&] { parallel = run_sweep(c, nthreads); });
    bool same = serial.rows.size() == parallel.rows.size();
    for (std::size_t n = 0; same && n < serial.rows.size(); ++n) same = serial.rows[n].values == parallel.rows[n].values;
    std::printf("%-10s %8d %12.4f %12.4f %8.2f %s\n", name.c_str(), c.grid.points, ts, tp, ts / tp, same ? "yes" : "NO");
  }
  std::printf("threads: %d\n", nthreads);
  return 0;
}
