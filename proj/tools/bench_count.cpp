// Compares the serial reference kernels against the prefix-partitioned
// OpenMP kernels on the counting workloads the verification sweeps use.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "catwords/oracle.hpp"

using namespace catwords;

namespace {

double seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

template <typename F>
double timed(const char* label, F&& f) {
  auto start = std::chrono::steady_clock::now();
  f();
  double s = seconds(start);
  std::printf("%-44s %8.3f s\n", label, s);
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  int n = argc > 1 ? std::atoi(argv[1]) : 13;
  EnumerationLimits limits;

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (no OpenMP)\n");
#endif
  std::printf("workload: length %d\n\n", n);

  PatternSet pair({Pattern(Word{1, 0, 0}), Pattern(Word{2, 1, 0})});
  std::uint64_t serial_count = 0, parallel_count = 0;
  double t_serial = timed("count_avoiders (serial reference)",
                          [&] { serial_count = count_avoiders(n, pair, limits); });
  double t_parallel = timed("count_avoiders (prefix-parallel)",
                            [&] { parallel_count = count_avoiders_parallel(n, pair, limits); });
  std::printf("  count = %llu, identical = %s, speedup = %.2fx\n\n",
              static_cast<unsigned long long>(serial_count),
              serial_count == parallel_count ? "yes" : "NO",
              t_parallel > 0 ? t_serial / t_parallel : 0.0);

  int sweep_n = std::min(n, 12);
  std::vector<std::vector<DescentVector>> a, b;
  double t_sweep_serial = timed("78-pair sweep (serial reference)",
                                [&] { a = sweep_length3_pairs(sweep_n, false, limits); });
  double t_sweep_parallel = timed("78-pair sweep (prefix-parallel)",
                                  [&] { b = sweep_length3_pairs(sweep_n, true, limits); });
  std::printf("  identical = %s, speedup = %.2fx\n", a == b ? "yes" : "NO",
              t_sweep_parallel > 0 ? t_sweep_serial / t_sweep_parallel : 0.0);
  return (serial_count == parallel_count && a == b) ? 0 : 1;
}
