// Benchmark: serial reference kernels against the OpenMP-parallel ones.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "liestrata/batch.hpp"
#include "liestrata/catalog.hpp"
#include "liestrata/estimator.hpp"
#include "liestrata/matrixlie.hpp"

using namespace liestrata;

namespace {

template <typename F>
double time_ms(F&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

void report(const std::string& name, double serial_ms, double parallel_ms, bool same) {
  std::printf("%-38s %10.1f ms %10.1f ms  %5.2fx  %s\n", name.c_str(), serial_ms,
              parallel_ms, parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
              same ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP: %d threads\n", omp_get_max_threads());
#else
  std::printf("OpenMP: not enabled (parallel falls back to serial)\n");
#endif
  std::printf("%-38s %13s %13s %7s\n", "kernel", "serial", "parallel", "speedup");

  {
    const auto gl4 = catalog_make("gl", 4);
    std::vector<std::size_t> a, b;
    const double ts = time_ms([&] { a = corank_scan(gl4.algebra, 512, 7, ExecPolicy::Serial); });
    const double tp = time_ms([&] { b = corank_scan(gl4.algebra, 512, 7, ExecPolicy::Parallel); });
    report("corank scan, gl(4), 512 points", ts, tp, a == b);
  }
  {
    const auto sl3 = catalog_make("sl", 3);
    std::vector<std::size_t> a, b;
    const double ts =
        time_ms([&] { a = derived_dim_scan(sl3.algebra, 256, 7, ExecPolicy::Serial); });
    const double tp =
        time_ms([&] { b = derived_dim_scan(sl3.algebra, 256, 7, ExecPolicy::Parallel); });
    report("derived-dim scan, sl(3), 256 points", ts, tp, a == b);
  }
  {
    std::vector<NilpotentRow> a, b;
    const double ts = time_ms([&] { a = nilpotent_block_identity(7, ExecPolicy::Serial); });
    const double tp = time_ms([&] { b = nilpotent_block_identity(7, ExecPolicy::Parallel); });
    bool same = a.size() == b.size();
    for (std::size_t i = 0; same && i < a.size(); ++i)
      same = a[i].partition == b[i].partition &&
             a[i].dim_centralizer == b[i].dim_centralizer &&
             a[i].dim_derived == b[i].dim_derived;
    report("largest-block table, gl(7)", ts, tp, same);
  }
  {
    const auto duflo = catalog_make("duflo");
    const Vec mu(Space::Dual, {Rat(0), Rat(1), Rat(0), Rat(0)});
    EstimatorConfig cs;
    cs.samples = 128;
    cs.policy = ExecPolicy::Serial;
    EstimatorConfig cp = cs;
    cp.policy = ExecPolicy::Parallel;
    EstimateResult a, b;
    const double ts = time_ms([&] { a = estimate_stratum_dim(duflo.algebra, mu, cs); });
    const double tp = time_ms([&] { b = estimate_stratum_dim(duflo.algebra, mu, cp); });
    report("stratum estimator, duflo, 128 samples", ts, tp,
           a.singular_values == b.singular_values);
  }
  return 0;
}
