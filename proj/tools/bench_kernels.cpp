// Times the OpenMP reduction kernels against the serial reference loops on
// workloads shaped like the library's hot scans.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hardy/certify.hpp"
#include "hardy/kernels.hpp"
#include "hardy/weights.hpp"

namespace {

template <class F>
double time_ms(F&& f, double* result) {
  auto t0 = std::chrono::steady_clock::now();
  *result = f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const char* name, double serial_ms, double parallel_ms, double serial_v,
         double parallel_v) {
  std::printf("%-34s %10.1f ms %10.1f ms   x%-5.2f |diff| %.3e\n", name, serial_ms, parallel_ms,
              serial_ms / parallel_ms, std::fabs(serial_v - parallel_v));
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled at build time\n");
#endif
  std::printf("%-34s %13s %13s\n", "kernel", "serial", "parallel");

  {
    const long K = 50'000'000;
    auto f = [](long k) { double x = (double)k; return 1.0 / (x * x); };
    double rs, rp;
    double ts = time_ms([&] { return hardy::reference::sum(1, K, f); }, &rs);
    double tp = time_ms([&] { return hardy::kernels::sum(1, K, f); }, &rp);
    row("zeta(2) partial sum, K=5e7", ts, tp, rs, rp);
  }
  {
    const long K = 2'000'000;
    auto f = [](long k) {
      double x = (double)k;
      return std::pow(x, -2.4) * std::log1p(1.0 / x);
    };
    double rs, rp;
    double ts = time_ms([&] { return hardy::reference::min_scan(1, K, f).value; }, &rs);
    double tp = time_ms([&] { return hardy::kernels::min_scan(1, K, f).value; }, &rp);
    row("min scan, power functional, 2e6", ts, tp, rs, rp);
  }
  {
    // slack scan shaped like the EQ66 condition check
    const long N = 2'000'000;
    auto fam = hardy::WeightFamily::power_diff_remainder(-0.5);
    auto ratio = fam.ratio_table(N);
    auto f = [&](long n) {
      return -2.0 - (double)(ratio[(size_t)n - 1] - ratio[(size_t)n]);
    };
    double rs, rp;
    double ts = time_ms([&] { return hardy::reference::min_scan(1, N, f).value; }, &rs);
    double tp = time_ms([&] { return hardy::kernels::min_scan(1, N, f).value; }, &rp);
    row("condition slack min, n<=2e6", ts, tp, rs, rp);
  }
  {
    // auxiliary-sequence head sums at a big k
    const long k = 3'000'000;
    auto f = [](long n) { return std::pow((double)n, 0.2); };
    double rs, rp;
    double ts = time_ms([&] { return hardy::reference::sum(1, k, f); }, &rs);
    double tp = time_ms([&] { return hardy::kernels::sum(1, k, f); }, &rp);
    row("s_k head sum, k=3e6", ts, tp, rs, rp);
  }
  return 0;
}
