#pragma once

#include <algorithm>
#include <limits>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

// Grid reduction kernels. hardy::kernels holds the OpenMP versions used by
// the library; hardy::reference holds plain serial loops kept as oracles for
// the tests and the kernel benchmark. Parallel results are deterministic:
// sums use a fixed block/pairwise combination tree and min/max scans break
// ties toward the smallest index, so the outcome does not depend on the
// thread count.

namespace hardy {

struct MinLoc {
  double value;
  long index;
};

namespace reference {

template <class F>
double sum(long lo, long hi, F&& f) {
  double s = 0.0;
  for (long i = hi; i >= lo; --i) s += f(i);
  return s;
}

template <class F>
MinLoc min_scan(long lo, long hi, F&& f) {
  MinLoc best{std::numeric_limits<double>::infinity(), -1};
  for (long i = lo; i <= hi; ++i) {
    double v = f(i);
    if (v < best.value) best = {v, i};
  }
  return best;
}

template <class F>
MinLoc max_scan(long lo, long hi, F&& f) {
  MinLoc best{-std::numeric_limits<double>::infinity(), -1};
  for (long i = lo; i <= hi; ++i) {
    double v = f(i);
    if (v > best.value) best = {v, i};
  }
  return best;
}

}  // namespace reference

namespace kernels {

inline constexpr long kBlock = 8192;

namespace detail {

// Pairwise sum over [lo, hi]; leaves accumulate from the largest index down,
// so decaying series add smallest magnitude first.
template <class F>
double pairwise(long lo, long hi, F& f) {
  long n = hi - lo + 1;
  if (n <= 64) {
    double s = 0.0;
    for (long i = hi; i >= lo; --i) s += f(i);
    return s;
  }
  long mid = lo + n / 2;
  return pairwise<F>(lo, mid - 1, f) + pairwise<F>(mid, hi, f);
}

inline double combine(const std::vector<double>& b, long lo, long hi) {
  if (lo == hi) return b[lo];
  long mid = lo + (hi - lo + 1) / 2;
  return combine(b, lo, mid - 1) + combine(b, mid, hi);
}

}  // namespace detail

template <class F>
double sum(long lo, long hi, F&& f) {
  if (lo > hi) return 0.0;
  long n = hi - lo + 1;
  if (n <= kBlock) return detail::pairwise(lo, hi, f);
  long nb = (n + kBlock - 1) / kBlock;
  std::vector<double> bs(static_cast<size_t>(nb));
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long b = 0; b < nb; ++b) {
    long a = lo + b * kBlock;
    bs[static_cast<size_t>(b)] = detail::pairwise(a, std::min(hi, a + kBlock - 1), f);
  }
  return detail::combine(bs, 0, nb - 1);
}

template <class F>
MinLoc min_scan(long lo, long hi, F&& f) {
  MinLoc best{std::numeric_limits<double>::infinity(), -1};
#ifdef _OPENMP
#pragma omp parallel
  {
    MinLoc local{std::numeric_limits<double>::infinity(), -1};
#pragma omp for schedule(static) nowait
    for (long i = lo; i <= hi; ++i) {
      double v = f(i);
      if (v < local.value || (v == local.value && (local.index < 0 || i < local.index)))
        local = {v, i};
    }
#pragma omp critical
    {
      if (local.index >= 0 &&
          (best.index < 0 || local.value < best.value ||
           (local.value == best.value && local.index < best.index)))
        best = local;
    }
  }
#else
  best = reference::min_scan(lo, hi, f);
#endif
  return best;
}

template <class F>
MinLoc max_scan(long lo, long hi, F&& f) {
  MinLoc neg = min_scan(lo, hi, [&](long i) { return -f(i); });
  return {-neg.value, neg.index};
}

}  // namespace kernels
}  // namespace hardy
