#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace hardy {

// (k+1)^e - k^e without cancellation; k >= 1. The e = 1 case telescopes to
// exactly 1 and anchors the equality families downstream.
inline double power_diff(double e, double k) {
  if (e == 1.0) return 1.0;
  return std::pow(k, e) * std::expm1(e * std::log1p(1.0 / k));
}

inline long double power_diff_l(long double e, long double k) {
  if (e == 1.0L) return 1.0L;
  return std::pow(k, e) * std::expm1(e * std::log1p(1.0L / k));
}

// k^a - (k-1)^a without cancellation; k >= 1.
inline double power_diff_back(double a, double k) {
  if (k == 1.0) return 1.0;  // 0^a = 0 for a > 0
  return -std::pow(k, a) * std::expm1(a * std::log1p(-1.0 / k));
}

// x^p with the domain pinned down: x < 0 is always an error, 0^p is 0 for
// p > 0 and an error otherwise. Nonpositive bases never produce NaN.
inline double checked_pow(double x, double p) {
  if (x > 0.0) return std::pow(x, p);
  if (x == 0.0) {
    if (p > 0.0) return 0.0;
    throw std::domain_error("checked_pow: 0 raised to exponent " + std::to_string(p));
  }
  throw std::domain_error("checked_pow: negative base " + std::to_string(x));
}

// int_a^b x^e dx with the e = -1 log case special-cased; 0 < a <= b.
inline double power_integral(double e, double a, double b) {
  if (e == -1.0) return std::log(b / a);
  // (b^{e+1} - a^{e+1})/(e+1), stable for b close to a
  return std::pow(a, e + 1.0) * std::expm1((e + 1.0) * std::log(b / a)) / (e + 1.0);
}

// ((n+1)^e - n^e)/e with the telescoping-at-zero convention ln((n+1)/n).
inline double power_diff_over_e(double e, double n) {
  if (e == 0.0) return std::log1p(1.0 / n);
  return power_diff(e, n) / e;
}

inline long double power_diff_over_e_l(long double e, long double n) {
  if (e == 0.0L) return std::log1p(1.0L / n);
  return power_diff_l(e, n) / e;
}

inline bool essentially_equal(double a, double b, double rel) {
  return std::fabs(a - b) <= rel * std::max(std::fabs(a), std::fabs(b));
}

}  // namespace hardy
