#pragma once

#include <string>
#include <vector>

#include "hardy/weights.hpp"

namespace hardy {

// Nonnegative sequence indexed from 1.
class SequenceVector {
 public:
  SequenceVector() = default;
  explicit SequenceVector(std::vector<double> entries, bool require_strict_positive = false);
  static SequenceVector from_file(const std::string& path);  // one value per line
  void save(const std::string& path) const;

  long size() const { return static_cast<long>(v_.size()); }
  double at(long n) const { return v_[static_cast<size_t>(n - 1)]; }
  bool strictly_positive() const { return strict_positive_; }
  const std::vector<double>& entries() const { return v_; }

  static SequenceVector unit(long n, long size);            // e_n padded to size
  static SequenceVector power_family(double e, long size);  // a_n = n^e

 private:
  std::vector<double> v_;
  bool strict_positive_ = false;
};

enum class Direction { Remainder, Head };

enum class NormalizerKind { TailSum, HeadSum, Power, Explicit };

struct Normalizer {
  NormalizerKind kind = NormalizerKind::Power;
  double rho = 0.0;             // Power: N_n = n^rho
  std::vector<double> values;   // Explicit: N_1..N_truncation, all > 0

  static Normalizer tail_sum() { return {NormalizerKind::TailSum, 0.0, {}}; }
  static Normalizer head_sum() { return {NormalizerKind::HeadSum, 0.0, {}}; }
  static Normalizer power(double rho) { return {NormalizerKind::Power, rho, {}}; }
  static Normalizer explicit_values(std::vector<double> v) {
    return {NormalizerKind::Explicit, 0.0, std::move(v)};
  }
};

// T(a)_n = (1/N_n) * sum over the directed window of lambda_k a_k.
class TailOperator {
 public:
  TailOperator(WeightFamily weights, Direction direction, Normalizer normalizer, long truncation);

  const WeightFamily& weights() const { return weights_; }
  Direction direction() const { return dir_; }
  const Normalizer& normalizer() const { return norm_; }
  long truncation() const { return n_; }
  TailOperator with_truncation(long n) const;

  // N_1..N_truncation; tail-sum normalizers use the full analytic Lambda_n
  std::vector<double> normalizer_values() const;
  std::vector<double> lambda_values() const;  // lambda_1..lambda_truncation

  // single suffix/prefix scan, O(N)
  SequenceVector apply(const SequenceVector& a) const;

 private:
  WeightFamily weights_;
  Direction dir_;
  Normalizer norm_;
  long n_;
};

// sum_n T(a)_n^p / sum_n a_n^p
double ratio_functional(const TailOperator& op, const SequenceVector& a, double p);

struct GeometricMean {
  double value;
  double neglected_mass;  // 1 - sum_{k<=cutoff} lambda_k/Lambda_n
};

// G_n over [n, cutoff] in the log domain; the exponent mass left beyond the
// cutoff is reported, never silently dropped.
GeometricMean geometric_remainder(const WeightFamily& family, const SequenceVector& a, long n,
                                  long cutoff);

struct QuasiLinearResult {
  double lhs;
  double rhs;
  double slack;  // signed in the direction asserted for the regime of p
};

// Compares sum (Ra)_n^p against (p/(p-L)) * sum a_n (Ra)_n^{p-1} on the
// truncated problem, R the remainder mean with tail-sum normalizer.
QuasiLinearResult quasi_linear_check(const WeightFamily& family, const SequenceVector& a, double p,
                                     double L);

}  // namespace hardy
