#include "hardy/operators.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "hardy/kernels.hpp"
#include "hardy/math.hpp"

namespace hardy {

SequenceVector::SequenceVector(std::vector<double> entries, bool require_strict_positive)
    : v_(std::move(entries)) {
  if (v_.empty()) throw std::invalid_argument("sequence must not be empty");
  strict_positive_ = true;
  for (size_t i = 0; i < v_.size(); ++i) {
    if (v_[i] < 0.0)
      throw std::invalid_argument("sequence entry " + std::to_string(i + 1) + " is negative");
    if (v_[i] == 0.0) strict_positive_ = false;
  }
  if (require_strict_positive && !strict_positive_)
    throw std::invalid_argument("sequence must be strictly positive");
}

SequenceVector SequenceVector::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open sequence file: " + path);
  std::vector<double> v;
  double x;
  while (in >> x) v.push_back(x);
  return SequenceVector(std::move(v));
}

void SequenceVector::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write sequence file: " + path);
  char buf[64];
  for (double x : v_) {
    std::snprintf(buf, sizeof buf, "%.17g\n", x);
    out << buf;
  }
}

SequenceVector SequenceVector::unit(long n, long size) {
  std::vector<double> v(static_cast<size_t>(size), 0.0);
  v.at(static_cast<size_t>(n - 1)) = 1.0;
  return SequenceVector(std::move(v));
}

SequenceVector SequenceVector::power_family(double e, long size) {
  std::vector<double> v(static_cast<size_t>(size));
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long n = 1; n <= size; ++n)
    v[static_cast<size_t>(n - 1)] = std::pow(static_cast<double>(n), e);
  return SequenceVector(std::move(v));
}

TailOperator::TailOperator(WeightFamily weights, Direction direction, Normalizer normalizer,
                           long truncation)
    : weights_(std::move(weights)), dir_(direction), norm_(std::move(normalizer)), n_(truncation) {
  if (n_ < 1) throw std::invalid_argument("operator truncation must be >= 1");
  if (dir_ == Direction::Remainder && norm_.kind == NormalizerKind::TailSum &&
      !weights_.tail_summable())
    throw std::domain_error("remainder operator with tail-sum normalizer needs tail-summable "
                            "weights: " + weights_.name());
  if (norm_.kind == NormalizerKind::Explicit) {
    if (static_cast<long>(norm_.values.size()) < n_)
      throw std::invalid_argument("explicit normalizer shorter than truncation");
    for (long i = 0; i < n_; ++i)
      if (!(norm_.values[static_cast<size_t>(i)] > 0.0))
        throw std::invalid_argument("explicit normalizer must be positive at every index");
  }
}

TailOperator TailOperator::with_truncation(long n) const {
  return TailOperator(weights_, dir_, norm_, n);
}

std::vector<double> TailOperator::lambda_values() const {
  std::vector<double> lam(static_cast<size_t>(n_));
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long k = 1; k <= n_; ++k) lam[static_cast<size_t>(k - 1)] = weights_.lambda(k);
  return lam;
}

std::vector<double> TailOperator::normalizer_values() const {
  std::vector<double> N(static_cast<size_t>(n_));
  switch (norm_.kind) {
    case NormalizerKind::Power:
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
      for (long n = 1; n <= n_; ++n)
        N[static_cast<size_t>(n - 1)] = std::pow(static_cast<double>(n), norm_.rho);
      break;
    case NormalizerKind::HeadSum: {
      long double run = 0.0L;
      for (long n = 1; n <= n_; ++n) {
        run += weights_.lambda_l(n);
        N[static_cast<size_t>(n - 1)] = static_cast<double>(run);
      }
      break;
    }
    case NormalizerKind::TailSum: {
      auto t = weights_.tail_table(n_);
      for (long n = 1; n <= n_; ++n) N[static_cast<size_t>(n - 1)] = static_cast<double>(t[static_cast<size_t>(n)]);
      break;
    }
    case NormalizerKind::Explicit:
      N.assign(norm_.values.begin(), norm_.values.begin() + n_);
      break;
  }
  for (long n = 1; n <= n_; ++n)
    if (!(N[static_cast<size_t>(n - 1)] > 0.0))
      throw std::domain_error("normalizer N_n must be positive; fails at n = " + std::to_string(n));
  return N;
}

SequenceVector TailOperator::apply(const SequenceVector& a) const {
  if (a.size() != n_)
    throw std::invalid_argument("sequence length " + std::to_string(a.size()) +
                                " does not match operator truncation " + std::to_string(n_));
  auto lam = lambda_values();
  auto N = normalizer_values();
  std::vector<double> out(static_cast<size_t>(n_));
  long double run = 0.0L;
  if (dir_ == Direction::Remainder) {
    for (long n = n_; n >= 1; --n) {
      run += static_cast<long double>(lam[static_cast<size_t>(n - 1)]) * a.at(n);
      out[static_cast<size_t>(n - 1)] = static_cast<double>(run);
    }
  } else {
    for (long n = 1; n <= n_; ++n) {
      run += static_cast<long double>(lam[static_cast<size_t>(n - 1)]) * a.at(n);
      out[static_cast<size_t>(n - 1)] = static_cast<double>(run);
    }
  }
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long n = 1; n <= n_; ++n) out[static_cast<size_t>(n - 1)] /= N[static_cast<size_t>(n - 1)];
  return SequenceVector(std::move(out));
}

double ratio_functional(const TailOperator& op, const SequenceVector& a, double p) {
  if (p == 0.0) throw std::invalid_argument("ratio functional needs p != 0");
  bool zero = true;
  for (long n = 1; n <= a.size(); ++n)
    if (a.at(n) != 0.0) { zero = false; break; }
  if (zero) throw std::invalid_argument("ratio functional of the zero sequence");
  if (p < 0.0 && !a.strictly_positive())
    throw std::domain_error("p < 0 requires a strictly positive sequence");

  SequenceVector T = op.apply(a);
  double num = kernels::sum(1, a.size(), [&](long n) { return checked_pow(T.at(n), p); });
  double den = kernels::sum(1, a.size(), [&](long n) { return checked_pow(a.at(n), p); });
  return num / den;
}

GeometricMean geometric_remainder(const WeightFamily& family, const SequenceVector& a, long n,
                                  long cutoff) {
  if (n < 1 || cutoff < n) throw std::invalid_argument("need 1 <= n <= cutoff");
  if (a.size() < cutoff) throw std::invalid_argument("sequence shorter than cutoff");
  for (long k = n; k <= cutoff; ++k)
    if (!(a.at(k) > 0.0))
      throw std::domain_error("geometric remainder needs positive entries; a_" +
                              std::to_string(k) + " is not");
  double Lam_n = family.tail_sum(n).value;
  double exponent_sum = kernels::sum(n, cutoff, [&](long k) {
    return family.lambda(k) * std::log(a.at(k));
  });
  double mass_beyond = family.tail_sum(cutoff + 1).value / Lam_n;
  return {std::exp(exponent_sum / Lam_n), mass_beyond};
}

QuasiLinearResult quasi_linear_check(const WeightFamily& family, const SequenceVector& a, double p,
                                     double L) {
  if (p == 0.0) throw std::invalid_argument("quasi-linear check needs p != 0");
  if (p > 0.0 && !(L < p))
    throw std::domain_error("regime violation: need L < p for p > 0 (L = " + std::to_string(L) +
                            ", p = " + std::to_string(p) + ")");
  if (p < 0.0 && !(L > p))
    throw std::domain_error("regime violation: need L > p for p < 0 (L = " + std::to_string(L) +
                            ", p = " + std::to_string(p) + ")");
  if (p < 1.0 && !a.strictly_positive())
    throw std::domain_error("p < 1 requires a strictly positive sequence");

  TailOperator R(family, Direction::Remainder, Normalizer::tail_sum(), a.size());
  SequenceVector Ra = R.apply(a);
  double lhs = kernels::sum(1, a.size(), [&](long k) { return checked_pow(Ra.at(k), p); });
  double rhs = (p / (p - L)) * kernels::sum(1, a.size(), [&](long k) {
    double t = Ra.at(k);
    if (t == 0.0 && a.at(k) == 0.0) return 0.0;
    return a.at(k) * checked_pow(t, p - 1.0);
  });
  double slack = (p >= 1.0) ? rhs - lhs : lhs - rhs;
  return {lhs, rhs, slack};
}

}  // namespace hardy
