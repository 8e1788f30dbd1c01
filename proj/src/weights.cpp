#include "hardy/weights.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hardy/kernels.hpp"
#include "hardy/math.hpp"

namespace hardy {

WeightFamily WeightFamily::power_diff_remainder(double r) {
  WeightFamily f;
  f.kind_ = WeightKind::PowerDiffRemainder;
  f.param_ = r;
  return f;
}

WeightFamily WeightFamily::head_power_diff(double alpha) {
  if (!(alpha > 0.0))
    throw std::invalid_argument("HeadPowerDiff requires alpha > 0, got " + std::to_string(alpha));
  WeightFamily f;
  f.kind_ = WeightKind::HeadPowerDiff;
  f.param_ = alpha;
  return f;
}

WeightFamily WeightFamily::pure_power(double alpha) {
  WeightFamily f;
  f.kind_ = WeightKind::PurePower;
  f.param_ = alpha;
  return f;
}

WeightFamily WeightFamily::tabulated(std::vector<double> values, std::optional<TailRule> tail) {
  if (values.empty()) throw std::invalid_argument("Tabulated family needs at least one value");
  for (size_t i = 0; i < values.size(); ++i)
    if (!(values[i] > 0.0))
      throw std::invalid_argument("Tabulated weight at index " + std::to_string(i + 1) +
                                  " is not positive");
  if (tail && !(tail->ratio > 0.0 && tail->ratio < 1.0))
    throw std::invalid_argument("Tabulated tail rule needs ratio in (0,1)");
  WeightFamily f;
  f.kind_ = WeightKind::Tabulated;
  f.values_ = std::move(values);
  f.tail_rule_ = tail;
  return f;
}

WeightFamily WeightFamily::tabulated_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open weight file: " + path);
  std::vector<double> values;
  std::optional<TailRule> rule;
  std::string line;
  long expected = 1;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      std::istringstream d(line.substr(first + 1));
      std::string word;
      d >> word;
      if (word == "tail:" || word == "tail") {
        std::string kind;
        double ratio;
        if (d >> kind >> ratio && kind == "geometric") rule = TailRule{ratio};
      }
      continue;
    }
    std::istringstream row(line);
    long index;
    double value;
    if (!(row >> index >> value))
      throw std::runtime_error("bad weight file line: '" + line + "'");
    if (index != expected)
      throw std::runtime_error("weight file indices must be 1,2,...; got " +
                               std::to_string(index) + " where " + std::to_string(expected) +
                               " was expected");
    values.push_back(value);
    ++expected;
  }
  return tabulated(std::move(values), rule);
}

bool WeightFamily::tail_summable() const {
  switch (kind_) {
    case WeightKind::PowerDiffRemainder: return param_ < 0.0;
    case WeightKind::HeadPowerDiff: return false;
    case WeightKind::PurePower: return param_ < -1.0;
    case WeightKind::Tabulated: return tail_rule_.has_value();
  }
  return false;
}

std::string WeightFamily::name() const {
  switch (kind_) {
    case WeightKind::PowerDiffRemainder:
      return "PowerDiffRemainder(r=" + std::to_string(param_) + ")";
    case WeightKind::HeadPowerDiff: return "HeadPowerDiff(alpha=" + std::to_string(param_) + ")";
    case WeightKind::PurePower: return "PurePower(alpha=" + std::to_string(param_) + ")";
    case WeightKind::Tabulated:
      return "Tabulated(" + std::to_string(values_.size()) +
             (tail_rule_ ? " values, geometric tail)" : " values)");
  }
  return "?";
}

double WeightFamily::lambda(long k) const { return static_cast<double>(lambda_l(k)); }

long double WeightFamily::lambda_l(long k) const {
  if (k < 1) throw std::out_of_range("lambda index must be >= 1, got " + std::to_string(k));
  long double kk = static_cast<long double>(k);
  switch (kind_) {
    case WeightKind::PowerDiffRemainder:
      return power_diff_over_e_l(param_, kk);
    case WeightKind::HeadPowerDiff:
      if (k == 1) return 1.0L;
      return -std::pow(kk, (long double)param_) * std::expm1(param_ * std::log1p(-1.0L / kk));
    case WeightKind::PurePower:
      return std::pow(kk, (long double)param_);
    case WeightKind::Tabulated: {
      long m = static_cast<long>(values_.size());
      if (k <= m) return values_[static_cast<size_t>(k - 1)];
      if (!tail_rule_)
        throw std::out_of_range("Tabulated family has " + std::to_string(m) +
                                " values and no tail rule; index " + std::to_string(k));
      return values_.back() * std::pow((long double)tail_rule_->ratio, (long double)(k - m));
    }
  }
  return 0.0L;
}

long double WeightFamily::tail_sum_l(long n, long double* half_width) const {
  if (n < 1) throw std::out_of_range("tail_sum index must be >= 1");
  if (half_width) *half_width = 0.0L;
  switch (kind_) {
    case WeightKind::PowerDiffRemainder: {
      if (param_ >= 0.0)
        throw std::domain_error("divergent tail: " + name() + " is not tail-summable");
      return -std::pow((long double)n, (long double)param_) / (long double)param_;
    }
    case WeightKind::HeadPowerDiff:
      throw std::domain_error("divergent tail: " + name() + " is not tail-summable");
    case WeightKind::PurePower: {
      if (param_ >= -1.0)
        throw std::domain_error("divergent tail: " + name() + " is not tail-summable");
      long double a = param_;
      long K = std::max(zeta_cutoff_, n);
      long double partial = 0.0L;
      for (long k = K; k >= n; --k) partial += std::pow((long double)k, a);
      // integral bracket for the remainder beyond K
      long double hi = -std::pow((long double)K, a + 1.0L) / (a + 1.0L);
      long double lo = -std::pow((long double)K + 1.0L, a + 1.0L) / (a + 1.0L);
      if (half_width) *half_width = 0.5L * (hi - lo);
      return partial + 0.5L * (lo + hi);
    }
    case WeightKind::Tabulated: {
      if (!tail_rule_)
        throw std::domain_error("divergent tail: " + name() + " has no tail rule");
      long m = static_cast<long>(values_.size());
      long double rho = tail_rule_->ratio;
      long double geo_from_m1 = values_.back() * rho / (1.0L - rho);  // sum_{k>m}
      if (n > m) return values_.back() * std::pow(rho, (long double)(n - m)) / (1.0L - rho);
      long double s = geo_from_m1;
      for (long k = m; k >= n; --k) s += values_[static_cast<size_t>(k - 1)];
      return s;
    }
  }
  return 0.0L;
}

TailSum WeightFamily::tail_sum(long n) const {
  long double hw = 0.0L;
  long double v = tail_sum_l(n, &hw);
  return {static_cast<double>(v), static_cast<double>(hw)};
}

double WeightFamily::head_sum(long n) const {
  if (n < 1) throw std::out_of_range("head_sum index must be >= 1");
  if (kind_ == WeightKind::HeadPowerDiff) return std::pow((double)n, param_);  // telescopes
  return kernels::sum(1, n, [&](long k) { return lambda(k); });
}

double WeightFamily::lambda_ratio(long n) const {
  if (n < 0) throw std::out_of_range("lambda_ratio index must be >= 0");
  if (n == 0) return 1.0;
  return static_cast<double>(tail_sum_l(n, nullptr) / lambda_l(n));
}

std::vector<long double> WeightFamily::tail_table(long n_max) const {
  if (!tail_summable())
    throw std::domain_error("divergent tail: " + name() + " is not tail-summable");
  std::vector<long double> t(static_cast<size_t>(n_max) + 2, 0.0L);
  if (kind_ == WeightKind::PowerDiffRemainder) {
    // closed telescoping form
    for (long n = 1; n <= n_max + 1; ++n)
      t[static_cast<size_t>(n)] = -std::pow((long double)n, (long double)param_) / (long double)param_;
    return t;
  }
  // one anchored tail, then backward accumulation from the smallest terms up
  t[static_cast<size_t>(n_max) + 1] = tail_sum_l(n_max + 1, nullptr);
  for (long n = n_max; n >= 1; --n)
    t[static_cast<size_t>(n)] = t[static_cast<size_t>(n) + 1] + lambda_l(n);
  return t;
}

std::vector<long double> WeightFamily::ratio_table(long n_max) const {
  std::vector<long double> r(static_cast<size_t>(n_max) + 1, 0.0L);
  r[0] = 1.0L;
  if (kind_ == WeightKind::PowerDiffRemainder) {
    if (param_ >= 0.0)
      throw std::domain_error("divergent tail: " + name() + " is not tail-summable");
    // Lambda_n/lambda_n = 1/(1 - (1+1/n)^r), cancellation-free
    long double rr = param_;
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long n = 1; n <= n_max; ++n)
      r[static_cast<size_t>(n)] = -1.0L / std::expm1(rr * std::log1p(1.0L / (long double)n));
    return r;
  }
  auto t = tail_table(n_max);
  for (long n = 1; n <= n_max; ++n)
    r[static_cast<size_t>(n)] = t[static_cast<size_t>(n)] / lambda_l(n);
  return r;
}

double condition_tolerance(double l_or_m) { return 1e-12 * (1.0 + std::fabs(l_or_m)); }

const char* to_string(LCondition c) {
  switch (c) {
    case LCondition::EQ66: return "EQ66";
    case LCondition::EQ66_REVERSED: return "EQ66_REVERSED";
    case LCondition::EQ66_PRIME: return "EQ66_PRIME";
  }
  return "?";
}

const char* to_string(MVariant v) {
  switch (v) {
    case MVariant::M_LOG: return "M_LOG";
    case MVariant::M_DIFF: return "M_DIFF";
    case MVariant::M_AVG: return "M_AVG";
  }
  return "?";
}

WeightConditionReport check_l_condition(const WeightFamily& family, LCondition condition,
                                        double L, double p, long n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  if (condition == LCondition::EQ66_PRIME && p == 0.0)
    throw std::invalid_argument("EQ66_PRIME requires p != 0");

  auto ratio = family.ratio_table(n_max);
  WeightConditionReport rep;
  rep.condition_id = to_string(condition);
  rep.parameter = L;
  rep.n_max = n_max;
  rep.per_index.resize(static_cast<size_t>(n_max));

  const long double Ll = L, pl = p;
  long bad_prime = n_max + 1;  // smallest index whose base degenerates
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(min : bad_prime)
#endif
  for (long n = 1; n <= n_max; ++n) {
    long double prev = ratio[static_cast<size_t>(n - 1)];
    long double cur = ratio[static_cast<size_t>(n)];
    long double slack = 0.0L;
    switch (condition) {
      case LCondition::EQ66: slack = Ll - (prev - cur); break;
      case LCondition::EQ66_REVERSED: slack = (prev - cur) - Ll; break;
      case LCondition::EQ66_PRIME: {
        // prev <= cur*(1 - L/(p*cur))^{1-p} + L/p
        long double base = 1.0L - Ll / (pl * cur);
        if (!(base > 0.0L)) {
          bad_prime = std::min(bad_prime, n);
          break;
        }
        slack = cur * std::pow(base, 1.0L - pl) + Ll / pl - prev;
        break;
      }
    }
    rep.per_index[static_cast<size_t>(n - 1)] = {n, static_cast<double>(slack)};
  }
  if (bad_prime <= n_max)
    throw std::domain_error("EQ66_PRIME base 1 - L*lambda_n/(p*Lambda_n) is nonpositive at n = " +
                            std::to_string(bad_prime));

  double tol = condition_tolerance(L);
  for (const auto& e : rep.per_index) {
    if (e.value < -tol) {
      rep.holds = false;
      rep.violated_at = e.n;
      break;
    }
  }
  rep.tail_note = rep.holds ? "holds for all checked n <= " + std::to_string(n_max) +
                                  "; no claim beyond without a closed-form monotonicity note"
                            : "violated at n = " + std::to_string(rep.violated_at);
  return rep;
}

WeightConditionReport carleman_m(const WeightFamily& family, MVariant variant, long n_max,
                                 long inner_cutoff) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  long table_max = (variant == MVariant::M_AVG) ? std::max(n_max, inner_cutoff) : n_max;
  auto ratio = family.ratio_table(table_max);

  WeightConditionReport rep;
  rep.condition_id = to_string(variant);
  rep.n_max = n_max;
  rep.per_index.resize(static_cast<size_t>(n_max));

  auto diff_at = [&](long k) {
    return ratio[static_cast<size_t>(k - 1)] - ratio[static_cast<size_t>(k)];
  };

  long double trunc_bound = 0.0L;
  if (variant == MVariant::M_AVG) {
    // suffix sums of lambda_k * d_k let every inner sum come from one scan
    std::vector<long double> sfx(static_cast<size_t>(inner_cutoff) + 2, 0.0L);
    std::vector<long double> lam(static_cast<size_t>(inner_cutoff) + 1, 0.0L);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long k = 1; k <= inner_cutoff; ++k) lam[static_cast<size_t>(k)] = family.lambda_l(k);
    long double sup_abs_diff = 0.0L;
    for (long k = inner_cutoff; k >= 1; --k) {
      long double d = diff_at(k);
      sfx[static_cast<size_t>(k)] = sfx[static_cast<size_t>(k) + 1] + lam[static_cast<size_t>(k)] * d;
      sup_abs_diff = std::max(sup_abs_diff, std::fabs(d));
    }
    auto tails = family.tail_table(std::max(n_max, inner_cutoff));
    long double beyond = tails[static_cast<size_t>(inner_cutoff) + 1];
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long n = 1; n <= n_max; ++n) {
      long double Ln = tails[static_cast<size_t>(n)];
      rep.per_index[static_cast<size_t>(n - 1)] = {
          n, static_cast<double>((sfx[static_cast<size_t>(n)] - sfx[static_cast<size_t>(inner_cutoff) + 1]) / Ln)};
    }
    // neglected mass Lambda_{C+1}/Lambda_n is largest at n = n_max
    trunc_bound = beyond / tails[static_cast<size_t>(n_max)] * sup_abs_diff;
  } else {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long n = 1; n <= n_max; ++n) {
      long double v = 0.0L;
      if (variant == MVariant::M_DIFF) {
        v = diff_at(n);
      } else {
        long double prev = ratio[static_cast<size_t>(n - 1)];
        long double cur = ratio[static_cast<size_t>(n)];
        v = cur * std::log(prev / cur);
      }
      rep.per_index[static_cast<size_t>(n - 1)] = {n, static_cast<double>(v)};
    }
  }

  long double sup = -std::numeric_limits<long double>::infinity();
  long sup_at = 1;
  for (const auto& e : rep.per_index) {
    if (e.value > sup) {
      sup = e.value;
      sup_at = e.n;
    }
  }
  rep.parameter = static_cast<double>(sup);
  rep.e_value = std::exp(rep.parameter);
  rep.holds = true;
  std::string note = "sup over n <= " + std::to_string(n_max) + " attained at n = " +
                     std::to_string(sup_at) + "; E = e^M = " + std::to_string(rep.e_value);
  if (variant == MVariant::M_AVG) {
    rep.truncation_bound = static_cast<double>(trunc_bound);
    note += "; inner sums truncated at " + std::to_string(inner_cutoff) +
            ", remaining mass bounded by " + std::to_string(rep.truncation_bound);
  }
  rep.tail_note = note;
  return rep;
}

}  // namespace hardy
