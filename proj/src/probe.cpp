#include "hardy/probe.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "hardy/kernels.hpp"
#include "hardy/math.hpp"

namespace hardy {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

long sweep_truncation(double eps, bool carleman) {
  // Power-sum ratios settle on the eps^-1.5 scale. The Carleman ratio has a
  // log-divergent denominator and needs far larger windows before the head
  // terms stop dominating, hence the steeper rule.
  double raw = carleman ? std::ceil(std::pow(eps, -3.0)) : std::ceil(std::pow(eps, -1.5));
  return static_cast<long>(std::min(raw, 1e6));
}

// sum_{k>N} lambda_k ln(k) for PowerDiffRemainder weights, bracketed by the
// exact integral int_A^inf x^{r-1} ln x dx = A^r (ln A / |r| + 1/r^2), r < 0.
struct LogTail {
  double mid;
  double half_width;
};

LogTail power_diff_log_tail(double r, long N) {
  double A = static_cast<double>(N) + 1.0;
  double integral = std::pow(A, r) * (std::log(A) / (-r) + 1.0 / (r * r));
  double lam_tail = -std::pow(A, r) / r;  // Lambda_{N+1}
  double lo = integral - std::log1p(1.0 / A) * lam_tail;
  return {0.5 * (lo + integral), 0.5 * (integral - lo)};
}

// Carleman ratio sum_n G_n / sum_n a_n for the analytic family a_k = k^{-1-eps};
// inner products run to N with the analytic tail folded in.
ProbeSample carleman_sample(const WeightFamily& family, double eps, long N, double* sensitivity) {
  if (family.kind() != WeightKind::PowerDiffRemainder)
    throw std::invalid_argument("carleman sweep implemented for PowerDiffRemainder weights");
  double r = family.parameter();
  std::vector<long double> W(static_cast<size_t>(N) + 2, 0.0L);
  {
    long double run = 0.0L;
    for (long k = N; k >= 1; --k) {
      run += family.lambda_l(k) * (-(1.0L + eps) * std::log((long double)k));
      W[static_cast<size_t>(k)] = run;
    }
  }
  LogTail tail = power_diff_log_tail(r, N);
  long double w_tail = -(1.0L + eps) * tail.mid;
  auto tails = family.tail_table(N);
  double numerator = kernels::sum(1, N, [&](long n) {
    return static_cast<double>(
        std::exp((W[static_cast<size_t>(n)] + w_tail) / tails[static_cast<size_t>(n)]));
  });
  double denominator =
      kernels::sum(1, N, [&](long n) { return std::pow((double)n, -1.0 - eps); });
  if (sensitivity) *sensitivity = (1.0 + eps) * tail.half_width / static_cast<double>(tails[static_cast<size_t>(N)]);
  return {eps, N, numerator / denominator};
}

}  // namespace

bool statement_is_carleman(StatementId id) { return id == StatementId::COR2_1; }

bool statement_minimizes(StatementId id, const StatementParams& params) {
  switch (id) {
    case StatementId::HARDY:
    case StatementId::COR2:
    case StatementId::COR2_1:
    case StatementId::INEQ8:
    case StatementId::THM7:
    case StatementId::COR7:
      return false;  // upper-bound statements, probed from below
    case StatementId::THM1:
    case StatementId::THM2:
      return params.p > 0.0 && params.p < 1.0;
    default:
      return true;  // the 0 < p < 1 lower-bound statements
  }
}

TailOperator statement_operator(StatementId id, const StatementParams& params, long N) {
  const double p = params.p, r = params.r, a = params.alpha;
  switch (id) {
    case StatementId::THM1:
      return TailOperator(WeightFamily::power_diff_remainder(r), Direction::Remainder,
                          Normalizer::power(r), N);
    case StatementId::COR1:
      return TailOperator(WeightFamily::power_diff_remainder(0.0), Direction::Remainder,
                          Normalizer::power(0.0), N);
    case StatementId::INEQ_1:
    case StatementId::THM4:
    case StatementId::THM6:
      return TailOperator(WeightFamily::pure_power(0.0), Direction::Remainder,
                          Normalizer::power(1.0), N);
    case StatementId::LS_41:
    case StatementId::THM5:
      // recast with weights k^{(r-p)/p} and normalizer n^{r/p}
      return TailOperator(WeightFamily::pure_power((r - p) / p), Direction::Remainder,
                          Normalizer::power(r / p), N);
    case StatementId::COR6_5:
      return TailOperator(WeightFamily::pure_power(a), Direction::Remainder,
                          Normalizer::tail_sum(), N);
    case StatementId::HARDY:
      return TailOperator(WeightFamily::pure_power(0.0), Direction::Head, Normalizer::power(1.0),
                          N);
    case StatementId::THM7:
      return TailOperator(WeightFamily::head_power_diff(a), Direction::Head, Normalizer::power(a),
                          N);
    case StatementId::INEQ8:
      return TailOperator(WeightFamily::pure_power(a - 1.0), Direction::Head,
                          Normalizer::head_sum(), N);
    case StatementId::COR2: {
      std::vector<double> inv(static_cast<size_t>(N));
      for (long n = 1; n <= N; ++n)
        inv[static_cast<size_t>(n - 1)] = 1.0 / std::log1p(1.0 / (double)n);
      return TailOperator(WeightFamily::pure_power(0.0), Direction::Head,
                          Normalizer::explicit_values(std::move(inv)), N);
    }
    default:
      throw std::invalid_argument(std::string("no plain ratio operator wired for ") +
                                  to_string(id) +
                                  "; probe the statement through its recast or dual form");
  }
}

ProbeResult extremal_sweep(StatementId id, const StatementParams& params,
                           const std::vector<double>& eps_grid) {
  if (eps_grid.empty()) throw std::invalid_argument("empty epsilon grid");
  for (double e : eps_grid)
    if (!(e > 0.0)) throw std::invalid_argument("epsilon grid must be strictly positive");
  auto v = validity_region(id, params);
  if (!v.valid)
    throw std::domain_error(std::string(to_string(id)) + " hypothesis violated: " + v.reason);

  const bool carleman = statement_is_carleman(id);
  ProbeResult res;
  res.statement = to_string(id);
  res.mode = "EXTREMAL_SWEEP";
  res.samples.resize(eps_grid.size());

  double worst_sensitivity = 0.0;
  for (size_t i = 0; i < eps_grid.size(); ++i) {
    double eps = eps_grid[i];
    long N = sweep_truncation(eps, carleman);
    if (carleman) {
      double sens = 0.0;
      res.samples[i] = carleman_sample(WeightFamily::power_diff_remainder(params.alpha), eps, N,
                                       &sens);
      worst_sensitivity = std::max(worst_sensitivity, sens);
    } else {
      TailOperator op = statement_operator(id, params, N);
      SequenceVector a = SequenceVector::power_family(-1.0 / params.p - eps, N);
      res.samples[i] = {eps, N, ratio_functional(op, a, params.p)};
    }
  }

  bool minimizes = carleman ? false : statement_minimizes(id, params);
  double best = res.samples[0].ratio;
  for (const auto& s : res.samples) best = minimizes ? std::min(best, s.ratio) : std::max(best, s.ratio);
  res.best_bound = best;

  res.monotone_trend = true;
  for (size_t i = 1; i < res.samples.size(); ++i) {
    bool ok = minimizes ? res.samples[i].ratio <= res.samples[i - 1].ratio
                        : res.samples[i].ratio >= res.samples[i - 1].ratio;
    if (!ok) res.monotone_trend = false;
  }
  res.diagnostics = {static_cast<long>(eps_grid.size()), 0.0, true};
  res.notes = carleman
                  ? "truncation N = min(ceil(eps^-3), 1e6); geometric-mean inner tails folded in "
                    "analytically, worst bracket sensitivity " + num(worst_sensitivity)
                  : "truncation N = min(ceil(eps^-1.5), 1e6)";
  return res;
}

ProbeResult optimize_ratio(const TailOperator& op, double p, long N, double tol, long max_iter) {
  if (p == 0.0 || p == 1.0) throw std::invalid_argument("optimizer needs p outside {0, 1}");
  if (N < 1) throw std::invalid_argument("optimizer needs N >= 1");
  if (!(tol > 0.0)) throw std::invalid_argument("optimizer needs tol > 0");

  TailOperator opN = op.truncation() == N ? op : op.with_truncation(N);
  auto lam = opN.lambda_values();
  auto Nn = opN.normalizer_values();
  const bool remainder = opN.direction() == Direction::Remainder;

  std::vector<double> a(static_cast<size_t>(N));
  for (long n = 1; n <= N; ++n)
    a[static_cast<size_t>(n - 1)] = std::pow((double)n, -1.0 / p - 0.1);
  double amax = *std::max_element(a.begin(), a.end());
  for (auto& x : a) x /= amax;

  std::vector<double> T(static_cast<size_t>(N)), B(static_cast<size_t>(N)), anew(static_cast<size_t>(N));
  auto apply_to = [&](const std::vector<double>& in, std::vector<double>& out) {
    long double run = 0.0L;
    if (remainder) {
      for (long n = N; n >= 1; --n) {
        run += (long double)lam[static_cast<size_t>(n - 1)] * in[static_cast<size_t>(n - 1)];
        out[static_cast<size_t>(n - 1)] = static_cast<double>(run) / Nn[static_cast<size_t>(n - 1)];
      }
    } else {
      for (long n = 1; n <= N; ++n) {
        run += (long double)lam[static_cast<size_t>(n - 1)] * in[static_cast<size_t>(n - 1)];
        out[static_cast<size_t>(n - 1)] = static_cast<double>(run) / Nn[static_cast<size_t>(n - 1)];
      }
    }
  };
  // B_j = lambda_j * directed partial sums of T_n^{p-1}/N_n; the window of
  // indices n whose sum reaches j is the opposite direction of the operator.
  auto aggregate = [&](const std::vector<double>& Tv, std::vector<double>& out) {
    long double run = 0.0L;
    if (remainder) {
      for (long j = 1; j <= N; ++j) {
        run += (long double)checked_pow(Tv[static_cast<size_t>(j - 1)], p - 1.0) /
               Nn[static_cast<size_t>(j - 1)];
        out[static_cast<size_t>(j - 1)] = lam[static_cast<size_t>(j - 1)] * static_cast<double>(run);
      }
    } else {
      for (long j = N; j >= 1; --j) {
        run += (long double)checked_pow(Tv[static_cast<size_t>(j - 1)], p - 1.0) /
               Nn[static_cast<size_t>(j - 1)];
        out[static_cast<size_t>(j - 1)] = lam[static_cast<size_t>(j - 1)] * static_cast<double>(run);
      }
    }
  };

  double prev_res = std::numeric_limits<double>::infinity();
  double res = prev_res;
  long it = 0;
  for (; it < max_iter; ++it) {
    apply_to(a, T);
    aggregate(T, B);
    for (long j = 1; j <= N; ++j)
      anew[static_cast<size_t>(j - 1)] = checked_pow(B[static_cast<size_t>(j - 1)], 1.0 / (p - 1.0));
    double m = *std::max_element(anew.begin(), anew.end());
    for (auto& x : anew) x /= m;
    auto residual = [&] {
      double worst = 0.0;
      for (long j = 1; j <= N; ++j) {
        double denom = std::max(a[static_cast<size_t>(j - 1)], 1e-300);
        worst = std::max(worst, std::fabs(anew[static_cast<size_t>(j - 1)] - a[static_cast<size_t>(j - 1)]) / denom);
      }
      return worst;
    };
    res = residual();
    if (res > prev_res) {  // damp oscillation
      for (long j = 1; j <= N; ++j)
        anew[static_cast<size_t>(j - 1)] =
            0.5 * (anew[static_cast<size_t>(j - 1)] + a[static_cast<size_t>(j - 1)]);
      m = *std::max_element(anew.begin(), anew.end());
      for (auto& x : anew) x /= m;
      res = residual();
    }
    a.swap(anew);
    prev_res = res;
    if (res < tol) {
      ++it;
      break;
    }
  }

  double value = ratio_functional(opN, SequenceVector(a), p);
  ProbeResult out;
  out.statement = "";
  out.mode = "OPTIMIZE";
  out.samples = {{static_cast<double>(N), N, value}};
  out.best_bound = value;
  out.monotone_trend = true;
  out.diagnostics = {it, res, res < tol};
  out.notes = res < tol ? "fixed point reached" : "max iterations reached; best iterate returned";
  return out;
}

ProbeResult n_sweep(const TailOperator& op_template, double p, const std::vector<long>& N_list,
                    double tol, std::optional<double> reference) {
  if (N_list.empty()) throw std::invalid_argument("empty N list");
  for (size_t i = 1; i < N_list.size(); ++i)
    if (N_list[i] <= N_list[i - 1])
      throw std::invalid_argument("N list must be strictly increasing");

  ProbeResult res;
  res.mode = "N_SWEEP";
  res.samples.resize(N_list.size());
  long total_iters = 0;
  double worst_res = 0.0;
  bool all_conv = true;
  for (size_t i = 0; i < N_list.size(); ++i) {
    ProbeResult one = optimize_ratio(op_template, p, N_list[i], tol, 100000);
    res.samples[i] = {static_cast<double>(N_list[i]), N_list[i], one.best_bound};
    total_iters += one.diagnostics.iterations;
    worst_res = std::max(worst_res, one.diagnostics.final_residual);
    all_conv = all_conv && one.diagnostics.converged;
  }
  bool minimizes = p > 0.0 && p < 1.0;
  res.monotone_trend = true;
  for (size_t i = 1; i < res.samples.size(); ++i) {
    bool ok = minimizes ? res.samples[i].ratio <= res.samples[i - 1].ratio + 1e-8
                        : res.samples[i].ratio >= res.samples[i - 1].ratio - 1e-8;
    if (!ok) res.monotone_trend = false;
  }
  double best = res.samples[0].ratio;
  for (const auto& s : res.samples) best = minimizes ? std::min(best, s.ratio) : std::max(best, s.ratio);
  res.best_bound = best;
  res.diagnostics = {total_iters, worst_res, all_conv};
  if (reference)
    res.notes = "gap to reference " + num(*reference) + " at largest N: " +
                num(std::fabs(res.samples.back().ratio - *reference));
  return res;
}

}  // namespace hardy
