#include "hardy/dual.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "hardy/math.hpp"

namespace hardy {

namespace {

DualDescriptor make(StatementId src, const StatementParams& sp, StatementId tgt,
                    const StatementParams& tp, double sc, double tc, std::string pmap,
                    std::string omap) {
  DualDescriptor d;
  d.source = src;
  d.target = tgt;
  d.source_params = sp;
  d.target_params = tp;
  d.source_constant = sc;
  d.target_constant = tc;
  d.exponent_map = "q = p/(p-1)";
  d.parameter_map = std::move(pmap);
  d.operator_map = std::move(omap);
  return d;
}

}  // namespace

DualDescriptor dualize_statement(StatementId source, const StatementParams& params) {
  auto v = validity_region(source, params);
  if (!v.valid)
    throw std::domain_error(std::string(to_string(source)) + " hypothesis violated: " + v.reason);
  const double p = params.p;

  switch (source) {
    case StatementId::THM1: {
      double base = p / (1.0 - params.r * p);
      StatementParams tp = params;
      return make(source, params, StatementId::THM2, tp, std::pow(base, p),
                  std::pow(base, conjugate_exponent(p)), "r unchanged",
                  "remainder mean with power normalizer n^r maps to the transposed head form "
                  "with weights k^{-r}");
    }
    case StatementId::THM2: {
      double base = p / (1.0 - params.r * p);
      if (p > 1.0) {
        // head-sum recast: rename exponents, flip the sign of r, then absorb
        // the (1+r) factor into the head-sum normalizer
        StatementParams tp;
        tp.p = conjugate_exponent(p);
        tp.alpha = 1.0 - params.r;
        double source_c = std::pow(base, conjugate_exponent(p));
        double target_c =
            std::pow(tp.alpha * tp.p / (tp.alpha * tp.p - 1.0), tp.p);
        return make(source, params, StatementId::INEQ8, tp, source_c, target_c,
                    "p and q interchanged, r -> -r, alpha = 1 + (-r)",
                    "head form against k^{-r} maps to the weighted head mean with weights "
                    "i^{alpha-1} and head-sum normalizer");
      }
      StatementParams tp = params;
      return make(source, params, StatementId::THM1, tp, std::pow(base, conjugate_exponent(p)),
                  std::pow(base, p), "r unchanged",
                  "head form with weights k^{-r} maps back to the remainder mean with power "
                  "normalizer n^r");
    }
    case StatementId::INEQ8: {
      StatementParams tp;
      tp.p = conjugate_exponent(p);
      tp.r = 1.0 - params.alpha;
      double source_c = std::pow(params.alpha * p / (params.alpha * p - 1.0), p);
      double base = tp.p / (1.0 - tp.r * tp.p);
      return make(source, params, StatementId::THM2, tp, source_c,
                  std::pow(base, conjugate_exponent(tp.p)),
                  "p and q interchanged, alpha -> 1 - r",
                  "weighted head mean with head-sum normalizer maps back to the head form "
                  "against k^{-r}");
    }
    case StatementId::COR6_5: {
      double base = (1.0 + params.alpha) * p / ((1.0 + params.alpha) * p - 1.0);
      StatementParams tp;
      tp.p = conjugate_exponent(p);
      tp.alpha = -params.alpha;
      return make(source, params, StatementId::THM7, tp, std::pow(base, p),
                  std::pow(base, conjugate_exponent(p)), "alpha -> -alpha",
                  "remainder mean over k^alpha maps to the transposed head form carrying the "
                  "per-index factor alpha/((alpha-1)(k^alpha-(k-1)^alpha) sum_{i>=k} i^-alpha)");
    }
    case StatementId::THM7: {
      if (!(p < 0.0))
        throw std::invalid_argument("THM7 dualizes back to the remainder form only for p < 0");
      double q = conjugate_exponent(p);
      StatementParams tp;
      tp.p = q;
      tp.alpha = -params.alpha;
      double base = (1.0 + tp.alpha) * q / ((1.0 + tp.alpha) * q - 1.0);
      return make(source, params, StatementId::COR6_5, tp, std::pow(base, p),
                  std::pow(base, q), "alpha -> -alpha",
                  "head form maps back to the remainder mean over k^{-alpha} with tail-sum "
                  "normalizer");
    }
    default:
      throw std::invalid_argument(std::string("unsupported source statement for duality: ") +
                                  to_string(source));
  }
}

double matrix_lp_norm(const std::vector<std::vector<double>>& C, double p, double tol,
                      long max_iter, bool* converged) {
  if (!(p > 1.0)) throw std::invalid_argument("matrix norm iteration needs p > 1");
  const long N = static_cast<long>(C.size());
  std::vector<double> a(static_cast<size_t>(N), 1.0), T(static_cast<size_t>(N)),
      B(static_cast<size_t>(N)), anew(static_cast<size_t>(N));
  double prev_res = std::numeric_limits<double>::infinity();
  double res = prev_res;
  bool conv = false;
  for (long it = 0; it < max_iter; ++it) {
    for (long n = 0; n < N; ++n) {
      long double s = 0.0L;
      for (long k = 0; k < N; ++k) s += (long double)C[static_cast<size_t>(n)][static_cast<size_t>(k)] * a[static_cast<size_t>(k)];
      T[static_cast<size_t>(n)] = static_cast<double>(s);
    }
    for (long j = 0; j < N; ++j) {
      long double s = 0.0L;
      for (long n = 0; n < N; ++n) {
        double t = T[static_cast<size_t>(n)];
        if (t > 0.0 && C[static_cast<size_t>(n)][static_cast<size_t>(j)] > 0.0)
          s += (long double)C[static_cast<size_t>(n)][static_cast<size_t>(j)] * std::pow(t, p - 1.0);
      }
      B[static_cast<size_t>(j)] = static_cast<double>(s);
    }
    double m = 0.0;
    for (long j = 0; j < N; ++j) {
      anew[static_cast<size_t>(j)] = B[static_cast<size_t>(j)] > 0.0 ? std::pow(B[static_cast<size_t>(j)], 1.0 / (p - 1.0)) : 0.0;
      m = std::max(m, anew[static_cast<size_t>(j)]);
    }
    if (m == 0.0) break;  // zero matrix
    for (auto& x : anew) x /= m;
    res = 0.0;
    for (long j = 0; j < N; ++j)
      res = std::max(res, std::fabs(anew[static_cast<size_t>(j)] - a[static_cast<size_t>(j)]) /
                              std::max(a[static_cast<size_t>(j)], 1e-300));
    if (res > prev_res) {
      for (long j = 0; j < N; ++j)
        anew[static_cast<size_t>(j)] = 0.5 * (anew[static_cast<size_t>(j)] + a[static_cast<size_t>(j)]);
    }
    a.swap(anew);
    prev_res = res;
    if (res < tol) {
      conv = true;
      break;
    }
  }
  if (converged) *converged = conv;
  long double num = 0.0L, den = 0.0L;
  for (long n = 0; n < N; ++n) {
    long double s = 0.0L;
    for (long k = 0; k < N; ++k) s += (long double)C[static_cast<size_t>(n)][static_cast<size_t>(k)] * a[static_cast<size_t>(k)];
    if (s > 0.0L) num += std::pow((double)s, p);
    if (a[static_cast<size_t>(n)] > 0.0) den += std::pow(a[static_cast<size_t>(n)], p);
  }
  if (den == 0.0L) return 0.0;
  return std::pow(static_cast<double>(num / den), 1.0 / p);
}

TransposeNormResult transpose_norm_check(long N, double p, long trials, double tol,
                                         unsigned seed) {
  if (!(p > 1.0)) throw std::invalid_argument("transpose norm check needs p > 1");
  if (N < 1 || N > 100) throw std::invalid_argument("transpose norm check is desk scale: N <= 100");
  double q = conjugate_exponent(p);
  double worst = 0.0;
  bool all_conv = true;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(max : worst) reduction(&& : all_conv)
#endif
  for (long t = 0; t < trials; ++t) {
    std::mt19937 rng(seed + static_cast<unsigned>(t));
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::vector<std::vector<double>> C(static_cast<size_t>(N),
                                       std::vector<double>(static_cast<size_t>(N), 0.0));
    std::vector<std::vector<double>> Ct = C;
    for (long i = 0; i < N; ++i)
      for (long j = 0; j <= i; ++j) {
        double x = uni(rng);
        C[static_cast<size_t>(i)][static_cast<size_t>(j)] = x;
        Ct[static_cast<size_t>(j)][static_cast<size_t>(i)] = x;
      }
    bool c1 = false, c2 = false;
    double n1 = matrix_lp_norm(C, p, tol, 200000, &c1);
    double n2 = matrix_lp_norm(Ct, q, tol, 200000, &c2);
    double gap = std::fabs(n1 - n2) / std::max({n1, n2, 1e-300});
    worst = std::max(worst, gap);
    all_conv = all_conv && c1 && c2;
  }
  return {worst, trials, all_conv};
}

MinLoc change_of_vars_check(ChangeOfVars which, const StatementParams& params, long n_max) {
  AuxParams q;
  if (which == ChangeOfVars::COR0) {
    q.alpha = params.alpha;
    q.beta = params.beta;
    q.p = params.p;
    return auxiliary_scan(AuxCheck::COR0_WEIGHT, q, n_max);
  }
  q.alpha = params.alpha;
  q.r = params.r;
  q.p = params.p;
  return auxiliary_scan(AuxCheck::COR7_WEIGHT, q, n_max);
}

}  // namespace hardy
