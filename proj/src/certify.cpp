#include "hardy/certify.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "hardy/math.hpp"

namespace hardy {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

Validity need(bool ok, const std::string& clause) {
  if (ok) return {true, ""};
  return {false, clause + " fails"};
}

Validity all_of(std::initializer_list<Validity> vs) {
  for (const auto& v : vs)
    if (!v.valid) return v;
  return {true, ""};
}

Validity any_of(std::initializer_list<Validity> vs, const std::string& label) {
  for (const auto& v : vs)
    if (v.valid) return v;
  return {false, label};
}

Validity need_params(const StatementParams& q, bool p, bool r, bool alpha, bool beta,
                     StatementId id) {
  auto miss = [&](const char* what) {
    return Validity{false, std::string("missing parameter ") + what + " for " + to_string(id)};
  };
  if (p && !q.has_p()) return miss("p");
  if (r && !q.has_r()) return miss("r");
  if (alpha && !q.has_alpha()) return miss("alpha");
  if (beta && !q.has_beta()) return miss("beta");
  return {true, ""};
}

}  // namespace

Validity validity_region(StatementId id, const StatementParams& q) {
  const double p = q.p, r = q.r, a = q.alpha, b = q.beta;
  switch (id) {
    case StatementId::HARDY: {
      auto m = need_params(q, true, false, false, false, id);
      if (!m.valid) return m;
      return need(p > 1.0, "p > 1");
    }
    case StatementId::INEQ_1: {
      auto m = need_params(q, true, false, false, false, id);
      if (!m.valid) return m;
      return need(p > 0.0 && p < 1.0, "0 < p < 1");
    }
    case StatementId::LS_41: {
      auto m = need_params(q, true, true, false, false, id);
      if (!m.valid) return m;
      return any_of({all_of({need(p > 0.0 && p <= 1.0 / 3.0, "0 < p <= 1/3"),
                             need(r <= p, "r <= p")}),
                     all_of({need(p > 1.0 / 3.0 && p < 1.0, "1/3 < p < 1"),
                             need(r <= 1.0 - 2.0 * p, "r <= 1 - 2p")})},
                    "(0 < p <= 1/3, r <= p) or (1/3 < p < 1, r <= 1-2p) fails");
    }
    case StatementId::THM1:
    case StatementId::THM2: {
      auto m = need_params(q, true, true, false, false, id);
      if (!m.valid) return m;
      bool direct = (p > 0.0 && p < 1.0) && ((2.0 + r) * p <= 1.0);
      bool rev_hi = (id == StatementId::THM1 ? p >= 1.0 : p > 1.0) &&
                    (1.0 / p - 2.0 <= r && r < 1.0 / p);
      bool rev_lo = (p < 0.0) && (1.0 / p - 2.0 <= r && r < 1.0 / p);
      if (direct || rev_hi || rev_lo) return {true, ""};
      if (p > 0.0 && p < 1.0) return {false, "(2+r)p <= 1 fails"};
      return {false, "1/p-2 <= r < 1/p fails"};
    }
    case StatementId::COR0: {
      auto m = need_params(q, true, false, true, true, id);
      if (!m.valid) return m;
      return all_of({need(b <= 0.0 && 0.0 < a, "beta <= 0 < alpha"),
                     need(p > 0.0 && p <= (1.0 - b) / (2.0 + a), "0 < p <= (1-beta)/(2+alpha)")});
    }
    case StatementId::COR1: {
      auto m = need_params(q, true, false, false, false, id);
      if (!m.valid) return m;
      return need(p > 0.0 && p <= 0.5, "0 < p <= 1/2");
    }
    case StatementId::COR2: {
      auto m = need_params(q, true, false, false, false, id);
      if (!m.valid) return m;
      return need(-1.0 <= p && p < 0.0, "-1 <= p < 0");
    }
    case StatementId::THM4: {
      auto m = need_params(q, true, false, false, false, id);
      if (!m.valid) return m;
      return need(p > 0.0 && p < 1.0, "0 < p < 1");
    }
    case StatementId::THM5: {
      auto m = need_params(q, true, true, false, false, id);
      if (!m.valid) return m;
      return all_of({need(p > 0.0 && p < 1.0, "0 < p < 1"), need(0.0 < r && r <= p, "0 < r <= p")});
    }
    case StatementId::THM6: {
      auto m = need_params(q, true, false, false, false, id);
      if (!m.valid) return m;
      return need(p == 0.5, "p = 1/2");
    }
    case StatementId::THM7: {
      auto m = need_params(q, true, false, true, false, id);
      if (!m.valid) return m;
      auto base = need(a > 0.0, "alpha > 0");
      if (!base.valid) return base;
      if (p < 0.0) return {true, ""};
      if (p >= 1.0) return need(a * p > 1.0, "alpha*p > 1");
      return {false, "p < 0 or p >= 1 fails"};
    }
    case StatementId::COR7: {
      auto m = need_params(q, true, true, true, false, id);
      if (!m.valid) return m;
      auto base = all_of({need(a > 0.0, "alpha > 0"), need(r >= 1.0, "r >= 1")});
      if (!base.valid) return base;
      if (p < 0.0) return {true, ""};
      if (p >= 1.0) return need(a * p > r, "alpha*p > r");
      return {false, "p < 0 or p >= 1 fails"};
    }
    case StatementId::INEQ8: {
      auto m = need_params(q, true, false, true, false, id);
      if (!m.valid) return m;
      return all_of({need(p > 1.0, "p > 1"),
                     need(2.0 <= a && a <= 2.0 + 1.0 / p, "2 <= alpha <= 2 + 1/p")});
    }
    case StatementId::COR2_1: {
      auto m = need_params(q, false, false, true, false, id);
      if (!m.valid) return m;
      return need(-1.0 <= a && a < 0.0, "-1 <= alpha < 0");
    }
    case StatementId::COR6_5: {
      auto m = need_params(q, true, false, true, false, id);
      if (!m.valid) return m;
      return all_of({need(a < -1.0, "alpha < -1"), need(p > 0.0 && p < 1.0, "0 < p < 1")});
    }
  }
  return {false, "unknown statement"};
}

double closed_constant(StatementId id, const StatementParams& q) {
  auto v = validity_region(id, q);
  if (!v.valid)
    throw std::domain_error(std::string(to_string(id)) + " hypothesis violated: " + v.reason);
  const double p = q.p, r = q.r, a = q.alpha, b = q.beta;
  switch (id) {
    case StatementId::HARDY: return std::pow(p / (p - 1.0), p);
    case StatementId::INEQ_1: return std::pow(p, p);
    case StatementId::LS_41: return std::pow(p / (1.0 - r), p);
    case StatementId::THM1: return std::pow(p / (1.0 - r * p), p);
    case StatementId::THM2: return std::pow(p / (1.0 - r * p), conjugate_exponent(p));
    case StatementId::COR0: return std::pow(a * p / (1.0 - b - a * p), p);
    case StatementId::COR1: return std::pow(p, p);
    case StatementId::COR2: return std::pow(p / (p - 1.0), p);
    case StatementId::THM4:
      if (p <= 1.0 / 3.0) return std::pow(p / (1.0 - p), p);
      if (p < 3.0 / 5.0) return 0.5 * std::pow((1.0 + p) / (1.0 - p), 1.0 - p);
      return 2.0 * std::pow(p / (3.0 - p), p);
    case StatementId::THM5:
      return 1.0 / ((2.0 - p + r) * std::pow((1.0 - p) / (1.0 - p + 2.0 * r), 1.0 - p));
    case StatementId::THM6: return 0.9;
    case StatementId::THM7: return std::pow(a * p / (a * p - 1.0), p);
    case StatementId::COR7: return std::pow(a * p / (a * p - r), p);
    case StatementId::INEQ8: return std::pow(a * p / (a * p - 1.0), p);
    case StatementId::COR2_1: return std::exp(1.0 / a);
    case StatementId::COR6_5: return std::pow((1.0 + a) * p / ((1.0 + a) * p - 1.0), p);
  }
  throw std::invalid_argument("unknown statement id");
}

double s_limit(double p, double r, double beta) {
  return std::pow(beta, 1.0 - p) / (1.0 + beta * (1.0 - p) - r);
}

double s_value(double p, double r, double beta, long k) {
  if (!(beta > 0.0)) throw std::invalid_argument("s_value needs beta > 0");
  double e = beta * (1.0 - p) - r;
  double head = kernels::sum(1, k, [&](long n) { return std::pow((double)n, e); });
  double gap = -power_diff(-beta, (double)k);  // k^{-beta} - (k+1)^{-beta}
  return std::pow(gap, 1.0 - p) * std::pow((double)k, r - p) * head;
}

double lemma_function(LemmaFunction which, double p, double r, double beta, double x) {
  if (x < 0.0 || x > 1.0) throw std::domain_error("lemma functions live on 0 <= x <= 1");
  const double c = r / (1.0 - p);
  switch (which) {
    case LemmaFunction::F_PRB:
      if (x == 0.0) return beta;  // ((1+x)^{beta-c} - (1+x)^{-c})/x -> beta
      return (std::pow(1.0 + x, beta - c) - std::pow(1.0 + x, -c)) / x;
    case LemmaFunction::H_PRB:
      return 1.0 + x - std::pow(1.0 + x, beta + 1.0) +
             x / (1.0 - p) * ((beta * (1.0 - p) - r) * std::pow(1.0 + x, beta) + r);
    case LemmaFunction::U_BETA:
      if (x == 0.0) return beta;
      return (std::pow(1.0 + x, beta - 1.0) - 1.0 / (1.0 + x)) / x;
    case LemmaFunction::V_BETA:
      return 1.0 + x - std::pow(1.0 + x, 1.0 + beta) +
             x * (1.0 + (beta - 1.0) * std::pow(1.0 + x, beta));
    case LemmaFunction::V_BETA_SECOND:
      return beta * std::pow(1.0 + x, beta - 2.0) *
             (beta - 3.0 + (beta * beta - beta - 2.0) * x);
  }
  throw std::invalid_argument("unknown lemma function");
}

bool f_increasing_hypothesis(double p, double r, double beta) {
  return p > 0.0 && p < 1.0 && r > 0.0 && r <= p && beta >= 1.0 + 2.0 * r / (1.0 - p);
}

bool u_decreasing_on(double beta, double x_bar) {
  // v''(x) = beta (1+x)^{beta-2} (beta - 3 + (beta^2-beta-2) x); the last
  // factor is linear in x, so checking both endpoints settles the sign.
  double at0 = beta - 3.0;
  double at1 = beta - 3.0 + (beta * beta - beta - 2.0) * x_bar;
  return at0 < 0.0 && at1 < 0.0;
}

Certificate certify_constant(double p, double r, double beta, long K) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("certificate engine needs 0 < p < 1");
  if (!(beta > 0.0)) throw std::invalid_argument("certificate engine needs beta > 0");
  if (K < 1) throw std::invalid_argument("certificate engine needs K >= 1");

  Certificate cert;
  cert.statement = StatementId::LS_41;  // the (p, r) remainder form the s_k engine bounds
  cert.p = p;
  cert.r = r;
  cert.beta = beta;
  cert.gamma = heuristic_gamma(p, r).gamma;
  cert.K = K;
  cert.method = "LS_BETA";
  cert.s_values.resize(static_cast<size_t>(K));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
  for (long k = 1; k <= K; ++k)
    cert.s_values[static_cast<size_t>(k - 1)] = {k, s_value(p, r, beta, k)};
  auto best = kernels::min_scan(1, K, [&](long k) { return cert.s_values[static_cast<size_t>(k - 1)].value; });
  cert.min_s = best.value;
  cert.min_s_at = best.index;
  cert.tail_bound = std::numeric_limits<double>::quiet_NaN();
  cert.tail_tag = TailJustification::NONE;

  // The tail bounds below both run through the head-sum lower bound that
  // needs the exponent beta(1-p) - r inside [0, 1].
  double e = beta * (1.0 - p) - r;
  bool window = (e >= 0.0 && e <= 1.0);
  if (!window) {
    cert.certified = false;
    cert.constant = cert.min_s;
    cert.reason = "beta outside the admissible window [r/(1-p), (1+r)/(1-p)]; "
                  "min over k <= K is unproven beyond K";
    return cert;
  }

  if (f_increasing_hypothesis(p, r, beta)) {
    // monotone envelope: s_k dominates its k -> infinity limit for every k
    cert.method = "LS_LEMMA1";
    cert.tail_bound = s_limit(p, r, beta);
    cert.tail_tag = TailJustification::LEMMA1_MONOTONE;
  } else if (std::fabs(r - (1.0 - p)) <= 1e-12 && u_decreasing_on(beta, 1.0 / (double)(K + 1))) {
    double x_bar = 1.0 / (double)(K + 1);
    double u = lemma_function(LemmaFunction::U_BETA, p, r, beta, x_bar);
    cert.tail_bound = std::pow(u, 1.0 - p) / (1.0 + e);
    cert.tail_tag = TailJustification::U_BETA_DECREASING;
  } else {
    cert.certified = false;
    cert.constant = cert.min_s;
    cert.reason = "no monotone tail justification applies (envelope hypothesis and the "
                  "decreasing-u route both fail); min over k <= K is unproven beyond K";
    return cert;
  }

  cert.certified = true;
  cert.constant = std::min(cert.min_s, cert.tail_bound);
  return cert;
}

BetaSearchResult beta_search(double p, double r) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("beta search needs 0 < p < 1");
  auto s1 = [&](double b) { return std::pow(-std::expm1(-b * std::log(2.0)), 1.0 - p); };
  auto diff = [&](double b) { return s1(b) - s_limit(p, r, b); };

  double lo = 1.5, hi = 4.0;
  int expansions = 0;
  while (diff(lo) * diff(hi) > 0.0) {
    lo = std::max(lo * 0.5, 1e-6);
    hi *= 2.0;
    if (++expansions > 60)
      throw std::runtime_error("beta search: no sign change of s_1 - s_limit on [" + num(lo) +
                               ", " + num(hi) + "]; values " + num(diff(lo)) + " and " +
                               num(diff(hi)));
  }
  bool rising = diff(hi) > 0.0;
  long iters = 0;
  while (hi - lo > 1e-6) {
    double mid = 0.5 * (lo + hi);
    if ((diff(mid) > 0.0) == rising)
      hi = mid;
    else
      lo = mid;
    ++iters;
  }
  double beta_star = 0.5 * (lo + hi);
  return {beta_star, s1(beta_star), iters, lo, hi};
}

GammaHeuristic heuristic_gamma(double p, double r) {
  if (p == 0.0) throw std::invalid_argument("heuristic gamma needs p != 0");
  double g = (r * p - 1.0) / (p * p);
  double rhs = r - 1.0 / p;
  return {g, rhs, g < rhs};
}

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::domain_error(msg);
}

// (k^a - (k-1)^a)/a with the telescoping convention ln(k/(k-1)) at a = 0.
double back_diff_over_e(double a, double k) {
  if (a == 0.0) return -std::log1p(-1.0 / k);  // k >= 2 only
  return power_diff_back(a, k) / a;
}

struct AuxEvaluator {
  AuxCheck which;
  AuxParams q;
  // shared state for scans
  long double prefix = 0.0L;                 // BOUND1 / LEMMA_42 running sum
  std::vector<long double> zeta_tail;        // BENNETT_501 tails
  std::vector<long double> ratio;            // INEQ_611 ratio table

  void prepare(long n_max) {
    switch (which) {
      case AuxCheck::BOUND1:
      case AuxCheck::LEMMA_42:
        prefix = 0.0L;
        break;
      case AuxCheck::BENNETT_501: {
        auto fam = WeightFamily::pure_power(-q.gamma);
        zeta_tail = fam.tail_table(n_max);
        break;
      }
      case AuxCheck::INEQ_611: {
        auto fam = WeightFamily::power_diff_remainder(q.alpha);
        ratio = fam.ratio_table(n_max + 1);
        break;
      }
      default: break;
    }
  }

  double eval(long n) {
    long double nn = n;
    switch (which) {
      case AuxCheck::BOUND1: {
        prefix += std::pow(nn, (long double)q.r);
        // r/(1+r) * n^r (n+1)^r / ((n+1)^r - n^r), as 1/(1+r) * n^r(n+1)^r / D
        long double D = power_diff_over_e_l(q.r, nn);
        long double rhs = std::pow(nn, (long double)q.r) * std::pow(nn + 1.0L, (long double)q.r) /
                          ((1.0L + q.r) * D);
        long double s = (q.r >= 1.0) ? prefix - rhs : rhs - prefix;
        return static_cast<double>(s);
      }
      case AuxCheck::LEMMA_42: {
        prefix += std::pow(nn, (long double)q.r);
        long double rhs = nn * std::pow(nn + 1.0L, (long double)q.r) / (1.0L + q.r);
        return static_cast<double>(prefix - rhs);
      }
      case AuxCheck::BENNETT_501: {
        long double gap = -std::pow(nn, (long double)q.gamma) *
                          std::expm1(q.gamma * std::log1p(-1.0L / nn));  // k^g - (k-1)^g
        if (n == 1) gap = 1.0L;
        return static_cast<double>(q.gamma / (q.gamma - 1.0L) -
                                   gap * zeta_tail[static_cast<size_t>(n)]);
      }
      case AuxCheck::HOLDER_36: {
        double lhs = std::pow(power_integral(q.r - 1.0, n, n + 1.0), q.p) *
                     std::pow(power_integral(q.r - 1.0 / q.p - 1.0, n, n + 1.0), 1.0 - q.p);
        double rhs = power_integral(q.r - 1.0 / q.p, n, n + 1.0);
        return lhs - rhs;
      }
      case AuxCheck::INEQ_611: {
        long double d = ratio[static_cast<size_t>(n)] - ratio[static_cast<size_t>(n + 1)];
        return static_cast<double>(1.0L / q.alpha - d);
      }
      case AuxCheck::COR0_WEIGHT: {
        double lhs = std::pow((double)n, q.beta / q.p) * power_diff_over_e(q.alpha, n);
        double rhs = power_diff_over_e(q.alpha + q.beta / q.p, n);
        return lhs - rhs;
      }
      case AuxCheck::COR7_WEIGHT: {
        double e = (1.0 - q.r) / q.p;
        double lhs = std::pow((double)n, e) * back_diff_over_e(q.alpha, n);
        double rhs = (n == 1) ? 1.0 / (q.alpha + e) : back_diff_over_e(q.alpha + e, n);
        return (q.p < 0.0) ? lhs - rhs : rhs - lhs;
      }
    }
    throw std::invalid_argument("unknown auxiliary check");
  }

  bool pointwise() const {
    return which == AuxCheck::HOLDER_36 || which == AuxCheck::INEQ_611 ||
           which == AuxCheck::COR0_WEIGHT || which == AuxCheck::COR7_WEIGHT;
  }
};

AuxEvaluator make_evaluator(AuxCheck which, const AuxParams& q) {
  switch (which) {
    case AuxCheck::BOUND1:
      require(!std::isnan(q.r) && q.r > -1.0, "BOUND1 needs r > -1");
      break;
    case AuxCheck::LEMMA_42:
      require(!std::isnan(q.r) && q.r >= 0.0 && q.r <= 1.0, "LEMMA_42 needs 0 <= r <= 1");
      break;
    case AuxCheck::BENNETT_501:
      require(!std::isnan(q.gamma) && q.gamma > 1.0, "BENNETT_501 needs gamma > 1");
      break;
    case AuxCheck::HOLDER_36:
      require(!std::isnan(q.p) && q.p > 0.0 && q.p < 1.0 && !std::isnan(q.r),
              "HOLDER_36 needs 0 < p < 1 and r");
      break;
    case AuxCheck::INEQ_611:
      require(!std::isnan(q.alpha) && q.alpha >= -1.0 && q.alpha < 0.0,
              "INEQ_611 needs -1 <= alpha < 0");
      break;
    case AuxCheck::COR0_WEIGHT:
      require(!std::isnan(q.alpha) && !std::isnan(q.beta) && !std::isnan(q.p) && q.beta <= 0.0 &&
                  q.alpha > 0.0 && q.p > 0.0,
              "COR0_WEIGHT needs beta <= 0 < alpha and p > 0");
      break;
    case AuxCheck::COR7_WEIGHT:
      require(!std::isnan(q.alpha) && !std::isnan(q.r) && !std::isnan(q.p) && q.alpha > 0.0 &&
                  q.r >= 1.0 && (q.p >= 1.0 || q.p < 0.0),
              "COR7_WEIGHT needs alpha > 0, r >= 1 and p >= 1 or p < 0");
      require(q.alpha + (1.0 - q.r) / q.p > 0.0,
              "COR7_WEIGHT needs alpha + (1-r)/p > 0");
      break;
  }
  return AuxEvaluator{which, q, 0.0L, {}, {}};
}

}  // namespace

double auxiliary_check(AuxCheck which, const AuxParams& params, long n) {
  if (n < 1) throw std::invalid_argument("auxiliary check index must be >= 1");
  auto ev = make_evaluator(which, params);
  if (ev.pointwise()) {
    ev.prepare(n);
    return ev.eval(n);
  }
  ev.prepare(n);
  double out = 0.0;
  for (long i = 1; i <= n; ++i) out = ev.eval(i);  // prefix state feeds forward
  return out;
}

MinLoc auxiliary_scan(AuxCheck which, const AuxParams& params, long n_max) {
  if (n_max < 1) throw std::invalid_argument("auxiliary scan needs n_max >= 1");
  auto ev = make_evaluator(which, params);
  ev.prepare(n_max);
  if (ev.pointwise())
    return kernels::min_scan(1, n_max, [&](long n) { return ev.eval(n); });
  MinLoc best{std::numeric_limits<double>::infinity(), -1};
  for (long n = 1; n <= n_max; ++n) {
    double v = ev.eval(n);
    if (v < best.value) best = {v, n};
  }
  return best;
}

Thm5Consistency thm5_consistency(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("thm5 consistency needs 0 < p < 1");
  // inverse constant as a function of r, evaluated off the statement's region
  // only through the closed formula
  auto inv_log = [&](double r) {
    return std::log(2.0 - p + r) + (1.0 - p) * std::log((1.0 - p) / (1.0 - p + 2.0 * r));
  };
  double r_star = (3.0 - 2.0 * p) * (1.0 - p) / (2.0 * p);
  double h = 1e-6;
  double residual = std::fabs((inv_log(r_star + h) - inv_log(r_star - h)) / (2.0 * h));

  StatementParams t5;
  t5.p = p;
  t5.r = p;
  double middle = 0.5 * std::pow((1.0 + p) / (1.0 - p), 1.0 - p);
  double gap = std::fabs(closed_constant(StatementId::THM5, t5) - middle);
  return {gap, r_star, residual};
}

const char* to_string(StatementId id) {
  switch (id) {
    case StatementId::HARDY: return "HARDY";
    case StatementId::INEQ_1: return "INEQ_1";
    case StatementId::LS_41: return "LS_41";
    case StatementId::THM1: return "THM1";
    case StatementId::THM2: return "THM2";
    case StatementId::COR0: return "COR0";
    case StatementId::COR1: return "COR1";
    case StatementId::COR2: return "COR2";
    case StatementId::THM4: return "THM4";
    case StatementId::THM5: return "THM5";
    case StatementId::THM6: return "THM6";
    case StatementId::THM7: return "THM7";
    case StatementId::COR7: return "COR7";
    case StatementId::INEQ8: return "INEQ8";
    case StatementId::COR2_1: return "COR2_1";
    case StatementId::COR6_5: return "COR6_5";
  }
  return "?";
}

StatementId statement_from_string(const std::string& s) {
  static const std::map<std::string, StatementId> table = {
      {"HARDY", StatementId::HARDY},   {"INEQ_1", StatementId::INEQ_1},
      {"LS_41", StatementId::LS_41},   {"THM1", StatementId::THM1},
      {"THM2", StatementId::THM2},     {"COR0", StatementId::COR0},
      {"COR1", StatementId::COR1},     {"COR2", StatementId::COR2},
      {"THM4", StatementId::THM4},     {"THM5", StatementId::THM5},
      {"THM6", StatementId::THM6},     {"THM7", StatementId::THM7},
      {"COR7", StatementId::COR7},     {"INEQ8", StatementId::INEQ8},
      {"COR2_1", StatementId::COR2_1}, {"COR6_5", StatementId::COR6_5},
  };
  auto it = table.find(s);
  if (it == table.end()) throw std::invalid_argument("unknown statement id: " + s);
  return it->second;
}

const char* to_string(AuxCheck c) {
  switch (c) {
    case AuxCheck::BOUND1: return "BOUND1";
    case AuxCheck::LEMMA_42: return "LEMMA_42";
    case AuxCheck::BENNETT_501: return "BENNETT_501";
    case AuxCheck::HOLDER_36: return "HOLDER_36";
    case AuxCheck::INEQ_611: return "INEQ_611";
    case AuxCheck::COR0_WEIGHT: return "COR0_WEIGHT";
    case AuxCheck::COR7_WEIGHT: return "COR7_WEIGHT";
  }
  return "?";
}

AuxCheck aux_from_string(const std::string& s) {
  static const std::map<std::string, AuxCheck> table = {
      {"BOUND1", AuxCheck::BOUND1},           {"LEMMA_42", AuxCheck::LEMMA_42},
      {"BENNETT_501", AuxCheck::BENNETT_501}, {"HOLDER_36", AuxCheck::HOLDER_36},
      {"INEQ_611", AuxCheck::INEQ_611},       {"COR0_WEIGHT", AuxCheck::COR0_WEIGHT},
      {"COR7_WEIGHT", AuxCheck::COR7_WEIGHT},
  };
  auto it = table.find(s);
  if (it == table.end()) throw std::invalid_argument("unknown auxiliary check: " + s);
  return it->second;
}

const char* to_string(TailJustification t) {
  switch (t) {
    case TailJustification::LEMMA1_MONOTONE: return "LEMMA1_MONOTONE";
    case TailJustification::U_BETA_DECREASING: return "U_BETA_DECREASING";
    case TailJustification::NONE: return "NONE";
  }
  return "?";
}

}  // namespace hardy
