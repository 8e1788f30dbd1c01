#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "hardy/kernels.hpp"
#include "hardy/weights.hpp"

namespace hardy {

enum class StatementId {
  HARDY, INEQ_1, LS_41, THM1, THM2, COR0, COR1, COR2, THM4, THM5, THM6, THM7,
  COR7, INEQ8, COR2_1, COR6_5,
};

// Named parameters; absent ones stay NaN.
struct StatementParams {
  double p = std::numeric_limits<double>::quiet_NaN();
  double r = std::numeric_limits<double>::quiet_NaN();
  double alpha = std::numeric_limits<double>::quiet_NaN();
  double beta = std::numeric_limits<double>::quiet_NaN();

  bool has_p() const { return !std::isnan(p); }
  bool has_r() const { return !std::isnan(r); }
  bool has_alpha() const { return !std::isnan(alpha); }
  bool has_beta() const { return !std::isnan(beta); }
};

struct Validity {
  bool valid;
  std::string reason;  // the violated clause when invalid
};

Validity validity_region(StatementId id, const StatementParams& params);

// The statement's constant in double precision; refuses outside the region.
double closed_constant(StatementId id, const StatementParams& params);

// Conjugate exponent q with 1/p + 1/q = 1.
inline double conjugate_exponent(double p) { return p / (p - 1.0); }

// True best constant for the p = 1/2 case of the plain remainder inequality,
// kept as a reference asymptote for probes.
inline double de_bruijn_c_half() { return 1.0 / 1.1064957714; }

// Auxiliary-sequence value s_k for exponents (p, r) and auxiliary power beta.
double s_value(double p, double r, double beta, long k);
// k -> infinity value beta^{1-p}/(1 + beta(1-p) - r).
double s_limit(double p, double r, double beta);

enum class LemmaFunction { F_PRB, H_PRB, U_BETA, V_BETA, V_BETA_SECOND };

// Pointwise evaluation on [0, 1]; x = 0 returns the analytic limit.
double lemma_function(LemmaFunction which, double p, double r, double beta, double x);

// Monotonicity gates backing the certificate tails.
bool f_increasing_hypothesis(double p, double r, double beta);          // beta >= 1 + 2r/(1-p)
bool u_decreasing_on(double beta, double x_bar);                        // v'' < 0 on [0, x_bar]

enum class TailJustification { LEMMA1_MONOTONE, U_BETA_DECREASING, NONE };

struct Certificate {
  StatementId statement;  // the weighted remainder inequality the bound applies to
  double p, r, beta;
  double gamma;  // exponent-selection heuristic value recorded for provenance
  long K;
  std::string method;  // CLOSED_FORM, LS_BETA or LS_LEMMA1
  std::vector<IndexedValue> s_values;
  double min_s;
  long min_s_at;
  double tail_bound;  // NaN when no justified tail
  TailJustification tail_tag;
  double constant;    // certified: min(min_s, tail_bound); else min_s, unproven beyond K
  bool certified;
  std::string reason;  // why uncertified, empty otherwise
};

inline constexpr long kDefaultCertificateK = 10000;

Certificate certify_constant(double p, double r, double beta, long K = kDefaultCertificateK);

struct BetaSearchResult {
  double beta_star;
  double value;      // common value s_1 = s_limit at the crossing
  long iterations;
  double bracket_lo, bracket_hi;
};

// Crossing of s_1(beta) and the k -> infinity envelope; bisection to 1e-6.
BetaSearchResult beta_search(double p, double r);

struct GammaHeuristic {
  double gamma;           // (rp - 1)/p^2
  double constraint_rhs;  // r - 1/p
  bool constraint_ok;     // gamma < r - 1/p
};

GammaHeuristic heuristic_gamma(double p, double r);

enum class AuxCheck { BOUND1, LEMMA_42, BENNETT_501, HOLDER_36, INEQ_611, COR0_WEIGHT, COR7_WEIGHT };

struct AuxParams {
  double r = std::numeric_limits<double>::quiet_NaN();
  double p = std::numeric_limits<double>::quiet_NaN();
  double gamma = std::numeric_limits<double>::quiet_NaN();
  double alpha = std::numeric_limits<double>::quiet_NaN();
  double beta = std::numeric_limits<double>::quiet_NaN();
};

// Slack of the named inequality at index n, nonnegative when it holds there.
double auxiliary_check(AuxCheck which, const AuxParams& params, long n);
// Minimum slack over 1 <= n <= n_max (single pass, shared prefix/tail state).
MinLoc auxiliary_scan(AuxCheck which, const AuxParams& params, long n_max);

struct Thm5Consistency {
  double middle_branch_gap;
  double r_star;
  double stationarity_residual;
};

Thm5Consistency thm5_consistency(double p);

const char* to_string(StatementId id);
StatementId statement_from_string(const std::string& s);
const char* to_string(AuxCheck c);
AuxCheck aux_from_string(const std::string& s);
const char* to_string(TailJustification t);

}  // namespace hardy
