#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace hardy {

// Bracketed tail value: closed forms have zero width, cut-off zeta-type tails
// carry the half-width of their integral bracket.
struct TailSum {
  double value;
  double half_width;
};

enum class WeightKind { PowerDiffRemainder, HeadPowerDiff, PurePower, Tabulated };

// Geometric continuation of a tabulated family past its last entry:
// lambda_{m+j} = lambda_m * ratio^j with 0 < ratio < 1.
struct TailRule {
  double ratio;
};

// Positive weight sequences lambda_k (k >= 1) with closed-form head/tail sums
// where the family admits them.
class WeightFamily {
 public:
  static WeightFamily power_diff_remainder(double r);
  static WeightFamily head_power_diff(double alpha);  // alpha > 0
  static WeightFamily pure_power(double alpha);
  static WeightFamily tabulated(std::vector<double> values,
                                std::optional<TailRule> tail = std::nullopt);
  // Two-column text file (index value), '#' comments; an optional directive
  // line "# tail: geometric <ratio>" supplies the continuation.
  static WeightFamily tabulated_from_file(const std::string& path);

  WeightKind kind() const { return kind_; }
  double parameter() const { return param_; }
  bool tail_summable() const;
  std::string name() const;

  // lambda_k, k >= 1
  double lambda(long k) const;
  long double lambda_l(long k) const;

  // Lambda_n = sum_{k>=n} lambda_k
  TailSum tail_sum(long n) const;
  // sum_{k<=n} lambda_k; telescopes exactly for HeadPowerDiff
  double head_sum(long n) const;
  // Lambda_n / lambda_n with the n = 0 convention fixed at 1
  double lambda_ratio(long n) const;

  // Lambda_n/lambda_n for n = 0..n_max in one pass (index = n). Backed by the
  // closed form where one exists, otherwise by a single anchored tail plus
  // backward accumulation; extended precision keeps slack scans exact enough
  // for the 1e-12-scale tolerances downstream.
  std::vector<long double> ratio_table(long n_max) const;
  // Lambda_n for n = 1..n_max+1 (index 0 unused)
  std::vector<long double> tail_table(long n_max) const;

  long zeta_cutoff() const { return zeta_cutoff_; }
  void set_zeta_cutoff(long k) { zeta_cutoff_ = k; }

 private:
  WeightFamily() = default;
  long double tail_sum_l(long n, long double* half_width) const;

  WeightKind kind_ = WeightKind::PurePower;
  double param_ = 0.0;
  std::vector<double> values_;
  std::optional<TailRule> tail_rule_;
  long zeta_cutoff_ = 1000000;  // cut-off for divergent-free power tails
};

enum class LCondition { EQ66, EQ66_REVERSED, EQ66_PRIME };
enum class MVariant { M_LOG, M_DIFF, M_AVG };

struct IndexedValue {
  long n;
  double value;
};

struct WeightConditionReport {
  std::string condition_id;
  double parameter;  // L for EQ66-type conditions, the supremum M otherwise
  std::vector<IndexedValue> per_index;  // slack (conditions) or functional value (M variants)
  long n_max = 0;
  bool holds = true;
  long violated_at = -1;
  std::string tail_note;
  double e_value = std::numeric_limits<double>::quiet_NaN();  // e^M for the M variants
  // bound on the inner-sum mass dropped by the M_AVG truncation
  double truncation_bound = std::numeric_limits<double>::quiet_NaN();
};

// Slack tolerance: a slack >= -1e-12 * (1 + |L or M|) still counts as holding.
double condition_tolerance(double l_or_m);

WeightConditionReport check_l_condition(const WeightFamily& family, LCondition condition,
                                        double L, double p, long n_max);

WeightConditionReport carleman_m(const WeightFamily& family, MVariant variant, long n_max,
                                 long inner_cutoff);

const char* to_string(LCondition c);
const char* to_string(MVariant v);

}  // namespace hardy
