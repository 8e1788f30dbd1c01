#pragma once

#include <string>
#include <vector>

#include "hardy/certify.hpp"

namespace hardy {

struct DualDescriptor {
  StatementId source;
  StatementId target;
  StatementParams source_params;
  StatementParams target_params;
  double source_constant;
  double target_constant;
  std::string exponent_map;   // q = p/(p-1)
  std::string parameter_map;  // r -> -r / alpha -> -alpha where applicable
  std::string operator_map;   // remainder/head transposition, in words
};

// Statement-level pairings: THM1 <-> THM2, THM2 (p > 1) <-> INEQ8 via the
// head-sum recast, COR6_5 <-> THM7 (p < 0) with transposed weights.
DualDescriptor dualize_statement(StatementId source, const StatementParams& params);

struct TransposeNormResult {
  double max_relative_gap;
  long trials;
  bool all_converged;
};

// Truncated p-norm of random nonnegative lower-triangular matrices against
// the q-norm of their transposes; deterministic seeding per trial.
TransposeNormResult transpose_norm_check(long N, double p, long trials, double tol,
                                         unsigned seed = 20240901u);

// p-operator norm of a dense nonnegative matrix by fixed-point iteration.
double matrix_lp_norm(const std::vector<std::vector<double>>& C, double p, double tol,
                      long max_iter, bool* converged = nullptr);

enum class ChangeOfVars { COR0, COR7 };

// Minimum pointwise slack of the weight comparison backing the corollary's
// change of variables, over 1 <= n <= n_max.
MinLoc change_of_vars_check(ChangeOfVars which, const StatementParams& params, long n_max);

}  // namespace hardy
