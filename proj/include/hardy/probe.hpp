#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hardy/certify.hpp"
#include "hardy/operators.hpp"

namespace hardy {

struct ProbeSample {
  double parameter;  // epsilon for sweeps, N (as a real) for N-sweeps
  long N;
  double ratio;
};

struct ProbeDiagnostics {
  long iterations = 0;
  double final_residual = 0.0;
  bool converged = true;
};

struct ProbeResult {
  std::string statement;
  std::string mode;  // EXTREMAL_SWEEP, OPTIMIZE or N_SWEEP
  std::vector<ProbeSample> samples;
  double best_bound;
  bool monotone_trend;
  ProbeDiagnostics diagnostics;
  std::string notes;
};

// The operator realizing a statement's ratio form at truncation N. Statements
// whose two sides carry different index weights are not reachable through the
// plain ratio functional and are rejected here.
TailOperator statement_operator(StatementId id, const StatementParams& params, long N);
bool statement_is_carleman(StatementId id);
// Minimizing statements (0 < p < 1 lower bounds) probe from above; the rest
// probe from below.
bool statement_minimizes(StatementId id, const StatementParams& params);

// Near-optimizing family a_n = n^{-1/p-eps} (n^{-1-eps} for Carleman forms)
// evaluated on an eps grid with truncation growing as eps shrinks.
ProbeResult extremal_sweep(StatementId id, const StatementParams& params,
                           const std::vector<double>& eps_grid);

// Stationarity fixed point of the truncated ratio functional.
ProbeResult optimize_ratio(const TailOperator& op, double p, long N, double tol, long max_iter);

ProbeResult n_sweep(const TailOperator& op_template, double p, const std::vector<long>& N_list,
                    double tol, std::optional<double> reference = std::nullopt);

}  // namespace hardy
