#include <cmath>

#include <doctest.h>

#include "hardy/probe.hpp"

using namespace hardy;

namespace {
StatementParams P(double p = NAN, double r = NAN, double alpha = NAN) {
  StatementParams q;
  q.p = p;
  q.r = r;
  q.alpha = alpha;
  return q;
}
}  // namespace

TEST_CASE("single-variable problem is closed form") {
  // degree-0 functional of one variable: ratio = (lambda_1/N_1)^p
  TailOperator op(WeightFamily::power_diff_remainder(-1.0), Direction::Remainder,
                  Normalizer::tail_sum(), 1);
  auto res = optimize_ratio(op, 0.5, 1, 1e-12, 100);
  CHECK(res.best_bound == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
}

TEST_CASE("truncated norm of the averaging operator grows toward its limit") {
  TailOperator cesaro(WeightFamily::pure_power(0.0), Direction::Head, Normalizer::power(1.0), 1);
  auto res = n_sweep(cesaro, 2.0, {50, 200, 500}, 1e-12);
  CHECK(res.monotone_trend);  // nondecreasing for p > 1
  for (const auto& s : res.samples) {
    CHECK(s.ratio < 4.0);
    CHECK(s.ratio > 2.0);
  }
  CHECK(res.samples.back().ratio > res.samples.front().ratio);
  CHECK(res.diagnostics.converged);
  CHECK(res.diagnostics.final_residual <= 1e-12);
}

TEST_CASE("plain remainder mean at p = 1/2") {
  TailOperator op = statement_operator(StatementId::INEQ_1, P(0.5), 1);
  auto res = n_sweep(op, 0.5, {100, 500}, 1e-10);
  CHECK(res.monotone_trend);  // nonincreasing for 0 < p < 1
  CHECK(res.samples[0].ratio == doctest::Approx(0.9063).epsilon(2e-3));
  CHECK(res.samples[1].ratio == doctest::Approx(0.9045).epsilon(2e-3));
  for (const auto& s : res.samples) CHECK(s.ratio >= 0.9);
}

TEST_CASE("optimizer is at least as tight as the sweep at equal N") {
  // sweep sample at eps = 0.05 lives on N = 90
  auto sweep = extremal_sweep(StatementId::INEQ_1, P(0.5), {0.05});
  long N = sweep.samples[0].N;
  TailOperator op = statement_operator(StatementId::INEQ_1, P(0.5), N);
  auto opt = optimize_ratio(op, 0.5, N, 1e-10, 100000);
  CHECK(opt.best_bound <= sweep.samples[0].ratio + 1e-12);
  CHECK(opt.best_bound >= 0.9);  // still a valid one-sided bound
}

TEST_CASE("extremal sweeps move toward the constant from the correct side") {
  SUBCASE("remainder statement with 0 < p < 1 descends from above") {
    auto res = extremal_sweep(StatementId::THM1, P(1.0 / 3.0, 1.0), {0.1, 0.05});
    double c = closed_constant(StatementId::THM1, P(1.0 / 3.0, 1.0));
    CHECK(res.monotone_trend);
    CHECK(res.samples[0].ratio > res.samples[1].ratio);
    for (const auto& s : res.samples) CHECK(s.ratio > c);
    CHECK(res.best_bound == res.samples[1].ratio);  // min for 0 < p < 1
  }
  SUBCASE("logarithmic weights stay above p^p") {
    auto res = extremal_sweep(StatementId::COR1, P(0.5), {0.05});
    CHECK(res.samples[0].ratio > std::pow(0.5, 0.5));
  }
  SUBCASE("head statement with p > 1 ascends from below") {
    auto res = extremal_sweep(StatementId::HARDY, P(2.0), {0.1, 0.05});
    for (const auto& s : res.samples) CHECK(s.ratio < 4.0);
    CHECK(res.best_bound == std::max(res.samples[0].ratio, res.samples[1].ratio));
  }
  SUBCASE("empty grid refuses") {
    CHECK_THROWS_AS(extremal_sweep(StatementId::COR1, P(0.5), {}), std::invalid_argument);
  }
}

TEST_CASE("fixed point residual honors the tolerance") {
  TailOperator op = statement_operator(StatementId::INEQ_1, P(0.5), 1);
  auto res = optimize_ratio(op, 0.5, 300, 1e-9, 100000);
  CHECK(res.diagnostics.converged);
  CHECK(res.diagnostics.final_residual < 1e-9);
}

TEST_CASE("carleman sweep at a coarse epsilon") {
  StatementParams q = P(NAN, NAN, -1.0);
  auto res = extremal_sweep(StatementId::COR2_1, q, {0.05});
  // coarse grid point: already within a few percent of e^{-1}
  CHECK(res.samples[0].ratio == doctest::Approx(std::exp(-1.0)).epsilon(0.03));
  CHECK(res.notes.find("bracket sensitivity") != std::string::npos);
}

TEST_CASE("statement operators reject mismatched shapes") {
  CHECK_THROWS_AS(statement_operator(StatementId::COR7, P(2.0, 1.0, 2.0), 10),
                  std::invalid_argument);
  // head-sum normalizer for the weighted head mean
  auto op = statement_operator(StatementId::INEQ8, P(2.0, NAN, 2.25), 10);
  CHECK(op.direction() == Direction::Head);
  CHECK(op.normalizer().kind == NormalizerKind::HeadSum);
}

TEST_CASE("n sweep demands increasing truncations") {
  TailOperator op = statement_operator(StatementId::INEQ_1, P(0.5), 1);
  CHECK_THROWS_AS(n_sweep(op, 0.5, {100, 100}, 1e-10), std::invalid_argument);
}
