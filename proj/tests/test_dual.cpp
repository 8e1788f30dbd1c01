#include <cmath>
#include <random>

#include <doctest.h>

#include "hardy/dual.hpp"
#include "hardy/math.hpp"

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

TEST_CASE("statement pairings") {
  SUBCASE("remainder to head with conjugated exponent") {
    auto d = dualize_statement(StatementId::THM1, P(1.0 / 3.0, 1.0));
    CHECK(d.target == StatementId::THM2);
    double q = conjugate_exponent(1.0 / 3.0);
    CHECK(q == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(d.target_constant == doctest::Approx(std::pow(0.5, -0.5)).epsilon(1e-14));
    CHECK(1.0 / d.source_params.p + 1.0 / q == doctest::Approx(1.0).epsilon(1e-15));
  }
  SUBCASE("head recast above p = 1 lands on the weighted head mean") {
    auto d = dualize_statement(StatementId::THM2, P(2.0, -1.2));
    CHECK(d.target == StatementId::INEQ8);
    CHECK(d.target_params.p == doctest::Approx(2.0).epsilon(1e-15));  // conjugate of 2 is 2
    CHECK(d.target_params.alpha == doctest::Approx(2.2).epsilon(1e-15));
    // (r+1)p > 1 in the recast variables
    CHECK((1.0 + (-d.source_params.r)) * d.target_params.p > 1.0);
    CHECK(validity_region(StatementId::INEQ8, d.target_params).valid);
  }
  SUBCASE("zeta-weight remainder statement pairs with the head form") {
    auto d = dualize_statement(StatementId::COR6_5, P(0.5, NAN, -2.0));
    CHECK(d.target == StatementId::THM7);
    CHECK(d.target_params.alpha == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(d.target_params.p == doctest::Approx(-1.0).epsilon(1e-15));
    double base = (1.0 - 2.0) * 0.5 / ((1.0 - 2.0) * 0.5 - 1.0);  // 1/3
    CHECK(d.source_constant == doctest::Approx(std::pow(base, 0.5)).epsilon(1e-14));
    CHECK(d.target_constant == doctest::Approx(std::pow(base, -1.0)).epsilon(1e-14));
  }
  SUBCASE("unsupported sources refuse") {
    CHECK_THROWS_AS(dualize_statement(StatementId::THM4, P(0.5)), std::invalid_argument);
    CHECK_THROWS_AS(dualize_statement(StatementId::THM7, P(2.0, NAN, 1.0)),
                    std::invalid_argument);
  }
}

TEST_CASE("dualize is an involution on the paired branches") {
  auto roundtrip = [](StatementId id, const StatementParams& q) {
    auto d1 = dualize_statement(id, q);
    auto d2 = dualize_statement(d1.target, d1.target_params);
    CHECK(d2.target == id);
    if (q.has_p()) CHECK(d2.target_params.p == doctest::Approx(q.p).epsilon(1e-14));
    if (q.has_r()) CHECK(d2.target_params.r == doctest::Approx(q.r).epsilon(1e-14));
    if (q.has_alpha()) CHECK(d2.target_params.alpha == doctest::Approx(q.alpha).epsilon(1e-14));
    CHECK(d2.target_constant == doctest::Approx(d1.source_constant).epsilon(1e-13));
  };
  roundtrip(StatementId::THM1, P(1.0 / 3.0, 1.0));   // 0 < p < 1
  roundtrip(StatementId::THM1, P(-2.0, -1.0));       // p < 0
  roundtrip(StatementId::THM2, P(2.0, -1.2));        // p > 1 head recast
  roundtrip(StatementId::INEQ8, P(2.0, NAN, 2.2));
  roundtrip(StatementId::COR6_5, P(0.5, NAN, -2.0));
  roundtrip(StatementId::THM7, P(-1.0, NAN, 2.0));
}

TEST_CASE("conjugate relation is tight for every emitted pair") {
  for (auto [id, q] : {std::pair<StatementId, StatementParams>{StatementId::THM1, P(1.0 / 3.0, 1.0)},
                       {StatementId::THM2, P(2.0, -1.2)},
                       {StatementId::COR6_5, P(0.7, NAN, -3.0)}}) {
    auto d = dualize_statement(id, q);
    double p = d.source_params.p;
    double qq = conjugate_exponent(p);
    CHECK(std::fabs(1.0 / p + 1.0 / qq - 1.0) <= 1e-15);
  }
}

TEST_CASE("transpose norms") {
  SUBCASE("one-by-one matrix") {
    auto res = transpose_norm_check(1, 2.0, 5, 1e-12);
    CHECK(res.max_relative_gap == 0.0);
    CHECK(res.all_converged);
  }
  SUBCASE("diagonal matrices carry their largest entry") {
    std::vector<std::vector<double>> C = {{0.7, 0.0}, {0.0, 0.3}};
    bool conv = false;
    double n = matrix_lp_norm(C, 3.0, 1e-13, 100000, &conv);
    CHECK(conv);
    CHECK(n == doctest::Approx(0.7).epsilon(1e-10));
  }
  SUBCASE("random triangular trials close the duality gap") {
    for (double p : {1.5, 2.0, 3.0}) {
      auto res = transpose_norm_check(30, p, 5, 1e-12);
      CHECK(res.all_converged);
      CHECK(res.max_relative_gap <= 1e-6);
    }
  }
  SUBCASE("same seed reproduces the same gap") {
    auto a = transpose_norm_check(12, 2.0, 4, 1e-12, 777);
    auto b = transpose_norm_check(12, 2.0, 4, 1e-12, 777);
    CHECK(a.max_relative_gap == b.max_relative_gap);
  }
}

TEST_CASE("head recast evaluates identically through both routes") {
  // same functional written with (p, r) names and with the interchanged
  // names; the head-sum insertion contributes exactly (1+r')^{p'}
  const double p = 2.0, r = -1.2;  // q = 2, r' = 1.2
  const double q = conjugate_exponent(p), rp = -r;
  const long N = 100;
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> uni(0.1, 1.0);
  std::vector<double> a(static_cast<size_t>(N));
  for (auto& x : a) x = uni(rng);

  double s_thm2 = 0.0, s_renamed = 0.0, s_recast = 0.0;
  double inner1 = 0.0, inner2 = 0.0, heads = 0.0;
  for (long n = 1; n <= N; ++n) {
    double nn = n;
    inner1 += a[(size_t)n - 1] / std::pow(nn, r);
    double w1 = (std::pow(nn + 1.0, r) - std::pow(nn, r)) / r;
    s_thm2 += std::pow(w1 * inner1, q);

    inner2 += std::pow(nn, rp) * a[(size_t)n - 1];
    double w2 = (std::pow(nn, -rp) - std::pow(nn + 1.0, -rp)) / rp;
    s_renamed += std::pow(w2 * inner2, q);

    heads += std::pow(nn, rp);
    double w3 = w2 * (1.0 + rp) * heads / heads;
    s_recast += std::pow(w3 * inner2, q);
  }
  CHECK(std::fabs(s_thm2 - s_renamed) <= 1e-12 * s_thm2);
  CHECK(std::fabs(s_recast - std::pow(1.0 + rp, q) * s_renamed) <= 1e-12 * s_recast);
}

TEST_CASE("change of variables weight comparisons") {
  SUBCASE("degenerate exponent collapses to equality") {
    auto m = change_of_vars_check(ChangeOfVars::COR0, [] {
      StatementParams q;
      q.alpha = 1.0;
      q.beta = 0.0;
      q.p = 0.5;
      return q;
    }(), 200);
    CHECK(std::fabs(m.value) <= 1e-13);
  }
  SUBCASE("strictly negative beta keeps the asserted direction") {
    StatementParams q;
    q.alpha = 1.0;
    q.beta = -1.0;
    q.p = 0.5;
    CHECK(change_of_vars_check(ChangeOfVars::COR0, q, 1000).value >= -1e-12);
  }
  SUBCASE("head comparison for integer weights") {
    StatementParams q;
    q.alpha = 2.0;
    q.r = 1.0;
    q.p = 2.0;
    CHECK(change_of_vars_check(ChangeOfVars::COR7, q, 1000).value >= -1e-12);
    q.r = 2.0;
    CHECK(change_of_vars_check(ChangeOfVars::COR7, q, 1000).value >= -1e-12);
    q.p = -1.0;  // reversed branch
    q.r = 1.0;
    CHECK(change_of_vars_check(ChangeOfVars::COR7, q, 1000).value >= -1e-12);
  }
}
