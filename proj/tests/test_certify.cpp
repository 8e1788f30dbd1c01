#include <cmath>
#include <random>

#include <doctest.h>

#include "hardy/certify.hpp"
#include "hardy/operators.hpp"

using namespace hardy;

namespace {

StatementParams P(double p = NAN, double r = NAN, double alpha = NAN, double beta = NAN) {
  StatementParams q;
  q.p = p;
  q.r = r;
  q.alpha = alpha;
  q.beta = beta;
  return q;
}

const double kPiSqOver6 = 1.6449340668482264;

}  // namespace

TEST_CASE("validity regions") {
  CHECK(validity_region(StatementId::THM1, P(1.0 / 3.0, 1.0)).valid);  // (2+1)/3 = 1 <= 1
  auto bad = validity_region(StatementId::THM1, P(0.5, 1.0));
  CHECK(!bad.valid);
  CHECK(bad.reason.find("(2+r)p <= 1") != std::string::npos);
  auto bad7 = validity_region(StatementId::THM7, P(2.0, NAN, 0.25));
  CHECK(!bad7.valid);
  CHECK(bad7.reason.find("alpha*p > 1") != std::string::npos);
  CHECK(validity_region(StatementId::THM7, P(-2.0, NAN, 0.25)).valid);  // p < 0 branch
  CHECK(validity_region(StatementId::THM1, P(2.0, -1.0)).valid);        // reversed branch
  CHECK(validity_region(StatementId::COR2, P(-0.5)).valid);
  CHECK(!validity_region(StatementId::COR2, P(-1.5)).valid);
  CHECK(validity_region(StatementId::INEQ8, P(2.0, NAN, 2.25)).valid);
  CHECK(!validity_region(StatementId::INEQ8, P(2.0, NAN, 2.75)).valid);  // above 2 + 1/p
  CHECK(!validity_region(StatementId::THM5, P(0.5, 0.7)).valid);         // r > p
  auto missing = validity_region(StatementId::THM5, P(0.5));
  CHECK(!missing.valid);
  CHECK(missing.reason.find("missing parameter r") != std::string::npos);
}

TEST_CASE("closed constants") {
  CHECK(closed_constant(StatementId::THM4, P(0.5)) ==
        doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-15));
  CHECK(closed_constant(StatementId::THM6, P(0.5)) == 0.9);
  CHECK(closed_constant(StatementId::THM1, P(1.0 / 3.0, 1.0)) ==
        doctest::Approx(std::pow(0.5, 1.0 / 3.0)).epsilon(1e-15));
  CHECK(closed_constant(StatementId::COR1, P(0.5)) ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(closed_constant(StatementId::COR2_1, P(NAN, NAN, -1.0)) ==
        doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(closed_constant(StatementId::HARDY, P(2.0)) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(closed_constant(StatementId::THM4, P(0.8)) ==
        doctest::Approx(2.0 * std::pow(0.8 / 2.2, 0.8)).epsilon(1e-15));
  // branch boundaries agree where the minimizing r crosses
  CHECK(closed_constant(StatementId::THM4, P(0.6)) ==
        doctest::Approx(0.5 * std::pow(1.6 / 0.4, 0.4)).epsilon(1e-12));
  CHECK_THROWS_AS(closed_constant(StatementId::THM7, P(2.0, NAN, 0.25)), std::domain_error);
  CHECK(closed_constant(StatementId::COR6_5, P(0.5, NAN, -2.0)) ==
        doctest::Approx(std::pow(1.0 / 3.0, 0.5)).epsilon(1e-14));
}

TEST_CASE("auxiliary sequence values") {
  SUBCASE("first value at p = r = 1/2, beta = 2.4") {
    CHECK(s_value(0.5, 0.5, 2.4, 1) ==
          doctest::Approx(std::sqrt(1.0 - std::pow(2.0, -2.4))).epsilon(1e-14));
    CHECK(s_value(0.5, 0.5, 2.4, 1) == doctest::Approx(0.90030).epsilon(1e-4));
  }
  SUBCASE("limits of the envelope") {
    CHECK(s_limit(0.5, 0.5, 2.0) == doctest::Approx(2.0 * std::sqrt(2.0) / 3.0).epsilon(1e-14));
    CHECK(s_limit(0.5, 0.5, 3.0) == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-14));
  }
  SUBCASE("s_k approaches the limit") {
    for (auto [p, r, beta] : {std::tuple<double, double, double>{0.5, 0.5, 2.4},
                              {0.5, 0.5, 3.0},
                              {0.4, 0.3, 1.5},
                              {0.6, 0.5, 3.2}}) {
      double e = beta * (1.0 - p) - r;
      REQUIRE(e >= 0.0);
      REQUIRE(e <= 1.0);
      CHECK(std::fabs(s_value(p, r, beta, 1000000) - s_limit(p, r, beta)) <= 1e-4);
    }
  }
}

TEST_CASE("lemma functions") {
  SUBCASE("limits at zero") {
    CHECK(lemma_function(LemmaFunction::U_BETA, 0.5, 0.5, 2.4, 0.0) == 2.4);
    CHECK(lemma_function(LemmaFunction::F_PRB, 0.5, 0.5, 3.0, 0.0) == 3.0);
  }
  SUBCASE("v'' stays negative for beta = 2.4 on [0, 1/3]") {
    for (double x = 0.0; x <= 1.0 / 3.0 + 1e-12; x += 1.0 / 96.0)
      CHECK(lemma_function(LemmaFunction::V_BETA_SECOND, 0.5, 0.5, 2.4, x) < 0.0);
    CHECK(u_decreasing_on(2.4, 1.0 / 3.0));
    CHECK(u_decreasing_on(2.4, 1.0 / 11.0));
    CHECK(!u_decreasing_on(3.2, 1.0 / 11.0));
  }
  SUBCASE("envelope hypothesis at the boundary choice of beta") {
    CHECK(f_increasing_hypothesis(0.5, 0.5, 3.0));  // beta = 1 + 2r/(1-p) exactly
    CHECK(!f_increasing_hypothesis(0.5, 0.5, 2.4));
    // h >= 0 on [0,1] backs the monotonicity when the hypothesis holds
    for (double x = 0.0; x <= 1.0; x += 0.05)
      CHECK(lemma_function(LemmaFunction::H_PRB, 0.5, 0.5, 3.0, x) >= -1e-12);
  }
  SUBCASE("u matches f when r = 1 - p") {
    for (double x : {0.1, 0.35, 0.9})
      CHECK(lemma_function(LemmaFunction::U_BETA, 0.5, 0.5, 2.4, x) ==
            doctest::Approx(lemma_function(LemmaFunction::F_PRB, 0.5, 0.5, 2.4, x)).epsilon(1e-14));
  }
  CHECK_THROWS_AS(lemma_function(LemmaFunction::U_BETA, 0.5, 0.5, 2.4, 1.5), std::domain_error);
}

TEST_CASE("certificates") {
  SUBCASE("decreasing-u tail at beta = 2.4") {
    auto cert = certify_constant(0.5, 0.5, 2.4, 10);
    CHECK(cert.certified);
    CHECK(cert.tail_tag == TailJustification::U_BETA_DECREASING);
    CHECK(cert.constant >= 0.9);
    CHECK(cert.tail_bound == doctest::Approx(0.9001).epsilon(6e-4));
    CHECK(cert.min_s == doctest::Approx(0.90030).epsilon(1e-4));
    CHECK(cert.min_s_at == 1);
  }
  SUBCASE("monotone envelope tail at beta = 3") {
    auto cert = certify_constant(0.5, 0.5, 3.0, 1);
    CHECK(cert.certified);
    CHECK(cert.tail_tag == TailJustification::LEMMA1_MONOTONE);
    CHECK(cert.method == "LS_LEMMA1");
    CHECK(cert.constant == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-14));
  }
  SUBCASE("outside the window stays honest") {
    auto cert = certify_constant(0.5, 0.5, 10.0, 5);
    CHECK(!cert.certified);
    CHECK(cert.tail_tag == TailJustification::NONE);
    CHECK(std::isnan(cert.tail_bound));
    CHECK(cert.constant == cert.min_s);
  }
  SUBCASE("certificate soundness against the matching operator") {
    auto cert = certify_constant(0.5, 0.5, 2.4, 10);
    REQUIRE(cert.certified);
    // (p, r) = (1/2, 1/2): plain remainder mean with normalizer n
    TailOperator op(WeightFamily::pure_power(0.0), Direction::Remainder, Normalizer::power(1.0),
                    400);
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> uni(1e-3, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<double> v(400);
      for (auto& x : v) x = uni(rng);
      double ratio = ratio_functional(op, SequenceVector(std::move(v)), 0.5);
      CHECK(ratio >= cert.constant - 1e-9);
    }
  }
  SUBCASE("soundness holds off the symmetric point too") {
    const double p = 0.45, r = 0.3;
    auto cert = certify_constant(p, r, 1.0 + 2.0 * r / (1.0 - p), 20);
    REQUIRE(cert.certified);
    // recast operator: weights k^{(r-p)/p}, normalizer n^{r/p}
    TailOperator op(WeightFamily::pure_power((r - p) / p), Direction::Remainder,
                    Normalizer::power(r / p), 300);
    std::mt19937 rng(4243);
    std::uniform_real_distribution<double> uni(1e-3, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<double> v(300);
      for (auto& x : v) x = uni(rng);
      double ratio = ratio_functional(op, SequenceVector(std::move(v)), p);
      CHECK(ratio >= cert.constant - 1e-9);
    }
  }
}

TEST_CASE("beta search") {
  auto res = beta_search(0.5, 0.5);
  CHECK(res.beta_star == doctest::Approx(2.4739).epsilon(5e-4));
  CHECK(res.value == doctest::Approx(0.9055).epsilon(5e-4));
  // the crossing is bracketed by the two closed values sqrt(3)/2
  double s1_at_2 = std::sqrt(1.0 - std::pow(2.0, -2.0));
  CHECK(s1_at_2 == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-15));
  CHECK(s_limit(0.5, 0.5, 3.0) == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-15));
  // monotone sides of the crossing
  CHECK(std::sqrt(1.0 - std::pow(2.0, -2.2)) > s1_at_2);
  CHECK(s_limit(0.5, 0.5, 2.8) > s_limit(0.5, 0.5, 3.0));
}

TEST_CASE("heuristic gamma") {
  auto g1 = heuristic_gamma(0.5, 0.5);
  CHECK(g1.gamma == doctest::Approx(-3.0).epsilon(1e-15));
  CHECK(g1.constraint_rhs == doctest::Approx(-1.5).epsilon(1e-15));
  CHECK(g1.constraint_ok);
  CHECK(heuristic_gamma(1.0 / 3.0, 1.0).gamma == doctest::Approx(-6.0).epsilon(1e-12));
  CHECK(heuristic_gamma(1.0, 0.0).gamma == doctest::Approx(-1.0).epsilon(1e-15));
}

TEST_CASE("auxiliary inequality slacks") {
  SUBCASE("head-sum bound is exact at r = 1") {
    AuxParams q;
    q.r = 1.0;
    CHECK(auxiliary_check(AuxCheck::BOUND1, q, 5) == doctest::Approx(0.0).epsilon(1e-13));
  }
  SUBCASE("Bennett tail bound at gamma = 2, k = 2") {
    AuxParams q;
    q.gamma = 2.0;
    double slack = auxiliary_check(AuxCheck::BENNETT_501, q, 2);
    // oracle: 2 - 3 (zeta(2) - 1)
    CHECK(slack == doctest::Approx(2.0 - 3.0 * (kPiSqOver6 - 1.0)).epsilon(1e-8));
    CHECK(slack == doctest::Approx(0.06520).epsilon(1e-3));
  }
  SUBCASE("interpolation inequality at p = r = 1/2, n = 1") {
    AuxParams q;
    q.p = 0.5;
    q.r = 0.5;
    double slack = auxiliary_check(AuxCheck::HOLDER_36, q, 1);
    double lhs = std::pow(2.0 * (std::sqrt(2.0) - 1.0), 0.5) *
                 std::pow((std::pow(2.0, -1.5) - 1.0) / (-1.5), 0.5);
    double rhs = (std::pow(2.0, -0.5) - 1.0) / (-0.5);
    CHECK(lhs == doctest::Approx(0.59752).epsilon(1e-4));
    CHECK(rhs == doctest::Approx(0.58579).epsilon(1e-4));
    CHECK(slack == doctest::Approx(lhs - rhs).epsilon(1e-12));
  }
  SUBCASE("hypothesis grids stay nonnegative") {
    const double grid[] = {-0.9, -0.5, 0.0, 0.5, 1.0, 2.0, 3.0};
    for (double r : grid) {
      AuxParams q;
      q.r = r;
      CHECK(auxiliary_scan(AuxCheck::BOUND1, q, 2000).value >= -1e-12);
      if (r >= 0.0 && r <= 1.0) CHECK(auxiliary_scan(AuxCheck::LEMMA_42, q, 2000).value >= -1e-12);
    }
    for (double g : {1.5, 2.0, 3.0}) {
      AuxParams q;
      q.gamma = g;
      CHECK(auxiliary_scan(AuxCheck::BENNETT_501, q, 1000).value >= -1e-12);
    }
    for (double a : {-0.9, -0.5}) {
      AuxParams q;
      q.alpha = a;
      CHECK(auxiliary_scan(AuxCheck::INEQ_611, q, 2000).value >= -1e-12);
    }
  }
  SUBCASE("hypothesis violations refuse") {
    AuxParams q;
    q.gamma = 1.0;
    CHECK_THROWS_AS(auxiliary_check(AuxCheck::BENNETT_501, q, 1), std::domain_error);
    AuxParams q2;
    q2.alpha = -1.5;
    CHECK_THROWS_AS(auxiliary_check(AuxCheck::INEQ_611, q2, 1), std::domain_error);
  }
}

TEST_CASE("theorem 5 consistency") {
  auto c = thm5_consistency(0.5);
  CHECK(c.middle_branch_gap <= 1e-14);
  CHECK(c.r_star == doctest::Approx(1.0).epsilon(1e-15));

  auto c2 = thm5_consistency(0.6);
  CHECK(c2.r_star == doctest::Approx(0.6).epsilon(1e-12));  // branch boundary r* = p

  CHECK(thm5_consistency(0.45).stationarity_residual <= 1e-6);
}

TEST_CASE("constant ladder at p = 1/2") {
  double cor1 = closed_constant(StatementId::COR1, P(0.5));
  double thm4 = closed_constant(StatementId::THM4, P(0.5));
  double thm6 = closed_constant(StatementId::THM6, P(0.5));
  CHECK(cor1 == doctest::Approx(0.7071).epsilon(1e-4));
  CHECK(cor1 < thm4);
  CHECK(thm4 < thm6);
  CHECK(thm6 < de_bruijn_c_half());
  CHECK(de_bruijn_c_half() == doctest::Approx(0.90375).epsilon(1e-4));
}

TEST_CASE("theorem 5 equals the middle branch along r = p") {
  for (int i = 1; i <= 200; ++i) {
    double p = 1.0 / 3.0 + (3.0 / 5.0 - 1.0 / 3.0) * i / 201.0;
    StatementParams q5 = P(p, p);
    double middle = 0.5 * std::pow((1.0 + p) / (1.0 - p), 1.0 - p);
    CHECK(std::fabs(closed_constant(StatementId::THM5, q5) - middle) <= 1e-12);
  }
}
