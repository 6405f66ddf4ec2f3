#include "orbitlab/bounds.hpp"
#include "orbitlab/oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace orbitlab;

TEST(TreeSize, Examples) {
  EXPECT_EQ(tree_size_B(1, 5), 5);
  EXPECT_EQ(tree_size_B(2, 3), 7);
  EXPECT_EQ(tree_size_B(3, 2), 4);
  EXPECT_THROW(tree_size_B(0, 2), std::invalid_argument);
}

TEST(TreeSize, MatchesNodeCount) {
  for (long k = 1; k <= 4; ++k)
    for (long t = 1; t <= 6; ++t)
      EXPECT_EQ(tree_size_B(k, t), BigInt(static_cast<unsigned long>(oracle::tree_nodes(
                                        static_cast<std::size_t>(k), static_cast<std::size_t>(t)))));
}

TEST(LogScale, ConversionsAndOrdering) {
  const auto a = LogScaleValue::linear(100);
  EXPECT_NEAR(a.at(Scale::log), std::log(100.0), 1e-12);
  EXPECT_NEAR(a.at(Scale::loglog), std::log(std::log(100.0)), 1e-12);
  EXPECT_NEAR(LogScaleValue::loglog(1).at(Scale::linear), std::exp(std::exp(1.0)), 1e-9);
  EXPECT_LT(LogScaleValue::linear(10), LogScaleValue::log(3));
  EXPECT_GT(LogScaleValue::loglog(10), LogScaleValue::log(1e4));
  EXPECT_EQ(LogScaleValue::linear(0.5).at(Scale::loglog), -std::numeric_limits<double>::infinity());
}

TEST(LogScale, SumAndProduct) {
  EXPECT_NEAR(log_sum(LogScaleValue::linear(3), LogScaleValue::linear(5)).at(Scale::linear), 8, 1e-9);
  EXPECT_NEAR(log_product(LogScaleValue::linear(3), LogScaleValue::log(std::log(5.0))).at(Scale::linear), 15, 1e-9);
  // sums of huge values stay finite at loglog scale
  const auto big = log_sum(LogScaleValue::loglog(800), LogScaleValue::loglog(10));
  EXPECT_EQ(big.scale, Scale::loglog);
  EXPECT_NEAR(big.value, 800, 1e-9);
}

TEST(Bounds, LogAFrozen) {
  EXPECT_NEAR(log_A(BigInt(1), 1).value, 24.95329850015803, 1e-9);
  EXPECT_NEAR(log_A(BigInt(2), 1).value, 709.782712893384, 1e-9);
  EXPECT_NEAR(log_A(BigInt(1), 0).value, 16.635532333438686, 1e-9);
  EXPECT_NEAR(log_A(BigInt(9), 1).value, 1234605.0819020309, 1e-6);
}

TEST(Bounds, LogAClosedForm) {
  for (long n = 1; n <= 40; ++n)
    for (long r = 0; r <= 4; ++r) {
      const double expect = 4.0 * std::pow(n, 4) * static_cast<double>(n + r + 1) * std::log(8.0 * n);
      EXPECT_NEAR(log_A(BigInt(n), r).value / expect, 1.0, 1e-12);
    }
  // log A overflows double for huge n and moves to loglog
  const auto huge = log_A(big_pow(BigInt(10), 100), 1);
  EXPECT_EQ(huge.scale, Scale::loglog);
  EXPECT_NEAR(huge.value, std::log(4.0) + 500 * std::log(10.0) + std::log(std::log(8.0) + 100 * std::log(10.0)), 1e-9);
}

TEST(Bounds, PairCountFrozen) {
  EXPECT_NEAR(log_pair_count_bound(BigInt(1), 0).value, 532.337034670038, 1e-9);
  EXPECT_NEAR(log_pair_count_bound(BigInt(2), 1).value, 5149.140352344232, 1e-7);
}

TEST(Bounds, ZetaAndCurve) {
  EXPECT_NEAR(zeta_inverse(2, 1, 1, 1), 27.000803001416538, 1e-12);
  EXPECT_NEAR(zeta_inverse(3, 0, 2, 5) - zeta_inverse(3, 0, 2, 1), std::log(5.0), 1e-12);
  EXPECT_THROW(zeta_inverse(1.5, 0, 0, 1), std::invalid_argument);
  EXPECT_GT(zeta_inverse_proof_variant(4, 1, 1), 0);
  EXPECT_DOUBLE_EQ(log_curve_intersection_bound(0, 2, 0).value, 8);
  EXPECT_DOUBLE_EQ(log_curve_intersection_bound(1, 3, 0).value, std::log(2.0) + 18);
}

TEST(Bounds, ThetaFrozen) {
  EXPECT_NEAR(theta_N(1e6, 1) / 1.662384068841981e-9, 1, 1e-12);
  EXPECT_NEAR(theta_N(1e12, 1) / 1.10082236955722e-11, 1, 1e-12);
  EXPECT_THROW(theta_N(15, 1), std::domain_error);
  EXPECT_GT(theta_N(1e6, 0), theta_N(1e6, 3));
}

TEST(Bounds, TheoremValuesFrozen) {
  BoundParams p;
  p.N = 1e6;
  p.d = 2;
  EXPECT_NEAR(evaluate_theorem_bound("thm42", p).value, 2872010.4514136305, 1e-6);
  EXPECT_NEAR(evaluate_theorem_bound("thm44", p).value, 2639764.3192463943, 1e-6);
  p.t = 10;
  const auto cor62 = evaluate_theorem_bound("cor62", p);
  EXPECT_EQ(cor62.scale, Scale::loglog);
  EXPECT_NEAR(cor62.value, 69.31471805599453, 1e-9);
  BoundParams q;
  q.k = 2;
  q.t = 3;
  q.l = 1;
  q.d = 2;
  q.r = 1;
  const auto thm61 = evaluate_theorem_bound("thm61", q);
  EXPECT_EQ(thm61.scale, Scale::log);
  EXPECT_NEAR(thm61.value, 1234609.954551582, 1e-5);
  EXPECT_THROW(evaluate_theorem_bound("nope", p), std::invalid_argument);
  p.d = 1;
  EXPECT_THROW(evaluate_theorem_bound("thm42", p), std::domain_error);
}

TEST(Bounds, MonotoneInSlackAndN) {
  for (const auto& name : {"thm42", "thm44", "cor43", "cor45"}) {
    BoundParams p;
    p.N = 1e5;
    p.k = 2;
    const auto base = evaluate_theorem_bound(name, p);
    p.slack = 0.5;
    EXPECT_GT(evaluate_theorem_bound(name, p), base) << name;
    p.N = 1e7;
    EXPECT_GT(evaluate_theorem_bound(name, p), base) << name;
  }
}

TEST(Bounds, C0Scaling) {
  for (double c0 : {0.5, 2.0, 1e3})
    EXPECT_NEAR(zeta_inverse(5, 2, 3, c0) - zeta_inverse(5, 2, 3, 1), std::log(c0), 1e-12);
}

TEST(Bounds, TNRules) {
  const double dl = t_N_double_log_rule(1e6, 2, 0);
  const double tl = t_N_triple_log_rule(1e6, 2, 0);
  EXPECT_GT(dl, 0);
  EXPECT_GT(tl, 0);
  EXPECT_LT(t_N_double_log_rule(1e6, 2, 1), dl);
  EXPECT_THROW(t_N_double_log_rule(2, 2, 0), std::domain_error);
  EXPECT_THROW(t_N_triple_log_rule(10, 2, 0), std::domain_error);
  const auto c = thm64_theta_condition(1e6, 1, 2, 1, true);
  EXPECT_EQ(c.holds, c.log_theta <= c.log_rhs);
}
