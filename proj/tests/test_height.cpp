#include "orbitlab/height.hpp"
#include "orbitlab/oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace orbitlab;

TEST(PolynomialHeight, Examples) {
  EXPECT_DOUBLE_EQ(height_polynomial(Polynomial::identity()), 0.0);
  EXPECT_DOUBLE_EQ(height_polynomial(Polynomial::parse("[1, 0, 2]")), std::log(2.0));
  EXPECT_DOUBLE_EQ(height_polynomial(Polynomial::parse("[1/4, 0, 3/2]")), std::log(6.0));
  EXPECT_THROW(height_polynomial(Polynomial()), std::invalid_argument);
}

TEST(PolynomialHeight, MatchesPlaceByPlaceOracle) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> c(-60, 60), d(1, 60);
  for (int i = 0; i < 300; ++i) {
    std::vector<Rational> coeffs;
    for (int j = 0; j < 4; ++j) coeffs.emplace_back(BigInt(c(rng)), BigInt(d(rng)));
    const Polynomial f(coeffs);
    if (f.is_zero()) continue;
    EXPECT_NEAR(height_polynomial(f), oracle::place_height(f), 1e-9) << f.str();
  }
}

TEST(PolynomialHeight, ScaleInvariant) {
  const Polynomial f = Polynomial::parse("[3, 0, -7/5, 2]");
  EXPECT_NEAR(height_polynomial(f), height_polynomial(f.scaled(Rational::parse("-11/13"))), 1e-12);
}

TEST(CompositionHeightBound, Examples) {
  EXPECT_DOUBLE_EQ(composition_height_bound(2, 1, std::log(2.0)), std::log(2.0));
  EXPECT_NEAR(composition_height_bound(2, 2, std::log(2.0)), 15 * std::log(2.0), 1e-12);
  const Polynomial f = Polynomial::parse("[0, 0, 2]");
  // 8X^4 has coprime integer coefficient vector (1), so its height is 0
  const double h = height_polynomial(compose(f, f));
  EXPECT_DOUBLE_EQ(h, 0.0);
  EXPECT_NEAR(h, oracle::place_height(compose(f, f)), 1e-12);
  EXPECT_LE(h, composition_height_bound(2, 2, height_polynomial(f)));
  EXPECT_THROW(composition_height_bound(1, 2, 0), std::invalid_argument);
  EXPECT_THROW(composition_height_bound(2, 0, 0), std::invalid_argument);
}

TEST(SystemF, ValidatesAndCaches) {
  const SystemF F(std::vector<Polynomial>{Polynomial::parse("[1, 0, 2]"), Polynomial::parse("[0, 0, 0, 1/3]")});
  EXPECT_EQ(F.size(), 2u);
  EXPECT_EQ(F.max_degree(), 3);
  EXPECT_DOUBLE_EQ(F.height(), std::log(2.0));  // X^3/3 is projectively X^3
  EXPECT_THROW(SystemF(std::vector<Polynomial>{}), std::invalid_argument);
  EXPECT_THROW(SystemF(std::vector<Polynomial>{Polynomial::parse("[1, 1]")}), std::invalid_argument);
}
