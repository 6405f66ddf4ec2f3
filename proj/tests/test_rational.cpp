#include "orbitlab/height.hpp"
#include "orbitlab/oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace orbitlab;

TEST(Rational, ParsesAndPrintsCanonicalForm) {
  EXPECT_EQ(Rational::parse("6/4").str(), "3/2");
  EXPECT_EQ(Rational::parse("-10/7").str(), "-10/7");
  EXPECT_EQ(Rational::parse(" -4 / 2 ").str(), "-2");
  EXPECT_EQ(Rational::parse("0/5").str(), "0");
  EXPECT_EQ(Rational::parse("+7").str(), "7");
  EXPECT_EQ(Rational::parse("0").den(), 1);
}

TEST(Rational, RejectsMalformedText) {
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("a/2"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1.5"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("4/-2"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/0"), std::domain_error);
}

TEST(Rational, Arithmetic) {
  const Rational a = Rational::parse("3/4"), b = Rational::parse("-5/6");
  EXPECT_EQ((a + b).str(), "-1/12");
  EXPECT_EQ((a - b).str(), "19/12");
  EXPECT_EQ((a * b).str(), "-5/8");
  EXPECT_EQ((a / b).str(), "-9/10");
  EXPECT_EQ(a.pow(-2).str(), "16/9");
  EXPECT_EQ(b.pow(0), Rational(1));
  EXPECT_EQ(b.inverse().str(), "-6/5");
  EXPECT_THROW(a / Rational(0), std::domain_error);
  EXPECT_THROW(Rational(0).inverse(), std::domain_error);
  EXPECT_LT(b, a);
  EXPECT_EQ(b.sign(), -1);
}

TEST(Rational, HugeValuesStayExact) {
  const Rational big = Rational(2).pow(4000) + Rational(1);
  EXPECT_EQ((big - Rational(2).pow(4000)), Rational(1));
  EXPECT_NEAR(height_rational(Rational(2).pow(4000)), 4000 * std::log(2.0), 1e-9);
  EXPECT_NEAR(height_rational(Rational(1) / Rational(3).pow(3000)), 3000 * std::log(3.0), 1e-9);
}

TEST(Height, Examples) {
  EXPECT_EQ(height_rational(Rational(1)), 0.0);
  EXPECT_EQ(height_rational(Rational(-1)), 0.0);
  EXPECT_EQ(height_rational(Rational(0)), 0.0);
  EXPECT_DOUBLE_EQ(height_rational(Rational::parse("3/2")), std::log(3.0));
  EXPECT_DOUBLE_EQ(height_rational(Rational::parse("-10/7")), std::log(10.0));
}

TEST(Height, MatchesPlaceByPlaceSum) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-100000, 100000), den(1, 100000);
  for (int i = 0; i < 500; ++i) {
    const Rational x(BigInt(num(rng)), BigInt(den(rng)));
    if (x.is_zero()) continue;
    const double places = oracle::place_height(Polynomial::constant(x));
    // as a point [x : 1] of P^1 the local maxima include the 1
    const double projective = oracle::place_height(Polynomial({x, Rational(1)}));
    EXPECT_NEAR(height_rational(x), projective, 1e-9) << x.str();
    EXPECT_NEAR(places, 0.0, 1e-9) << "a single coordinate has projective height 0";
  }
}

TEST(Height, InversionAndProductBound) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 1000000);
  for (int i = 0; i < 1000; ++i) {
    const Rational x(BigInt(num(rng)), BigInt(den(rng))), y(BigInt(num(rng)), BigInt(den(rng)));
    if (x.is_zero() || y.is_zero()) continue;
    EXPECT_DOUBLE_EQ(height_rational(x), height_rational(x.inverse()));
    EXPECT_LE(height_rational(x * y), height_rational(x) + height_rational(y) + 1e-9);
  }
}
