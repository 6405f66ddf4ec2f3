#include "orbitlab/lattice.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace orbitlab;

namespace {

IntVector V(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

IntVector times(const IntVector& c, const IntMatrix& G, std::size_t dim) {
  IntVector out(dim, 0);
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) out[j] += c[i] * G[i][j];
  return out;
}

}  // namespace

TEST(Lattice, EchelonBasisOfSimpleLattice) {
  const Lattice L({V({2, 0}), V({0, 3})}, 2);
  EXPECT_EQ(L.rank(), 2u);
  EXPECT_TRUE(L.relations().empty());
  EXPECT_EQ(L.combination(V({4, -3})), V({2, -1}));
  EXPECT_FALSE(L.combination(V({1, 0})));
  EXPECT_EQ(*L.division_index(V({1, 0})), 2);
  EXPECT_EQ(*L.division_index(V({1, 1})), 6);
  EXPECT_EQ(*L.division_index(V({2, 3})), 1);
}

TEST(Lattice, DependentGeneratorsYieldRelations) {
  const IntMatrix G{V({2, 0}), V({4, 0}), V({0, 1})};
  const Lattice L(G, 2);
  EXPECT_EQ(L.rank(), 2u);
  ASSERT_EQ(L.relations().size(), 1u);
  EXPECT_EQ(times(L.relations()[0], G, 2), V({0, 0}));
  const auto c = L.combination(V({6, 1}));
  ASSERT_TRUE(c);
  EXPECT_EQ(times(*c, G, 2), V({6, 1}));
  EXPECT_FALSE(L.combination(V({1, 1})));
}

TEST(Lattice, RankDeficientSpan) {
  const Lattice L({V({1, 1})}, 2);
  EXPECT_EQ(L.rank(), 1u);
  EXPECT_TRUE(L.in_span(V({3, 3})));
  EXPECT_FALSE(L.in_span(V({1, 0})));
  EXPECT_FALSE(L.division_index(V({1, 2})));
  EXPECT_THROW((void)L.in_span(V({1})), std::invalid_argument);
}

TEST(Lattice, CombinationReproducesVector) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> e(-6, 6), n(1, 4), dim(1, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = static_cast<std::size_t>(dim(rng)), k = static_cast<std::size_t>(n(rng));
    IntMatrix G(k, IntVector(m));
    for (auto& row : G)
      for (auto& x : row) x = e(rng);
    const Lattice L(G, m);
    IntVector c(k);
    for (auto& x : c) x = e(rng);
    const IntVector v = times(c, G, m);
    const auto got = L.combination(v);
    ASSERT_TRUE(got);
    EXPECT_EQ(times(*got, G, m), v);
    for (const auto& rel : L.relations()) EXPECT_EQ(times(rel, G, m), IntVector(m, 0));
    EXPECT_EQ(L.rank() + L.relations().size(), k);
  }
}

TEST(Lattice, DivisionIndexIsMinimal) {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<long> e(-5, 5);
  for (int trial = 0; trial < 200; ++trial) {
    const IntMatrix G{V({e(rng), e(rng)}), V({e(rng), e(rng)})};
    const Lattice L(G, 2);
    const IntVector v = V({e(rng), e(rng)});
    const auto t = L.division_index(v);
    if (!t) {
      EXPECT_FALSE(L.in_span(v));
      continue;
    }
    auto scaled = [&](long s) {
      IntVector w = v;
      for (auto& x : w) x *= s;
      return w;
    };
    EXPECT_TRUE(L.combination(scaled(t->get_si())));
    for (long s = 1; s < t->get_si(); ++s) EXPECT_FALSE(L.combination(scaled(s))) << s;
  }
}
