#include "orbitlab/oracles.hpp"

#include <gtest/gtest.h>

#include <map>
#include <memory>
#include <random>

using namespace orbitlab;

using Terms = std::map<std::pair<int, int>, Rational>;

namespace {

LabeledDigraph path_graph() {
  LabeledDigraph G(1, {2, 4, 16, 256});
  for (std::size_t i = 0; i + 1 < 4; ++i) G.set_edge(i, 1, i + 1);
  return G;
}

LabeledDigraph random_graph(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  std::vector<Rational> vals;
  for (std::size_t i = 0; i < n; ++i) vals.emplace_back(static_cast<long>(i));
  LabeledDigraph G(k, vals);
  std::uniform_int_distribution<std::size_t> target(0, n + n / 3);  // some edges leave the graph
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t a = 1; a <= k; ++a)
      if (auto t = target(rng); t < n) G.set_edge(v, static_cast<int>(a), t);
  return G;
}

}  // namespace

TEST(Digraph, Validation) {
  EXPECT_THROW(LabeledDigraph(0, {1}), std::invalid_argument);
  EXPECT_THROW(LabeledDigraph(1, {1, 1}), std::invalid_argument);
  auto G = path_graph();
  EXPECT_THROW(G.set_edge(0, 2, 1), std::out_of_range);
  EXPECT_THROW(G.set_edge(0, 1, 9), std::out_of_range);
  EXPECT_EQ(G.index_of(Rational(16)), 2u);
  EXPECT_FALSE(G.index_of(Rational(3)));
}

TEST(Digraph, DistancesAndWalks) {
  const auto G = path_graph();
  EXPECT_EQ(distance(G, 0, 3), 3u);
  EXPECT_FALSE(distance(G, 3, 0));
  EXPECT_EQ(walk_endpoint(G, 0, {1, 1}), 2u);
  EXPECT_FALSE(walk_endpoint(G, 2, {1, 1}));
  EXPECT_EQ(ball_size(G, 0, 1), 2u);
}

TEST(LN, Examples) {
  const auto G = path_graph();
  const std::vector<bool> all(4, true);
  EXPECT_EQ(L_N(G, 0, all, {{1}}, 3), 3u);
  LabeledDigraph loop(1, {1});
  loop.set_edge(0, 1, 0);
  EXPECT_EQ(L_N(loop, 0, {true}, {{1}}, 5), 1u);
  EXPECT_THROW(L_N(G, 0, all, {}, 3), std::invalid_argument);
  EXPECT_THROW(L_N(G, 0, {true}, {{1}}, 3), std::invalid_argument);
}

TEST(LN, BoundedByBallAndMatchesOracleBall) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    const auto G = random_graph(rng, 12, 2);
    std::vector<bool> A(G.size());
    for (std::size_t v = 0; v < G.size(); ++v) A[v] = (rng() & 3) != 0;
    const std::vector<bool> all(G.size(), true);
    for (std::size_t N = 0; N <= 6; ++N) {
      EXPECT_EQ(ball_size(G, 0, N), oracle::ball(G, 0, N));
      const std::size_t L = L_N(G, 0, A, {{1}, {2, 1}}, N);
      EXPECT_LE(L, ball_size(G, 0, N));
      EXPECT_LE(L, L_N(G, 0, all, {{1}, {2, 1}}, N));
      EXPECT_LE(L, L_N(G, 0, A, {{1}}, N));
    }
  }
}

TEST(WitnessSearch, ExhaustiveDominatesGreedyAndSamples) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 40; ++trial) {
    const auto G = random_graph(rng, 10, 2);
    std::vector<bool> A(G.size(), true);
    const auto ex = find_witness_words(G, 0, A, 2, 2, 4);
    const auto gr = find_witness_words(G, 0, A, 2, 2, 4, WitnessMode::greedy);
    EXPECT_TRUE(gr.heuristic);
    EXPECT_GE(ex.L, gr.L);
    EXPECT_EQ(ex.L, L_N(G, 0, A, ex.words, 4));
    const auto words = words_up_to(2, 2);
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    for (int s = 0; s < 50; ++s) EXPECT_GE(ex.L, L_N(G, 0, A, {words[pick(rng)], words[pick(rng)]}, 4));
  }
}

TEST(WitnessSearch, BudgetAndValidation) {
  const auto G = path_graph();
  const std::vector<bool> all(4, true);
  EXPECT_THROW(find_witness_words(G, 0, all, 0, 1, 3), std::invalid_argument);
  LabeledDigraph G3(3, {1, 2});
  EXPECT_THROW(find_witness_words(G3, 0, {true, true}, 6, 3, 3, WitnessMode::exhaustive, 1000), BudgetExceeded);
}

TEST(WordsUpTo, CountsAndOrder) {
  EXPECT_EQ(words_up_to(2, 3).size(), 14u);
  EXPECT_EQ(words_up_to(2, 2), (std::vector<Word>{{1}, {1, 1}, {1, 2}, {2}, {2, 1}, {2, 2}}));
  EXPECT_TRUE(words_up_to(3, 0).empty());
}

TEST(OrbitGraph, EdgesFollowTheMaps) {
  const SystemF F({Polynomial::parse("[0, 0, 1]"), Polynomial::parse("[0, 0, 2]")});
  const auto S = SetPredicate::gamma(std::make_shared<const GroupSpec>(std::vector<Rational>{2}, false));
  const auto og = build_orbit_graph(F, Rational(2), 4, S);
  EXPECT_EQ(og.graph.size(), 31u);
  std::size_t edges = 0;
  for (std::size_t v = 0; v < og.graph.size(); ++v)
    for (int a = 1; a <= 2; ++a)
      if (auto w = og.graph.successor(v, a)) {
        ++edges;
        EXPECT_EQ(F[static_cast<std::size_t>(a - 1)](og.graph.value(v)), og.graph.value(*w));
      }
  EXPECT_EQ(edges, 30u);
}

TEST(Theorem61, SquaringMapBelowThreshold) {
  const SystemF F({Polynomial::parse("[0, 0, 1]")});
  const auto g2 = std::make_shared<const GroupSpec>(std::vector<Rational>{2}, false);
  const auto rep = theorem61_experiment(F, Rational(2), g2, 6, 3, 1);
  EXPECT_EQ(rep.count, 6u);
  EXPECT_EQ(rep.threshold, 9);
  EXPECT_FALSE(rep.hypothesis_met);
  EXPECT_TRUE(rep.count_within_bound);
  EXPECT_THROW(theorem61_experiment(F, Rational(2), g2, 6, 2, 1), std::invalid_argument);
}

TEST(SpecialCurve, Examples) {
  EXPECT_TRUE(is_special_curve(Polynomial::parse("[0, 0, 0, 1]")));
  EXPECT_FALSE(is_special_curve(Polynomial::parse("[1, 0, 1]")));
  EXPECT_TRUE(is_special_curve(Polynomial::parse("[0, 5]")));
  EXPECT_THROW(is_special_curve(Polynomial::parse("[3]")), std::invalid_argument);
  // 2X^3 - 2Y
  EXPECT_TRUE(is_special_curve(Terms{{{3, 0}, Rational(2)}, {{0, 1}, Rational(-2)}}));
  EXPECT_FALSE(is_special_curve(Terms{{{2, 0}, Rational(1)}, {{0, 0}, Rational(1)}, {{0, 1}, Rational(-1)}}));
  EXPECT_THROW(is_special_curve(Terms{{{1, 1}, Rational(1)}}), UnsupportedForm);
  EXPECT_EQ(CurveSpec(Polynomial::parse("[0, 0, 1]")).Delta, 3);
}
