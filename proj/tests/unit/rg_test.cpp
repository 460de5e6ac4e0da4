#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "bfrg/anf.hpp"
#include "bfrg/error.hpp"
#include "bfrg/families.hpp"
#include "bfrg/rg.hpp"
#include "oracles.hpp"

using namespace bfrg;

TEST(Decimate, ParityGivesConstantOne) {
  for (unsigned i = 1; i <= 3; ++i) EXPECT_EQ(decimate(parity(3), i), TruthTable::constant(2, true));
}

TEST(Decimate, AndGivesOtherVariable) {
  const auto and2 = oracle::table_from(2, {0, 0, 0, 1});
  EXPECT_EQ(decimate(and2, 1), oracle::table_from(1, {0, 1}));
  EXPECT_EQ(decimate(and2, 2), oracle::table_from(1, {0, 1}));
}

TEST(Decimate, ConstantsVanish) {
  for (unsigned n = 1; n <= 9; ++n) {
    for (unsigned i = 1; i <= n; ++i) {
      EXPECT_TRUE(decimate(TruthTable::constant(n, true), i).is_zero());
      EXPECT_TRUE(decimate(TruthTable::constant(n, false), i).is_zero());
    }
  }
}

TEST(Decimate, Errors) {
  EXPECT_THROW(decimate(parity(3), 0), InvalidArgument);
  EXPECT_THROW(decimate(parity(3), 4), InvalidArgument);
  EXPECT_THROW(decimate(TruthTable::constant(0, true), 1), InvalidArgument);
}

TEST(Decimate, MatchesInputByInputOracle) {
  std::mt19937_64 rng(41);
  for (int rep = 0; rep < 300; ++rep) {
    const unsigned n = 1 + static_cast<unsigned>(rng() % 10);
    const auto t = oracle::random_table(n, rng);
    const unsigned i = 1 + static_cast<unsigned>(rng() % n);
    ASSERT_EQ(decimate(t, i), oracle::decimate(t, i)) << "n=" << n << " i=" << i;
  }
}

TEST(Decimate, MatchesOracleAtEveryArityAndLabel) {
  // exercises both the in-word and the whole-word code paths
  std::mt19937_64 rng(43);
  for (unsigned n = 1; n <= 13; ++n) {
    const auto t = oracle::random_table(n, rng);
    for (unsigned i = 1; i <= n; ++i) ASSERT_EQ(decimate(t, i), oracle::decimate(t, i)) << n << "/" << i;
  }
}

TEST(Decimate, Linearity) {
  std::mt19937_64 rng(47);
  for (int rep = 0; rep < 1000; ++rep) {
    const unsigned n = 1 + static_cast<unsigned>(rng() % 12);
    const auto a = oracle::random_table(n, rng);
    const auto b = oracle::random_table(n, rng);
    const unsigned i = 1 + static_cast<unsigned>(rng() % n);
    ASSERT_EQ(decimate(a ^ b, i), decimate(a, i) ^ decimate(b, i));
  }
}

TEST(Decimate, DegreeDrops) {
  std::mt19937_64 rng(53);
  for (int rep = 0; rep < 300; ++rep) {
    const unsigned n = 1 + static_cast<unsigned>(rng() % 10);
    const unsigned xi = 1 + static_cast<unsigned>(rng() % n);
    const auto t = anf_to_table(oracle::random_anf(n, xi, rng));
    const unsigned i = 1 + static_cast<unsigned>(rng() % n);
    ASSERT_LE(anf_degree(decimate(t, i)), anf_degree(t) - 1);
  }
}

TEST(DecimationOrder, Validation) {
  EXPECT_THROW(DecimationOrder(4, {1, 1}), InvalidArgument);
  EXPECT_THROW(DecimationOrder(4, {0}), InvalidArgument);
  EXPECT_THROW(DecimationOrder(4, {5}), InvalidArgument);
  EXPECT_NO_THROW(DecimationOrder(4, {4, 1, 3, 2}));
  EXPECT_EQ(DecimationOrder(4, {4, 1, 3}).prefix(2).vars(), (std::vector<unsigned>{4, 1}));
}

TEST(DecimationOrder, PositionalLabels) {
  EXPECT_EQ(positional_labels(DecimationOrder(5, {3, 1, 5, 2})), (std::vector<unsigned>{3, 1, 3, 1}));
}

TEST(DecimateSeq, ParityFourTwoSteps) {
  EXPECT_EQ(decimate_seq(parity(4), DecimationOrder(4, {1, 2})), TruthTable::constant(2, false));
}

TEST(DecimateSeq, DegreeTwoAnyOrderOfLengthThree) {
  const auto t = anf_to_table(Anf::from_label_sets(4, {{1, 2}, {3}}));
  std::vector<unsigned> vars{1, 2, 3, 4};
  do {
    ASSERT_TRUE(decimate_seq(t, DecimationOrder(4, {vars[0], vars[1], vars[2]})).is_zero());
  } while (std::next_permutation(vars.begin(), vars.end()));
}

TEST(DecimateSeq, EmptyOrderIsIdentity) {
  std::mt19937_64 rng(59);
  const auto t = oracle::random_table(6, rng);
  EXPECT_EQ(decimate_seq(t, DecimationOrder(6, {})), t);
}

TEST(DecimateSeq, UsesOriginalLabels) {
  std::mt19937_64 rng(61);
  for (int rep = 0; rep < 200; ++rep) {
    const unsigned n = 2 + static_cast<unsigned>(rng() % 8);
    const auto t = oracle::random_table(n, rng);
    std::vector<unsigned> vars(n);
    std::iota(vars.begin(), vars.end(), 1u);
    std::shuffle(vars.begin(), vars.end(), rng);
    vars.resize(1 + rng() % n);
    ASSERT_EQ(decimate_seq(t, DecimationOrder(n, vars)), oracle::decimate_original(t, vars));
  }
}

TEST(DecimateSeq, ArityMismatch) {
  EXPECT_THROW(decimate_seq(parity(4), DecimationOrder(5, {1})), ArityMismatch);
}

TEST(SampleOrders, ExhaustiveWhenSmall) {
  const auto s = sample_orders(5, 3);
  EXPECT_TRUE(s.exhaustive);
  EXPECT_EQ(s.orders.size(), 5u * 4u * 3u);
  auto sorted = s.orders;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.vars() < b.vars(); });
  EXPECT_TRUE(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
}

TEST(SampleOrders, RandomWhenLargeAndSeeded) {
  SamplingPolicy p;
  p.seed = 99;
  const auto a = sample_orders(12, 4, p);
  const auto b = sample_orders(12, 4, p);
  EXPECT_FALSE(a.exhaustive);
  EXPECT_EQ(a.orders.size(), 64u);
  EXPECT_EQ(a.orders, b.orders);
  p.seed = 100;
  EXPECT_NE(sample_orders(12, 4, p).orders, a.orders);
}

TEST(SampleOrders, LengthBeyondArity) { EXPECT_THROW(sample_orders(3, 4), InvalidArgument); }

TEST(AnnihilationDepth, Parity) {
  for (unsigned n = 2; n <= 14; ++n) EXPECT_EQ(annihilation_depth(parity(n)).depth, 2u) << n;
}

TEST(AnnihilationDepth, Constants) {
  EXPECT_EQ(annihilation_depth(TruthTable::constant(6, true)).depth, 1u);
  EXPECT_EQ(annihilation_depth(TruthTable::constant(6, false)).depth, 0u);
}

TEST(AnnihilationDepth, RandomDegreeThreeAtTen) {
  std::mt19937_64 rng(67);
  const auto t = anf_to_table(oracle::random_anf(10, 3, rng));
  ASSERT_EQ(oracle::degree(t), 3u);
  // exhaustive over all orders of length 4 and 3 at n = 10
  SamplingPolicy all;
  all.exhaustive_max_arity = 10;
  const auto r = annihilation_depth(t, all, 5);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_EQ(r.depth, 4u);
  EXPECT_EQ(annihilation_depth(t).depth, 4u);
}

TEST(AnnihilationDepth, DepthIsDegreePlusOne) {
  std::mt19937_64 rng(71);
  for (int rep = 0; rep < 60; ++rep) {
    const unsigned n = 1 + static_cast<unsigned>(rng() % 9);
    const auto t = oracle::random_table(n, rng);
    const auto r = annihilation_depth(t);
    if (!t.is_zero() && oracle::degree(t) == n) {
      ASSERT_FALSE(r.depth.has_value());
    } else {
      ASSERT_EQ(r.depth, t.is_zero() ? 0u : oracle::degree(t) + 1);
    }
  }
}

TEST(AnnihilationDepth, NoneBelowCap) {
  const auto r = annihilation_depth(parity(6), SamplingPolicy{}, 1);
  EXPECT_FALSE(r.depth.has_value());
  EXPECT_EQ(r.cap, 1u);
}

TEST(AnnihilationDepth, InvalidOrders) {
  std::vector<DecimationOrder> short_orders{DecimationOrder(6, {1})};
  EXPECT_THROW(annihilation_depth(parity(6), short_orders, 2), InvalidArgument);
  std::vector<DecimationOrder> wrong{DecimationOrder(5, {1, 2})};
  EXPECT_THROW(annihilation_depth(parity(6), wrong, 2), ArityMismatch);
  EXPECT_THROW(annihilation_depth(parity(6), SamplingPolicy{}, 7), InvalidArgument);
}

TEST(OrderIndependence, PairsAndSingletons) {
  std::mt19937_64 rng(73);
  for (int rep = 0; rep < 100; ++rep) {
    const unsigned n = 2 + static_cast<unsigned>(rng() % 8);
    const auto t = oracle::random_table(n, rng);
    const unsigned a = 1 + static_cast<unsigned>(rng() % n);
    unsigned b = 1 + static_cast<unsigned>(rng() % n);
    if (b == a) b = a % n + 1;
    const std::vector<unsigned> pair{a, b};
    const std::vector<unsigned> single{a};
    ASSERT_TRUE(order_independence_check(t, pair));
    ASSERT_TRUE(order_independence_check(t, single));
    ASSERT_EQ(decimate_seq(t, DecimationOrder(n, {a, b})), decimate_seq(t, DecimationOrder(n, {b, a})));
  }
}

TEST(OrderIndependence, FourOfEight) {
  std::mt19937_64 rng(79);
  const auto t = oracle::random_table(8, rng);
  const std::vector<unsigned> s{2, 5, 7, 8};
  EXPECT_TRUE(order_independence_check(t, s));
  std::vector<unsigned> perm = s;
  const auto reference = oracle::decimate_original(t, perm);
  do {
    ASSERT_EQ(oracle::decimate_original(t, perm), reference);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(OrderIndependence, InvalidSet) {
  const std::vector<unsigned> dup{1, 1};
  const std::vector<unsigned> out{9};
  EXPECT_THROW((void)order_independence_check(parity(4), dup), InvalidArgument);
  EXPECT_THROW((void)order_independence_check(parity(4), out), InvalidArgument);
}
