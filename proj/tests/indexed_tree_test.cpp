#include "flowshop/indexed_tree.hpp"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "flowshop/oracles.hpp"

namespace flowshop {
namespace {

using oracles::NaiveArray;

IndexedTree make(std::vector<std::int64_t> v,
                 TiePolicy policy = TiePolicy::kRightmost) {
  return IndexedTree(v, policy);
}

TEST(IndexedTree, BuildAndPrefixSum) {
  EXPECT_EQ(make({}).prefix_sum(0), 0);
  EXPECT_EQ(make({}).max_prefix_sums(0), (Extremum{0, 0}));
  EXPECT_EQ(make({7}).prefix_sum(1), 7);
  EXPECT_EQ(make({1, -2, 0}).prefix_sum(3), -1);
  EXPECT_EQ(make({1, -2, 0}).prefix_sum(2), -1);
  EXPECT_EQ(make({1, -2, 0}).prefix_sum(0), 0);
}

TEST(IndexedTree, PointAdd) {
  auto t = make({3, -1, 2});
  t.add(2, -5);
  EXPECT_EQ(t.prefix_sum(3), -1);

  auto u = make({1, -2, 0});
  u.add(2, 2);
  EXPECT_EQ(u.max_prefix_sums(3).value, 1);

  auto w = make({5});
  w.add(1, -5);
  EXPECT_EQ(w.prefix_sum(1), 0);
}

TEST(IndexedTree, PointSet) {
  auto t = make({4, 3, 5});
  t.set(3, 0);
  EXPECT_EQ(t.suffix_max(2), (Extremum{3, 2}));
  EXPECT_EQ(t.suffix_max(3), (Extremum{0, 3}));

  auto u = make({4, 3, 5});
  u.set(1, 9);
  EXPECT_EQ(u.prefix_max(3), (Extremum{9, 1}));
  EXPECT_EQ(u.value(1), 9);
}

TEST(IndexedTree, PrefixAndSuffixMax) {
  auto t = make({4, 3, 5});
  EXPECT_EQ(t.prefix_max(2), (Extremum{4, 1}));
  EXPECT_EQ(t.suffix_max(2), (Extremum{5, 3}));
  EXPECT_EQ(t.suffix_max(1), (Extremum{5, 3}));
  EXPECT_EQ(make({-9}).prefix_max(1), (Extremum{-9, 1}));
}

TEST(IndexedTree, TiePolicyOnValues) {
  EXPECT_EQ(make({4, 4, 5}, TiePolicy::kRightmost).prefix_max(2),
            (Extremum{4, 2}));
  EXPECT_EQ(make({4, 4, 5}, TiePolicy::kLeftmost).prefix_max(2),
            (Extremum{4, 1}));
  EXPECT_EQ(make({2, 1, 1}, TiePolicy::kRightmost).prefix_min(3),
            (Extremum{1, 3}));
  EXPECT_EQ(make({2, 1, 1}, TiePolicy::kLeftmost).prefix_min(3),
            (Extremum{1, 2}));
}

TEST(IndexedTree, MaxPrefixSums) {
  EXPECT_EQ(make({1, -2, 0}).max_prefix_sums(3), (Extremum{1, 1}));
  EXPECT_EQ(make({1, 0, 0}, TiePolicy::kRightmost).max_prefix_sums(3),
            (Extremum{1, 3}));
  EXPECT_EQ(make({1, 0, 0}, TiePolicy::kLeftmost).max_prefix_sums(3),
            (Extremum{1, 1}));
  EXPECT_EQ(make({-2}).max_prefix_sums(1), (Extremum{-2, 1}));
  EXPECT_EQ(make({1, -2, 0}).min_prefix_sums(3), (Extremum{-1, 3}));
  EXPECT_EQ(make({1, -2, 0}, TiePolicy::kLeftmost).min_prefix_sums(3),
            (Extremum{-1, 2}));
}

TEST(IndexedTree, RangePrefixSumsAreAbsolute) {
  auto t = make({5, -1, -1, 3, -4});  // prefix sums 5 4 3 6 2
  EXPECT_EQ(t.max_prefix_sums(2, 3), (Extremum{4, 2}));
  EXPECT_EQ(t.max_prefix_sums(2, 5), (Extremum{6, 4}));
  EXPECT_EQ(t.min_prefix_sums(4, 5), (Extremum{2, 5}));
}

TEST(IndexedTree, LastAtLeast) {
  auto t = make({4, 9, 2, 9, 1, 3});
  EXPECT_EQ(t.last_at_least(1, 6, 9), 4U);
  EXPECT_EQ(t.last_at_least(1, 3, 9), 2U);
  EXPECT_EQ(t.last_at_least(5, 6, 2), 6U);
  EXPECT_EQ(t.last_at_least(5, 5, 2), 0U);
}

TEST(IndexedTree, RejectsOutOfRange) {
  auto t = make({1, 2, 3});
  EXPECT_THROW(t.add(0, 1), std::out_of_range);
  EXPECT_THROW(t.set(4, 1), std::out_of_range);
  EXPECT_THROW(t.prefix_sum(4), std::out_of_range);
  EXPECT_THROW(t.prefix_max(0), std::out_of_range);
  EXPECT_THROW(t.suffix_max(4), std::out_of_range);
  EXPECT_THROW(t.max_prefix_sums(4), std::out_of_range);
  EXPECT_THROW(make({}).prefix_max(1), std::out_of_range);
}

TEST(IndexedTree, IdentityUpdatesChangeNothing) {
  auto t = make({3, -7, 2, 2, 0});
  auto u = t;
  u.add(3, 0);
  u.set(4, u.value(4));
  for (std::size_t i = 1; i <= 5; ++i) {
    EXPECT_EQ(t.prefix_sum(i), u.prefix_sum(i));
    EXPECT_EQ(t.max_prefix_sums(i), u.max_prefix_sums(i));
    EXPECT_EQ(t.prefix_max(i), u.prefix_max(i));
    EXPECT_EQ(t.suffix_max(i), u.suffix_max(i));
  }
}

TEST(IndexedTree, AddIsLinear) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> val(-50, 50);
  std::vector<std::int64_t> init(37);
  for (auto& v : init) v = val(rng);
  for (int round = 0; round < 200; ++round) {
    IndexedTree twice(init), once(init);
    const std::size_t i = 1 + rng() % init.size();
    const std::int64_t x = val(rng);
    const std::int64_t y = val(rng);
    twice.add(i, x);
    twice.add(i, y);
    once.add(i, x + y);
    for (std::size_t k = 1; k <= init.size(); ++k) {
      ASSERT_EQ(twice.max_prefix_sums(k), once.max_prefix_sums(k));
      ASSERT_EQ(twice.suffix_max(k), once.suffix_max(k));
    }
  }
}

// Random interleavings against the linear-scan oracle, both tie policies.
// Small value ranges force many ties.
TEST(IndexedTree, MatchesNaiveScan) {
  for (TiePolicy policy : {TiePolicy::kLeftmost, TiePolicy::kRightmost}) {
    std::mt19937_64 rng(policy == TiePolicy::kLeftmost ? 1 : 2);
    for (int round = 0; round < 40; ++round) {
      const std::size_t n = 1 + rng() % 70;
      std::uniform_int_distribution<std::int64_t> val(-4, 4);
      std::vector<std::int64_t> init(n);
      for (auto& v : init) v = val(rng);
      IndexedTree tree(init, policy);
      NaiveArray naive(init, policy);
      for (int op = 0; op < 400; ++op) {
        const std::size_t i = 1 + rng() % n;
        const std::size_t j = i + rng() % (n - i + 1);
        switch (rng() % 8) {
          case 0: {
            const auto x = val(rng);
            tree.add(i, x);
            naive.add(i, x);
            break;
          }
          case 1: {
            const auto x = val(rng);
            tree.set(i, x);
            naive.set(i, x);
            break;
          }
          case 2:
            ASSERT_EQ(tree.prefix_sum(i), naive.prefix_sum(i));
            ASSERT_EQ(tree.max_prefix_sums(i), naive.max_prefix_sums(i));
            ASSERT_EQ(tree.min_prefix_sums(i), naive.min_prefix_sums(i));
            break;
          case 3:
            ASSERT_EQ(tree.prefix_max(i), naive.prefix_max(i));
            ASSERT_EQ(tree.prefix_min(i), naive.prefix_min(i));
            break;
          case 4:
            ASSERT_EQ(tree.suffix_max(i), naive.suffix_max(i));
            ASSERT_EQ(tree.suffix_min(i), naive.suffix_min(i));
            break;
          case 5:
            ASSERT_EQ(tree.range_max(i, j), naive.range_max(i, j));
            ASSERT_EQ(tree.range_min(i, j), naive.range_min(i, j));
            break;
          case 6:
            ASSERT_EQ(tree.max_prefix_sums(i, j), naive.max_prefix_sums(i, j));
            ASSERT_EQ(tree.min_prefix_sums(i, j), naive.min_prefix_sums(i, j));
            break;
          default: {
            const auto t = val(rng);
            ASSERT_EQ(tree.last_at_least(i, j, t), naive.last_at_least(i, j, t));
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace flowshop
