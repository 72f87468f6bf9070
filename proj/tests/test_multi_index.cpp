#include "cpt/multi_index.hpp"

#include <gtest/gtest.h>

#include <set>

#include "cpt/error.hpp"

namespace cpt {
namespace {

TEST(MultiIndex, CanonicalizeSorts) {
  EXPECT_EQ(MultiIndex::canonicalize(std::vector<int>{2, 1, 2}, 2).entries(),
            (std::vector<int>{1, 2, 2}));
  EXPECT_EQ(MultiIndex::canonicalize(std::vector<int>{1, 1, 1}, 4).entries(),
            (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(MultiIndex::canonicalize(std::vector<int>{4, 3, 1}, 4).entries(),
            (std::vector<int>{1, 3, 4}));
}

TEST(MultiIndex, CanonicalizeIsIdempotent) {
  auto once = MultiIndex::canonicalize(std::vector<int>{3, 1, 3, 2}, 3);
  auto twice = MultiIndex::canonicalize(once.entries(), 3);
  EXPECT_EQ(once, twice);
}

TEST(MultiIndex, OutOfRangeEntriesRejected) {
  try {
    MultiIndex::canonicalize(std::vector<int>{0, 1}, 2);
    FAIL() << "expected index_out_of_range";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::index_out_of_range);
  }
  EXPECT_THROW(MultiIndex::canonicalize(std::vector<int>{1, 3}, 2), Error);
}

TEST(MultiIndex, BaseSetAndLevel) {
  MultiIndex index({1, 3, 3, 4}, 5);
  EXPECT_EQ(index.base_set(), (std::vector<int>{1, 3, 4}));
  EXPECT_EQ(index.level(), 1 + 3 + 3 + 4 - 4);
  EXPECT_EQ(MultiIndex({1, 1, 1}, 4).level(), 0);
  EXPECT_EQ(MultiIndex({4, 4, 4}, 4).level(), 3 * 3);
}

TEST(MultiIndex, MultiplicityIsMultinomial) {
  EXPECT_EQ(MultiIndex({1, 2, 2}, 2).multiplicity(), 3);   // 3!/2!
  EXPECT_EQ(MultiIndex({1, 2, 3}, 3).multiplicity(), 6);   // 3!
  EXPECT_EQ(MultiIndex({2, 2, 2}, 2).multiplicity(), 1);
  EXPECT_EQ(MultiIndex({1, 1, 2, 2}, 2).multiplicity(), 6);  // 4!/(2!2!)
}

TEST(MultiIndex, StorageSizeIsBinomial) {
  EXPECT_EQ(canonical_count(3, 3), 10u);  // C(5,3)
  EXPECT_EQ(canonical_count(2, 4), 10u);  // C(5,2)
  EXPECT_EQ(canonical_count(4, 2), 5u);   // C(5,4)
  EXPECT_EQ(canonical_count(3, 0), 0u);
}

TEST(MultiIndex, ColexRankEnumeratesDensely) {
  // Ranks must visit [0 .. C(n+m-1,m)) exactly once, in iteration order.
  for (int m : {2, 3, 4}) {
    for (int n : {1, 2, 3, 5}) {
      std::set<std::size_t> seen;
      std::size_t expected_rank = 0;
      for_each_canonical(m, n, [&](const std::vector<int>& entries, std::size_t rank) {
        EXPECT_EQ(rank, expected_rank++);
        EXPECT_EQ(colex_rank(entries), rank);
        seen.insert(rank);
      });
      EXPECT_EQ(seen.size(), canonical_count(m, n));
    }
  }
}

TEST(MultiIndex, ColexOrderStartsAtOnes) {
  std::vector<std::vector<int>> order3;
  for_each_canonical(3, 2, [&](const std::vector<int>& entries, std::size_t) {
    order3.push_back(entries);
  });
  ASSERT_EQ(order3.size(), 4u);
  EXPECT_EQ(order3[0], (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(order3[1], (std::vector<int>{1, 1, 2}));
  EXPECT_EQ(order3[2], (std::vector<int>{1, 2, 2}));
  EXPECT_EQ(order3[3], (std::vector<int>{2, 2, 2}));
}

TEST(MultiIndex, LexOrderDiffersFromColex) {
  std::vector<std::vector<int>> lex;
  for_each_canonical_lex(3, 3, [&](const std::vector<int>& entries) {
    lex.push_back(entries);
  });
  ASSERT_EQ(lex.size(), 10u);
  EXPECT_EQ(lex.front(), (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(lex[1], (std::vector<int>{1, 1, 2}));
  EXPECT_EQ(lex[2], (std::vector<int>{1, 1, 3}));
  EXPECT_EQ(lex.back(), (std::vector<int>{3, 3, 3}));
  EXPECT_TRUE(std::is_sorted(lex.begin(), lex.end()));
}

}  // namespace
}  // namespace cpt
