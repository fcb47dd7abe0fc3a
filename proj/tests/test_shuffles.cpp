#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "oracles.hpp"
#include "surj/shuffles.hpp"
#include "surj/suites.hpp"

using namespace surj;

namespace {

Surjection w(std::initializer_list<Letter> letters) { return Surjection(std::vector<Letter>(letters)); }

std::set<Surjection> maps_of(const std::vector<Stuffle>& st) {
  std::set<Surjection> out;
  for (const auto& s : st) out.insert(s.map);
  return out;
}

std::set<oracle::Word> words_of(const std::vector<Surjection>& v) {
  std::set<oracle::Word> out;
  for (const auto& x : v) out.insert(x.word());
  return out;
}

}  // namespace

TEST(Composition, RejectsNonPositiveParts) {
  EXPECT_THROW(Composition({2, 0}), input_error);
  EXPECT_EQ(Composition({2, 1, 3}).total(), 6);
}

TEST(Epsilon, Examples) {
  EXPECT_EQ(epsilon(Composition{1, 1}), w({2, 1}));
  EXPECT_EQ(epsilon(Composition{2, 1}), w({2, 3, 1}));
  EXPECT_EQ(epsilon(Composition{1, 1, 1}), w({3, 2, 1}));
}

TEST(Epsilon, IsBlockReversal) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& parts : surj::detail::compositions(n))
      EXPECT_EQ(epsilon(Composition(parts)), surj::detail::block_reversal(parts));
}

TEST(Shuffles, RightShufflesOfTwoTwo) {
  const auto got = enumerate_shuffles(Composition{2, 2}, BlockFilter::right);
  EXPECT_EQ(std::set<Surjection>(got.begin(), got.end()),
            (std::set<Surjection>{w({1, 2, 3, 4}), w({1, 3, 2, 4}), w({2, 3, 1, 4})}));
}

TEST(Shuffles, MatchPermutationOracle) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& parts : surj::detail::compositions(n))
      ASSERT_EQ(words_of(enumerate_shuffles(Composition(parts))), oracle::shuffles(parts));
}

TEST(Shuffles, BinomialCounts) {
  for (int r = 1; r <= 7; ++r)
    for (int s = 1; r + s <= 8; ++s) {
      long long binom = 1;
      for (int i = 1; i <= r; ++i) binom = binom * (s + i) / i;
      EXPECT_EQ(static_cast<long long>(enumerate_shuffles(Composition{r, s}).size()), binom);
    }
}

TEST(Stuffles, OneOne) {
  EXPECT_EQ(maps_of(enumerate_stuffles(Composition{1, 1})), (std::set<Surjection>{w({1, 2}), w({2, 1}), w({1, 1})}));
}

TEST(Stuffles, MergedTwoTwo) {
  const auto st = enumerate_stuffles(Composition{2, 2}, BlockFilter::merged);
  EXPECT_EQ(maps_of(st), (std::set<Surjection>{w({1, 3, 2, 3}), w({2, 3, 1, 3}), w({1, 2, 1, 2})}));
  for (const auto& s : st) EXPECT_EQ(s.defect(), s.map == w({1, 2, 1, 2}) ? 2 : 1);
}

TEST(Stuffles, RightTwoTwo) {
  const auto st = maps_of(enumerate_stuffles(Composition{2, 2}, BlockFilter::right));
  EXPECT_EQ(st.size(), 5u);
  EXPECT_TRUE(st.count(w({1, 2, 1, 3})));
  EXPECT_TRUE(st.count(w({1, 2, 2, 3})));
}

TEST(Stuffles, FiltersMatchBruteForce) {
  for (int r = 1; r <= 3; ++r)
    for (int s = 1; r + s <= 5; ++s) {
      auto get = [&](BlockFilter f) {
        std::set<oracle::Word> out;
        for (const auto& st : enumerate_stuffles(Composition{r, s}, f)) out.insert(st.map.word());
        return out;
      };
      auto brute = [&](char where) {
        const auto v = oracle::stuffles(static_cast<std::size_t>(r), static_cast<std::size_t>(s), where);
        return std::set<oracle::Word>(v.begin(), v.end());
      };
      EXPECT_EQ(get(BlockFilter::all), brute('a'));
      EXPECT_EQ(get(BlockFilter::left), brute('x'));
      EXPECT_EQ(get(BlockFilter::right), brute('y'));
      EXPECT_EQ(get(BlockFilter::merged), brute('b'));
    }
}

TEST(Stuffles, CacheReturnsEnumeration) {
  const auto& cached = cached_stuffles(2, 3, BlockFilter::weak);
  std::vector<Surjection> direct;
  for (auto& st : enumerate_stuffles(Composition{2, 3}, BlockFilter::weak)) direct.push_back(st.map);
  EXPECT_EQ(cached, direct);
}

TEST(ShuffleSets, SuitePasses) {
  const auto r = shuffle_sets_suite(6);
  EXPECT_TRUE(r.pass()) << (r.counterexample ? r.counterexample->relation + ": " + r.counterexample->detail : "");
  EXPECT_GT(r.checked, 100u);
}
