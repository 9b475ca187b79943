// Copyright 2026 The arcdiag Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "arcdiag/word_inversion.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "arcdiag/error.h"
#include "gtest/gtest.h"
#include "testing/oracles.h"

namespace arcdiag {
namespace {

using testing::Perms;

Word W(const char* text) { return ParseWord(text, Dialect::kSigma); }

std::vector<std::vector<int>> GammaTable(const Word& w) {
  const GammaMap g = Gamma(ClassificationOf(w));
  std::vector<std::vector<int>> out;
  for (int v = 1; v <= g.n(); ++v) out.push_back(g(v));
  return out;
}

TEST(GammaTest, MotzkinCase) {
  EXPECT_EQ(GammaTable(W("rkrRkR")),
            (std::vector<std::vector<int>>{
                {2, 4, 5, 6}, {1, 4, 5, 6}, {4, 5, 6}, {1, 2, 3}, {1, 2, 3, 6}, {1, 2, 3, 5}}));
}

TEST(GammaTest, DyckCase) {
  EXPECT_EQ(GammaTable(W("rrRrRR")),
            (std::vector<std::vector<int>>{
                {3, 5, 6}, {3, 5, 6}, {1, 2}, {5, 6}, {1, 2, 4}, {1, 2, 4}}));
}

TEST(GammaTest, Triangle) {
  EXPECT_EQ(GammaTable(W("rkR")), (std::vector<std::vector<int>>{{2, 3}, {1, 3}, {1, 2}}));
}

TEST(PermsFromWordTest, MotzkinTree) {
  EXPECT_EQ(PermsFromWord(W("rkrRkR")),
            Perms({"1 2 4 3 5 6", "1 2 4 3 6 5", "1 2 5 6 3 4", "1 2 6 5 3 4", "1 6 5 3 4 2",
                   "1 5 6 3 4 2", "1 4 3 6 5 2", "1 4 3 5 6 2"}));
}

TEST(PermsFromWordTest, DyckTree) {
  EXPECT_EQ(PermsFromWord(W("rrRrRR")),
            Perms({"1 3 2 5 4 6", "1 3 2 6 4 5", "1 6 4 5 2 3", "1 5 4 6 2 3"}));
}

TEST(PermsFromWordTest, Triangle) {
  EXPECT_EQ(PermsFromWord(W("rkR")), Perms({"1 2 3", "1 3 2"}));
}

TEST(PermsFromWordTest, RejectsNonWords) {
  for (const char* bad : {"rRrR", "rrR", "rRkk", "kkk", "rkrR"}) {
    try {
      PermsFromWord(W(bad));
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kNotAWord) << bad;
    }
  }
  EXPECT_THROW(PermsFromWord(ParseWord("raA", Dialect::kB)), Error);
}

TEST(PermsFromWordOracleTest, Examples) {
  EXPECT_EQ(PermsFromWordOracle(W("rkrRkR")), PermsFromWord(W("rkrRkR")));
  EXPECT_EQ(PermsFromWordOracle(W("rkR")), Perms({"1 2 3", "1 3 2"}));
  const std::vector<CyclicPerm> both = PermsFromWordOracle(W("rrkkRR"));
  EXPECT_TRUE(std::binary_search(both.begin(), both.end(), ParsePerm("1 4 6 2 3 5")));
  EXPECT_TRUE(std::binary_search(both.begin(), both.end(), ParsePerm("1 3 5 2 4 6")));
  try {
    PermsFromWordOracle(W("rrrrrkRRRRR"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
}

TEST(CanonicalHalfTest, KeepsOneOfEachPair) {
  const std::vector<CyclicPerm> all = PermsFromWord(W("rkrRkR"));
  const std::vector<CyclicPerm> half = CanonicalHalf(all);
  ASSERT_EQ(half.size(), all.size() / 2);
  for (const CyclicPerm& p : half) {
    EXPECT_LT(p[1], p[p.size() - 1]);
    EXPECT_EQ(std::find(half.begin(), half.end(), Reverse(p)), half.end());
  }
}

TEST(MinSecondSplitTest, DetectsViolation) {
  const Word w = W("rrkkRR");
  const std::vector<CyclicPerm> violations = MinSecondSplitViolations(w, PermsFromWord(w));
  EXPECT_NE(std::find(violations.begin(), violations.end(), ParsePerm("1 4 6 2 3 5")),
            violations.end());
  EXPECT_TRUE(MinSecondSplitViolations(W("rkrRkR"), PermsFromWord(W("rkrRkR"))).empty());
}

// Every word of every permutation of [n], n <= 7: the search agrees with the
// brute-force filter, and the word classes partition the permutations.
TEST(WordInversionPropertyTest, ExhaustiveOracleEquivalence) {
  for (int n = 3; n <= 7; ++n) {
    std::map<Word, std::vector<CyclicPerm>> by_word;
    std::size_t total = 0;
    ForEachCyclicPerm(n, [&](const CyclicPerm& p) {
      by_word[WordOf(p)].push_back(p);
      ++total;
    });
    std::size_t covered = 0;
    for (const auto& [word, expected] : by_word) {
      const std::vector<CyclicPerm> found = PermsFromWord(word);
      ASSERT_EQ(found, expected) << ToString(word);
      ASSERT_EQ(found, PermsFromWordOracle(word)) << ToString(word);
      for (const CyclicPerm& p : found) {
        ASSERT_TRUE(std::binary_search(found.begin(), found.end(), Reverse(p)));
      }
      covered += found.size();
    }
    EXPECT_EQ(covered, total);
  }
}

TEST(WordInversionPropertyTest, SampledOracleEquivalence) {
  std::mt19937 rng(11);
  for (int n : {8, 9}) {
    std::vector<int> tail(n - 1);
    std::iota(tail.begin(), tail.end(), 2);
    for (int trial = 0; trial < 6; ++trial) {
      std::shuffle(tail.begin(), tail.end(), rng);
      std::vector<int> seq{1};
      seq.insert(seq.end(), tail.begin(), tail.end());
      const Word w = WordOf(CyclicPerm::FromSequence(seq));
      const std::vector<CyclicPerm> found = PermsFromWord(w);
      ASSERT_EQ(found, PermsFromWordOracle(w)) << ToString(w);
      for (const CyclicPerm& p : found) ASSERT_EQ(WordOf(p), w);
    }
  }
}

}  // namespace
}  // namespace arcdiag
