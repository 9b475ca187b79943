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

#include "arcdiag/perm_core.h"

#include <algorithm>

#include "arcdiag/error.h"
#include "gtest/gtest.h"
#include "testing/oracles.h"

namespace arcdiag {
namespace {

std::vector<Arc> ArcsOf(std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Arc> out;
  for (auto [i, j] : pairs) out.push_back({i, j});
  return out;
}

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kParse;
}

TEST(ParsePermTest, AcceptsValidSequences) {
  EXPECT_EQ(ParsePerm("1 3 2 7 8 4 5 6").ToString(), "1 3 2 7 8 4 5 6");
  EXPECT_EQ(ParsePerm("1 2 3").size(), 3);
}

TEST(ParsePermTest, RejectsBadInput) {
  EXPECT_EQ(CodeOf([] { ParsePerm("1 3 2 2"); }), ErrorCode::kNotAPermutation);
  EXPECT_EQ(CodeOf([] { ParsePerm("1 2 5"); }), ErrorCode::kNotAPermutation);
  EXPECT_EQ(CodeOf([] { ParsePerm("2 1 3"); }), ErrorCode::kNotNormalized);
  EXPECT_EQ(CodeOf([] { ParsePerm("1 2"); }), ErrorCode::kTooSmall);
  EXPECT_EQ(CodeOf([] { ParsePerm("1 x 3"); }), ErrorCode::kParse);
  EXPECT_EQ(CodeOf([] { ParsePerm(""); }), ErrorCode::kParse);
}

TEST(CyclicPermTest, CyclicIndexing) {
  const CyclicPerm p = ParsePerm("1 3 2 7 8 4 5 6");
  EXPECT_EQ(p.At(0), 6);
  EXPECT_EQ(p.At(9), 1);
  EXPECT_EQ(p.At(-1), 5);
  EXPECT_EQ(p.Positions(), (std::vector<int>{0, 1, 3, 2, 6, 7, 8, 4, 5}));
}

TEST(ReverseTest, Examples) {
  EXPECT_EQ(Reverse(ParsePerm("1 3 2 7 8 4 5 6")).ToString(), "1 6 5 4 8 7 2 3");
  EXPECT_EQ(Reverse(ParsePerm("1 2 3")).ToString(), "1 3 2");
  EXPECT_EQ(Reverse(ParsePerm("1 4 2 3")).ToString(), "1 3 2 4");
}

TEST(ArcSetTest, Examples) {
  EXPECT_EQ(ArcSet(ParsePerm("1 3 2 7 8 4 5 6")).arcs,
            ArcsOf({{1, 3}, {1, 6}, {2, 3}, {2, 7}, {4, 5}, {4, 8}, {5, 6}, {7, 8}}));
  EXPECT_EQ(ArcSet(ParsePerm("1 2 3")).arcs, ArcsOf({{1, 2}, {1, 3}, {2, 3}}));
  // The closing arc 57 belongs here even though a printed listing drops it.
  EXPECT_EQ(ArcSet(ParsePerm("1 2 3 8 7 5 4 6")).arcs,
            ArcsOf({{1, 2}, {1, 6}, {2, 3}, {3, 8}, {4, 5}, {4, 6}, {5, 7}, {7, 8}}));
  EXPECT_EQ(FormatArcs(ArcSet(ParsePerm("1 3 2 7 8 4 5 6")).arcs), "{13,16,23,27,45,48,56,78}");
}

TEST(ClassifyTest, Examples) {
  Classification c = Classify(ArcSet(ParsePerm("1 3 2 7 8 4 5 6")));
  EXPECT_EQ(c.r, (std::vector<int>{1, 2, 4}));
  EXPECT_EQ(c.rbar, (std::vector<int>{3, 6, 8}));
  EXPECT_EQ(c.k, (std::vector<int>{5, 7}));

  c = Classify(ArcSet(ParsePerm("1 3 2 7 5 6 4 8")));
  EXPECT_EQ(c.r, (std::vector<int>{1, 2, 4, 5}));
  EXPECT_EQ(c.rbar, (std::vector<int>{3, 6, 7, 8}));
  EXPECT_TRUE(c.k.empty());

  c = Classify(ArcSet(ParsePerm("1 2 3")));
  EXPECT_EQ(c, (Classification{{1}, {3}, {2}}));
}

TEST(WalkCycleTest, RecoversBothDirections) {
  const CyclicPerm p = ParsePerm("1 3 2 7 8 4 5 6");
  const std::vector<Arc> arcs = ArcSet(p).arcs;
  EXPECT_EQ(WalkCycle(8, arcs, 3), p);
  EXPECT_EQ(WalkCycle(8, arcs, 6), Reverse(p));
  EXPECT_THROW(WalkCycle(8, arcs, 2), Error);
  EXPECT_FALSE(IsHamiltonianCycle(6, ArcsOf({{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}})));
}

TEST(ForEachCyclicPermTest, VisitsFactorialManyInOrder) {
  std::vector<CyclicPerm> seen;
  ForEachCyclicPerm(5, [&](const CyclicPerm& p) { seen.push_back(p); });
  EXPECT_EQ(seen.size(), 24u);
  EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
  EXPECT_EQ(std::adjacent_find(seen.begin(), seen.end()), seen.end());
}

// Exhaustive properties over every cyclic permutation with 3 <= n <= 8.
TEST(PermCorePropertyTest, ExhaustiveInvariants) {
  for (int n = 3; n <= 8; ++n) {
    ForEachCyclicPerm(n, [&](const CyclicPerm& p) {
      const CyclicPerm rev = Reverse(p);
      ASSERT_EQ(Reverse(rev), p);
      const SigmaDiagram d = ArcSet(p);
      ASSERT_EQ(d, ArcSet(rev));
      ASSERT_TRUE(IsHamiltonianCycle(n, d.arcs));
      const Classification c = Classify(d);
      ASSERT_EQ(c.r.size(), c.rbar.size()) << p.ToString();
      ASSERT_EQ(2 * c.r.size() + c.k.size(), static_cast<std::size_t>(n));
      ASSERT_EQ(c.r.front(), 1);
      ASSERT_EQ(c.rbar.back(), n);
      ASSERT_EQ(WordOf(c), testing::WordFromNeighbors(p)) << p.ToString();
    });
  }
}

}  // namespace
}  // namespace arcdiag
