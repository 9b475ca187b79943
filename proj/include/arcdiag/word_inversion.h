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

// Recovering the cyclic permutations that share a given sigma word.

#ifndef ARCDIAG_WORD_INVERSION_H_
#define ARCDIAG_WORD_INVERSION_H_

#include <span>
#include <vector>

#include "arcdiag/perm_core.h"
#include "arcdiag/words.h"

namespace arcdiag {

// Candidate cycle neighbors of every vertex, derived from its class alone:
//   r  -> larger vertices in r̄ ∪ k
//   r̄  -> smaller vertices in r ∪ k
//   k  -> both of the above
class GammaMap {
 public:
  explicit GammaMap(std::vector<std::vector<int>> candidates)
      : candidates_(std::move(candidates)) {}

  int n() const { return static_cast<int>(candidates_.size()); }

  // One-based vertex; the returned set is sorted.
  const std::vector<int>& operator()(int vertex) const { return candidates_[vertex - 1]; }

  bool Contains(int vertex, int neighbor) const;

 private:
  std::vector<std::vector<int>> candidates_;
};

GammaMap Gamma(const Classification& c);

// All p with WordOf(p) == word, sorted lexicographically; both members of
// every reverse pair are present. An empty result is not an error.
// Throws kNotAWord unless the word is an elevated Motzkin word obeying the
// sigma endpoint rules.
std::vector<CyclicPerm> PermsFromWord(const Word& word);

// Brute-force filter of every cyclic permutation of [n]. Same ordering as
// PermsFromWord. Throws kTooLarge for n > kOracleMaxN.
inline constexpr int kOracleMaxN = 10;
std::vector<CyclicPerm> PermsFromWordOracle(const Word& word);

// Keeps one permutation of each reverse pair: the one with s_2 < s_n.
std::vector<CyclicPerm> CanonicalHalf(std::span<const CyclicPerm> perms);

// Permutations p (with p < Reverse(p)) for which neither p nor its reverse
// has s_2 = min(r̄ ∪ k). An empty result means splitting the set by that
// test separates every reverse pair.
std::vector<CyclicPerm> MinSecondSplitViolations(const Word& word,
                                                 std::span<const CyclicPerm> perms);

}  // namespace arcdiag

#endif  // ARCDIAG_WORD_INVERSION_H_
