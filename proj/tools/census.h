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

// Exhaustive census of the sigma words of all cyclic permutations of [n].

#ifndef ARCDIAG_TOOLS_CENSUS_H_
#define ARCDIAG_TOOLS_CENSUS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "arcdiag/generation.h"
#include "arcdiag/perm_core.h"
#include "arcdiag/words.h"

namespace arcdiag::cli {

inline constexpr int kCensusMaxN = 10;

// Motzkin numbers 1, 1, 2, 4, 9, 21, ... by the convolution recurrence.
BigCount MotzkinNumber(int k);
// Catalan numbers 1, 1, 2, 5, 14, ... by the convolution recurrence.
BigCount CatalanNumber(int k);
// Dyck words of length n that touch zero only at their ends.
BigCount ElevatedDyckCount(int n);

struct SplitViolation {
  Word word;
  std::size_t pairs = 0;       // reverse pairs of this word
  std::vector<CyclicPerm> violating;  // one member of each violating pair
};

struct CensusReport {
  int n = 0;
  std::uint64_t permutations = 0;

  std::uint64_t distinct_words = 0;
  BigCount expected_words;             // M_{n-2}
  std::uint64_t elevated_motzkin = 0;  // counted over all 3^n letter strings

  std::uint64_t keratoid_free_words = 0;
  BigCount expected_keratoid_free;   // elevated Dyck count
  std::uint64_t elevated_dyck = 0;   // counted over all 3^n letter strings

  // Words whose permutation set is not halved by the test s_2 = min(r̄ ∪ k).
  std::vector<SplitViolation> split_violations;

  bool words_pass() const {
    return BigCount(distinct_words) == expected_words &&
           BigCount(elevated_motzkin) == expected_words;
  }
  bool keratoid_free_pass() const {
    return BigCount(keratoid_free_words) == expected_keratoid_free &&
           BigCount(elevated_dyck) == expected_keratoid_free;
  }
};

// Throws kTooSmall for n < 3 and kTooLarge for n > kCensusMaxN.
CensusReport RunCensus(int n);

std::string FormatCensus(const CensusReport& report);

}  // namespace arcdiag::cli

#endif  // ARCDIAG_TOOLS_CENSUS_H_
