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

// Generators of a b-diagram: the cyclic permutations whose arc set contains
// every arc of the diagram.
//
// Three independent routes produce the generator set:
//   EnumerateGenerators  circular block orders times block orientations
//   CompleteTable        backtracking completion of the missing arcs
//   GeneratorsOracle     filter over every cyclic permutation of [n]
// All return the same lexicographically sorted list.

#ifndef ARCDIAG_GENERATION_H_
#define ARCDIAG_GENERATION_H_

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "arcdiag/bdiagram.h"
#include "arcdiag/perm_core.h"

namespace arcdiag {

using BigCount = boost::multiprecision::cpp_int;
using GeneratorSet = std::vector<CyclicPerm>;

inline constexpr std::uint64_t kDefaultGeneratorCap = 1'000'000;

// The concatenation b_1 b_2 ... b_m rotated to start at 1.
CyclicPerm CanonicalGenerator(const BDiagram& b);

// 2^(m - l) * (m - 1)! where l counts singleton blocks.
BigCount CountGenerators(const BDiagram& b);

// Throws kCapExceeded when CountGenerators(b) > cap.
GeneratorSet EnumerateGenerators(const BDiagram& b, std::uint64_t cap = kDefaultGeneratorCap);

GeneratorSet CompleteTable(const BDiagram& b, std::uint64_t cap = kDefaultGeneratorCap);

// Throws kTooLarge for n > kGeneratorOracleMaxN.
inline constexpr int kGeneratorOracleMaxN = 10;
GeneratorSet GeneratorsOracle(const BDiagram& b);

struct CommonGenerators {
  GeneratorSet generators;       // intersection of both generator sets
  bool first_within_second = false;   // arcs(b) ⊆ arcs(b2)
  bool second_within_first = false;   // arcs(b2) ⊆ arcs(b)
};

// Isolated vertices play no part in the subset tests. Throws kSizeMismatch
// when the diagrams live on different vertex counts.
CommonGenerators FindCommonGenerators(const BDiagram& b, const BDiagram& b2,
                                      std::uint64_t cap = kDefaultGeneratorCap);

}  // namespace arcdiag

#endif  // ARCDIAG_GENERATION_H_
