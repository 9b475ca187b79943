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

// Letter encodings of sigma diagrams and b-diagrams.
//
// Sigma words use {r, r̄, k}; b-words add {α, ᾱ, e}. The ASCII spelling is
// fixed: r -> 'r', r̄ -> 'R', k -> 'k', α -> 'a', ᾱ -> 'A', e -> 'e'.

#ifndef ARCDIAG_WORDS_H_
#define ARCDIAG_WORDS_H_

#include <string>
#include <string_view>
#include <vector>

#include "arcdiag/perm_core.h"

namespace arcdiag {

enum class Letter : char {
  kR = 'r',         // two arcs start here
  kRbar = 'R',      // two arcs end here
  kK = 'k',         // one arc ends, one starts
  kAlpha = 'a',     // a single arc starts
  kAlphaBar = 'A',  // a single arc ends
  kE = 'e',         // isolated
};

using Word = std::vector<Letter>;

// kSigma draws k as a flat step; kB draws it as a down-up valley and doubles
// the r/r̄ steps.
enum class Dialect { kSigma, kB };

// Throws kParse on unknown characters or empty input, kAlphabetMismatch when
// a b-only letter appears in a sigma word.
Word ParseWord(std::string_view text, Dialect dialect = Dialect::kB);

std::string ToString(const Word& word);

bool IsSigmaLetter(Letter letter);

// Letter of each vertex in natural order.
Word WordOf(const Classification& c);
Word WordOf(const CyclicPerm& p);

// Inverse of WordOf(Classification); throws kAlphabetMismatch.
Classification ClassificationOf(const Word& word);

// Endpoint rules (w_1 = r, w_2 != r̄, w_{n-1} != r, w_n = r̄) plus equal
// r/r̄ counts, over the sigma alphabet.
bool SatisfiesSigmaRules(const Word& word);

struct WordPredicates {
  bool is_motzkin = false;
  bool is_dyck = false;
  bool is_elevated = false;

  bool operator==(const WordPredicates&) const = default;
};

// Throws kAlphabetMismatch for b-only letters.
WordPredicates Predicates(const Word& word);

// Reorders letters along the cycle: result[i] = word[seq[i]].
// Throws kLengthMismatch.
Word ReindexWord(const Word& word, const CyclicPerm& p);

// For keratoid-free permutations the word is fixed by position parity:
// vertex v is r exactly when its position in seq is odd.
// Throws kHasKeratoids.
Word DyckParityWord(const CyclicPerm& p);

// Per-letter degree: r̄ -2, ᾱ -1, e/k 0, α 1, r 2.
int Degree(Letter letter);
std::vector<int> DegreeVector(const Word& word);

enum class Step { kUp, kDown, kFlat };

struct StepPath {
  std::vector<Step> steps;
  std::vector<int> heights;  // height after each step
  std::vector<int> vertex;   // one-based vertex that produced each step

  bool operator==(const StepPath&) const = default;
};

// Throws kAlphabetMismatch when a sigma path is requested for a b-word.
StepPath PathSteps(const Word& word, Dialect dialect);

// Expands every letter into single-step letters: r -> αα, r̄ -> ᾱᾱ,
// k -> ᾱα; α, ᾱ and e are kept.
Word Inflate(const Word& word);

}  // namespace arcdiag

#endif  // ARCDIAG_WORDS_H_
