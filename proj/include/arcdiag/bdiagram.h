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

// Acyclic arc diagrams ("b-diagrams").
//
// A b-diagram on [n] is an ordered list of blocks whose concatenation is a
// permutation of [n]. Consecutive entries of a block are joined by arcs, so
// every block is a path and singleton blocks are isolated vertices. No block
// may cover all n vertices.

#ifndef ARCDIAG_BDIAGRAM_H_
#define ARCDIAG_BDIAGRAM_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arcdiag/perm_core.h"
#include "arcdiag/words.h"

namespace arcdiag {

using Block = std::vector<int>;

class BDiagram {
 public:
  // Throws kEmptyBlock, kNotAPermutation, kTooSmall (n < 3), kBlockTooLong.
  static BDiagram FromBlocks(std::vector<Block> blocks);

  // Rebuilds the blocks of an acyclic arc set on [n] in normalized form.
  // Throws kDegreeExceeded, kWouldCycle, kNotRepresentable (a single path
  // through all n vertices), kOutOfRange.
  static BDiagram FromArcs(int n, std::span<const Arc> arcs);

  int n() const { return n_; }
  int m() const { return static_cast<int>(blocks_.size()); }
  int singletons() const;
  const std::vector<Block>& blocks() const { return blocks_; }

  // Sorted arc list; its size is n - m.
  std::vector<Arc> Arcs() const;
  std::vector<int> Isolated() const;

  // Each block oriented so that its first vertex is smaller than its last,
  // blocks ordered by their smallest vertex. Two diagrams with the same
  // arcs have equal normal forms.
  BDiagram Normalized() const;

  std::string ToString() const;

  bool operator==(const BDiagram&) const = default;

 private:
  BDiagram(int n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks)) {}

  int n_ = 0;
  std::vector<Block> blocks_;
};

// Grammar: blocks separated by '|', vertices by whitespace.
BDiagram ParseB(std::string_view text);

// Arcs and isolated vertices ordered by leading vertex, e.g. {13,2,48,56,7}.
std::string FormatArcSet(const BDiagram& b);

struct BClassification {
  std::vector<int> r;     // two arcs start
  std::vector<int> rbar;  // two arcs end
  std::vector<int> k;     // one ends, one starts
  std::vector<int> a;     // one starts, none ends
  std::vector<int> abar;  // one ends, none starts
  std::vector<int> l;     // isolated

  bool operator==(const BClassification&) const = default;
};

BClassification ClassifyB(const BDiagram& b);

Word BWordOf(const BDiagram& b);

enum class InvalidReason { kNegativePrefix, kBadEndpoints, kNonzeroTotal, kUnrealizable };

std::string_view InvalidReasonName(InvalidReason reason);

struct ZValidation {
  std::optional<BDiagram> witness;  // set iff the word is realizable
  InvalidReason reason = InvalidReason::kUnrealizable;

  bool valid() const { return witness.has_value(); }
};

// Decides whether some b-diagram has the given word. The degree prefix test
// is necessary but not sufficient (rkr̄ passes it and forces a 3-cycle), so
// passing words go through an explicit realization search. The witness is
// the realization with the lexicographically smallest sorted arc list.
ZValidation ValidateZ(const Word& word);

// Arcs of the sigma diagram of p that are not arcs of b. Its size is m.
// Throws kNotAGenerator unless every arc of b is an arc of p.
std::vector<Arc> CutSet(const CyclicPerm& p, const BDiagram& b);

// The normalized diagram whose arcs are CutSet(p, b). Throws kNotAGenerator,
// or kNotRepresentable when the cut set is not itself a b-diagram.
BDiagram Complement(const CyclicPerm& p, const BDiagram& b);

// Largest k such that k arcs satisfy i_1 < ... < i_k < j_1 < ... < j_k
// (0 without arcs, 1 when no two arcs cross).
int MaxCrossing(std::span<const Arc> arcs);
int MaxCrossing(const BDiagram& b);

// Edit operations. Untouched blocks keep their position and orientation;
// blocks created by the edit are oriented first < last.
//
// Add joins two path ends: the earlier block (in block order) is followed by
// the later one. Throws kOutOfRange, kAlreadyPresent, kDegreeExceeded,
// kWouldCycle, kNotRepresentable.
BDiagram AddArc(const BDiagram& b, Arc arc);
// Splits the block holding the arc in place. Throws kNotPresent.
BDiagram RemoveArc(const BDiagram& b, Arc arc);
// Swaps the labels i and j everywhere. Throws kOutOfRange.
BDiagram TransposeLabels(const BDiagram& b, int i, int j);

}  // namespace arcdiag

#endif  // ARCDIAG_BDIAGRAM_H_
