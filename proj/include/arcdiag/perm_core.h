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

// Cyclic permutations of [n] and their linear arc diagrams.
//
// A cyclic permutation is stored as the sequence seq = s_1 s_2 ... s_n with
// s_1 = 1; the closing arc joins s_n back to s_1. Its arc diagram draws the
// n vertices on a line and every cycle edge as an arc (i, j) with i < j.

#ifndef ARCDIAG_PERM_CORE_H_
#define ARCDIAG_PERM_CORE_H_

#include <compare>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace arcdiag {

// An undirected arc stored with its smaller endpoint first.
struct Arc {
  int i = 0;
  int j = 0;

  // Builds the arc joining a and b regardless of argument order.
  static Arc Between(int a, int b) { return a < b ? Arc{a, b} : Arc{b, a}; }

  auto operator<=>(const Arc&) const = default;
};

class CyclicPerm {
 public:
  // Throws kNotAPermutation, kNotNormalized or kTooSmall.
  static CyclicPerm FromSequence(std::vector<int> seq);

  int size() const { return static_cast<int>(seq_.size()); }

  // Zero-based access into the stored sequence.
  int operator[](int index) const { return seq_[index]; }

  // One-based access with cyclic indices: At(0) == At(n), At(n + 1) == At(1).
  int At(int position) const;

  std::span<const int> seq() const { return seq_; }

  // positions()[v] is the one-based position of value v (index 0 unused).
  std::vector<int> Positions() const;

  std::string ToString() const;

  auto operator<=>(const CyclicPerm&) const = default;

 private:
  explicit CyclicPerm(std::vector<int> seq) : seq_(std::move(seq)) {}

  std::vector<int> seq_;
};

// The n-arc diagram of a cyclic permutation; arcs sorted lexicographically.
struct SigmaDiagram {
  int n = 0;
  std::vector<Arc> arcs;

  bool operator==(const SigmaDiagram&) const = default;
};

// Ramphoid/keratoid partition of the vertices of a sigma diagram.
struct Classification {
  std::vector<int> r;     // left ramphoids: smaller than both neighbors
  std::vector<int> rbar;  // right ramphoids: larger than both neighbors
  std::vector<int> k;     // keratoids: between their neighbors

  int n() const { return static_cast<int>(r.size() + rbar.size() + k.size()); }

  bool operator==(const Classification&) const = default;
};

// Parses space-separated decimal integers.
CyclicPerm ParsePerm(std::string_view text);

CyclicPerm Reverse(const CyclicPerm& p);

SigmaDiagram ArcSet(const CyclicPerm& p);

Classification Classify(const SigmaDiagram& d);

// True when the arcs on [n] form one simple cycle through every vertex.
bool IsHamiltonianCycle(int n, std::span<const Arc> arcs);

// Walks a Hamiltonian cycle from vertex 1, first stepping to `second`.
// Throws kNotAGenerator when the arcs are not such a cycle or `second` is
// not adjacent to 1.
CyclicPerm WalkCycle(int n, std::span<const Arc> arcs, int second);

// Visits every normalized cyclic permutation of [n] in lexicographic order.
void ForEachCyclicPerm(int n, const std::function<void(const CyclicPerm&)>& fn);

std::string FormatArcs(std::span<const Arc> arcs);

}  // namespace arcdiag

#endif  // ARCDIAG_PERM_CORE_H_
