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
#include <charconv>
#include <numeric>

#include "arcdiag/error.h"

namespace arcdiag {

CyclicPerm CyclicPerm::FromSequence(std::vector<int> seq) {
  const int n = static_cast<int>(seq.size());
  std::vector<bool> seen(n + 1, false);
  for (int v : seq) {
    if (v < 1 || v > n || seen[v]) {
      throw Error(ErrorCode::kNotAPermutation,
                  "value " + std::to_string(v) + " is out of range or repeated");
    }
    seen[v] = true;
  }
  if (n < 3) {
    throw Error(ErrorCode::kTooSmall, "a cyclic permutation needs n >= 3");
  }
  if (seq.front() != 1) {
    throw Error(ErrorCode::kNotNormalized, "the first entry must be 1");
  }
  return CyclicPerm(std::move(seq));
}

int CyclicPerm::At(int position) const {
  const int n = size();
  const int index = ((position - 1) % n + n) % n;
  return seq_[index];
}

std::vector<int> CyclicPerm::Positions() const {
  std::vector<int> pos(seq_.size() + 1, 0);
  for (int i = 0; i < size(); ++i) pos[seq_[i]] = i + 1;
  return pos;
}

std::string CyclicPerm::ToString() const {
  std::string out;
  for (int i = 0; i < size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(seq_[i]);
  }
  return out;
}

CyclicPerm ParsePerm(std::string_view text) {
  std::vector<int> seq;
  std::size_t at = 0;
  while (at < text.size()) {
    if (text[at] == ' ' || text[at] == '\t') {
      ++at;
      continue;
    }
    int value = 0;
    auto [end, ec] = std::from_chars(text.data() + at, text.data() + text.size(), value);
    if (ec != std::errc() || (end != text.data() + text.size() && *end != ' ' && *end != '\t')) {
      throw Error(ErrorCode::kParse, "expected integers, got \"" + std::string(text) + "\"");
    }
    seq.push_back(value);
    at = end - text.data();
  }
  if (seq.empty()) throw Error(ErrorCode::kParse, "empty permutation");
  return CyclicPerm::FromSequence(std::move(seq));
}

CyclicPerm Reverse(const CyclicPerm& p) {
  const int n = p.size();
  std::vector<int> seq(n);
  for (int i = 1; i <= n; ++i) seq[i - 1] = p.At(n + 2 - i);
  return CyclicPerm::FromSequence(std::move(seq));
}

SigmaDiagram ArcSet(const CyclicPerm& p) {
  SigmaDiagram d{p.size(), {}};
  d.arcs.reserve(p.size());
  for (int i = 1; i <= p.size(); ++i) d.arcs.push_back(Arc::Between(p.At(i), p.At(i + 1)));
  std::sort(d.arcs.begin(), d.arcs.end());
  return d;
}

Classification Classify(const SigmaDiagram& d) {
  std::vector<int> starts(d.n + 1, 0), ends(d.n + 1, 0);
  for (const Arc& a : d.arcs) {
    ++starts[a.i];
    ++ends[a.j];
  }
  Classification c;
  for (int v = 1; v <= d.n; ++v) {
    if (starts[v] == 2) {
      c.r.push_back(v);
    } else if (ends[v] == 2) {
      c.rbar.push_back(v);
    } else {
      c.k.push_back(v);
    }
  }
  return c;
}

namespace {

std::vector<std::vector<int>> Adjacency(int n, std::span<const Arc> arcs) {
  std::vector<std::vector<int>> adj(n + 1);
  for (const Arc& a : arcs) {
    if (a.i < 1 || a.j > n || a.i >= a.j) {
      throw Error(ErrorCode::kOutOfRange, "arc outside [1, n]");
    }
    adj[a.i].push_back(a.j);
    adj[a.j].push_back(a.i);
  }
  return adj;
}

}  // namespace

bool IsHamiltonianCycle(int n, std::span<const Arc> arcs) {
  if (n < 3 || static_cast<int>(arcs.size()) != n) return false;
  std::vector<std::vector<int>> adj = Adjacency(n, arcs);
  for (int v = 1; v <= n; ++v) {
    if (adj[v].size() != 2 || adj[v][0] == adj[v][1]) return false;
  }
  int prev = 1, cur = adj[1][0], length = 1;
  while (cur != 1) {
    const int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = next;
    ++length;
  }
  return length == n;
}

CyclicPerm WalkCycle(int n, std::span<const Arc> arcs, int second) {
  if (!IsHamiltonianCycle(n, arcs)) {
    throw Error(ErrorCode::kNotAGenerator, "arcs do not form a Hamiltonian cycle");
  }
  std::vector<std::vector<int>> adj = Adjacency(n, arcs);
  if (adj[1][0] != second && adj[1][1] != second) {
    throw Error(ErrorCode::kNotAGenerator, "vertex " + std::to_string(second) + " is not adjacent to 1");
  }
  std::vector<int> seq{1};
  int prev = 1, cur = second;
  while (cur != 1) {
    seq.push_back(cur);
    const int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = next;
  }
  return CyclicPerm::FromSequence(std::move(seq));
}

void ForEachCyclicPerm(int n, const std::function<void(const CyclicPerm&)>& fn) {
  if (n < 3) throw Error(ErrorCode::kTooSmall, "a cyclic permutation needs n >= 3");
  std::vector<int> seq(n);
  std::iota(seq.begin(), seq.end(), 1);
  do {
    fn(CyclicPerm::FromSequence(seq));
  } while (std::next_permutation(seq.begin() + 1, seq.end()));
}

std::string FormatArcs(std::span<const Arc> arcs) {
  const bool wide = std::any_of(arcs.begin(), arcs.end(), [](const Arc& a) { return a.j >= 10; });
  std::string out = "{";
  for (std::size_t t = 0; t < arcs.size(); ++t) {
    if (t > 0) out += ',';
    out += std::to_string(arcs[t].i);
    if (wide) out += '-';
    out += std::to_string(arcs[t].j);
  }
  return out + "}";
}

}  // namespace arcdiag
