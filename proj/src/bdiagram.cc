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

#include "arcdiag/bdiagram.h"

#include <algorithm>
#include <charconv>
#include <utility>

#include "arcdiag/error.h"

namespace arcdiag {

namespace {

void OrientBlock(Block& block) {
  if (block.size() > 1 && block.front() > block.back()) std::reverse(block.begin(), block.end());
}

std::vector<int> ParseInts(std::string_view text) {
  std::vector<int> out;
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
    out.push_back(value);
    at = end - text.data();
  }
  return out;
}

void CheckVertex(int n, int v) {
  if (v < 1 || v > n) {
    throw Error(ErrorCode::kOutOfRange, "vertex " + std::to_string(v) + " outside [1, " +
                                            std::to_string(n) + "]");
  }
}

// Locates a vertex: (block index, offset inside the block).
std::pair<int, int> Locate(const std::vector<Block>& blocks, int v) {
  for (int bi = 0; bi < static_cast<int>(blocks.size()); ++bi) {
    const Block& blk = blocks[bi];
    auto it = std::find(blk.begin(), blk.end(), v);
    if (it != blk.end()) return {bi, static_cast<int>(it - blk.begin())};
  }
  throw Error(ErrorCode::kOutOfRange, "vertex " + std::to_string(v) + " not found");
}

}  // namespace

BDiagram BDiagram::FromBlocks(std::vector<Block> blocks) {
  if (blocks.empty()) throw Error(ErrorCode::kEmptyBlock, "no blocks");
  int n = 0;
  for (const Block& blk : blocks) {
    if (blk.empty()) throw Error(ErrorCode::kEmptyBlock, "a block has no vertices");
    n += static_cast<int>(blk.size());
  }
  std::vector<bool> seen(n + 1, false);
  for (const Block& blk : blocks) {
    for (int v : blk) {
      if (v < 1 || v > n || seen[v]) {
        throw Error(ErrorCode::kNotAPermutation,
                    "value " + std::to_string(v) + " is out of range or repeated");
      }
      seen[v] = true;
    }
  }
  if (n < 3) throw Error(ErrorCode::kTooSmall, "a b-diagram needs n >= 3");
  for (const Block& blk : blocks) {
    if (static_cast<int>(blk.size()) == n) {
      throw Error(ErrorCode::kBlockTooLong, "a block may not contain all n vertices");
    }
  }
  return BDiagram(n, std::move(blocks));
}

BDiagram BDiagram::FromArcs(int n, std::span<const Arc> arcs) {
  std::vector<std::vector<int>> adj(n + 1);
  for (const Arc& a : arcs) {
    CheckVertex(n, a.i);
    CheckVertex(n, a.j);
    if (a.i >= a.j) throw Error(ErrorCode::kOutOfRange, "arc endpoints must satisfy i < j");
    adj[a.i].push_back(a.j);
    adj[a.j].push_back(a.i);
  }
  for (int v = 1; v <= n; ++v) {
    if (adj[v].size() > 2) {
      throw Error(ErrorCode::kDegreeExceeded, "vertex " + std::to_string(v) + " has degree > 2");
    }
  }
  std::vector<bool> visited(n + 1, false);
  std::vector<Block> blocks;
  std::size_t covered_arcs = 0;
  // Every path has an endpoint of degree <= 1; start walks only there.
  for (int v = 1; v <= n; ++v) {
    if (visited[v] || adj[v].size() == 2) continue;
    Block blk{v};
    visited[v] = true;
    int prev = 0, cur = v;
    while (true) {
      int next = 0;
      for (int w : adj[cur]) {
        if (w != prev) next = w;
      }
      if (next == 0) break;
      if (visited[next]) throw Error(ErrorCode::kWouldCycle, "repeated arc");
      visited[next] = true;
      blk.push_back(next);
      ++covered_arcs;
      prev = cur;
      cur = next;
    }
    blocks.push_back(std::move(blk));
  }
  if (covered_arcs != arcs.size()) throw Error(ErrorCode::kWouldCycle, "arcs contain a cycle");
  if (blocks.size() == 1 && n > 0) {
    throw Error(ErrorCode::kNotRepresentable, "the arcs form a single path through all vertices");
  }
  BDiagram b = FromBlocks(std::move(blocks));
  return b.Normalized();
}

int BDiagram::singletons() const {
  return static_cast<int>(
      std::count_if(blocks_.begin(), blocks_.end(), [](const Block& b) { return b.size() == 1; }));
}

std::vector<Arc> BDiagram::Arcs() const {
  std::vector<Arc> arcs;
  arcs.reserve(n_ - m());
  for (const Block& blk : blocks_) {
    for (std::size_t t = 1; t < blk.size(); ++t) arcs.push_back(Arc::Between(blk[t - 1], blk[t]));
  }
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

std::vector<int> BDiagram::Isolated() const {
  std::vector<int> out;
  for (const Block& blk : blocks_) {
    if (blk.size() == 1) out.push_back(blk.front());
  }
  std::sort(out.begin(), out.end());
  return out;
}

BDiagram BDiagram::Normalized() const {
  std::vector<Block> blocks = blocks_;
  for (Block& blk : blocks) OrientBlock(blk);
  std::sort(blocks.begin(), blocks.end(), [](const Block& x, const Block& y) {
    return *std::min_element(x.begin(), x.end()) < *std::min_element(y.begin(), y.end());
  });
  return BDiagram(n_, std::move(blocks));
}

std::string BDiagram::ToString() const {
  std::string out;
  for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
    if (bi > 0) out += " | ";
    for (std::size_t t = 0; t < blocks_[bi].size(); ++t) {
      if (t > 0) out += ' ';
      out += std::to_string(blocks_[bi][t]);
    }
  }
  return out;
}

BDiagram ParseB(std::string_view text) {
  std::vector<Block> blocks;
  std::size_t start = 0;
  while (true) {
    const std::size_t bar = text.find('|', start);
    const std::string_view piece =
        text.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start);
    blocks.push_back(ParseInts(piece));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return BDiagram::FromBlocks(std::move(blocks));
}

std::string FormatArcSet(const BDiagram& b) {
  struct Item {
    int lead;
    int tail;  // 0 for an isolated vertex
  };
  std::vector<Item> items;
  for (const Arc& a : b.Arcs()) items.push_back({a.i, a.j});
  for (int v : b.Isolated()) items.push_back({v, 0});
  std::sort(items.begin(), items.end(), [](const Item& x, const Item& y) {
    return std::pair(x.lead, x.tail) < std::pair(y.lead, y.tail);
  });
  const bool wide = b.n() >= 10;
  std::string out = "{";
  for (std::size_t t = 0; t < items.size(); ++t) {
    if (t > 0) out += ',';
    out += std::to_string(items[t].lead);
    if (items[t].tail != 0) {
      if (wide) out += '-';
      out += std::to_string(items[t].tail);
    }
  }
  return out + "}";
}

BClassification ClassifyB(const BDiagram& b) {
  std::vector<int> starts(b.n() + 1, 0), ends(b.n() + 1, 0);
  for (const Arc& a : b.Arcs()) {
    ++starts[a.i];
    ++ends[a.j];
  }
  BClassification c;
  for (int v = 1; v <= b.n(); ++v) {
    if (starts[v] == 2) {
      c.r.push_back(v);
    } else if (ends[v] == 2) {
      c.rbar.push_back(v);
    } else if (starts[v] == 1 && ends[v] == 1) {
      c.k.push_back(v);
    } else if (starts[v] == 1) {
      c.a.push_back(v);
    } else if (ends[v] == 1) {
      c.abar.push_back(v);
    } else {
      c.l.push_back(v);
    }
  }
  return c;
}

Word BWordOf(const BDiagram& b) {
  const BClassification c = ClassifyB(b);
  Word word(b.n(), Letter::kE);
  for (int v : c.r) word[v - 1] = Letter::kR;
  for (int v : c.rbar) word[v - 1] = Letter::kRbar;
  for (int v : c.k) word[v - 1] = Letter::kK;
  for (int v : c.a) word[v - 1] = Letter::kAlpha;
  for (int v : c.abar) word[v - 1] = Letter::kAlphaBar;
  return word;
}

std::string_view InvalidReasonName(InvalidReason reason) {
  switch (reason) {
    case InvalidReason::kNegativePrefix: return "NegativePrefix";
    case InvalidReason::kBadEndpoints: return "BadEndpoints";
    case InvalidReason::kNonzeroTotal: return "NonzeroTotal";
    case InvalidReason::kUnrealizable: return "Unrealizable";
  }
  return "Unknown";
}

namespace {

int StartsOf(Letter l) {
  switch (l) {
    case Letter::kR: return 2;
    case Letter::kK:
    case Letter::kAlpha: return 1;
    default: return 0;
  }
}

int EndsOf(Letter l) {
  switch (l) {
    case Letter::kRbar: return 2;
    case Letter::kK:
    case Letter::kAlphaBar: return 1;
    default: return 0;
  }
}

// Assigns every arc start (in vertex order) to a later vertex with a free
// arc end, trying ends in increasing order. Path endpoints are tracked so a
// closing arc is rejected in O(1).
class Realizer {
 public:
  explicit Realizer(const Word& word) : n_(static_cast<int>(word.size())), ends_left_(n_ + 1, 0),
                                        other_end_(n_ + 1, 0) {
    for (int v = 1; v <= n_; ++v) {
      for (int s = 0; s < StartsOf(word[v - 1]); ++s) slots_.push_back(v);
      ends_left_[v] = EndsOf(word[v - 1]);
      other_end_[v] = v;
    }
  }

  std::optional<std::vector<Arc>> Run() {
    // n - 1 arcs would be one path through every vertex.
    if (static_cast<int>(slots_.size()) >= n_ - 1) return std::nullopt;
    if (Assign(0)) return arcs_;
    return std::nullopt;
  }

 private:
  bool Assign(std::size_t slot) {
    if (slot == slots_.size()) return true;
    const int i = slots_[slot];
    int lowest = i + 1;
    if (slot > 0 && slots_[slot - 1] == i) lowest = arcs_.back().j + 1;
    int capacity = 0;
    for (int j = i + 1; j <= n_; ++j) capacity += ends_left_[j];
    if (capacity < static_cast<int>(slots_.size() - slot)) return false;
    for (int j = lowest; j <= n_; ++j) {
      if (ends_left_[j] == 0) continue;
      const int oi = other_end_[i];
      const int oj = other_end_[j];
      if (oi == j) continue;
      --ends_left_[j];
      other_end_[oi] = oj;
      other_end_[oj] = oi;
      arcs_.push_back({i, j});
      if (Assign(slot + 1)) return true;
      arcs_.pop_back();
      other_end_[oi] = i;
      other_end_[oj] = j;
      ++ends_left_[j];
    }
    return false;
  }

  int n_;
  std::vector<int> slots_;
  std::vector<int> ends_left_;
  std::vector<int> other_end_;
  std::vector<Arc> arcs_;
};

}  // namespace

ZValidation ValidateZ(const Word& word) {
  ZValidation out;
  const StepPath path = PathSteps(word, Dialect::kB);
  if (std::any_of(path.heights.begin(), path.heights.end(), [](int h) { return h < 0; })) {
    out.reason = InvalidReason::kNegativePrefix;
    return out;
  }
  auto opens = [](Letter l) { return l == Letter::kAlpha || l == Letter::kR || l == Letter::kE; };
  auto closes = [](Letter l) {
    return l == Letter::kAlphaBar || l == Letter::kRbar || l == Letter::kE;
  };
  if (word.empty() || !opens(word.front()) || !closes(word.back())) {
    out.reason = InvalidReason::kBadEndpoints;
    return out;
  }
  if (path.heights.back() != 0) {
    out.reason = InvalidReason::kNonzeroTotal;
    return out;
  }
  std::optional<std::vector<Arc>> arcs;
  if (word.size() >= 3) arcs = Realizer(word).Run();
  if (!arcs) {
    out.reason = InvalidReason::kUnrealizable;
    return out;
  }
  std::sort(arcs->begin(), arcs->end());
  out.witness = BDiagram::FromArcs(static_cast<int>(word.size()), *arcs);
  return out;
}

std::vector<Arc> CutSet(const CyclicPerm& p, const BDiagram& b) {
  if (p.size() != b.n()) {
    throw Error(ErrorCode::kNotAGenerator, "permutation and diagram sizes differ");
  }
  const std::vector<Arc> sigma = ArcSet(p).arcs;
  const std::vector<Arc> arcs = b.Arcs();
  if (!std::includes(sigma.begin(), sigma.end(), arcs.begin(), arcs.end())) {
    throw Error(ErrorCode::kNotAGenerator, p.ToString() + " does not generate " + b.ToString());
  }
  std::vector<Arc> cut;
  std::set_difference(sigma.begin(), sigma.end(), arcs.begin(), arcs.end(),
                      std::back_inserter(cut));
  return cut;
}

BDiagram Complement(const CyclicPerm& p, const BDiagram& b) {
  const std::vector<Arc> cut = CutSet(p, b);
  try {
    return BDiagram::FromArcs(b.n(), cut);
  } catch (const Error& e) {
    throw Error(ErrorCode::kNotRepresentable, "complement is not a b-diagram: " +
                                                  std::string(e.what()));
  }
}

int MaxCrossing(std::span<const Arc> arcs) {
  if (arcs.empty()) return 0;
  // Sorted by i ascending, ties by j descending, so a chain strictly
  // increasing in j is also strictly increasing in i.
  std::vector<Arc> sorted(arcs.begin(), arcs.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const Arc& x, const Arc& y) { return x.i != y.i ? x.i < y.i : x.j > y.j; });
  int best = 1;
  for (const Arc& first : sorted) {
    // Longest chain after `first` whose starts all precede first.j.
    std::vector<int> tails;  // smallest tail j of a chain of each length
    for (const Arc& x : sorted) {
      if (x.i <= first.i || x.i >= first.j || x.j <= first.j) continue;
      auto it = std::lower_bound(tails.begin(), tails.end(), x.j);
      if (it == tails.end()) {
        tails.push_back(x.j);
      } else {
        *it = x.j;
      }
    }
    best = std::max(best, 1 + static_cast<int>(tails.size()));
  }
  return best;
}

int MaxCrossing(const BDiagram& b) { return MaxCrossing(b.Arcs()); }

BDiagram AddArc(const BDiagram& b, Arc arc) {
  CheckVertex(b.n(), arc.i);
  CheckVertex(b.n(), arc.j);
  if (arc.i == arc.j) throw Error(ErrorCode::kOutOfRange, "an arc needs two distinct vertices");
  arc = Arc::Between(arc.i, arc.j);
  const std::vector<Arc> arcs = b.Arcs();
  if (std::binary_search(arcs.begin(), arcs.end(), arc)) {
    throw Error(ErrorCode::kAlreadyPresent, "arc already present");
  }
  std::vector<Block> blocks = b.blocks();
  auto [bu, ou] = Locate(blocks, arc.i);
  auto [bv, ov] = Locate(blocks, arc.j);
  auto is_end = [&](int bi, int off) {
    return off == 0 || off == static_cast<int>(blocks[bi].size()) - 1;
  };
  if (!is_end(bu, ou) || !is_end(bv, ov)) {
    throw Error(ErrorCode::kDegreeExceeded, "both endpoints need degree <= 1");
  }
  if (bu == bv) throw Error(ErrorCode::kWouldCycle, "both endpoints lie on one path");
  int first = bu, first_vertex = arc.i, second = bv, second_vertex = arc.j;
  if (first > second) {
    std::swap(first, second);
    std::swap(first_vertex, second_vertex);
  }
  Block left = blocks[first];
  Block right = blocks[second];
  if (left.back() != first_vertex) std::reverse(left.begin(), left.end());
  if (right.front() != second_vertex) std::reverse(right.begin(), right.end());
  left.insert(left.end(), right.begin(), right.end());
  if (static_cast<int>(left.size()) == b.n()) {
    throw Error(ErrorCode::kNotRepresentable, "the result would be one path through all vertices");
  }
  OrientBlock(left);
  blocks[first] = std::move(left);
  blocks.erase(blocks.begin() + second);
  return BDiagram::FromBlocks(std::move(blocks));
}

BDiagram RemoveArc(const BDiagram& b, Arc arc) {
  arc = Arc::Between(arc.i, arc.j);
  std::vector<Block> blocks = b.blocks();
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    const Block& blk = blocks[bi];
    for (std::size_t t = 1; t < blk.size(); ++t) {
      if (Arc::Between(blk[t - 1], blk[t]) != arc) continue;
      Block left(blk.begin(), blk.begin() + t);
      Block right(blk.begin() + t, blk.end());
      OrientBlock(left);
      OrientBlock(right);
      blocks[bi] = std::move(left);
      blocks.insert(blocks.begin() + bi + 1, std::move(right));
      return BDiagram::FromBlocks(std::move(blocks));
    }
  }
  throw Error(ErrorCode::kNotPresent, "arc not present");
}

BDiagram TransposeLabels(const BDiagram& b, int i, int j) {
  CheckVertex(b.n(), i);
  CheckVertex(b.n(), j);
  std::vector<Block> blocks = b.blocks();
  for (Block& blk : blocks) {
    for (int& v : blk) {
      if (v == i) {
        v = j;
      } else if (v == j) {
        v = i;
      }
    }
  }
  return BDiagram::FromBlocks(std::move(blocks));
}

}  // namespace arcdiag
