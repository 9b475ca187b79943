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

#include "arcdiag/generation.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "arcdiag/error.h"

namespace arcdiag {

namespace {

CyclicPerm RotateToOne(std::vector<int> seq) {
  std::rotate(seq.begin(), std::find(seq.begin(), seq.end(), 1), seq.end());
  return CyclicPerm::FromSequence(std::move(seq));
}

void CheckCap(const BDiagram& b, std::uint64_t cap) {
  const BigCount count = CountGenerators(b);
  if (count > cap) {
    throw Error(ErrorCode::kCapExceeded,
                b.ToString() + " has " + count.str() + " generators (cap " + std::to_string(cap) + ")");
  }
}

void CheckExpectedCount(const BDiagram& b, const GeneratorSet& gens) {
  if (BigCount(gens.size()) != CountGenerators(b)) {
    throw std::logic_error("generator count for " + b.ToString() + " is " +
                           std::to_string(gens.size()) + ", expected " +
                           CountGenerators(b).str());
  }
}

// Completes the arcs of a b-diagram to Hamiltonian cycles. The smallest
// vertex still short of degree 2 is always extended next, so each cycle is
// reached exactly once.
class TableCompletion {
 public:
  explicit TableCompletion(const BDiagram& b)
      : n_(b.n()), degree_(n_ + 1, 0), other_end_(n_ + 1, 0), arcs_(b.Arcs()) {
    for (const Block& blk : b.blocks()) {
      other_end_[blk.front()] = blk.back();
      other_end_[blk.back()] = blk.front();
    }
    for (const Arc& a : arcs_) {
      ++degree_[a.i];
      ++degree_[a.j];
    }
  }

  GeneratorSet Run() {
    Extend(0, 0);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  void Extend(int prev_vertex, int prev_partner) {
    if (static_cast<int>(arcs_.size()) == n_) {
      Record();
      return;
    }
    int v = 1;
    while (degree_[v] == 2) ++v;
    const int lowest = v == prev_vertex ? prev_partner + 1 : 1;
    for (int j = lowest; j <= n_; ++j) {
      if (j == v || degree_[j] == 2) continue;
      const int ov = other_end_[v];
      const int oj = other_end_[j];
      const bool closes = ov == j;
      if (closes && static_cast<int>(arcs_.size()) != n_ - 1) continue;
      ++degree_[v];
      ++degree_[j];
      other_end_[ov] = oj;
      other_end_[oj] = ov;
      arcs_.push_back(Arc::Between(v, j));
      Extend(v, j);
      arcs_.pop_back();
      other_end_[ov] = v;
      other_end_[oj] = j;
      --degree_[v];
      --degree_[j];
    }
  }

  void Record() {
    for (const Arc& a : arcs_) {
      if (a.i == 1) found_.push_back(WalkCycle(n_, arcs_, a.j));
    }
  }

  int n_;
  std::vector<int> degree_;
  std::vector<int> other_end_;
  std::vector<Arc> arcs_;
  GeneratorSet found_;
};

}  // namespace

CyclicPerm CanonicalGenerator(const BDiagram& b) {
  std::vector<int> seq;
  seq.reserve(b.n());
  for (const Block& blk : b.blocks()) seq.insert(seq.end(), blk.begin(), blk.end());
  return RotateToOne(std::move(seq));
}

BigCount CountGenerators(const BDiagram& b) {
  BigCount count = 1;
  count <<= b.m() - b.singletons();
  for (int t = 2; t < b.m(); ++t) count *= t;
  return count;
}

GeneratorSet EnumerateGenerators(const BDiagram& b, std::uint64_t cap) {
  CheckCap(b, cap);
  const std::vector<Block>& blocks = b.blocks();
  const int m = b.m();
  std::vector<int> reversible;
  for (int bi = 0; bi < m; ++bi) {
    if (blocks[bi].size() > 1) reversible.push_back(bi);
  }
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  GeneratorSet gens;
  std::vector<int> seq;
  do {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << reversible.size()); ++mask) {
      std::vector<bool> flip(m, false);
      for (std::size_t t = 0; t < reversible.size(); ++t) flip[reversible[t]] = (mask >> t) & 1;
      seq.clear();
      for (int bi : order) {
        if (flip[bi]) {
          seq.insert(seq.end(), blocks[bi].rbegin(), blocks[bi].rend());
        } else {
          seq.insert(seq.end(), blocks[bi].begin(), blocks[bi].end());
        }
      }
      gens.push_back(RotateToOne(seq));
    }
  } while (std::next_permutation(order.begin() + 1, order.end()));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  CheckExpectedCount(b, gens);
  return gens;
}

GeneratorSet CompleteTable(const BDiagram& b, std::uint64_t cap) {
  CheckCap(b, cap);
  GeneratorSet gens = TableCompletion(b).Run();
  CheckExpectedCount(b, gens);
  return gens;
}

GeneratorSet GeneratorsOracle(const BDiagram& b) {
  if (b.n() > kGeneratorOracleMaxN) {
    throw Error(ErrorCode::kTooLarge, "oracle refuses n = " + std::to_string(b.n()));
  }
  const std::vector<Arc> arcs = b.Arcs();
  GeneratorSet gens;
  ForEachCyclicPerm(b.n(), [&](const CyclicPerm& p) {
    const std::vector<Arc> sigma = ArcSet(p).arcs;
    if (std::includes(sigma.begin(), sigma.end(), arcs.begin(), arcs.end())) gens.push_back(p);
  });
  return gens;
}

CommonGenerators FindCommonGenerators(const BDiagram& b, const BDiagram& b2, std::uint64_t cap) {
  if (b.n() != b2.n()) throw Error(ErrorCode::kSizeMismatch, "diagrams have different n");
  const std::vector<Arc> arcs = b.Arcs();
  const std::vector<Arc> arcs2 = b2.Arcs();
  const GeneratorSet gens = EnumerateGenerators(b, cap);
  const GeneratorSet gens2 = EnumerateGenerators(b2, cap);
  CommonGenerators out;
  std::set_intersection(gens.begin(), gens.end(), gens2.begin(), gens2.end(),
                        std::back_inserter(out.generators));
  out.first_within_second = std::includes(arcs2.begin(), arcs2.end(), arcs.begin(), arcs.end());
  out.second_within_first = std::includes(arcs.begin(), arcs.end(), arcs2.begin(), arcs2.end());
  return out;
}

}  // namespace arcdiag
