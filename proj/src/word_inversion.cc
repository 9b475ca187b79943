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

#include "arcdiag/word_inversion.h"

#include <algorithm>

#include "arcdiag/error.h"

namespace arcdiag {

bool GammaMap::Contains(int vertex, int neighbor) const {
  const std::vector<int>& c = (*this)(vertex);
  return std::binary_search(c.begin(), c.end(), neighbor);
}

GammaMap Gamma(const Classification& c) {
  const Word word = WordOf(c);
  const int n = c.n();
  std::vector<std::vector<int>> candidates(n);
  for (int i = 1; i <= n; ++i) {
    const Letter li = word[i - 1];
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      const Letter lj = word[j - 1];
      const bool up = j > i && li != Letter::kRbar && lj != Letter::kR;
      const bool down = j < i && li != Letter::kR && lj != Letter::kRbar;
      if (up || down) candidates[i - 1].push_back(j);
    }
  }
  return GammaMap(std::move(candidates));
}

namespace {

bool IsInvertibleWord(const Word& word) {
  if (!SatisfiesSigmaRules(word)) return false;
  const WordPredicates pred = Predicates(word);
  return pred.is_motzkin && pred.is_elevated;
}

class InversionSearch {
 public:
  explicit InversionSearch(const Word& word)
      : word_(word), gamma_(Gamma(ClassificationOf(word))), n_(static_cast<int>(word.size())),
        used_(n_ + 1, false) {}

  std::vector<CyclicPerm> Run() {
    seq_.push_back(1);
    used_[1] = true;
    Extend();
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  bool IsKeratoid(int v) const { return word_[v - 1] == Letter::kK; }

  // A keratoid needs one smaller and one larger neighbor.
  static bool Straddles(int prev, int mid, int next) { return (prev < mid) == (next > mid); }

  void Extend() {
    const int t = static_cast<int>(seq_.size());
    const int cur = seq_.back();
    if (t == n_) {
      if (!gamma_.Contains(cur, 1)) return;
      if (IsKeratoid(cur) && !Straddles(seq_[t - 2], cur, 1)) return;
      CyclicPerm p = CyclicPerm::FromSequence(seq_);
      if (WordOf(p) == word_) found_.push_back(std::move(p));
      return;
    }
    for (int next : gamma_(cur)) {
      if (used_[next]) continue;
      if (t >= 2 && IsKeratoid(cur) && !Straddles(seq_[t - 2], cur, next)) continue;
      used_[next] = true;
      seq_.push_back(next);
      Extend();
      seq_.pop_back();
      used_[next] = false;
    }
  }

  const Word& word_;
  GammaMap gamma_;
  int n_;
  std::vector<bool> used_;
  std::vector<int> seq_;
  std::vector<CyclicPerm> found_;
};

}  // namespace

std::vector<CyclicPerm> PermsFromWord(const Word& word) {
  if (!IsInvertibleWord(word)) {
    throw Error(ErrorCode::kNotAWord, "\"" + ToString(word) + "\" is not an elevated Motzkin word");
  }
  return InversionSearch(word).Run();
}

std::vector<CyclicPerm> PermsFromWordOracle(const Word& word) {
  const int n = static_cast<int>(word.size());
  if (n > kOracleMaxN) {
    throw Error(ErrorCode::kTooLarge, "oracle refuses n = " + std::to_string(n));
  }
  std::vector<CyclicPerm> out;
  if (n < 3) return out;
  ForEachCyclicPerm(n, [&](const CyclicPerm& p) {
    if (WordOf(p) == word) out.push_back(p);
  });
  return out;
}

std::vector<CyclicPerm> CanonicalHalf(std::span<const CyclicPerm> perms) {
  std::vector<CyclicPerm> out;
  for (const CyclicPerm& p : perms) {
    if (p[1] < p[p.size() - 1]) out.push_back(p);
  }
  return out;
}

std::vector<CyclicPerm> MinSecondSplitViolations(const Word& word,
                                                 std::span<const CyclicPerm> perms) {
  int min_target = 0;
  for (int v = 1; v <= static_cast<int>(word.size()); ++v) {
    if (word[v - 1] == Letter::kRbar || word[v - 1] == Letter::kK) {
      min_target = v;
      break;
    }
  }
  std::vector<CyclicPerm> out;
  for (const CyclicPerm& p : perms) {
    const CyclicPerm rev = Reverse(p);
    if (rev < p) continue;
    if (p[1] != min_target && rev[1] != min_target) out.push_back(p);
  }
  return out;
}

}  // namespace arcdiag
