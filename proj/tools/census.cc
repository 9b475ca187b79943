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

#include "census.h"

#include <algorithm>
#include <map>
#include <sstream>

#include "arcdiag/error.h"
#include "arcdiag/word_inversion.h"

namespace arcdiag::cli {

BigCount MotzkinNumber(int k) {
  std::vector<BigCount> m{1, 1};
  for (int t = 2; t <= k; ++t) {
    BigCount next = m[t - 1];
    for (int s = 0; s <= t - 2; ++s) next += m[s] * m[t - 2 - s];
    m.push_back(next);
  }
  return m[k];
}

BigCount CatalanNumber(int k) {
  std::vector<BigCount> c{1};
  for (int t = 1; t <= k; ++t) {
    BigCount next = 0;
    for (int s = 0; s < t; ++s) next += c[s] * c[t - 1 - s];
    c.push_back(next);
  }
  return c[k];
}

BigCount ElevatedDyckCount(int n) {
  if (n < 2 || n % 2 != 0) return 0;
  return CatalanNumber(n / 2 - 1);
}

namespace {

// Counts elevated Motzkin and elevated Dyck words by scanning every string
// over {r, r̄, k}, independently of any permutation.
void CountLetterStrings(int n, std::uint64_t& motzkin, std::uint64_t& dyck) {
  static constexpr Letter kAlphabet[] = {Letter::kR, Letter::kRbar, Letter::kK};
  std::uint64_t total = 1;
  for (int t = 0; t < n; ++t) total *= 3;
  Word word(n);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t rest = code;
    for (int t = 0; t < n; ++t) {
      word[t] = kAlphabet[rest % 3];
      rest /= 3;
    }
    const WordPredicates pred = Predicates(word);
    if (!pred.is_motzkin || !pred.is_elevated) continue;
    ++motzkin;
    if (pred.is_dyck) ++dyck;
  }
}

}  // namespace

CensusReport RunCensus(int n) {
  if (n < 3) throw Error(ErrorCode::kTooSmall, "census needs n >= 3");
  if (n > kCensusMaxN) {
    throw Error(ErrorCode::kTooLarge, "census refuses n = " + std::to_string(n));
  }
  CensusReport report;
  report.n = n;
  std::map<Word, SplitViolation> by_word;
  ForEachCyclicPerm(n, [&](const CyclicPerm& p) {
    ++report.permutations;
    const Word word = WordOf(p);
    SplitViolation& entry = by_word[word];
    entry.word = word;
    const CyclicPerm rev = Reverse(p);
    if (rev < p) return;
    ++entry.pairs;
    const std::vector<CyclicPerm> pair{p};
    if (!MinSecondSplitViolations(word, pair).empty()) entry.violating.push_back(p);
  });
  report.distinct_words = by_word.size();
  for (auto& [word, entry] : by_word) {
    if (std::find(word.begin(), word.end(), Letter::kK) == word.end()) {
      ++report.keratoid_free_words;
    }
    if (!entry.violating.empty()) report.split_violations.push_back(std::move(entry));
  }
  report.expected_words = MotzkinNumber(n - 2);
  report.expected_keratoid_free = ElevatedDyckCount(n);
  CountLetterStrings(n, report.elevated_motzkin, report.elevated_dyck);
  return report;
}

std::string FormatCensus(const CensusReport& r) {
  std::ostringstream out;
  out << "n: " << r.n << '\n';
  out << "permutations: " << r.permutations << '\n';
  out << "distinct words: " << r.distinct_words << '\n';
  out << "expected M_" << r.n - 2 << ": " << r.expected_words << '\n';
  out << "elevated Motzkin strings: " << r.elevated_motzkin << '\n';
  out << "words: " << (r.words_pass() ? "PASS" : "FAIL") << '\n';
  out << "keratoid-free words: " << r.keratoid_free_words << '\n';
  out << "expected elevated Dyck: " << r.expected_keratoid_free << '\n';
  out << "elevated Dyck strings: " << r.elevated_dyck << '\n';
  out << "keratoid-free words: " << (r.keratoid_free_pass() ? "PASS" : "FAIL") << '\n';
  out << "min-second split violations: " << r.split_violations.size() << '\n';
  for (const SplitViolation& v : r.split_violations) {
    out << "  " << ToString(v.word) << ": " << v.violating.size() << " of " << v.pairs
        << " reverse pairs, e.g. " << v.violating.front().ToString() << '\n';
  }
  return out.str();
}

}  // namespace arcdiag::cli
