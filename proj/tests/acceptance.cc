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

// Acceptance suite. Runs each numbered criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion; exits nonzero if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "arcdiag/bdiagram.h"
#include "arcdiag/error.h"
#include "arcdiag/generation.h"
#include "arcdiag/perm_core.h"
#include "arcdiag/word_inversion.h"
#include "arcdiag/words.h"
#include "census.h"
#include "testing/oracles.h"

namespace arcdiag {
namespace {

using Clock = std::chrono::steady_clock;

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Collects failed checks for one criterion.
class Checker {
 public:
  void Expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    failed_ |= !ok;
  }
  void WithinMs(double elapsed, double limit, const std::string& what) {
    std::ostringstream s;
    s << what << " took " << elapsed << " ms (limit " << limit << " ms)";
    Expect(elapsed < limit, s.str());
  }
  bool failed() const { return failed_; }
  int checks() const { return checks_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  bool failed_ = false;
  int checks_ = 0;
  std::vector<std::string> failures_;
};

std::vector<CyclicPerm> Perms(std::initializer_list<const char*> texts) {
  return testing::Perms(texts);
}

// Distinct sigma-words over all cyclic permutations of [n].
std::set<std::string> WordsOf(int n) {
  std::set<std::string> words;
  ForEachCyclicPerm(n, [&](const CyclicPerm& p) { words.insert(ToString(WordOf(p))); });
  return words;
}

void GoldenExamples(Checker& c) {
  auto timed = [&](const std::string& label, const std::function<bool()>& fn) {
    // Warm once, then time the second run.
    fn();
    const auto start = Clock::now();
    const bool ok = fn();
    c.Expect(ok, label);
    c.WithinMs(MillisSince(start), 1.0, label);
  };
  timed("1 3 2 7 8 4 5 6 classes and word", [] {
    const Classification k = Classify(ArcSet(ParsePerm("1 3 2 7 8 4 5 6")));
    return k.r == std::vector<int>{1, 2, 4} && k.rbar == std::vector<int>{3, 6, 8} &&
           k.k == std::vector<int>{5, 7} && ToString(WordOf(k)) == "rrRrkRkR";
  });
  timed("1 3 2 7 5 6 4 8 word", [] {
    return ToString(WordOf(ParsePerm("1 3 2 7 5 6 4 8"))) == "rrRrrRRR";
  });
  timed("3 1 6 | 2 7 8 | 4 5 z-word", [] {
    return ToString(BWordOf(ParseB("3 1 6 | 2 7 8 | 4 5"))) == "raAaAAkA";
  });
  timed("1 3 | 2 | 4 8 | 5 6 | 7 z-word", [] {
    return ToString(BWordOf(ParseB("1 3 | 2 | 4 8 | 5 6 | 7"))) == "aeAaaAeA";
  });
}

// The listed half plus its reverses.
std::vector<CyclicPerm> WithReverses(std::initializer_list<const char*> texts) {
  std::vector<CyclicPerm> out;
  for (const CyclicPerm& p : Perms(texts)) {
    out.push_back(p);
    out.push_back(Reverse(p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

void WordInversion(Checker& c) {
  const auto start = Clock::now();
  c.Expect(PermsFromWord(ParseWord("rkrRkR", Dialect::kSigma)) ==
               WithReverses({"1 2 4 3 5 6", "1 2 4 3 6 5", "1 2 5 6 3 4", "1 2 6 5 3 4"}),
           "rkrRkR gives the eight tree permutations");
  c.Expect(PermsFromWord(ParseWord("rrRrRR", Dialect::kSigma)) ==
               WithReverses({"1 3 2 5 4 6", "1 3 2 6 4 5"}),
           "rrRrRR gives the four tree permutations");
  c.WithinMs(MillisSince(start), 1000.0, "inversion");
}

void OracleEquivalence(Checker& c) {
  const auto start = Clock::now();
  int words = 0;
  for (int n = 3; n <= 7; ++n) {
    for (const std::string& text : WordsOf(n)) {
      const Word w = ParseWord(text, Dialect::kSigma);
      c.Expect(PermsFromWord(w) == PermsFromWordOracle(w), "mismatch on " + text);
      ++words;
    }
  }
  c.Expect(words == 1 + 2 + 4 + 9 + 21, "unexpected number of words");
  c.WithinMs(MillisSince(start), 60000.0, "oracle sweep");
}

void Census(Checker& c) {
  const std::map<int, int> derived = {{6, 9}, {7, 21}, {8, 51}};
  for (int n = 4; n <= 9; ++n) {
    const auto start = Clock::now();
    const std::size_t distinct = WordsOf(n).size();
    const double elapsed = MillisSince(start);
    const std::string tag = "n=" + std::to_string(n);
    c.Expect(BigCount(distinct) == cli::MotzkinNumber(n - 2), tag + " distinct words vs M_{n-2}");
    if (derived.count(n)) c.Expect(static_cast<int>(distinct) == derived.at(n), tag + " value");
    if (n == 9) c.WithinMs(elapsed, 30000.0, "n=9 census");
  }
  // Cross-check the recurrence against a direct count of elevated Motzkin strings.
  for (int n = 4; n <= 9; ++n) {
    const cli::CensusReport report = cli::RunCensus(n);
    c.Expect(report.words_pass(), "census report n=" + std::to_string(n));
  }
}

void GeneratorCounts(Checker& c) {
  c.Expect(CountGenerators(ParseB("2 3 1 4 | 5 8 7 6")) == 4, "count 4");
  c.Expect(CountGenerators(ParseB("1 2 3 | 4 7 8 | 5 6")) == 16, "count 16");
  c.Expect(CountGenerators(ParseB("1 6 | 2 3 | 4 8 7 | 5")) == 48, "count 48");
  c.Expect(CountGenerators(ParseB("1 4 | 2 | 3 6 | 5 8 | 7")) == 192, "count 192");
  const auto start = Clock::now();
  for (int n = 3; n <= 7; ++n) {
    for (const BDiagram& b : testing::AllBDiagrams(n)) {
      const GeneratorSet blocks = EnumerateGenerators(b);
      const bool ok = BigCount(blocks.size()) == CountGenerators(b) &&
                      blocks == CompleteTable(b) && blocks == GeneratorsOracle(b);
      c.Expect(ok, "three methods disagree on " + b.ToString());
    }
  }
  c.WithinMs(MillisSince(start), 120000.0, "generator sweep");
}

void CutSetAndComplement(Checker& c) {
  const CyclicPerm p = ParsePerm("1 3 2 7 8 4 5 6");
  c.Expect(FormatArcs(CutSet(p, ParseB("3 1 6 | 2 7 8 | 4 5"))) == "{23,48,56}", "cut set (a)");
  c.Expect(FormatArcs(CutSet(p, ParseB("1 3 | 2 | 4 8 | 5 6 | 7"))) == "{16,23,27,45,78}",
           "cut set (b)");
  c.Expect(Complement(ParsePerm("1 2 3 8 7 5 4 6"), ParseB("1 6 4 | 2 3 8 | 5 7")).ToString() ==
               "1 2 | 3 | 4 5 | 6 | 7 8",
           "complement");
  for (int n = 3; n <= 6; ++n) {
    for (const BDiagram& b : testing::AllBDiagrams(n)) {
      for (const CyclicPerm& g : EnumerateGenerators(b)) {
        c.Expect(static_cast<int>(CutSet(g, b).size()) == b.m(),
                 "|C| != m for " + b.ToString() + " / " + g.ToString());
      }
    }
  }
}

void ZValidity(Checker& c) {
  c.Expect(ValidateZ(ParseWord("rarARAA")).valid(), "rarARAA valid");
  c.Expect(!ValidateZ(ParseWord("RAkear")).valid(), "RAkear invalid");
  for (int n = 3; n <= 6; ++n) {
    for (const BDiagram& b : testing::AllBDiagrams(n)) {
      c.Expect(ValidateZ(BWordOf(b)).valid(), "b-word of " + b.ToString());
    }
  }
  const ZValidation rkr = ValidateZ(ParseWord("rkR"));
  c.Expect(!rkr.valid() && rkr.reason == InvalidReason::kUnrealizable, "rkR unrealizable");
}

void Crossing(Checker& c) {
  c.Expect(MaxCrossing(ParseB("1 2 | 3 6 | 4 7 | 5 8")) == 3, "crossing triple");
  for (int n = 3; n <= 8; ++n) {
    for (const BDiagram& b : testing::AllBDiagrams(n)) {
      c.Expect(MaxCrossing(b) == testing::BruteMaxCrossing(b.Arcs()), "crossing " + b.ToString());
    }
  }
}

void Inflation(Checker& c) {
  c.Expect(ToString(Inflate(ParseWord("arAkAA"))) == "aaaAAaAA", "arAkAA");
  std::mt19937 rng(2026);
  std::uniform_int_distribution<int> size(3, 14);
  for (int trial = 0; trial < 1000; ++trial) {
    const BDiagram b = testing::RandomBDiagram(size(rng), rng);
    const Word z = BWordOf(b);
    const BClassification k = ClassifyB(b);
    const Word a = Inflate(z);
    const std::size_t expected = b.n() + k.r.size() + k.rbar.size() + k.k.size();
    c.Expect(a.size() == expected, "length of inflate(" + ToString(z) + ")");
    c.Expect(PathSteps(a, Dialect::kB).steps == PathSteps(z, Dialect::kB).steps &&
                 PathSteps(a, Dialect::kB).heights == PathSteps(z, Dialect::kB).heights,
             "path of inflate(" + ToString(z) + ")");
  }
}

void Deviations(Checker& c) {
  const cli::CensusReport report = cli::RunCensus(6);
  bool found = false;
  for (const cli::SplitViolation& v : report.split_violations) {
    found |= ToString(v.word) == "rrkkRR" && !v.violating.empty();
  }
  c.Expect(found, "split violation rrkkRR at n=6");
  const CommonGenerators common = FindCommonGenerators(ParseB("1 2 | 3"), ParseB("2 3 | 1"));
  c.Expect(common.generators == Perms({"1 2 3", "1 3 2"}), "shared generators on [3]");
  c.Expect(!common.first_within_second && !common.second_within_first,
           "neither arc set contains the other");
}

struct Criterion {
  int id;
  const char* name;
  void (*run)(Checker&);
};

}  // namespace
}  // namespace arcdiag

int main() {
  using arcdiag::Checker;
  const arcdiag::Criterion criteria[] = {
      {1, "golden examples", arcdiag::GoldenExamples},
      {2, "word inversion", arcdiag::WordInversion},
      {3, "oracle equivalence n=3..7", arcdiag::OracleEquivalence},
      {4, "word census n=4..9", arcdiag::Census},
      {5, "generator counts and three-way agreement", arcdiag::GeneratorCounts},
      {6, "cut set and complement", arcdiag::CutSetAndComplement},
      {7, "z-word validity", arcdiag::ZValidity},
      {8, "max crossing", arcdiag::Crossing},
      {9, "inflation", arcdiag::Inflation},
      {10, "documented deviations", arcdiag::Deviations},
  };
  int failed = 0;
  for (const arcdiag::Criterion& crit : criteria) {
    Checker checker;
    const auto start = arcdiag::Clock::now();
    try {
      crit.run(checker);
    } catch (const std::exception& e) {
      checker.Expect(false, std::string("exception: ") + e.what());
    }
    const double ms = arcdiag::MillisSince(start);
    std::printf("%s [%d] %s (%d checks, %.1f ms)\n", checker.failed() ? "FAIL" : "PASS", crit.id,
                crit.name, checker.checks(), ms);
    for (const std::string& f : checker.failures()) std::printf("       %s\n", f.c_str());
    failed += checker.failed();
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed,
              std::size(criteria));
  return failed == 0 ? 0 : 1;
}
