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

#include "arcdiag/words.h"

#include <algorithm>

#include "arcdiag/error.h"

namespace arcdiag {

Word ParseWord(std::string_view text, Dialect dialect) {
  if (text.empty()) throw Error(ErrorCode::kParse, "empty word");
  Word word;
  word.reserve(text.size());
  for (char ch : text) {
    switch (ch) {
      case 'r':
      case 'R':
      case 'k':
        word.push_back(static_cast<Letter>(ch));
        break;
      case 'a':
      case 'A':
      case 'e':
        if (dialect == Dialect::kSigma) {
          throw Error(ErrorCode::kAlphabetMismatch,
                      std::string("letter '") + ch + "' is not in the sigma alphabet");
        }
        word.push_back(static_cast<Letter>(ch));
        break;
      default:
        throw Error(ErrorCode::kParse, std::string("unknown letter '") + ch + "'");
    }
  }
  return word;
}

std::string ToString(const Word& word) {
  std::string out;
  out.reserve(word.size());
  for (Letter l : word) out += static_cast<char>(l);
  return out;
}

bool IsSigmaLetter(Letter letter) {
  return letter == Letter::kR || letter == Letter::kRbar || letter == Letter::kK;
}

Word WordOf(const Classification& c) {
  Word word(c.n(), Letter::kK);
  for (int v : c.r) word[v - 1] = Letter::kR;
  for (int v : c.rbar) word[v - 1] = Letter::kRbar;
  return word;
}

Word WordOf(const CyclicPerm& p) { return WordOf(Classify(ArcSet(p))); }

Classification ClassificationOf(const Word& word) {
  Classification c;
  for (int v = 1; v <= static_cast<int>(word.size()); ++v) {
    switch (word[v - 1]) {
      case Letter::kR: c.r.push_back(v); break;
      case Letter::kRbar: c.rbar.push_back(v); break;
      case Letter::kK: c.k.push_back(v); break;
      default:
        throw Error(ErrorCode::kAlphabetMismatch, "b-word letter in a sigma word");
    }
  }
  return c;
}

bool SatisfiesSigmaRules(const Word& word) {
  const std::size_t n = word.size();
  if (n < 3 || !std::all_of(word.begin(), word.end(), IsSigmaLetter)) return false;
  if (word[0] != Letter::kR || word[n - 1] != Letter::kRbar) return false;
  if (word[1] == Letter::kRbar || word[n - 2] == Letter::kR) return false;
  return std::count(word.begin(), word.end(), Letter::kR) ==
         std::count(word.begin(), word.end(), Letter::kRbar);
}

WordPredicates Predicates(const Word& word) {
  if (!std::all_of(word.begin(), word.end(), IsSigmaLetter)) {
    throw Error(ErrorCode::kAlphabetMismatch, "predicates apply to sigma words only");
  }
  const int n = static_cast<int>(word.size());
  int height = 0;
  bool nonnegative = true;
  bool elevated = true;
  for (int i = 0; i < n; ++i) {
    if (word[i] == Letter::kR) ++height;
    if (word[i] == Letter::kRbar) --height;
    if (height < 0) nonnegative = false;
    if (i < n - 1 && height <= 0) elevated = false;
  }
  WordPredicates out;
  out.is_motzkin = nonnegative && height == 0;
  out.is_dyck = out.is_motzkin && std::find(word.begin(), word.end(), Letter::kK) == word.end();
  out.is_elevated = elevated;
  return out;
}

Word ReindexWord(const Word& word, const CyclicPerm& p) {
  if (static_cast<int>(word.size()) != p.size()) {
    throw Error(ErrorCode::kLengthMismatch, "word and permutation lengths differ");
  }
  Word out(word.size());
  for (int i = 0; i < p.size(); ++i) out[i] = word[p[i] - 1];
  return out;
}

Word DyckParityWord(const CyclicPerm& p) {
  if (!Classify(ArcSet(p)).k.empty()) {
    throw Error(ErrorCode::kHasKeratoids, p.ToString() + " has keratoid vertices");
  }
  const std::vector<int> pos = p.Positions();
  Word out(p.size());
  for (int v = 1; v <= p.size(); ++v) out[v - 1] = pos[v] % 2 == 1 ? Letter::kR : Letter::kRbar;
  return out;
}

int Degree(Letter letter) {
  switch (letter) {
    case Letter::kRbar: return -2;
    case Letter::kAlphaBar: return -1;
    case Letter::kE:
    case Letter::kK: return 0;
    case Letter::kAlpha: return 1;
    case Letter::kR: return 2;
  }
  return 0;
}

std::vector<int> DegreeVector(const Word& word) {
  std::vector<int> theta;
  theta.reserve(word.size());
  for (Letter l : word) theta.push_back(Degree(l));
  return theta;
}

namespace {

void Push(StepPath& path, Step step, int vertex) {
  int h = path.heights.empty() ? 0 : path.heights.back();
  if (step == Step::kUp) ++h;
  if (step == Step::kDown) --h;
  path.steps.push_back(step);
  path.heights.push_back(h);
  path.vertex.push_back(vertex);
}

}  // namespace

StepPath PathSteps(const Word& word, Dialect dialect) {
  StepPath path;
  for (int v = 1; v <= static_cast<int>(word.size()); ++v) {
    const Letter l = word[v - 1];
    if (dialect == Dialect::kSigma) {
      switch (l) {
        case Letter::kR: Push(path, Step::kUp, v); break;
        case Letter::kRbar: Push(path, Step::kDown, v); break;
        case Letter::kK: Push(path, Step::kFlat, v); break;
        default:
          throw Error(ErrorCode::kAlphabetMismatch, "b-word letter in a sigma path");
      }
      continue;
    }
    switch (l) {
      case Letter::kR:
        Push(path, Step::kUp, v);
        Push(path, Step::kUp, v);
        break;
      case Letter::kRbar:
        Push(path, Step::kDown, v);
        Push(path, Step::kDown, v);
        break;
      case Letter::kK:
        Push(path, Step::kDown, v);
        Push(path, Step::kUp, v);
        break;
      case Letter::kAlpha: Push(path, Step::kUp, v); break;
      case Letter::kAlphaBar: Push(path, Step::kDown, v); break;
      case Letter::kE: Push(path, Step::kFlat, v); break;
    }
  }
  return path;
}

Word Inflate(const Word& word) {
  Word out;
  out.reserve(2 * word.size());
  for (Letter l : word) {
    switch (l) {
      case Letter::kR:
        out.insert(out.end(), {Letter::kAlpha, Letter::kAlpha});
        break;
      case Letter::kRbar:
        out.insert(out.end(), {Letter::kAlphaBar, Letter::kAlphaBar});
        break;
      case Letter::kK:
        out.insert(out.end(), {Letter::kAlphaBar, Letter::kAlpha});
        break;
      default:
        out.push_back(l);
    }
  }
  return out;
}

}  // namespace arcdiag
