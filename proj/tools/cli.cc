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

#include "cli.h"

#include <functional>
#include <limits>
#include <sstream>
#include <utility>

#include <CLI11.hpp>
#include <json.hpp>

#include "arcdiag/bdiagram.h"
#include "arcdiag/generation.h"
#include "arcdiag/perm_core.h"
#include "arcdiag/word_inversion.h"
#include "arcdiag/words.h"
#include "census.h"
#include "render.h"

namespace arcdiag::cli {

using Json = nlohmann::ordered_json;

ExitCode ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse:
    case ErrorCode::kNotAPermutation:
    case ErrorCode::kNotNormalized:
    case ErrorCode::kTooSmall:
    case ErrorCode::kEmptyBlock:
    case ErrorCode::kBlockTooLong:
    case ErrorCode::kAlphabetMismatch:
    case ErrorCode::kLengthMismatch:
    case ErrorCode::kNotAWord:
    case ErrorCode::kOutOfRange:
      return kExitMalformed;
    case ErrorCode::kHasKeratoids:
    case ErrorCode::kNotAGenerator:
    case ErrorCode::kNotRepresentable:
    case ErrorCode::kDegreeExceeded:
    case ErrorCode::kWouldCycle:
    case ErrorCode::kAlreadyPresent:
    case ErrorCode::kNotPresent:
    case ErrorCode::kSizeMismatch:
      return kExitDomain;
    case ErrorCode::kTooLarge:
    case ErrorCode::kCapExceeded:
      return kExitCap;
  }
  return kExitMalformed;
}

namespace {

constexpr int kExitInternal = 4;

struct Options {
  bool json = false;
  std::uint64_t cap = kDefaultGeneratorCap;
};

std::string Join(const std::vector<int>& values) {
  std::string out;
  for (std::size_t t = 0; t < values.size(); ++t) {
    if (t > 0) out += ' ';
    out += std::to_string(values[t]);
  }
  return out;
}

std::string Labeled(const std::string& label, const std::vector<int>& values) {
  return values.empty() ? label + ":" : label + ": " + Join(values);
}

Json CountJson(const BigCount& count) {
  if (count <= std::numeric_limits<std::uint64_t>::max()) {
    return Json(count.convert_to<std::uint64_t>());
  }
  return Json(count.str());
}

Json PermsJson(const std::vector<CyclicPerm>& perms) {
  Json list = Json::array();
  for (const CyclicPerm& p : perms) list.push_back(p.ToString());
  return list;
}

Json ArcsJson(const std::vector<Arc>& arcs) {
  Json list = Json::array();
  for (const Arc& a : arcs) list.push_back({a.i, a.j});
  return list;
}

void PrintPerms(std::ostream& out, const std::vector<CyclicPerm>& perms) {
  for (const CyclicPerm& p : perms) out << p.ToString() << '\n';
}

void Classify(const Options& opt, const std::string& text, std::ostream& out) {
  const Classification c = arcdiag::Classify(ArcSet(ParsePerm(text)));
  const std::string word = ToString(WordOf(c));
  if (opt.json) {
    out << Json{{"R", c.r}, {"Rbar", c.rbar}, {"K", c.k}, {"word", word}}.dump() << '\n';
    return;
  }
  out << Labeled("R", c.r) << '\n'
      << Labeled("Rbar", c.rbar) << '\n'
      << Labeled("K", c.k) << '\n'
      << "word: " << word << '\n';
}

void Invert(const Options& opt, const std::string& text, bool canonical_half, bool oracle,
            std::ostream& out) {
  const Word word = ParseWord(text, Dialect::kSigma);
  std::vector<CyclicPerm> perms = PermsFromWord(word);
  std::string verdict;
  if (oracle) verdict = PermsFromWordOracle(word) == perms ? "MATCH" : "MISMATCH";
  if (canonical_half) perms = CanonicalHalf(perms);
  if (opt.json) {
    Json doc{{"word", ToString(word)}, {"permutations", PermsJson(perms)}};
    if (oracle) doc["oracle"] = verdict;
    out << doc.dump() << '\n';
    return;
  }
  PrintPerms(out, perms);
  if (oracle) out << "oracle: " << verdict << '\n';
}

void BWord(const Options& opt, const std::string& text, std::ostream& out) {
  const BDiagram b = ParseB(text);
  const BClassification c = ClassifyB(b);
  const Word word = BWordOf(b);
  const std::vector<int> theta = DegreeVector(word);
  if (opt.json) {
    out << Json{{"word", ToString(word)}, {"arcs", FormatArcSet(b)}, {"theta", theta},
                {"R", c.r}, {"Rbar", c.rbar}, {"K", c.k}, {"A", c.a}, {"Abar", c.abar},
                {"L", c.l}}
               .dump()
        << '\n';
    return;
  }
  out << "word: " << ToString(word) << '\n'
      << "arcs: " << FormatArcSet(b) << '\n';
  out << "theta:";
  for (int t : theta) out << ' ' << t;
  out << '\n'
      << Labeled("R", c.r) << '\n'
      << Labeled("Rbar", c.rbar) << '\n'
      << Labeled("K", c.k) << '\n'
      << Labeled("A", c.a) << '\n'
      << Labeled("Abar", c.abar) << '\n'
      << Labeled("L", c.l) << '\n';
}

void ValidateWord(const Options& opt, const std::string& text, std::ostream& out) {
  const ZValidation v = ValidateZ(ParseWord(text, Dialect::kB));
  if (opt.json) {
    Json doc{{"valid", v.valid()}};
    if (v.valid()) {
      doc["witness"] = v.witness->ToString();
    } else {
      doc["reason"] = std::string(InvalidReasonName(v.reason));
    }
    out << doc.dump() << '\n';
    return;
  }
  if (v.valid()) {
    out << "Valid\nwitness: " << v.witness->ToString() << '\n';
  } else {
    out << "Invalid: " << InvalidReasonName(v.reason) << '\n';
  }
}

void Generators(const Options& opt, const std::string& text, bool list, const std::string& method,
                std::ostream& out) {
  const BDiagram b = ParseB(text);
  if (!list && method.empty()) {
    const BigCount count = CountGenerators(b);
    if (opt.json) {
      out << Json{{"count", CountJson(count)}}.dump() << '\n';
    } else {
      out << count << '\n';
    }
    return;
  }
  GeneratorSet gens;
  if (method == "table") {
    gens = CompleteTable(b, opt.cap);
  } else if (method == "oracle") {
    gens = GeneratorsOracle(b);
  } else {
    gens = EnumerateGenerators(b, opt.cap);
  }
  if (opt.json) {
    Json doc{{"count", gens.size()}};
    if (list) doc["generators"] = PermsJson(gens);
    out << doc.dump() << '\n';
    return;
  }
  if (list) {
    PrintPerms(out, gens);
  } else {
    out << gens.size() << '\n';
  }
}

void Cutset(const Options& opt, const std::string& perm, const std::string& diagram,
            std::ostream& out) {
  const std::vector<Arc> cut = CutSet(ParsePerm(perm), ParseB(diagram));
  if (opt.json) {
    out << Json{{"cut_set", ArcsJson(cut)}, {"size", cut.size()}}.dump() << '\n';
  } else {
    out << FormatArcs(cut) << '\n';
  }
}

void ComplementCmd(const Options& opt, const std::string& perm, const std::string& diagram,
                   std::ostream& out) {
  const BDiagram c = Complement(ParsePerm(perm), ParseB(diagram));
  if (opt.json) {
    out << Json{{"complement", c.ToString()}, {"arcs", FormatArcSet(c)}}.dump() << '\n';
  } else {
    out << c.ToString() << '\n';
  }
}

void Crossing(const Options& opt, const std::string& diagram, std::ostream& out) {
  const int k = MaxCrossing(ParseB(diagram));
  if (opt.json) {
    out << Json{{"max_crossing", k}}.dump() << '\n';
  } else {
    out << k << '\n';
  }
}

void InflateCmd(const Options& opt, const std::string& text, std::ostream& out) {
  const Word inflated = Inflate(ParseWord(text, Dialect::kB));
  if (opt.json) {
    out << Json{{"inflated", ToString(inflated)}, {"length", inflated.size()}}.dump() << '\n';
  } else {
    out << ToString(inflated) << '\n';
  }
}

void Edit(const Options& opt, const std::string& op, const std::string& diagram, int i, int j,
          std::ostream& out) {
  const BDiagram b = ParseB(diagram);
  BDiagram result = b;
  if (op == "add") {
    result = AddArc(b, Arc::Between(i, j));
  } else if (op == "remove") {
    result = RemoveArc(b, Arc::Between(i, j));
  } else {
    result = TransposeLabels(b, i, j);
  }
  if (opt.json) {
    out << Json{{"result", result.ToString()}, {"arcs", FormatArcSet(result)}}.dump() << '\n';
  } else {
    out << result.ToString() << '\n';
  }
}

void Render(const std::string& input, const std::string& kind, const std::string& format,
            std::ostream& out) {
  StepPath path;
  if (kind == "perm") {
    path = PathSteps(WordOf(ParsePerm(input)), Dialect::kSigma);
  } else if (kind == "word") {
    const Word word = ParseWord(input, Dialect::kSigma);
    if (!SatisfiesSigmaRules(word)) {
      throw Error(ErrorCode::kNotAWord, "\"" + input + "\" breaks the sigma word rules");
    }
    path = PathSteps(word, Dialect::kSigma);
  } else {
    path = PathSteps(ParseWord(input, Dialect::kB), Dialect::kB);
  }
  out << (format == "svg" ? RenderSvg(path) : RenderAscii(path));
}

void Census(const Options& opt, int n, std::ostream& out) {
  const CensusReport r = RunCensus(n);
  if (!opt.json) {
    out << FormatCensus(r);
    return;
  }
  Json violations = Json::array();
  for (const SplitViolation& v : r.split_violations) {
    violations.push_back({{"word", ToString(v.word)},
                          {"pairs", v.pairs},
                          {"violating", PermsJson(v.violating)}});
  }
  out << Json{{"n", r.n},
              {"permutations", r.permutations},
              {"distinct_words", r.distinct_words},
              {"expected_words", CountJson(r.expected_words)},
              {"elevated_motzkin_strings", r.elevated_motzkin},
              {"words_pass", r.words_pass()},
              {"keratoid_free_words", r.keratoid_free_words},
              {"expected_keratoid_free", CountJson(r.expected_keratoid_free)},
              {"elevated_dyck_strings", r.elevated_dyck},
              {"keratoid_free_pass", r.keratoid_free_pass()},
              {"split_violations", violations}}
             .dump()
      << '\n';
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cyclic permutations, sigma words and acyclic arc diagrams"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json, "Emit JSON");
  app.add_option("--cap", opt.cap, "Largest generator set to enumerate")
      ->capture_default_str();

  std::function<void()> action;
  std::string text, second, method, kind = "word", format = "ascii";
  bool all = false, canonical_half = false, oracle = false, count = false, list = false;
  int n = 0, vi = 0, vj = 0;

  auto* classify = app.add_subcommand("classify", "Vertex classes and word of a permutation");
  classify->add_option("perm", text, "Permutation, e.g. \"1 3 2 7 8 4 5 6\"")->required();
  classify->callback([&] { action = [&] { Classify(opt, text, out); }; });

  auto* invert = app.add_subcommand("invert", "Permutations sharing a sigma word");
  invert->add_option("word", text, "Word over r, R, k")->required();
  auto* all_flag = invert->add_flag("--all", all, "List every permutation (default)");
  invert->add_flag("--canonical-half", canonical_half, "Keep p with s_2 < s_n")
      ->excludes(all_flag);
  invert->add_flag("--oracle", oracle, "Cross-check against brute force");
  invert->callback([&] { action = [&] { Invert(opt, text, canonical_half, oracle, out); }; });

  auto* bword = app.add_subcommand("bword", "Word, arcs and classes of a b-diagram");
  bword->add_option("bdiagram", text, "Blocks, e.g. \"3 1 6 | 2 7 8 | 4 5\"")->required();
  bword->callback([&] { action = [&] { BWord(opt, text, out); }; });

  auto* validate = app.add_subcommand("validate-word", "Decide whether a b-word is realizable");
  validate->add_option("word", text, "Word over r, R, k, a, A, e")->required();
  validate->callback([&] { action = [&] { ValidateWord(opt, text, out); }; });

  auto* generators = app.add_subcommand("generators", "Generators of a b-diagram");
  generators->add_option("bdiagram", text)->required();
  auto* count_flag = generators->add_flag("--count", count, "Print the number (default)");
  generators->add_flag("--list", list, "List every generator")->excludes(count_flag);
  generators->add_option("--method", method, "blocks, table or oracle")
      ->check(CLI::IsMember({"blocks", "table", "oracle"}));
  generators->callback([&] { action = [&] { Generators(opt, text, list, method, out); }; });

  auto* cutset = app.add_subcommand("cutset", "Arcs of a generator missing from a b-diagram");
  cutset->add_option("perm", text)->required();
  cutset->add_option("bdiagram", second)->required();
  cutset->callback([&] { action = [&] { Cutset(opt, text, second, out); }; });

  auto* complement = app.add_subcommand("complement", "Complement of a b-diagram in a generator");
  complement->add_option("perm", text)->required();
  complement->add_option("bdiagram", second)->required();
  complement->callback([&] { action = [&] { ComplementCmd(opt, text, second, out); }; });

  auto* crossing = app.add_subcommand("crossing", "Largest set of mutually crossing arcs");
  crossing->add_option("bdiagram", text)->required();
  crossing->callback([&] { action = [&] { Crossing(opt, text, out); }; });

  auto* inflate = app.add_subcommand("inflate", "Expand a b-word into single steps");
  inflate->add_option("word", text)->required();
  inflate->callback([&] { action = [&] { InflateCmd(opt, text, out); }; });

  auto* edit = app.add_subcommand("edit", "Add, remove or transpose");
  edit->require_subcommand(1);
  for (const char* op : {"add", "remove", "transpose"}) {
    auto* sub = edit->add_subcommand(op);
    sub->add_option("bdiagram", text)->required();
    sub->add_option("i", vi)->required();
    sub->add_option("j", vj)->required();
    sub->callback([&, op = std::string(op)] {
      action = [&, op] { Edit(opt, op, text, vi, vj, out); };
    });
  }

  auto* render = app.add_subcommand("render", "Draw the step path of a word");
  render->add_option("input", text)->required();
  render->add_option("--kind", kind)->check(CLI::IsMember({"perm", "word", "bword"}))
      ->capture_default_str();
  render->add_option("--format", format)->check(CLI::IsMember({"ascii", "svg"}))
      ->capture_default_str();
  render->callback([&] { action = [&] { Render(text, kind, format, out); }; });

  auto* census = app.add_subcommand("census", "Exhaustive word census over all permutations");
  census->add_option("n", n)->required();
  census->callback([&] { action = [&] { Census(opt, n, out); }; });

  std::vector<const char*> argv{"arcdiag"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitMalformed;
  }
  try {
    if (action) action();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace arcdiag::cli
