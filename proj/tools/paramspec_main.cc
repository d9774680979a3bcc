// Copyright 2026 The paramspec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// paramspec: command line front end for the extraction and fuzzing stages.
//
//   normalize  corpus -> normalized.json
//   mine       annotated sample -> patterns.json
//   rules      annotated sample -> rules.json
//   select     cross-validated threshold choice -> selection.json
//   extract    rules + target corpus -> constraints.json, doc_bugs.json
//   fuzz       constraints -> fuzz_report.json, findings/
//   score      constraints vs ground truth -> score.json
//
// Exit status: 0 success, 1 validation or input error, 2 harness error.

#include <unistd.h>

#include <filesystem>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "paramspec/campaign.h"
#include "paramspec/constraints.h"
#include "paramspec/corpus.h"
#include "paramspec/deptree.h"
#include "paramspec/errors.h"
#include "paramspec/evaluator.h"
#include "paramspec/extract.h"
#include "paramspec/generator.h"
#include "paramspec/io.h"
#include "paramspec/miner.h"
#include "paramspec/normalize.h"
#include "paramspec/rule.h"
#include "paramspec/rulegen.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace paramspec {
namespace {

struct Flags {
  std::string config;
  std::string work_dir = "paramspec-out";
  std::string format = "text";
  int jobs = 1;
  std::optional<uint64_t> seed;

  std::optional<size_t> min_support;
  std::optional<double> min_confidence;
  std::optional<size_t> max_size;
  bool no_prune = false;

  std::optional<size_t> max_iter;
  std::optional<double> conform_ratio;
  std::optional<double> optional_ratio;
  std::optional<double> mutation_p;
  std::optional<int64_t> timeout_ms;
  bool baseline = false;
  std::string harness;
  std::vector<std::string> apis;

  std::string corpus;
  std::string trees;
  std::string rules;
  std::string constraints;
  std::string truth;
  std::string findings;
};

// Config with every path resolved against the config file's directory.
class Config {
 public:
  explicit Config(const std::string& path) {
    if (path.empty()) return;
    if (!fs::exists(path)) throw Error("config file " + path + " does not exist");
    root_ = ParseJson(ReadFile(path), "config");
    if (!root_.is_object()) throw SchemaError("config", "expected an object");
    base_ = fs::path(path).parent_path();
  }

  json Section(const std::string& name) const {
    auto it = root_.find(name);
    return it == root_.end() ? json::object() : *it;
  }

  fs::path Path(const std::string& section, const std::string& key,
                const std::string& override_value) const {
    if (!override_value.empty()) return override_value;
    const json* j = &root_;
    json sub;
    if (!section.empty()) {
      sub = Section(section);
      j = &sub;
    }
    auto it = j->find(key);
    if (it == j->end() || !it->is_string()) {
      throw Error("no path for '" + (section.empty() ? key : section + "." + key) +
                  "': pass it on the command line or set it in the config");
    }
    fs::path p = it->get<std::string>();
    return p.is_absolute() ? p : base_ / p;
  }

  const json& root() const { return root_; }

 private:
  json root_ = json::object();
  fs::path base_;
};

fs::path Require(const fs::path& p, const std::string& what, const std::string& producer) {
  if (fs::exists(p)) return p;
  if (producer.empty()) throw MissingArtifactError(what + " " + p.string() + " does not exist");
  throw MissingArtifactError(what + " " + p.string() + " does not exist; run `paramspec " +
                             producer + "` first");
}

json InputRecord(const std::map<std::string, fs::path>& inputs) {
  json j = json::object();
  for (const auto& [name, path] : inputs) {
    j[name] = {{"path", path.generic_string()}, {"digest", FileDigest(path)}};
  }
  return j;
}

// Artifacts record the digests of what they were built from. Reading one whose
// inputs have since changed only warns; the caller decides whether to rebuild.
void WarnIfStale(const json& artifact, const fs::path& path, const std::string& producer) {
  auto it = artifact.find("inputs");
  if (it == artifact.end() || !it->is_object()) return;
  for (const auto& [name, rec] : it->items()) {
    if (!rec.is_object() || !rec.contains("path")) continue;
    fs::path p = rec["path"].get<std::string>();
    std::string now = fs::exists(p) ? FileDigest(p) : "missing";
    if (now != rec.value("digest", "")) {
      std::cerr << "warning: " << path.string() << " is stale (" << name << " " << p.string()
                << " changed since it was built); rerun `paramspec " << producer << "`\n";
    }
  }
}

// Writing over an artifact that was built from different inputs is worth a note.
void WriteArtifact(const fs::path& path, const std::string& text) {
  if (fs::exists(path)) {
    json old = json::parse(ReadFile(path), nullptr, false);
    json now = json::parse(text, nullptr, false);
    if (old.is_object() && now.is_object() && old.contains("inputs") &&
        old["inputs"] != now.value("inputs", json())) {
      std::cerr << "note: inputs changed since " << path.string() << " was last written\n";
    }
  }
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  WriteFile(path, text);
}

void Emit(const Flags& f, const json& summary, const std::string& text) {
  if (f.format == "json") {
    std::cout << CanonicalDump(summary);
  } else {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  }
}

fs::path Work(const Flags& f, const std::string& name) { return fs::path(f.work_dir) / name; }

struct Sources {
  fs::path corpus, trees, keywords;
};

std::vector<PreparedApi> LoadPrepared(const Sources& s) {
  KeywordTable table = KeywordTable::Load(Require(s.keywords, "keyword table", ""));
  std::vector<ApiDoc> corpus = LoadCorpus(Require(s.corpus, "corpus", ""));
  std::map<std::string, DepTree> trees = LoadTrees(Require(s.trees, "parse trees", ""));
  return Prepare(corpus, table, trees);
}

Sources SampleSources(const Config& c, const Flags& f) {
  return {c.Path("sample", "corpus", f.corpus), c.Path("sample", "trees", f.trees),
          c.Path("", "keywords", "")};
}

Sources TargetSources(const Config& c, const Flags& f) {
  return {c.Path("target_corpus", "corpus", f.corpus), c.Path("target_corpus", "trees", f.trees),
          c.Path("", "keywords", "")};
}

Sample LoadSample(const Config& c, const Flags& f, std::map<std::string, fs::path>* inputs) {
  Sources s = SampleSources(c, f);
  fs::path ann = Require(c.Path("sample", "annotations", ""), "annotations", "");
  std::vector<PreparedApi> prepared = LoadPrepared(s);
  AnnotationSet annotations = LoadAnnotations(ann);
  std::vector<ApiDoc> docs;
  for (const PreparedApi& a : prepared) docs.push_back(a.doc);
  CheckAnnotations(annotations, docs);
  *inputs = {{"corpus", s.corpus}, {"trees", s.trees}, {"keywords", s.keywords},
             {"annotations", ann}};
  return BuildSample(prepared, annotations);
}

RuleOptions RuleConfig(const Config& c, const Flags& f) {
  RuleOptions o;
  json r = c.Section("rules");
  o.min_support = r.value("min_support", o.min_support);
  o.min_confidence = r.value("min_confidence", o.min_confidence);
  o.max_size = r.value("max_size", o.max_size);
  if (r.contains("comparator")) o.comparator = ParseComparator(r["comparator"].get<std::string>());
  if (f.min_support) o.min_support = *f.min_support;
  if (f.min_confidence) o.min_confidence = *f.min_confidence;
  if (f.max_size) o.max_size = *f.max_size;
  if (f.no_prune) o.prune = false;
  o.threads = f.jobs;
  if (o.min_support < 1) throw Error("--min-support must be at least 1");
  if (o.max_size < 1) throw Error("--max-size must be at least 1");
  if (o.min_confidence < 0 || o.min_confidence > 1) {
    throw Error("--min-confidence must lie in [0, 1]");
  }
  return o;
}

ExtractOptions ExtractConfig(const Config& c, const Flags& f) {
  ExtractOptions o;
  o.number_of_heuristic = c.Section("extract").value("number_of_heuristic", true);
  o.jobs = f.jobs;
  return o;
}

uint64_t Seed(const Config& c, const Flags& f) {
  if (f.seed) return *f.seed;
  return c.root().value("seed", uint64_t{0});
}

// ---------------------------------------------------------------------------

int CmdNormalize(const Config& c, const Flags& f) {
  Sources s = f.corpus.empty() && !c.root().contains("sample") ? TargetSources(c, f)
                                                                : SampleSources(c, f);
  KeywordTable table = KeywordTable::Load(Require(s.keywords, "keyword table", ""));
  std::vector<ApiDoc> corpus = LoadCorpus(Require(s.corpus, "corpus", ""));
  json out = json::object();
  out["inputs"] = InputRecord({{"corpus", s.corpus}, {"keywords", s.keywords}});
  out["sentences"] = json::array();
  std::string text;
  size_t warnings = 0;
  for (const ApiDoc& doc : corpus) {
    std::vector<std::string> names = doc.KnownNames();
    std::set<std::string> known(names.begin(), names.end());
    for (const auto& [param, pd] : doc.param_docs) {
      for (size_t i = 0; i < pd.sentences.size(); ++i) {
        NormalizedSentence n = Normalize(pd.sentences[i], table, known);
        json toks = json::array();
        for (const NormToken& t : n.tokens) {
          toks.push_back({{"kind", KindName(t.kind)},
                          {"text", t.text},
                          {"surfaces", t.surfaces},
                          {"payload", t.payload}});
        }
        std::string id = SentenceId(doc.api_name, param, i);
        out["sentences"].push_back({{"id", id},
                                    {"raw", pd.sentences[i].raw_text},
                                    {"normalized", n.Render()},
                                    {"tokens", toks},
                                    {"warnings", n.warnings}});
        warnings += n.warnings.size();
        text += id + "\t" + n.Render() + "\n";
      }
    }
  }
  fs::path path = Work(f, "normalized.json");
  WriteArtifact(path, CanonicalDump(out));
  Emit(f,
       {{"artifact", path.generic_string()},
        {"sentences", out["sentences"].size()},
        {"warnings", warnings}},
       text);
  return 0;
}

int CmdMine(const Config& c, const Flags& f) {
  std::map<std::string, fs::path> inputs;
  Sample sample = LoadSample(c, f, &inputs);
  RuleOptions ro = RuleConfig(c, f);
  MinerOptions mo;
  mo.min_support = ro.min_support;
  mo.max_size = ro.max_size;
  mo.comparator = ro.comparator;
  mo.threads = f.jobs;
  std::vector<FrequentPattern> patterns = Mine(SampleForest(sample), mo);
  json out;
  out["inputs"] = InputRecord(inputs);
  out["min_support"] = mo.min_support;
  out["max_size"] = mo.max_size;
  out["patterns"] = json::array();
  for (const FrequentPattern& p : patterns) {
    out["patterns"].push_back({{"pattern", p.pattern.Encode()},
                               {"support", p.support()},
                               {"documents", p.occurrences}});
  }
  fs::path path = Work(f, "patterns.json");
  WriteArtifact(path, CanonicalDump(out));
  Emit(f, {{"artifact", path.generic_string()}, {"patterns", patterns.size()}},
       DumpPatterns(patterns));
  return 0;
}

std::string RulesText(const std::vector<ExtractionRule>& rules) {
  std::string text;
  for (const ExtractionRule& r : rules) {
    char conf[32];
    std::snprintf(conf, sizeof conf, "%.3f", r.confidence);
    text += r.pattern.Encode() + "\t->\t" + r.ac.ToString() + "\tconf=" + conf +
            "\tsupport=" + std::to_string(r.support) + "\n";
  }
  return text;
}

int CmdRules(const Config& c, const Flags& f) {
  std::map<std::string, fs::path> inputs;
  Sample sample = LoadSample(c, f, &inputs);
  RuleOptions ro = RuleConfig(c, f);
  std::vector<ExtractionRule> rules = ConstructRules(sample, ro);
  json meta = InputRecord(inputs);
  fs::path path = f.rules.empty() ? Work(f, "rules.json") : fs::path(f.rules);
  WriteArtifact(path, SerializeRules(rules, meta));
  Emit(f,
       {{"artifact", path.generic_string()},
        {"rules", rules.size()},
        {"min_support", ro.min_support},
        {"min_confidence", ro.min_confidence},
        {"max_size", ro.max_size}},
       RulesText(rules));
  return 0;
}

int CmdSelect(const Config& c, const Flags& f) {
  std::map<std::string, fs::path> inputs;
  Sample sample = LoadSample(c, f, &inputs);
  fs::path truth_path = Require(c.Path("sample", "truth", f.truth), "ground truth", "");
  inputs["truth"] = truth_path;
  ConstraintMap truth = TruthMap(LoadConstraints(truth_path));
  json sel = c.Section("select");
  std::vector<size_t> supports = sel.value("supports", std::vector<size_t>{2, 3, 4, 5});
  std::vector<double> confs = sel.value("confidences", std::vector<double>{0.6, 0.7, 0.8, 0.9});
  int folds = sel.value("folds", 5);
  RuleOptions base = RuleConfig(c, f);
  ThresholdSelection s = SelectThresholds(sample, truth, supports, confs, folds, Seed(c, f), base,
                                          ExtractConfig(c, f));
  json out = s.ToJson();
  out["inputs"] = InputRecord(inputs);
  fs::path path = Work(f, "selection.json");
  WriteArtifact(path, CanonicalDump(out));
  char buf[160];
  std::snprintf(buf, sizeof buf, "selected min_support=%zu min_confidence=%.2f (mean F1 %.3f)\n",
                s.min_support, s.min_confidence, s.mean_f1);
  Emit(f,
       {{"artifact", path.generic_string()},
        {"min_support", s.min_support},
        {"min_confidence", s.min_confidence},
        {"mean_f1", s.mean_f1}},
       buf);
  return 0;
}

int CmdExtract(const Config& c, const Flags& f) {
  fs::path rules_path = f.rules.empty() ? Work(f, "rules.json") : fs::path(f.rules);
  Require(rules_path, "rules file", "rules");
  std::string rules_text = ReadFile(rules_path);
  WarnIfStale(ParseJson(rules_text, "rules"), rules_path, "rules");
  std::vector<ExtractionRule> rules = ParseRules(rules_text);
  Sources s = TargetSources(c, f);
  std::vector<PreparedApi> prepared = LoadPrepared(s);
  ExtractionResult result = Extract(prepared, rules, ExtractConfig(c, f));
  for (const std::string& w : result.warnings) std::cerr << "warning: " << w << "\n";

  json cj = ConstraintsToJson(result.constraints);
  cj["inputs"] = InputRecord(
      {{"corpus", s.corpus}, {"trees", s.trees}, {"keywords", s.keywords}, {"rules", rules_path}});
  fs::path cpath = f.constraints.empty() ? Work(f, "constraints.json") : fs::path(f.constraints);
  WriteArtifact(cpath, CanonicalDump(cj));
  fs::path bpath = Work(f, "doc_bugs.json");
  WriteArtifact(bpath, result.SerializeDocBugs());

  std::string text = SerializeConstraints(result.constraints);
  for (const DocBug& b : result.doc_bugs) {
    text += std::string(DocBugKindName(b.kind)) + "\t" + b.api + "\t" + b.detail + "\n";
  }
  Emit(f,
       {{"artifact", cpath.generic_string()},
        {"doc_bugs", bpath.generic_string()},
        {"apis", result.constraints.size()},
        {"doc_bug_count", result.doc_bugs.size()},
        {"warnings", result.warnings.size()}},
       text);
  return 0;
}

fs::path ExeDir() {
  std::error_code ec;
  fs::path self = fs::read_symlink("/proc/self/exe", ec);
  return ec ? fs::path() : self.parent_path();
}

TargetProfile Profile(const Config& c, const Flags& f) {
  TargetProfile p = TargetProfile::FromJson(c.Section("target").empty()
                                                ? json{{"command", {"paramspec_worker"}}}
                                                : c.Section("target"));
  if (p.command.empty()) p.command = {"paramspec_worker"};
  if (f.timeout_ms) p.timeout_ms = *f.timeout_ms;
  // A bare worker name prefers the copy installed next to this binary.
  if (p.command[0].find('/') == std::string::npos) {
    fs::path sibling = ExeDir() / p.command[0];
    if (!ExeDir().empty() && fs::exists(sibling)) p.command[0] = sibling.string();
  }
  p.Check();
  return p;
}

int CmdFuzz(const Config& c, const Flags& f) {
  fs::path cpath = f.constraints.empty() ? Work(f, "constraints.json") : fs::path(f.constraints);
  Require(cpath, "constraints file", "extract");
  std::string ctext = ReadFile(cpath);
  WarnIfStale(ParseJson(ctext, "constraints"), cpath, "extract");
  ConstraintSet constraints = ConstraintsFromJson(ParseJson(ctext, "constraints"));

  CampaignOptions opts;
  opts.generator = GeneratorOptions::FromJson(c.Section("fuzz"));
  opts.generator.seed = Seed(c, f);
  if (f.max_iter) opts.generator.max_iter = *f.max_iter;
  if (f.conform_ratio) opts.generator.conform_ratio = *f.conform_ratio;
  if (f.optional_ratio) opts.generator.optional_ratio = *f.optional_ratio;
  if (f.mutation_p) opts.generator.mutation_p = *f.mutation_p;
  opts.generator.Check();
  opts.baseline = f.baseline;
  opts.jobs = f.jobs;

  std::vector<std::string> apis = f.apis;
  if (apis.empty()) {
    for (const auto& [name, a] : constraints) apis.push_back(name);
  }
  for (const std::string& a : apis) {
    if (!constraints.count(a)) throw Error("--api " + a + " is not in " + cpath.string());
  }

  std::string harness = f.harness.empty() ? c.root().value("harness", "process") : f.harness;
  TargetProfile profile = Profile(c, f);
  HarnessFactory factory;
  if (harness == "stub") {
    factory = [&] { return std::make_unique<StubHarness>(profile.abort_is_exception); };
  } else if (harness == "process") {
    factory = [&] { return std::make_unique<ProcessHarness>(profile); };
  } else {
    throw Error("--harness must be 'process' or 'stub'");
  }

  CampaignReport report = RunCampaign(constraints, apis, opts, factory);
  const std::string suffix = f.baseline ? "_baseline" : "";
  fs::path findings = f.findings.empty() ? Work(f, "findings" + suffix) : fs::path(f.findings);
  WriteFindings(report, findings);
  json rj = report.ToJson();
  rj["inputs"] = InputRecord({{"constraints", cpath}});
  rj["generator"] = opts.generator.ToJson();
  rj["target"] = profile.ToJson();
  fs::path rpath = Work(f, "fuzz_report" + suffix + ".json");
  WriteArtifact(rpath, CanonicalDump(rj));
  Emit(f, rj, report.Summary());

  for (const ApiReport& a : report.apis) {
    if (a.aborted) {
      std::cerr << "error: " << a.api << ": " << a.diagnostic << "\n";
      return 2;
    }
  }
  return 0;
}

int CmdScore(const Config& c, const Flags& f) {
  fs::path cpath = f.constraints.empty() ? Work(f, "constraints.json") : fs::path(f.constraints);
  Require(cpath, "constraints file", "extract");
  std::string ctext = ReadFile(cpath);
  WarnIfStale(ParseJson(ctext, "constraints"), cpath, "extract");
  ConstraintSet extracted = ConstraintsFromJson(ParseJson(ctext, "constraints"));
  fs::path tpath = Require(c.Path("target_corpus", "truth", f.truth), "ground truth", "");
  QualityReport q = Score(TruthMap(extracted), TruthMap(LoadConstraints(tpath)));
  json out = q.ToJson();
  out["inputs"] = InputRecord({{"constraints", cpath}, {"truth", tpath}});
  fs::path path = Work(f, "score.json");
  WriteArtifact(path, CanonicalDump(out));
  std::string text;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-10s %9s %9s %9s\n", "category", "precision", "recall", "f1");
  text += buf;
  auto row = [&](const std::string& name, const CategoryScore& s) {
    std::snprintf(buf, sizeof buf, "%-10s %9.3f %9.3f %9.3f\n", name.c_str(), s.Precision(),
                  s.Recall(), s.F1());
    text += buf;
  };
  for (const auto& [name, s] : q.categories) row(name, s);
  row("overall", q.overall);
  if (q.not_applicable()) text = "no parameter with a non-empty ground truth; score n/a\n";
  Emit(f, out, text);
  return 0;
}

}  // namespace
}  // namespace paramspec

int main(int argc, char** argv) {
  using namespace paramspec;
  CLI::App app{"paramspec: constraint extraction from API docs and constraint-guided fuzzing"};
  app.require_subcommand(1);
  Flags f;
  app.add_option("-c,--config", f.config, "pipeline config (JSON)");
  app.add_option("-w,--work-dir", f.work_dir, "directory for stage artifacts")
      ->capture_default_str();
  app.add_option("--format", f.format, "stdout format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("-j,--jobs", f.jobs, "parallel workers across APIs")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", f.seed, "seed for all randomness (overrides config)");

  auto rule_flags = [&](CLI::App* sub) {
    sub->add_option("--min-support", f.min_support, "minimum document support");
    sub->add_option("--min-confidence", f.min_confidence, "minimum rule confidence");
    sub->add_option("--max-size", f.max_size, "maximum pattern size");
    sub->add_option("--corpus", f.corpus, "corpus file (overrides config)");
    sub->add_option("--trees", f.trees, "CoNLL-U trees (overrides config)");
  };

  CLI::App* normalize = app.add_subcommand("normalize", "normalize every sentence of a corpus");
  normalize->add_option("--corpus", f.corpus, "corpus file (overrides config)");

  CLI::App* mine = app.add_subcommand("mine", "frequent subtrees of the annotated sample");
  rule_flags(mine);

  CLI::App* rules = app.add_subcommand("rules", "construct extraction rules");
  rule_flags(rules);
  rules->add_flag("--no-prune", f.no_prune, "keep rules whose pattern contains a smaller one");
  rules->add_option("-o,--out", f.rules, "rules file to write");

  CLI::App* select = app.add_subcommand("select", "choose thresholds by cross validation");
  rule_flags(select);
  select->add_option("--truth", f.truth, "ground truth for the sample");

  CLI::App* extract = app.add_subcommand("extract", "extract constraints from a corpus");
  extract->add_option("--rules", f.rules, "rules file");
  extract->add_option("--corpus", f.corpus, "target corpus");
  extract->add_option("--trees", f.trees, "CoNLL-U trees for the target corpus");
  extract->add_option("-o,--out", f.constraints, "constraints file to write");

  CLI::App* fuzz = app.add_subcommand("fuzz", "run a generation campaign");
  fuzz->add_option("--constraints", f.constraints, "constraints file");
  fuzz->add_option("--max-iter", f.max_iter, "inputs per API");
  fuzz->add_option("--conform-ratio", f.conform_ratio, "share of conforming inputs");
  fuzz->add_option("--optional-ratio", f.optional_ratio, "chance of including an optional");
  fuzz->add_option("--mutation-p", f.mutation_p, "chance of a boundary mutation");
  fuzz->add_option("--timeout-ms", f.timeout_ms, "per-invocation timeout");
  fuzz->add_flag("--baseline", f.baseline, "ignore constraints (unguided generation)");
  fuzz->add_option("--harness", f.harness, "process or stub");
  fuzz->add_option("--api", f.apis, "restrict to these APIs");
  fuzz->add_option("--findings", f.findings, "findings directory");

  CLI::App* score = app.add_subcommand("score", "compare constraints with a ground truth");
  score->add_option("--constraints", f.constraints, "constraints file");
  score->add_option("--truth", f.truth, "ground-truth constraints");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    Config config(f.config);
    if (*normalize) return CmdNormalize(config, f);
    if (*mine) return CmdMine(config, f);
    if (*rules) return CmdRules(config, f);
    if (*select) return CmdSelect(config, f);
    if (*extract) return CmdExtract(config, f);
    if (*fuzz) return CmdFuzz(config, f);
    if (*score) return CmdScore(config, f);
  } catch (const HarnessError& e) {
    std::cerr << "harness error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
