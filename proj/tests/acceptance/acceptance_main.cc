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

// Acceptance run: one PASS/FAIL line per criterion, followed by a verdict.
//
// Criteria listed in kKnownFailures are expected to fail for a documented
// reason; the run still succeeds if they fail in exactly that way, and fails
// if they unexpectedly pass (so the list is kept honest).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fixtures.h"
#include "oracles.h"
#include "paramspec/campaign.h"
#include "paramspec/errors.h"
#include "paramspec/extract.h"
#include "paramspec/generator.h"
#include "paramspec/io.h"
#include "paramspec/miner.h"
#include "paramspec/mock_target.h"
#include "paramspec/rulegen.h"

namespace paramspec {
namespace {

namespace fs = std::filesystem;
using testing::DataDir;

struct Result {
  bool pass = false;
  std::string detail;
  std::vector<std::string> notes;
  // For known failures: the failure is the documented one.
  bool expected_failure_shape = false;
};

double Seconds(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - since).count();
}

std::string Fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

Result MinerOracle() {
  auto start = std::chrono::steady_clock::now();
  size_t mismatches = 0, patterns = 0;
  for (uint64_t s = 0; s < 100; ++s) {
    Forest forest = oracle::RandomForest(1000 + s, 6, 6);
    MinerOptions o;
    o.min_support = 2;
    o.max_size = 4;
    std::map<std::string, size_t> got;
    for (const FrequentPattern& p : Mine(forest, o)) got[p.pattern.Encode()] = p.support();
    std::map<std::string, size_t> want = oracle::Mine(forest, 2, 4);
    patterns += want.size();
    mismatches += got != want;
  }
  double t = Seconds(start);
  Result r;
  r.pass = mismatches == 0 && t < 60;
  r.detail = "100 forests, " + std::to_string(patterns) + " oracle patterns, " +
             std::to_string(mismatches) + " mismatching forests, " + Fmt("%.1f s", t);
  return r;
}

Result CondProbOracle() {
  const Sample& sample = testing::MiniSample();
  std::set<AbstractConstraint> acs;
  for (const AnnotatedDoc& d : sample) acs.insert(d.acs.begin(), d.acs.end());
  MinerOptions o;
  o.min_support = 1;
  o.max_size = 4;
  std::vector<FrequentPattern> pats = Mine(SampleForest(sample), o);
  size_t checked = 0, wrong = 0;
  for (const FrequentPattern& p : pats) {
    // Direct set counting: which documents contain the pattern at all.
    std::vector<const AnnotatedDoc*> with;
    for (const AnnotatedDoc& d : sample) {
      bool has = false;
      for (const DepTree& t : d.param.Trees()) has = has || oracle::Embeds(p.pattern, t);
      if (has) with.push_back(&d);
    }
    for (const AbstractConstraint& ac : acs) {
      size_t hits = std::count_if(with.begin(), with.end(),
                                  [&](const AnnotatedDoc* d) { return d->acs.count(ac) > 0; });
      Probability got = CondProb(ac, p.pattern, sample);
      ++checked;
      wrong += got.hits != hits || got.total != with.size();
    }
  }
  // Confidences carried by emitted rules (full pattern size).
  size_t rules_wrong = 0;
  for (const ExtractionRule& r : testing::DefaultRules()) {
    Probability want = oracle::CountCondProb(r.ac, r.pattern, sample);
    rules_wrong += r.hits != want.hits || r.support != want.total ||
                   r.confidence != static_cast<double>(want.hits) / static_cast<double>(want.total);
  }
  Result r;
  r.pass = wrong == 0 && rules_wrong == 0 && checked > 0;
  r.detail = std::to_string(sample.size()) + " documents, " + std::to_string(checked) +
             " (pattern, AC) pairs, " + std::to_string(wrong) + " mismatches; " +
             std::to_string(testing::DefaultRules().size()) + " rule confidences, " +
             std::to_string(rules_wrong) + " mismatches";
  return r;
}

bool IsOfTypeRule(const ExtractionRule& r) {
  if (r.ac.ToString() != "DTYPE{D_TYPE}" || r.pattern.size() != 3) return false;
  std::multiset<std::string> labels;
  for (const PatternNode& n : r.pattern.nodes()) labels.insert(n.label);
  return labels == std::multiset<std::string>{"D_TYPE", "of", "type"};
}

Result TwoSentenceRule() {
  Result r;
  std::vector<PreparedApi> prepared = testing::LoadPrepared("fixtures/two_sentence");
  Sample sample =
      BuildSample(prepared, LoadAnnotations(DataDir() / "fixtures/two_sentence/annotations.json"));
  RuleOptions opts;  // min_support 2, min_confidence 0.9
  std::vector<ExtractionRule> rules = ConstructRules(sample, opts);
  auto found = std::find_if(rules.begin(), rules.end(), IsOfTypeRule);
  bool rule_ok = found != rules.end() && found->confidence == 1.0;

  std::string dtype_rules;
  for (const ExtractionRule& x : rules) {
    if (x.ac.ToString() == "DTYPE{D_TYPE}") {
      dtype_rules += (dtype_rules.empty() ? "" : ", ") + x.pattern.Encode();
    }
  }
  r.notes.push_back("rule \"of type D_TYPE\" -> DTYPE{D_TYPE}: " +
                    std::string(rule_ok ? "emitted, confidence 1.0" : "not emitted") +
                    "; DTYPE rules kept: " + dtype_rules);

  opts.prune = false;
  std::vector<ExtractionRule> unpruned = ConstructRules(sample, opts);
  auto u = std::find_if(unpruned.begin(), unpruned.end(), IsOfTypeRule);
  bool unpruned_ok = u != unpruned.end() && u->confidence == 1.0;
  r.notes.push_back("without minimality pruning: " +
                    (unpruned_ok ? u->pattern.Encode() + " emitted with confidence " +
                                       Fmt("%.1f", u->confidence)
                                 : std::string("not emitted")));

  // Instantiation on the value description, with rules from the bundled sample
  // (the two sentences alone carry no NDIM evidence).
  ConcreteConstraint value;
  for (const AnnotatedDoc& d : testing::MiniSample()) {
    if (d.key == AnnotationKey{"tf.nn.atrous_conv2d", "value"}) {
      value = ExtractParam(d.param, testing::DefaultRules(), d.known_names, {}, nullptr);
    }
  }
  bool extract_ok = value.dtypes == std::set<std::string>{"float"} &&
                    value.structures == std::set<std::string>{"tensor"} &&
                    value.ndims == std::set<int64_t>{4};
  r.notes.push_back("atrous_conv2d.value -> " + value.ToJson().dump() +
                    (extract_ok ? " (as expected)" : " (expected dtype float, tensor, ndim 4)"));
  r.pass = rule_ok && extract_ok;
  r.detail = std::string("rule ") + (rule_ok ? "ok" : "missing") + ", extraction " +
             (extract_ok ? "ok" : "wrong");
  r.expected_failure_shape = !rule_ok && unpruned_ok && extract_ok;
  return r;
}

Sample Subset(const Sample& s, const std::vector<size_t>& idx) {
  Sample out;
  for (size_t i : idx) out.push_back(s[i]);
  return out;
}

const std::vector<size_t> kSupports = {2, 3, 4, 5};
const std::vector<double> kConfidences = {0.6, 0.7, 0.8, 0.9};

Result F1Split() {
  const Sample& sample = testing::MiniSample();
  std::vector<size_t> idx(sample.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  Rng rng(20260101);
  rng.Shuffle(&idx);
  std::vector<size_t> train_idx(idx.begin(), idx.begin() + 30), test_idx(idx.begin() + 30, idx.end());
  Sample train = Subset(sample, train_idx), test = Subset(sample, test_idx);
  ThresholdSelection sel = SelectThresholds(train, testing::MiniTruth(), kSupports, kConfidences,
                                            5, 1, RuleOptions{}, ExtractOptions{});
  RuleOptions o;
  o.min_support = sel.min_support;
  o.min_confidence = sel.min_confidence;
  std::vector<ExtractionRule> rules = ConstructRules(train, o);
  ConstraintMap truth;
  for (const AnnotatedDoc& d : test) {
    auto it = testing::MiniTruth().find(d.key);
    if (it != testing::MiniTruth().end()) truth[d.key] = it->second;
  }
  QualityReport q = Score(ExtractSample(test, rules, ExtractOptions{}), truth);
  Result r;
  r.pass = sample.size() == 40 && q.evaluated > 0 && q.overall.F1() >= 0.85;
  r.detail = "train 30 / test 10 (" + std::to_string(q.evaluated) + " with ground truth), " +
             "thresholds support " + std::to_string(sel.min_support) + " confidence " +
             Fmt("%.1f", sel.min_confidence) + ", P " + Fmt("%.3f", q.overall.Precision()) +
             " R " + Fmt("%.3f", q.overall.Recall()) + " F1 " + Fmt("%.3f", q.overall.F1());
  return r;
}

Result GeneratorSoundness() {
  const ConstraintSet& cs = testing::MockExtracted();
  std::vector<const ApiConstraints*> apis;
  for (const auto& [name, a] : cs) apis.push_back(&a);
  std::map<std::string, Generator> gens;
  for (const ApiConstraints* a : apis) gens.emplace(a->api, Generator(*a, GeneratorOptions{}));
  size_t ci_bad = 0, vi_bad = 0, errors = 0;
  Result r;
  auto keep = [&r](const char* tag, const GeneratedInput& in) {
    if (r.notes.size() < 5) r.notes.push_back(std::string(tag) + " " + in.ToJson().dump());
  };
  for (uint64_t i = 0; i < 1000; ++i) {
    const ApiConstraints& a = *apis[i % apis.size()];
    const Generator& g = gens.at(a.api);
    uint64_t seed = InputSeed(ApiSeed(42, a.api), i);
    try {
      GeneratedInput ci = g.Conforming(seed);
      if (!oracle::NonConforming(ci, a).empty()) {
        ++ci_bad;
        keep("non-conforming CI", ci);
      }
    } catch (const GenerationError&) {
      ++errors;
    }
    try {
      GeneratedInput vi = g.Violating(seed);
      std::set<std::string> bad = oracle::NonConforming(vi, a);
      if (!vi.violated_param || bad != std::set<std::string>{*vi.violated_param}) {
        ++vi_bad;
        keep("leaky VI", vi);
      }
    } catch (const GenerationError&) {
      ++errors;
    }
  }
  r.pass = ci_bad == 0 && vi_bad == 0 && errors == 0;
  r.detail = "1000 CIs: " + std::to_string(1000 - ci_bad) + " all-conforming; 1000 VIs: " +
             std::to_string(1000 - vi_bad) + " confined to the designated parameter; " +
             std::to_string(errors) + " generation errors (" + std::to_string(apis.size()) +
             " mock APIs)";
  return r;
}

CampaignReport Campaign(uint64_t seed, bool baseline) {
  CampaignOptions o;
  o.generator.seed = seed;
  o.baseline = baseline;
  std::vector<std::string> apis;
  for (const auto& [name, a] : testing::MockExtracted()) apis.push_back(name);
  return RunCampaign(testing::MockExtracted(), apis, o,
                     [] { return std::make_unique<StubHarness>(); });
}

std::map<std::string, std::string> Snapshot(const fs::path& dir) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::recursive_directory_iterator(dir)) {
    if (e.is_regular_file()) out[fs::relative(e.path(), dir).generic_string()] = ReadFile(e.path());
  }
  return out;
}

Result ModeSplit() {
  CampaignReport a = Campaign(7, false), b = Campaign(7, false);
  bool split = !a.apis.empty();
  for (const ApiReport& r : a.apis) split = split && r.ci == 1000 && r.vi == 1000;
  fs::path da = testing::ScratchDir("acceptance/findings_a");
  fs::path db = testing::ScratchDir("acceptance/findings_b");
  WriteFindings(a, da);
  WriteFindings(b, db);
  auto sa = Snapshot(da), sb = Snapshot(db);
  bool same = sa == sb && CanonicalDump(a.ToJson()) == CanonicalDump(b.ToJson());
  Result r;
  r.pass = split && same && !sa.empty();
  r.detail = std::to_string(a.apis.size()) + " APIs at 1000 CI / 1000 VI: " +
             (split ? "yes" : "no") + "; findings files " + std::to_string(sa.size()) +
             ", identical across runs: " + (same ? "yes" : "no");
  return r;
}

Result Monotonicity() {
  const Sample& sample = testing::MiniSample();
  MinerOptions mo;
  mo.min_support = 2;
  mo.max_size = 7;
  std::vector<FrequentPattern> pats = Mine(SampleForest(sample), mo);
  auto count = [&](size_t s, double c) {
    RuleOptions o;
    o.min_support = s;
    o.min_confidence = c;
    return RulesFromPatterns(pats, sample, o).size();
  };
  std::vector<std::vector<size_t>> grid(kSupports.size(), std::vector<size_t>(kConfidences.size()));
  std::string table;
  bool mono = true;
  for (size_t i = 0; i < kSupports.size(); ++i) {
    for (size_t j = 0; j < kConfidences.size(); ++j) {
      grid[i][j] = count(kSupports[i], kConfidences[j]);
      if (i > 0) mono = mono && grid[i][j] <= grid[i - 1][j];
      if (j > 0) mono = mono && grid[i][j] <= grid[i][j - 1];
      table += (j ? " " : (i ? " | " : "")) + std::to_string(grid[i][j]);
    }
  }
  ThresholdSelection sel = SelectThresholds(sample, testing::MiniTruth(), kSupports, kConfidences,
                                            5, 1, RuleOptions{}, ExtractOptions{});
  size_t at_sel = count(sel.min_support, sel.min_confidence);
  size_t at_zero = count(sel.min_support, 0.0);
  Result r;
  r.pass = mono && at_zero > at_sel;
  r.detail = "4x4 grid (support 2..5 x confidence 0.6..0.9): " + table +
             (mono ? "; non-increasing" : "; NOT monotone") + "; selected (" +
             std::to_string(sel.min_support) + ", " + Fmt("%.1f", sel.min_confidence) + ") gives " +
             std::to_string(at_sel) + " rules, confidence 0 gives " + std::to_string(at_zero);
  return r;
}

Result GuidedVsBaseline() {
  const std::vector<std::string> ids = MockBugIds();
  const std::set<std::string> all(ids.begin(), ids.end());
  bool ok = true;
  std::string detail;
  Result r;
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    CampaignReport g = Campaign(seed, false), b = Campaign(seed, true);
    std::set<std::string> gb = g.BugIds(), bb = b.BugIds();
    bool seed_ok = gb == all && bb.size() * 10 <= all.size() * 4 &&
                   g.PassingRatio() > b.PassingRatio();
    ok = ok && seed_ok;
    r.notes.push_back("seed " + std::to_string(seed) + ": guided " + std::to_string(gb.size()) +
                      "/" + std::to_string(all.size()) + " bugs, pass ratio " +
                      Fmt("%.3f", g.PassingRatio()) + "; baseline " + std::to_string(bb.size()) +
                      "/" + std::to_string(all.size()) + " bugs, pass ratio " +
                      Fmt("%.3f", b.PassingRatio()));
  }
  r.pass = ok;
  r.detail = "5 seeds, stub harness, " + std::to_string(all.size()) + " injected bugs";
  return r;
}

Result DocBugDetection() {
  ExtractionResult res =
      Extract(testing::LoadPrepared("fixtures/moving_average"), testing::DefaultRules(), {});
  size_t unresolved = 0;
  bool names_variable = false;
  for (const DocBug& b : res.doc_bugs) {
    if (b.kind != DocBugKind::kUnresolvedDependency) continue;
    ++unresolved;
    names_variable = b.names == std::vector<std::string>{"variable"};
  }
  Result r;
  r.pass = unresolved == 1 && names_variable;
  r.detail = std::to_string(unresolved) + " UNRESOLVED_DEPENDENCY (" +
             std::to_string(res.doc_bugs.size()) + " doc bugs in total)";
  for (const DocBug& b : res.doc_bugs) r.notes.push_back(b.ToJson().dump());
  return r;
}

}  // namespace
}  // namespace paramspec

int main() {
  using namespace paramspec;
  struct Criterion {
    const char* id;
    std::function<Result()> run;
  };
  const std::vector<Criterion> criteria = {
      {"miner_oracle", MinerOracle},         {"cond_prob_oracle", CondProbOracle},
      {"two_sentence_rule", TwoSentenceRule},           {"extraction_f1", F1Split},
      {"generator_soundness", GeneratorSoundness},
      {"mode_split_determinism", ModeSplit}, {"monotonicity", Monotonicity},
      {"guided_vs_baseline_stub", GuidedVsBaseline},
      {"doc_bug_detection", DocBugDetection},
  };
  // Fails for a documented reason: minimality pruning keeps the single-node
  // D_TYPE pattern, which subsumes "of type D_TYPE" in the two-sentence sample.
  const std::set<std::string> kKnownFailures = {"two_sentence_rule"};

  int unexpected = 0, passed = 0, known = 0;
  for (const Criterion& c : criteria) {
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s %s: %s\n", r.pass ? "PASS" : "FAIL", c.id, r.detail.c_str());
    for (const std::string& n : r.notes) std::printf("    %s\n", n.c_str());
    bool listed = kKnownFailures.count(c.id) > 0;
    if (r.pass) {
      ++passed;
      if (listed) {
        std::printf("    unexpected pass of a known failure; update the list\n");
        ++unexpected;
      }
    } else if (listed && r.expected_failure_shape) {
      ++known;
      std::printf("    known failure (documented)\n");
    } else {
      ++unexpected;
    }
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria pass, %d known failure(s), %d unexpected result(s)\n", passed,
              criteria.size(), known, unexpected);
  return unexpected == 0 ? 0 : 1;
}
