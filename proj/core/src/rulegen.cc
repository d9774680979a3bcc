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

#include "paramspec/rulegen.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "paramspec/errors.h"

namespace paramspec {

using nlohmann::json;

namespace {

// Multiset containment of labels; a cheap necessary condition for one
// pattern embedding in another.
bool LabelsContained(const Subtree& small, const Subtree& big) {
  std::map<std::string_view, int> need;
  for (const PatternNode& n : small.nodes()) ++need[n.label];
  for (const PatternNode& n : big.nodes()) {
    auto it = need.find(n.label);
    if (it != need.end() && --it->second == 0) need.erase(it);
  }
  return need.empty();
}

double Ratio(size_t a, size_t b) {
  return b == 0 ? 0.0 : static_cast<double>(a) / static_cast<double>(b);
}

using Field = std::pair<const char*, bool (*)(const ConcreteConstraint&, const ConcreteConstraint&,
                                              bool*, bool*)>;

template <typename Member>
bool CompareField(const Member& a, const Member& b, bool* a_set, bool* b_set) {
  *a_set = !a.empty();
  *b_set = !b.empty();
  return a == b;
}

}  // namespace

Sample BuildSample(const std::vector<PreparedApi>& corpus, const AnnotationSet& annotations) {
  std::map<AnnotationKey, const PreparedParam*> params;
  std::map<std::string, std::set<std::string>> known;
  for (const PreparedApi& api : corpus) {
    std::vector<std::string> names = api.doc.KnownNames();
    known[api.doc.api_name] = std::set<std::string>(names.begin(), names.end());
    for (const PreparedParam& p : api.params) params[{p.api, p.param}] = &p;
  }
  Sample out;
  for (const auto& [key, acs] : annotations) {
    auto it = params.find(key);
    if (it == params.end()) {
      throw SchemaError("annotations", "no description for " + key.first + "/" + key.second);
    }
    AnnotatedDoc d;
    d.id = key.first + "/" + key.second;
    d.key = key;
    d.param = *it->second;
    d.known_names = known[key.first];
    d.acs = acs;
    out.push_back(std::move(d));
  }
  return out;
}

Forest SampleForest(const Sample& sample) {
  Forest forest;
  for (const AnnotatedDoc& d : sample) forest[d.id] = d.param.Trees();
  return forest;
}

Probability CondProb(const AbstractConstraint& ac, const Subtree& pattern, const Sample& sample) {
  Probability p;
  for (const AnnotatedDoc& d : sample) {
    bool found = false;
    for (const PreparedSentence& s : d.param.sentences) {
      if (s.tree && Matches(pattern, *s.tree)) {
        found = true;
        break;
      }
    }
    if (!found) continue;
    ++p.total;
    if (d.acs.count(ac)) ++p.hits;
  }
  if (p.total == 0) {
    throw UndefinedProbabilityError("pattern " + pattern.Encode() + " occurs in no document");
  }
  return p;
}

std::vector<ExtractionRule> RulesFromPatterns(const std::vector<FrequentPattern>& patterns,
                                              const Sample& sample, const RuleOptions& options) {
  std::map<std::string, const AnnotatedDoc*> by_id;
  for (const AnnotatedDoc& d : sample) by_id[d.id] = &d;
  MinerOptions mo;
  mo.min_support = options.min_support;
  mo.comparator = options.comparator;

  std::vector<ExtractionRule> rules;
  for (const FrequentPattern& fp : patterns) {
    if (!mo.Frequent(fp.support()) || fp.pattern.size() > options.max_size) continue;
    std::map<AbstractConstraint, size_t> hits;
    for (const std::string& id : fp.occurrences) {
      auto it = by_id.find(id);
      if (it == by_id.end()) continue;
      for (const AbstractConstraint& ac : it->second->acs) ++hits[ac];
    }
    for (const auto& [ac, h] : hits) {
      double conf = static_cast<double>(h) / static_cast<double>(fp.support());
      if (conf < options.min_confidence) continue;
      if (ac.IsAbstract() && !fp.pattern.HasLabel(SlotSymbol(ac.category))) continue;
      rules.push_back(ExtractionRule{fp.pattern, ac, conf, h, fp.support()});
    }
  }
  if (options.prune) rules = PruneRules(std::move(rules));
  SortRules(&rules);
  return rules;
}

std::vector<ExtractionRule> ConstructRules(const Sample& sample, const RuleOptions& options) {
  MinerOptions mo;
  mo.min_support = options.min_support;
  mo.max_size = options.max_size;
  mo.comparator = options.comparator;
  mo.threads = options.threads;
  return RulesFromPatterns(Mine(SampleForest(sample), mo), sample, options);
}

std::vector<ExtractionRule> PruneRules(std::vector<ExtractionRule> rules) {
  std::map<AbstractConstraint, std::vector<size_t>> groups;
  for (size_t i = 0; i < rules.size(); ++i) groups[rules[i].ac].push_back(i);
  std::vector<char> drop(rules.size(), 0);
  for (auto& [ac, idx] : groups) {
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
      return rules[a].pattern.size() < rules[b].pattern.size();
    });
    for (size_t qi = 0; qi < idx.size(); ++qi) {
      const Subtree& q = rules[idx[qi]].pattern;
      for (size_t pi = 0; pi < idx.size(); ++pi) {
        const Subtree& p = rules[idx[pi]].pattern;
        if (p.size() > q.size()) break;
        if (pi == qi || p == q) continue;
        const ExtractionRule& rp = rules[idx[pi]];
        const ExtractionRule& rq = rules[idx[qi]];
        // exact comparison of hits/support ratios
        bool as_good = rp.hits * rq.support >= rq.hits * rp.support;
        if (as_good && LabelsContained(p, q) && PatternEmbeds(p, q)) {
          drop[idx[qi]] = 1;
          break;
        }
      }
    }
  }
  std::vector<ExtractionRule> out;
  for (size_t i = 0; i < rules.size(); ++i) {
    if (!drop[i]) out.push_back(std::move(rules[i]));
  }
  return out;
}

ConstraintMap ExtractSample(const Sample& sample, const std::vector<ExtractionRule>& rules,
                            const ExtractOptions& options) {
  ConstraintMap out;
  std::vector<std::string> warnings;
  for (const AnnotatedDoc& d : sample) {
    out[d.key] = ExtractParam(d.param, rules, d.known_names, options, &warnings);
  }
  return out;
}

double CategoryScore::Precision() const { return Ratio(correct, extracted); }
double CategoryScore::Recall() const { return Ratio(correct, expected); }
double CategoryScore::F1() const {
  double p = Precision(), r = Recall();
  return p + r == 0 ? 0.0 : 2 * p * r / (p + r);
}

json QualityReport::ToJson() const {
  auto one = [](const CategoryScore& s) {
    return json{{"correct", s.correct},     {"extracted", s.extracted}, {"expected", s.expected},
                {"precision", s.Precision()}, {"recall", s.Recall()},     {"f1", s.F1()}};
  };
  json j;
  j["evaluated"] = evaluated;
  j["not_applicable"] = not_applicable();
  j["overall"] = one(overall);
  j["categories"] = json::object();
  for (const auto& [name, s] : categories) j["categories"][name] = one(s);
  return j;
}

QualityReport Score(const ConstraintMap& extracted, const ConstraintMap& truth) {
  using C = ConcreteConstraint;
  static const Field kFields[] = {
      {"dtype", [](const C& a, const C& b, bool* x, bool* y) { return CompareField(a.dtypes, b.dtypes, x, y); }},
      {"structure", [](const C& a, const C& b, bool* x, bool* y) { return CompareField(a.structures, b.structures, x, y); }},
      {"ndim", [](const C& a, const C& b, bool* x, bool* y) { return CompareField(a.ndims, b.ndims, x, y); }},
      {"shape", [](const C& a, const C& b, bool* x, bool* y) { return CompareField(a.shapes, b.shapes, x, y); }},
      {"range", [](const C& a, const C& b, bool* x, bool* y) { return CompareField(a.range, b.range, x, y); }},
      {"enum", [](const C& a, const C& b, bool* x, bool* y) { return CompareField(a.enums, b.enums, x, y); }},
  };
  QualityReport report;
  for (const auto& [name, fn] : kFields) report.categories[name];
  static const ConcreteConstraint kEmpty;
  for (const auto& [key, t] : truth) {
    if (t.Unconstrained()) continue;
    ++report.evaluated;
    auto it = extracted.find(key);
    const ConcreteConstraint& e = it == extracted.end() ? kEmpty : it->second;
    for (const auto& [name, fn] : kFields) {
      bool e_set = false, t_set = false;
      bool equal = fn(e, t, &e_set, &t_set);
      CategoryScore& s = report.categories[name];
      s.extracted += e_set;
      s.expected += t_set;
      s.correct += e_set && t_set && equal;
    }
  }
  for (const auto& [name, s] : report.categories) {
    report.overall.correct += s.correct;
    report.overall.extracted += s.extracted;
    report.overall.expected += s.expected;
  }
  return report;
}

ConstraintMap TruthMap(const ConstraintSet& truth) {
  ConstraintMap out;
  for (const auto& [api, a] : truth) {
    for (const auto& [param, c] : a.constraints) out[{api, param}] = c;
  }
  return out;
}

json ThresholdSelection::ToJson() const {
  json j;
  j["min_support"] = min_support;
  j["min_confidence"] = min_confidence;
  j["mean_f1"] = mean_f1;
  j["seed"] = seed;
  j["folds"] = fold_of;
  j["grid"] = json::array();
  for (const GridPoint& g : grid) {
    j["grid"].push_back({{"min_support", g.min_support},
                         {"min_confidence", g.min_confidence},
                         {"fold_f1", g.fold_f1},
                         {"mean_f1", g.mean_f1}});
  }
  return j;
}

ThresholdSelection SelectThresholds(const Sample& sample, const ConstraintMap& truth,
                                    const std::vector<size_t>& supports,
                                    const std::vector<double>& confidences, int folds,
                                    uint64_t seed, const RuleOptions& base,
                                    const ExtractOptions& extract_options) {
  if (supports.empty() || confidences.empty()) throw Error("empty threshold grid");
  if (folds < 2 || static_cast<size_t>(folds) > sample.size()) {
    throw Error("need between 2 and " + std::to_string(sample.size()) + " folds");
  }
  ThresholdSelection sel;
  sel.seed = seed;
  std::vector<size_t> order(sample.size());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> fold(sample.size());
  for (size_t i = 0; i < order.size(); ++i) {
    fold[order[i]] = static_cast<int>(i % static_cast<size_t>(folds));
  }
  for (size_t i = 0; i < sample.size(); ++i) sel.fold_of[sample[i].id] = fold[i];

  for (size_t s : supports) {
    for (double c : confidences) sel.grid.push_back(GridPoint{s, c, {}, 0});
  }
  size_t lowest = *std::min_element(supports.begin(), supports.end());
  for (int f = 0; f < folds; ++f) {
    Sample train, test;
    for (size_t i = 0; i < sample.size(); ++i) (fold[i] == f ? test : train).push_back(sample[i]);
    MinerOptions mo;
    mo.min_support = lowest;
    mo.max_size = base.max_size;
    mo.comparator = base.comparator;
    mo.threads = base.threads;
    std::vector<FrequentPattern> mined = Mine(SampleForest(train), mo);
    ConstraintMap test_truth;
    for (const AnnotatedDoc& d : test) {
      if (auto it = truth.find(d.key); it != truth.end()) test_truth.insert(*it);
    }
    for (GridPoint& g : sel.grid) {
      RuleOptions ro = base;
      ro.min_support = g.min_support;
      ro.min_confidence = g.min_confidence;
      auto rules = RulesFromPatterns(mined, train, ro);
      g.fold_f1.push_back(Score(ExtractSample(test, rules, extract_options), test_truth).overall.F1());
    }
  }
  const GridPoint* best = nullptr;
  for (GridPoint& g : sel.grid) {
    g.mean_f1 = std::accumulate(g.fold_f1.begin(), g.fold_f1.end(), 0.0) / folds;
    if (!best || g.mean_f1 > best->mean_f1 ||
        (g.mean_f1 == best->mean_f1 &&
         std::tie(g.min_support, g.min_confidence) > std::tie(best->min_support, best->min_confidence))) {
      best = &g;
    }
  }
  sel.min_support = best->min_support;
  sel.min_confidence = best->min_confidence;
  sel.mean_f1 = best->mean_f1;
  return sel;
}

}  // namespace paramspec
