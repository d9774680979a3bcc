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

// Rule construction from an annotated sample, threshold selection and
// extraction quality scoring.

#ifndef PARAMSPEC_RULEGEN_H_
#define PARAMSPEC_RULEGEN_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "paramspec/constraints.h"
#include "paramspec/extract.h"
#include "paramspec/miner.h"
#include "paramspec/rule.h"

namespace paramspec {

// One annotated parameter description.
struct AnnotatedDoc {
  std::string id;  // "<api>/<param>"
  AnnotationKey key;
  PreparedParam param;
  std::set<std::string> known_names;
  std::set<AbstractConstraint> acs;
};

using Sample = std::vector<AnnotatedDoc>;

// Every annotated (api, param) that has a description in `corpus`, in key
// order. Throws SchemaError for annotations naming unknown parameters.
Sample BuildSample(const std::vector<PreparedApi>& corpus, const AnnotationSet& annotations);

Forest SampleForest(const Sample& sample);

struct Probability {
  size_t hits = 0;   // documents with the pattern and the AC
  size_t total = 0;  // documents with the pattern
  double Value() const { return static_cast<double>(hits) / static_cast<double>(total); }
};

// P(ac | pattern) over the sample's documents. Throws
// UndefinedProbabilityError when the pattern occurs in no document.
Probability CondProb(const AbstractConstraint& ac, const Subtree& pattern, const Sample& sample);

struct RuleOptions {
  size_t min_support = 2;
  double min_confidence = 0.9;
  size_t max_size = 7;
  SupportComparator comparator = SupportComparator::kAtLeast;
  int threads = 1;
  bool prune = true;
};

// Rules from already mined patterns; patterns whose support does not pass
// `options` are skipped, so one mining run at the lowest support serves a
// whole threshold grid.
std::vector<ExtractionRule> RulesFromPatterns(const std::vector<FrequentPattern>& patterns,
                                              const Sample& sample, const RuleOptions& options);

// Mines the sample and returns the pruned, sorted rule list. A rule needs at
// least one co-occurrence, confidence >= min_confidence, and, for an
// abstract AC, a pattern node carrying the AC's slot symbol.
std::vector<ExtractionRule> ConstructRules(const Sample& sample, const RuleOptions& options);

// Drops every rule whose pattern strictly contains the pattern of another
// rule with the same AC that predicts it at least as well (confidence >=).
// A smaller pattern with lower confidence does not make the larger one
// redundant, and this keeps the rule count monotone in both thresholds.
std::vector<ExtractionRule> PruneRules(std::vector<ExtractionRule> rules);

using ConstraintMap = std::map<AnnotationKey, ConcreteConstraint>;

// Extraction over the sample's documents.
ConstraintMap ExtractSample(const Sample& sample, const std::vector<ExtractionRule>& rules,
                            const ExtractOptions& options);

struct CategoryScore {
  size_t correct = 0;
  size_t extracted = 0;  // non-empty on the extracted side
  size_t expected = 0;   // non-empty in the ground truth
  double Precision() const;
  double Recall() const;
  double F1() const;
};

struct QualityReport {
  std::map<std::string, CategoryScore> categories;  // dtype, structure, ...
  CategoryScore overall;
  size_t evaluated = 0;  // parameters with a non-empty ground truth
  bool not_applicable() const { return evaluated == 0; }
  nlohmann::json ToJson() const;
};

// Per category, a parameter counts as correct when both sides are non-empty
// and equal. Parameters with an empty ground truth are left out; extracted
// entries for keys absent from `truth` are ignored.
QualityReport Score(const ConstraintMap& extracted, const ConstraintMap& truth);

// Ground truth per key from a constraints file.
ConstraintMap TruthMap(const ConstraintSet& truth);

struct GridPoint {
  size_t min_support = 0;
  double min_confidence = 0;
  std::vector<double> fold_f1;
  double mean_f1 = 0;
};

struct ThresholdSelection {
  size_t min_support = 0;
  double min_confidence = 0;
  double mean_f1 = 0;
  std::vector<GridPoint> grid;
  std::map<std::string, int> fold_of;  // doc id -> fold
  uint64_t seed = 0;
  nlohmann::json ToJson() const;
};

// k-fold cross validation over the grid with a seeded fold assignment. The
// argmax of mean F1 wins; ties go to the larger support, then the larger
// confidence.
ThresholdSelection SelectThresholds(const Sample& sample, const ConstraintMap& truth,
                                    const std::vector<size_t>& supports,
                                    const std::vector<double>& confidences, int folds,
                                    uint64_t seed, const RuleOptions& base,
                                    const ExtractOptions& extract_options);

}  // namespace paramspec

#endif  // PARAMSPEC_RULEGEN_H_
