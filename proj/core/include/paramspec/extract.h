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

// Preprocessing of a corpus into normalized, parsed parameter descriptions,
// rule application, constraint instantiation and documentation bug checks.

#ifndef PARAMSPEC_EXTRACT_H_
#define PARAMSPEC_EXTRACT_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "paramspec/constraints.h"
#include "paramspec/corpus.h"
#include "paramspec/deptree.h"
#include "paramspec/normalize.h"
#include "paramspec/rule.h"

namespace paramspec {

struct PreparedSentence {
  std::string id;
  NormalizedSentence norm;
  std::optional<DepTree> tree;
  // Tree tokens line up with the normalized tokens, so node i carries the
  // payload of token i.
  bool aligned = false;
};

struct PreparedParam {
  std::string api;
  std::string param;
  std::string raw_text;
  std::vector<PreparedSentence> sentences;
  std::vector<std::string> warnings;

  std::vector<DepTree> Trees() const;
};

struct PreparedApi {
  ApiDoc doc;
  std::vector<PreparedParam> params;  // one per description, by name
};

std::vector<PreparedApi> Prepare(const std::vector<ApiDoc>& corpus, const KeywordTable& table,
                                 const std::map<std::string, DepTree>& trees);

enum class DocBugKind { kFormatting, kSignatureMismatch, kUnresolvedDependency };
std::string_view DocBugKindName(DocBugKind k);

struct DocBug {
  std::string api;
  DocBugKind kind = DocBugKind::kFormatting;
  std::string detail;
  std::vector<std::string> names;

  nlohmann::json ToJson() const;
  bool operator==(const DocBug&) const = default;
};

struct ExtractOptions {
  // "The number of ..." descriptions give a 0-d non-negative integer.
  bool number_of_heuristic = true;
  int jobs = 1;
};

struct ExtractionResult {
  ConstraintSet constraints;
  std::vector<DocBug> doc_bugs;
  std::vector<std::string> warnings;

  std::string SerializeDocBugs() const;
};

// Fires every matching rule on every sentence of one description and unions
// the instantiated constraints. `known_names` resolve SHAPE identifiers to
// parameter-value references.
ConcreteConstraint ExtractParam(const PreparedParam& param, const std::vector<ExtractionRule>& rules,
                                const std::set<std::string>& known_names,
                                const ExtractOptions& options, std::vector<std::string>* warnings);

ExtractionResult Extract(const std::vector<PreparedApi>& corpus,
                         const std::vector<ExtractionRule>& rules, const ExtractOptions& options);

std::vector<DocBug> DetectDocBugs(const std::vector<PreparedApi>& corpus,
                                  const ExtractionResult& result);

}  // namespace paramspec

#endif  // PARAMSPEC_EXTRACT_H_
