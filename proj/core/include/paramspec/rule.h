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

// Extraction rules: a subtree pattern mapped to an abstract constraint.

#ifndef PARAMSPEC_RULE_H_
#define PARAMSPEC_RULE_H_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "paramspec/constraints.h"
#include "paramspec/deptree.h"

namespace paramspec {

struct ExtractionRule {
  Subtree pattern;
  AbstractConstraint ac;
  double confidence = 0;
  size_t hits = 0;     // documents with both the pattern and the AC
  size_t support = 0;  // documents with the pattern

  nlohmann::json ToJson() const;
  static ExtractionRule FromJson(const nlohmann::json& j, const std::string& where);
};

// Sorted by (pattern encoding, category, slots).
void SortRules(std::vector<ExtractionRule>* rules);

// {"rules": [...], "inputs": {...}} where `inputs` is optional provenance
// (file digests, thresholds) written by the command line tool.
std::string SerializeRules(const std::vector<ExtractionRule>& rules,
                           const nlohmann::json& inputs = nlohmann::json::object());
std::vector<ExtractionRule> ParseRules(std::string_view text);
std::vector<ExtractionRule> LoadRules(const std::filesystem::path& path);

}  // namespace paramspec

#endif  // PARAMSPEC_RULE_H_
