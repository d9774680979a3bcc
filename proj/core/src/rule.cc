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

#include "paramspec/rule.h"

#include <algorithm>
#include <tuple>

#include "paramspec/errors.h"
#include "paramspec/io.h"

namespace paramspec {

using nlohmann::json;

json ExtractionRule::ToJson() const {
  json j;
  j["pattern"] = pattern.Encode();
  j["category"] = std::string(CategoryName(ac.category));
  j["slots"] = ac.slots;
  j["confidence"] = confidence;
  j["hits"] = hits;
  j["support"] = support;
  return j;
}

ExtractionRule ExtractionRule::FromJson(const json& j, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where, "expected an object");
  for (const char* key : {"pattern", "category", "slots"}) {
    if (!j.contains(key)) throw SchemaError(where, std::string("missing ") + key);
  }
  if (!j["pattern"].is_string()) throw SchemaError(where + ".pattern", "expected a string");
  if (!j["category"].is_string()) throw SchemaError(where + ".category", "expected a string");
  auto cat = CategoryFromName(j["category"].get<std::string>());
  if (!cat) throw SchemaError(where + ".category", "unknown category");
  if (!j["slots"].is_array()) throw SchemaError(where + ".slots", "expected a list");
  std::vector<std::string> slots;
  for (const json& s : j["slots"]) {
    if (!s.is_string()) throw SchemaError(where + ".slots", "expected strings");
    slots.push_back(s.get<std::string>());
  }
  ExtractionRule r;
  try {
    r.pattern = Subtree::Decode(j["pattern"].get<std::string>());
  } catch (const Error& e) {
    throw SchemaError(where + ".pattern", e.what());
  }
  r.ac = AbstractConstraint::Make(*cat, std::move(slots));
  r.confidence = j.value("confidence", 0.0);
  r.hits = j.value("hits", size_t{0});
  r.support = j.value("support", size_t{0});
  return r;
}

void SortRules(std::vector<ExtractionRule>* rules) {
  std::vector<std::pair<std::string, ExtractionRule>> keyed;
  keyed.reserve(rules->size());
  for (ExtractionRule& r : *rules) keyed.emplace_back(r.pattern.Encode(), std::move(r));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    return std::tie(a.first, a.second.ac) < std::tie(b.first, b.second.ac);
  });
  rules->clear();
  for (auto& [k, r] : keyed) rules->push_back(std::move(r));
}

std::string SerializeRules(const std::vector<ExtractionRule>& rules, const json& inputs) {
  json j;
  j["rules"] = json::array();
  for (const ExtractionRule& r : rules) j["rules"].push_back(r.ToJson());
  if (!inputs.empty()) j["inputs"] = inputs;
  return CanonicalDump(j);
}

std::vector<ExtractionRule> ParseRules(std::string_view text) {
  json j = ParseJson(text, "rules");
  if (!j.is_object() || !j.contains("rules") || !j["rules"].is_array()) {
    throw SchemaError("rules", "expected {\"rules\": [...]}");
  }
  std::vector<ExtractionRule> out;
  for (size_t i = 0; i < j["rules"].size(); ++i) {
    out.push_back(ExtractionRule::FromJson(j["rules"][i], "rules[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<ExtractionRule> LoadRules(const std::filesystem::path& path) {
  return ParseRules(ReadFile(path));
}

}  // namespace paramspec
