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

// Per-API fuzzing campaigns and their reports.

#ifndef PARAMSPEC_CAMPAIGN_H_
#define PARAMSPEC_CAMPAIGN_H_

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "paramspec/constraints.h"
#include "paramspec/evaluator.h"
#include "paramspec/generator.h"

namespace paramspec {

struct Finding {
  std::string api;
  size_t iteration = 0;
  uint64_t campaign_seed = 0;
  GeneratedInput input;
  Outcome outcome;

  nlohmann::json ToJson() const;
};

struct ApiReport {
  std::string api;
  size_t scheduled = 0;
  size_t ci = 0;
  size_t vi = 0;
  size_t baseline = 0;
  size_t executed = 0;
  size_t passes = 0;
  size_t generation_errors = 0;
  size_t harness_errors = 0;
  size_t mutated = 0;
  std::map<std::string, size_t> outcomes;  // Outcome::Label() -> count
  std::vector<Finding> findings;
  std::set<std::string> bug_ids;
  bool aborted = false;
  std::string diagnostic;
  std::vector<std::string> warnings;

  // Runs that terminated normally, over runs executed.
  double PassingRatio() const;
  nlohmann::json ToJson() const;
};

struct CampaignOptions {
  GeneratorOptions generator;
  bool baseline = false;
  // More consecutive harness failures than this abort the API.
  size_t max_harness_errors = 5;
  int jobs = 1;
};

struct CampaignReport {
  bool baseline = false;
  uint64_t seed = 0;
  std::vector<ApiReport> apis;

  size_t Executed() const;
  size_t Passes() const;
  double PassingRatio() const;
  std::set<std::string> BugIds() const;
  nlohmann::json ToJson() const;
  // Fixed-width table, one row per API plus a total.
  std::string Summary() const;
};

using HarnessFactory = std::function<std::unique_ptr<Harness>()>;

ApiReport RunApiCampaign(const ApiConstraints& api, const CampaignOptions& options,
                         Harness& harness);

// APIs run in parallel up to options.jobs, each with its own harness; the
// report lists them in the order given.
CampaignReport RunCampaign(const ConstraintSet& constraints, const std::vector<std::string>& apis,
                           const CampaignOptions& options, const HarnessFactory& make_harness);

// findings/<api>/<n>/record.json, replacing earlier findings of the same
// APIs.
void WriteFindings(const CampaignReport& report, const std::filesystem::path& dir);

}  // namespace paramspec

#endif  // PARAMSPEC_CAMPAIGN_H_
