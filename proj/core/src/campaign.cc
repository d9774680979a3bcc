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

#include "paramspec/campaign.h"

#include <atomic>
#include <cstdio>
#include <exception>
#include <thread>

#include "paramspec/errors.h"
#include "paramspec/io.h"

namespace paramspec {

using nlohmann::json;

json Finding::ToJson() const {
  json j;
  j["api"] = api;
  j["iteration"] = iteration;
  j["input"] = input.ToJson();
  j["outcome"] = outcome.ToJson();
  j["replay"] = {{"campaign_seed", campaign_seed},
                 {"api_seed", ApiSeed(campaign_seed, api)},
                 {"input_seed", input.seed},
                 {"mode", std::string(ModeName(input.mode))}};
  return j;
}

double ApiReport::PassingRatio() const {
  return executed == 0 ? 0.0 : static_cast<double>(passes) / static_cast<double>(executed);
}

json ApiReport::ToJson() const {
  json j;
  j["api"] = api;
  j["scheduled"] = scheduled;
  j["modes"] = {{"CI", ci}, {"VI", vi}, {"BASELINE", baseline}};
  j["executed"] = executed;
  j["passes"] = passes;
  j["passing_ratio"] = PassingRatio();
  j["generation_errors"] = generation_errors;
  j["harness_errors"] = harness_errors;
  j["mutated"] = mutated;
  j["outcomes"] = outcomes;
  j["findings"] = findings.size();
  j["bug_ids"] = bug_ids;
  j["aborted"] = aborted;
  if (!diagnostic.empty()) j["diagnostic"] = diagnostic;
  j["warnings"] = warnings;
  return j;
}

size_t CampaignReport::Executed() const {
  size_t n = 0;
  for (const ApiReport& a : apis) n += a.executed;
  return n;
}

size_t CampaignReport::Passes() const {
  size_t n = 0;
  for (const ApiReport& a : apis) n += a.passes;
  return n;
}

double CampaignReport::PassingRatio() const {
  size_t e = Executed();
  return e == 0 ? 0.0 : static_cast<double>(Passes()) / static_cast<double>(e);
}

std::set<std::string> CampaignReport::BugIds() const {
  std::set<std::string> out;
  for (const ApiReport& a : apis) out.insert(a.bug_ids.begin(), a.bug_ids.end());
  return out;
}

json CampaignReport::ToJson() const {
  json j;
  j["baseline"] = baseline;
  j["seed"] = seed;
  j["apis"] = json::array();
  for (const ApiReport& a : apis) j["apis"].push_back(a.ToJson());
  j["executed"] = Executed();
  j["passes"] = Passes();
  j["passing_ratio"] = PassingRatio();
  j["bug_ids"] = BugIds();
  return j;
}

std::string CampaignReport::Summary() const {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof(line), "%-28s %6s %6s %6s %8s %6s %6s\n", "api", "CI", "VI", "BASE",
                "executed", "pass%", "bugs");
  out += line;
  size_t ci = 0, vi = 0, base = 0, bugs = 0;
  for (const ApiReport& a : apis) {
    std::snprintf(line, sizeof(line), "%-28s %6zu %6zu %6zu %8zu %6.1f %6zu%s\n", a.api.c_str(),
                  a.ci, a.vi, a.baseline, a.executed, 100 * a.PassingRatio(), a.findings.size(),
                  a.aborted ? "  (aborted)" : "");
    out += line;
    ci += a.ci;
    vi += a.vi;
    base += a.baseline;
    bugs += a.findings.size();
  }
  std::snprintf(line, sizeof(line), "%-28s %6zu %6zu %6zu %8zu %6.1f %6zu\n", "total", ci, vi, base,
                Executed(), 100 * PassingRatio(), bugs);
  out += line;
  return out;
}

ApiReport RunApiCampaign(const ApiConstraints& api, const CampaignOptions& options,
                         Harness& harness) {
  const GeneratorOptions& g = options.generator;
  ApiReport report;
  report.api = api.api;
  Generator gen(api, g);
  report.warnings = gen.warnings();
  uint64_t api_seed = ApiSeed(g.seed, api.api);
  std::vector<Mode> modes = options.baseline ? std::vector<Mode>(g.max_iter, Mode::kBaseline)
                                             : ModeSchedule(g.max_iter, g.conform_ratio, api_seed);
  size_t consecutive = 0;
  for (size_t i = 0; i < modes.size(); ++i) {
    ++report.scheduled;
    switch (modes[i]) {
      case Mode::kConforming:
        ++report.ci;
        break;
      case Mode::kViolating:
        ++report.vi;
        break;
      case Mode::kBaseline:
        ++report.baseline;
        break;
    }
    GeneratedInput input;
    try {
      input = gen.Generate(modes[i], InputSeed(api_seed, i));
    } catch (const GenerationError& e) {
      ++report.generation_errors;
      if (report.generation_errors == 1) report.warnings.push_back(e.what());
      continue;
    }
    if (input.mutator) ++report.mutated;
    Outcome o;
    try {
      o = harness.Run(input);
      consecutive = 0;
    } catch (const HarnessError& e) {
      ++report.harness_errors;
      if (++consecutive > options.max_harness_errors) {
        report.aborted = true;
        report.diagnostic = "aborted after " + std::to_string(consecutive) +
                            " consecutive harness failures; last: " + e.what();
        break;
      }
      continue;
    }
    ++report.executed;
    ++report.outcomes[o.Label()];
    if (o.kind == OutcomeKind::kPass) ++report.passes;
    if (IsBug(o)) {
      if (!o.bug_id.empty()) report.bug_ids.insert(o.bug_id);
      report.findings.push_back(Finding{api.api, i, g.seed, std::move(input), std::move(o)});
    }
  }
  return report;
}

CampaignReport RunCampaign(const ConstraintSet& constraints, const std::vector<std::string>& apis,
                           const CampaignOptions& options, const HarnessFactory& make_harness) {
  options.generator.Check();
  for (const std::string& a : apis) {
    if (!constraints.count(a)) throw Error("no constraints for API '" + a + "'");
  }
  CampaignReport report;
  report.baseline = options.baseline;
  report.seed = options.generator.seed;
  report.apis.resize(apis.size());
  std::vector<std::exception_ptr> errors(apis.size());
  std::atomic<size_t> next{0};
  auto work = [&] {
    std::unique_ptr<Harness> harness;
    for (size_t i = next++; i < apis.size(); i = next++) {
      try {
        if (!harness) harness = make_harness();
        report.apis[i] = RunApiCampaign(constraints.at(apis[i]), options, *harness);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  size_t jobs = std::max<size_t>(1, std::min<size_t>(static_cast<size_t>(std::max(options.jobs, 1)),
                                                     apis.size()));
  std::vector<std::thread> pool;
  for (size_t t = 1; t < jobs; ++t) pool.emplace_back(work);
  work();
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return report;
}

void WriteFindings(const CampaignReport& report, const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  for (const ApiReport& a : report.apis) {
    fs::path api_dir = dir / a.api;
    fs::remove_all(api_dir);
    for (size_t n = 0; n < a.findings.size(); ++n) {
      WriteFile(api_dir / std::to_string(n) / "record.json", CanonicalDump(a.findings[n].ToJson()));
    }
  }
}

}  // namespace paramspec
