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

#include <gtest/gtest.h>

#include "fixtures.h"
#include "paramspec/campaign.h"
#include "paramspec/errors.h"
#include "paramspec/io.h"
#include "paramspec/mock_target.h"

namespace paramspec {
namespace {

CampaignOptions Options(size_t max_iter, uint64_t seed) {
  CampaignOptions o;
  o.generator.max_iter = max_iter;
  o.generator.seed = seed;
  return o;
}

HarnessFactory Stub() {
  return [] { return std::make_unique<StubHarness>(); };
}

TEST(Campaign, ModeSplitAndCounts) {
  CampaignReport r = RunCampaign(MockTruth(), MockApis(), Options(200, 4), Stub());
  ASSERT_EQ(r.apis.size(), MockApis().size());
  for (const ApiReport& a : r.apis) {
    EXPECT_EQ(a.ci, 100u) << a.api;
    EXPECT_EQ(a.vi, 100u) << a.api;
    EXPECT_EQ(a.executed + a.generation_errors, 200u) << a.api;
    size_t total = 0;
    for (const auto& [label, n] : a.outcomes) total += n;
    EXPECT_EQ(total, a.executed);
    EXPECT_FALSE(a.aborted);
    for (const Finding& f : a.findings) EXPECT_TRUE(IsBug(f.outcome));
  }
  EXPECT_GT(r.PassingRatio(), 0);
  EXPECT_FALSE(r.Summary().empty());
}

TEST(Campaign, ZeroIterations) {
  CampaignReport r = RunCampaign(MockTruth(), MockApis(), Options(0, 1), Stub());
  EXPECT_EQ(r.Executed(), 0u);
  EXPECT_TRUE(r.BugIds().empty());
  std::filesystem::path dir = testing::ScratchDir("campaign/zero");
  WriteFindings(r, dir / "findings");
  size_t files = 0;
  if (std::filesystem::exists(dir / "findings")) {
    for (const auto& e : std::filesystem::recursive_directory_iterator(dir / "findings")) {
      files += e.is_regular_file();
    }
  }
  EXPECT_EQ(files, 0u);
}

TEST(Campaign, JobsDoNotChangeTheReport) {
  CampaignOptions one = Options(100, 8), three = Options(100, 8);
  three.jobs = 3;
  CampaignReport a = RunCampaign(MockTruth(), MockApis(), one, Stub());
  CampaignReport b = RunCampaign(MockTruth(), MockApis(), three, Stub());
  EXPECT_EQ(CanonicalDump(a.ToJson()), CanonicalDump(b.ToJson()));
}

TEST(Campaign, BaselineUsesOnlyBaselineInputs) {
  CampaignOptions o = Options(100, 2);
  o.baseline = true;
  CampaignReport r = RunCampaign(MockTruth(), MockApis(), o, Stub());
  for (const ApiReport& a : r.apis) {
    EXPECT_EQ(a.baseline, 100u);
    EXPECT_EQ(a.ci + a.vi, 0u);
    EXPECT_EQ(a.mutated, 0u);
  }
}

class FailingHarness : public Harness {
 public:
  Outcome Run(const GeneratedInput&) override { throw HarnessError("worker missing"); }
};

TEST(Campaign, RepeatedHarnessErrorsAbortTheApi) {
  CampaignReport r = RunCampaign(MockTruth(), {"mock.identity"}, Options(50, 1),
                                 [] { return std::make_unique<FailingHarness>(); });
  ASSERT_EQ(r.apis.size(), 1u);
  EXPECT_TRUE(r.apis[0].aborted);
  EXPECT_NE(r.apis[0].diagnostic.find("worker missing"), std::string::npos);
  EXPECT_LE(r.apis[0].harness_errors, 6u);
}

TEST(Campaign, FindingsAreReplayable) {
  CampaignReport r = RunCampaign(MockTruth(), MockApis(), Options(400, 5), Stub());
  StubHarness stub;
  size_t n = 0;
  for (const ApiReport& a : r.apis) {
    for (const Finding& f : a.findings) {
      GeneratedInput back = GeneratedInput::FromJson(f.input.ToJson());
      EXPECT_EQ(stub.Run(back).Label(), f.outcome.Label());
      ++n;
    }
  }
  EXPECT_GT(n, 0u);
}

}  // namespace
}  // namespace paramspec
