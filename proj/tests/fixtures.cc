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

#include "fixtures.h"

#include "paramspec/corpus.h"
#include "paramspec/deptree.h"

namespace paramspec::testing {

std::filesystem::path DataDir() { return PARAMSPEC_DATA_DIR; }
std::filesystem::path WorkerPath() { return PARAMSPEC_WORKER_PATH; }
std::filesystem::path CliPath() { return PARAMSPEC_CLI_PATH; }

const KeywordTable& Keywords() {
  static const KeywordTable kTable = KeywordTable::Load(DataDir() / "keywords.json");
  return kTable;
}

std::vector<PreparedApi> LoadPrepared(const std::string& dir) {
  std::filesystem::path d = DataDir() / dir;
  return Prepare(LoadCorpus(d / "corpus.json"), Keywords(), LoadTrees(d / "trees.conllu"));
}

const Sample& MiniSample() {
  static const Sample kSample =
      BuildSample(LoadPrepared("sample"), LoadAnnotations(DataDir() / "sample/annotations.json"));
  return kSample;
}

const ConstraintMap& MiniTruth() {
  static const ConstraintMap kTruth = TruthMap(LoadConstraints(DataDir() / "sample/truth.json"));
  return kTruth;
}

const std::vector<ExtractionRule>& DefaultRules() {
  static const std::vector<ExtractionRule> kRules = ConstructRules(MiniSample(), RuleOptions{});
  return kRules;
}

const ConstraintSet& MockExtracted() {
  static const ConstraintSet kSet = Extract(LoadPrepared("mock"), DefaultRules(), {}).constraints;
  return kSet;
}

std::filesystem::path ScratchDir(const std::string& name) {
  std::filesystem::path p = std::filesystem::path(PARAMSPEC_SCRATCH_DIR) / name;
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

}  // namespace paramspec::testing
