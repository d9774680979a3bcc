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

// Bundled data sets and built binaries, as the tests see them.

#ifndef PARAMSPEC_TESTS_FIXTURES_H_
#define PARAMSPEC_TESTS_FIXTURES_H_

#include <filesystem>
#include <string>
#include <vector>

#include "paramspec/constraints.h"
#include "paramspec/extract.h"
#include "paramspec/normalize.h"
#include "paramspec/rule.h"
#include "paramspec/rulegen.h"

namespace paramspec::testing {

std::filesystem::path DataDir();
std::filesystem::path WorkerPath();
std::filesystem::path CliPath();

const KeywordTable& Keywords();

// Corpus + trees under data/<dir>, prepared for extraction.
std::vector<PreparedApi> LoadPrepared(const std::string& dir);

// The 40-parameter annotated sample.
const Sample& MiniSample();
const ConstraintMap& MiniTruth();

// Rules from the whole sample at the default thresholds.
const std::vector<ExtractionRule>& DefaultRules();

// Constraints extracted from the mock library's documentation.
const ConstraintSet& MockExtracted();

// Fresh scratch directory under the build tree.
std::filesystem::path ScratchDir(const std::string& name);

}  // namespace paramspec::testing

#endif  // PARAMSPEC_TESTS_FIXTURES_H_
