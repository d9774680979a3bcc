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

// A small deep-learning style target library used for offline campaigns.
// Every API first checks its documented constraints and raises an exception
// on failure; a few carry a fault that only inputs passing all checks reach.

#ifndef PARAMSPEC_MOCK_TARGET_H_
#define PARAMSPEC_MOCK_TARGET_H_

#include <string>
#include <vector>

#include "paramspec/constraints.h"
#include "paramspec/value.h"

namespace paramspec {

enum class Fault { kNone, kSegv, kFpe, kAbort, kBus, kHang, kSlow, kExit3 };

struct MockResult {
  bool pass = false;  // meaningful when fault == kNone
  std::string message;
  Fault fault = Fault::kNone;
  std::string bug_id;  // stable name of the injected bug, "" otherwise
};

// Documented constraints of the library APIs (the validation gates).
const ConstraintSet& MockTruth();

// Library APIs in name order (excludes the mock.fault.* fixtures).
std::vector<std::string> MockApis();

// Injected bug ids, one per faulty API.
std::vector<std::string> MockBugIds();

// Decides what calling the API with `input` does, without doing it.
// mock.fault.{segv,fpe,abort,bus,hang,slow,exit3} always fault; unknown
// APIs give an exception whose message starts with UNKNOWN_API.
MockResult RunMock(const GeneratedInput& input);

}  // namespace paramspec

#endif  // PARAMSPEC_MOCK_TARGET_H_
