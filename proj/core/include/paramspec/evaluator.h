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

// Running a target on one generated input and classifying what happened.
//
// Wire protocol v1, one JSON document per line:
//   supervisor -> worker  {"hello": "paramspec-harness", "version": 1}
//   worker -> supervisor  {"version": 1}
//   supervisor -> worker  {"api": ..., "values": [ValueSpec, ...]}
//   worker -> supervisor  {"status": "pass" | "exception", "message": ...}
// then the worker exits 0. Crashes are read from the exit status only.

#ifndef PARAMSPEC_EVALUATOR_H_
#define PARAMSPEC_EVALUATOR_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "paramspec/value.h"

namespace paramspec {

inline constexpr int kProtocolVersion = 1;

enum class OutcomeKind { kPass, kException, kTimeout, kCrash };
enum class CrashSignal { kSegfault, kFpe, kAbort, kBus, kOther };

std::string_view OutcomeKindName(OutcomeKind k);  // PASS, EXCEPTION, ...
std::string_view CrashSignalName(CrashSignal s);  // SEGFAULT, FPE, ...
std::optional<CrashSignal> CrashSignalFromName(std::string_view name);
// SIGSEGV -> kSegfault, ..., anything else -> kOther.
CrashSignal ClassifySignal(int signo);

struct Outcome {
  OutcomeKind kind = OutcomeKind::kPass;
  std::optional<CrashSignal> signal;  // set iff kind == kCrash
  int signal_number = 0;
  std::string message;  // at most kMaxMessage bytes
  int64_t duration_ms = 0;
  // A first run timed out and the outcome is from the run at 10x timeout.
  bool retried = false;
  std::string bug_id;  // filled by harnesses that know it

  static constexpr size_t kMaxMessage = 512;

  std::string Label() const;  // "PASS", "CRASH(FPE)", ...
  // Timing is left out unless asked for, so records are reproducible.
  nlohmann::json ToJson(bool with_timing = false) const;
  static Outcome FromJson(const nlohmann::json& j);
};

// A crash, or a timeout that persisted through the retry.
bool IsBug(const Outcome& o);

struct TargetProfile {
  std::string target = "mocklib";
  std::vector<std::string> command;  // worker argv
  bool abort_is_exception = false;
  int64_t timeout_ms = 10000;

  void Check() const;  // throws Error
  nlohmann::json ToJson() const;
  static TargetProfile FromJson(const nlohmann::json& j);
};

class Harness {
 public:
  virtual ~Harness() = default;
  // Throws HarnessError for failures of the harness itself.
  virtual Outcome Run(const GeneratedInput& input) = 0;
};

// One worker process per call.
Outcome Evaluate(const GeneratedInput& input, const TargetProfile& profile);

class ProcessHarness : public Harness {
 public:
  explicit ProcessHarness(TargetProfile profile);
  Outcome Run(const GeneratedInput& input) override { return Evaluate(input, profile_); }

 private:
  TargetProfile profile_;
};

// In-process stand-in for the worker over the mock library: outcomes are
// what the worker process would be classified as, without spawning it.
class StubHarness : public Harness {
 public:
  explicit StubHarness(bool abort_is_exception = false)
      : abort_is_exception_(abort_is_exception) {}
  Outcome Run(const GeneratedInput& input) override;

 private:
  bool abort_is_exception_;
};

}  // namespace paramspec

#endif  // PARAMSPEC_EVALUATOR_H_
