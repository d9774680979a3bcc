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

#include <csignal>

#include <gtest/gtest.h>

#include "fixtures.h"
#include "paramspec/errors.h"
#include "paramspec/evaluator.h"
#include "paramspec/generator.h"
#include "paramspec/mock_target.h"

namespace paramspec {
namespace {

TargetProfile Worker(int64_t timeout_ms = 5000, std::vector<std::string> extra = {}) {
  TargetProfile p;
  p.command = {testing::WorkerPath().string()};
  p.command.insert(p.command.end(), extra.begin(), extra.end());
  p.timeout_ms = timeout_ms;
  return p;
}

GeneratedInput Call(const std::string& api) {
  GeneratedInput in;
  in.api = api;
  return in;
}

ValueSpec Tensor(const std::string& name, const std::string& dtype, std::vector<int64_t> shape,
                 std::vector<Element> values) {
  ValueSpec v;
  v.name = name;
  v.structure = Structure::kTensor;
  v.dtype = dtype;
  v.shape = std::move(shape);
  v.values = std::move(values);
  return v;
}

TEST(ProcessHarness, PassAndException) {
  GeneratedInput ok = Call("mock.identity");
  ok.values = {Tensor("x", "float32", {2}, {1.0, 2.0})};
  Outcome o = Evaluate(ok, Worker());
  EXPECT_EQ(o.kind, OutcomeKind::kPass) << o.message;
  EXPECT_EQ(o.Label(), "PASS");

  GeneratedInput bad = Call("mock.identity");
  ValueSpec s;
  s.name = "x";
  s.structure = Structure::kScalar;
  s.dtype = "int32";
  s.values = {int64_t{1}};
  bad.values = {s};
  Outcome e = Evaluate(bad, Worker());
  EXPECT_EQ(e.kind, OutcomeKind::kException);
  EXPECT_NE(e.message.find("InvalidArgument"), std::string::npos) << e.message;

  Outcome u = Evaluate(Call("mock.nope"), Worker());
  EXPECT_EQ(u.kind, OutcomeKind::kException);
  EXPECT_EQ(u.message.rfind("UNKNOWN_API", 0), 0u) << u.message;
}

TEST(ProcessHarness, InjectedBugCrashesTheWorker) {
  GeneratedInput in = Call("mock.nn.max_pool3d");
  std::vector<Element> five(16, 1.0);
  ValueSpec input = Tensor("input", "float32", {1, 2, 2, 2, 2}, five);
  ValueSpec ksize;
  ksize.name = "ksize";
  ksize.structure = Structure::kList;
  ksize.dtype = "int32";
  ksize.shape = {1};
  ksize.values = {int64_t{0}};
  ValueSpec strides = ksize;
  strides.name = "strides";
  strides.values = {int64_t{1}};
  ValueSpec padding;
  padding.name = "padding";
  padding.structure = Structure::kScalar;
  padding.dtype = "string";
  padding.values = {std::string("SAME")};
  in.values = {input, ksize, strides, padding};
  Outcome o = Evaluate(in, Worker());
  EXPECT_EQ(o.Label(), "CRASH(FPE)") << o.message;
  EXPECT_TRUE(IsBug(o));
  Outcome stub = StubHarness().Run(in);
  EXPECT_EQ(stub.Label(), o.Label());
  EXPECT_EQ(stub.bug_id, "max_pool3d.zero_ksize");
}

TEST(ProcessHarness, Signals) {
  EXPECT_EQ(Evaluate(Call("mock.fault.segv"), Worker()).Label(), "CRASH(SEGFAULT)");
  EXPECT_EQ(Evaluate(Call("mock.fault.fpe"), Worker()).Label(), "CRASH(FPE)");
  EXPECT_EQ(Evaluate(Call("mock.fault.abort"), Worker()).Label(), "CRASH(ABORT)");
  EXPECT_EQ(Evaluate(Call("mock.fault.bus"), Worker()).Label(), "CRASH(BUS)");
  TargetProfile lenient = Worker();
  lenient.abort_is_exception = true;
  EXPECT_EQ(Evaluate(Call("mock.fault.abort"), lenient).kind, OutcomeKind::kException);
}

TEST(ProcessHarness, NonzeroExitIsAnException) {
  Outcome o = Evaluate(Call("mock.fault.exit3"), Worker());
  EXPECT_EQ(o.kind, OutcomeKind::kException);
  EXPECT_NE(o.message.find("status 3"), std::string::npos) << o.message;
}

TEST(ProcessHarness, TimeoutIsRetriedOnce) {
  Outcome hang = Evaluate(Call("mock.fault.hang"), Worker(100));
  EXPECT_EQ(hang.kind, OutcomeKind::kTimeout);
  EXPECT_TRUE(hang.retried);
  EXPECT_TRUE(IsBug(hang));
  EXPECT_GE(hang.duration_ms, 1000);

  // Slower than the limit, well within ten times it.
  Outcome slow = Evaluate(Call("mock.fault.slow"), Worker(100, {"--slow-ms", "300"}));
  EXPECT_EQ(slow.kind, OutcomeKind::kPass) << slow.message;
  EXPECT_TRUE(slow.retried);
  EXPECT_FALSE(IsBug(slow));
}

TEST(ProcessHarness, HarnessFailures) {
  TargetProfile missing;
  missing.command = {"/no/such/worker"};
  EXPECT_THROW(Evaluate(Call("mock.identity"), missing), HarnessError);
  TargetProfile echo;
  echo.command = {"cat"};
  EXPECT_THROW(Evaluate(Call("mock.identity"), echo), HarnessError);
  TargetProfile silent;
  silent.command = {"true"};
  EXPECT_THROW(Evaluate(Call("mock.identity"), silent), HarnessError);
  TargetProfile bad;
  bad.command = {"x"};
  bad.timeout_ms = 0;
  EXPECT_THROW(bad.Check(), Error);
}

TEST(ProcessHarness, UnknownTarget) {
  TargetProfile p = Worker();
  p.target = "otherlib";
  Outcome o = Evaluate(Call("mock.identity"), p);
  EXPECT_EQ(o.kind, OutcomeKind::kException);
  EXPECT_NE(o.message.find("UNKNOWN_TARGET"), std::string::npos) << o.message;
}

TEST(StubHarness, AgreesWithTheWorker) {
  ProcessHarness process(Worker());
  StubHarness stub;
  for (const std::string& name : MockApis()) {
    if (name == "mock.signal.frame") continue;  // may hang
    Generator g(MockTruth().at(name), GeneratorOptions{});
    for (uint64_t s = 0; s < 15; ++s) {
      for (Mode m : {Mode::kConforming, Mode::kViolating, Mode::kBaseline}) {
        GeneratedInput in = g.Generate(m, s);
        EXPECT_EQ(stub.Run(in).Label(), process.Run(in).Label()) << in.ToJson().dump();
      }
    }
  }
  for (const char* f : {"segv", "fpe", "abort", "bus", "exit3"}) {
    GeneratedInput in = Call(std::string("mock.fault.") + f);
    EXPECT_EQ(stub.Run(in).Label(), process.Run(in).Label()) << f;
  }
}

TEST(Outcome, JsonAndNames) {
  Outcome o;
  o.kind = OutcomeKind::kCrash;
  o.signal = CrashSignal::kBus;
  o.signal_number = 7;
  o.duration_ms = 12;
  Outcome back = Outcome::FromJson(o.ToJson(true));
  EXPECT_EQ(back.Label(), "CRASH(BUS)");
  EXPECT_EQ(back.duration_ms, 12);
  EXPECT_FALSE(o.ToJson().contains("duration_ms"));
  EXPECT_EQ(ClassifySignal(SIGSEGV), CrashSignal::kSegfault);
  EXPECT_EQ(ClassifySignal(SIGUSR1), CrashSignal::kOther);
  EXPECT_EQ(CrashSignalFromName("FPE"), CrashSignal::kFpe);
}

}  // namespace
}  // namespace paramspec
