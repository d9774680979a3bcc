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

// Harness worker for the built-in mock library, speaking wire protocol v1.
// Injected faults are raised for real so the supervisor sees the signal.

#include <csignal>
#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "paramspec/evaluator.h"
#include "paramspec/mock_target.h"
#include "paramspec/value.h"

namespace {

using nlohmann::json;
using paramspec::Fault;

void Reply(const json& j) {
  std::cout << j.dump() << "\n";
  std::cout.flush();
}

[[noreturn]] void Trigger(Fault f, int slow_ms) {
  switch (f) {
    case Fault::kSegv: {
      volatile int* p = nullptr;
      *p = 1;
      break;
    }
    case Fault::kFpe: {
      volatile int zero = 0;
      volatile int x = 1 / zero;
      (void)x;
      break;
    }
    case Fault::kAbort:
      std::abort();
    case Fault::kBus:
      std::raise(SIGBUS);
      break;
    case Fault::kHang:
      for (;;) std::this_thread::sleep_for(std::chrono::seconds(1));
    case Fault::kSlow:
      std::this_thread::sleep_for(std::chrono::milliseconds(slow_ms));
      Reply({{"status", "pass"}, {"message", "slow"}});
      std::exit(0);
    case Fault::kExit3:
      std::exit(3);
    case Fault::kNone:
      break;
  }
  // Signals may be blocked or ignored in odd environments.
  std::signal(SIGABRT, SIG_DFL);
  std::abort();
}

int Serve(const std::string& target, int slow_ms) {
  std::string line;
  if (!std::getline(std::cin, line)) return 4;
  json hello = json::parse(line, nullptr, false);
  if (!hello.is_object() || hello.value("version", -1) != paramspec::kProtocolVersion) {
    std::cerr << "unsupported handshake: " << line << "\n";
    return 4;
  }
  Reply({{"version", paramspec::kProtocolVersion}});
  if (!std::getline(std::cin, line)) return 4;
  paramspec::GeneratedInput input;
  try {
    input = paramspec::GeneratedInput::FromJson(json::parse(line));
  } catch (const std::exception& e) {
    Reply({{"status", "exception"}, {"message", std::string("BAD_RECORD: ") + e.what()}});
    return 0;
  }
  if (target != "mocklib") {
    Reply({{"status", "exception"}, {"message", "UNKNOWN_TARGET: " + target}});
    return 0;
  }
  paramspec::MockResult r = paramspec::RunMock(input);
  if (r.fault != Fault::kNone) Trigger(r.fault, slow_ms);
  Reply({{"status", r.pass ? "pass" : "exception"}, {"message", r.message}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"paramspec harness worker (protocol v1)"};
  std::string target = "mocklib";
  int slow_ms = 300;
  app.add_option("--target", target, "target library adapter")->capture_default_str();
  app.add_option("--slow-ms", slow_ms, "delay of the mock.fault.slow fixture")
      ->capture_default_str();
  CLI11_PARSE(app, argc, argv);
  return Serve(target, slow_ms);
}
