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

#include "paramspec/evaluator.h"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstring>
#include <mutex>
#include <sstream>

#include "paramspec/errors.h"
#include "paramspec/mock_target.h"

namespace paramspec {

using nlohmann::json;

namespace {

struct RawRun {
  bool timed_out = false;
  bool signaled = false;
  int signo = 0;
  int exit_code = 0;
  std::string out;
  std::string err;
  int64_t ms = 0;
};

void IgnoreSigpipe() {
  static std::once_flag once;
  std::call_once(once, [] { ::signal(SIGPIPE, SIG_IGN); });
}

void SetNonBlocking(int fd) { ::fcntl(fd, F_SETFL, ::fcntl(fd, F_GETFL) | O_NONBLOCK); }

RawRun Spawn(const std::vector<std::string>& argv, const std::string& input, int64_t timeout_ms) {
  IgnoreSigpipe();
  int in[2], out[2], err[2], exec_err[2];
  if (::pipe(in) || ::pipe(out) || ::pipe(err) || ::pipe2(exec_err, O_CLOEXEC)) {
    throw HarnessError(std::string("pipe: ") + std::strerror(errno));
  }
  std::vector<char*> args;
  for (const std::string& a : argv) args.push_back(const_cast<char*>(a.c_str()));
  args.push_back(nullptr);

  auto start = std::chrono::steady_clock::now();
  pid_t pid = ::fork();
  if (pid < 0) throw HarnessError(std::string("fork: ") + std::strerror(errno));
  if (pid == 0) {
    ::setpgid(0, 0);
    ::dup2(in[0], 0);
    ::dup2(out[1], 1);
    ::dup2(err[1], 2);
    for (int fd : {in[0], in[1], out[0], out[1], err[0], err[1], exec_err[0]}) ::close(fd);
    ::signal(SIGPIPE, SIG_DFL);
    ::execvp(args[0], args.data());
    int e = errno;
    ssize_t ignored = ::write(exec_err[1], &e, sizeof(e));
    (void)ignored;
    ::_exit(127);
  }
  ::close(in[0]);
  ::close(out[1]);
  ::close(err[1]);
  ::close(exec_err[1]);

  int e = 0;
  ssize_t n = ::read(exec_err[0], &e, sizeof(e));
  ::close(exec_err[0]);
  if (n == sizeof(e)) {
    ::close(in[1]);
    ::close(out[0]);
    ::close(err[0]);
    ::waitpid(pid, nullptr, 0);
    throw HarnessError("cannot start worker '" + argv[0] + "': " + std::strerror(e));
  }

  SetNonBlocking(in[1]);
  SetNonBlocking(out[0]);
  SetNonBlocking(err[0]);
  RawRun run;
  size_t written = 0;
  int in_fd = in[1], out_fd = out[0], err_fd = err[0];
  if (input.empty()) {
    ::close(in_fd);
    in_fd = -1;
  }
  auto deadline = start + std::chrono::milliseconds(timeout_ms);
  char buf[65536];
  while (out_fd >= 0 || err_fd >= 0) {
    auto now = std::chrono::steady_clock::now();
    if (now >= deadline) {
      run.timed_out = true;
      break;
    }
    int wait_ms = static_cast<int>(
        std::chrono::duration_cast<std::chrono::milliseconds>(deadline - now).count() + 1);
    pollfd fds[3];
    int nfds = 0;
    if (in_fd >= 0) fds[nfds++] = {in_fd, POLLOUT, 0};
    if (out_fd >= 0) fds[nfds++] = {out_fd, POLLIN, 0};
    if (err_fd >= 0) fds[nfds++] = {err_fd, POLLIN, 0};
    int r = ::poll(fds, static_cast<nfds_t>(nfds), wait_ms);
    if (r < 0) {
      if (errno == EINTR) continue;
      break;
    }
    for (int i = 0; i < nfds; ++i) {
      if (fds[i].revents == 0) continue;
      if (fds[i].fd == in_fd) {
        ssize_t w = ::write(in_fd, input.data() + written, input.size() - written);
        if (w > 0) written += static_cast<size_t>(w);
        if (w < 0 && errno != EAGAIN) written = input.size();
        if (written == input.size()) {
          ::close(in_fd);
          in_fd = -1;
        }
      } else {
        int& fd = fds[i].fd == out_fd ? out_fd : err_fd;
        std::string& sink = &fd == &out_fd ? run.out : run.err;
        ssize_t got = ::read(fd, buf, sizeof(buf));
        if (got > 0) {
          if (sink.size() < (1u << 20)) sink.append(buf, static_cast<size_t>(got));
        } else if (got == 0 || (errno != EAGAIN && errno != EINTR)) {
          ::close(fd);
          fd = -1;
        }
      }
    }
  }
  for (int fd : {in_fd, out_fd, err_fd}) {
    if (fd >= 0) ::close(fd);
  }
  int status = 0;
  if (run.timed_out) {
    ::kill(-pid, SIGKILL);
    ::kill(pid, SIGKILL);
    ::waitpid(pid, &status, 0);
  } else {
    // Output closed; the worker should exit promptly, but do not wait past
    // the deadline for it.
    for (;;) {
      pid_t w = ::waitpid(pid, &status, WNOHANG);
      if (w == pid) break;
      if (std::chrono::steady_clock::now() >= deadline) {
        run.timed_out = true;
        ::kill(-pid, SIGKILL);
        ::kill(pid, SIGKILL);
        ::waitpid(pid, &status, 0);
        break;
      }
      ::usleep(1000);
    }
  }
  run.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 start)
               .count();
  if (!run.timed_out) {
    if (WIFSIGNALED(status)) {
      run.signaled = true;
      run.signo = WTERMSIG(status);
    } else if (WIFEXITED(status)) {
      run.exit_code = WEXITSTATUS(status);
    }
  }
  return run;
}

std::string Truncate(std::string s) {
  if (s.size() > Outcome::kMaxMessage) s.resize(Outcome::kMaxMessage);
  return s;
}

std::vector<std::string> Lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

Outcome Classify(const RawRun& run, const TargetProfile& profile) {
  Outcome o;
  o.duration_ms = run.ms;
  if (run.timed_out) {
    o.kind = OutcomeKind::kTimeout;
    o.message = "no result within the time limit";
    return o;
  }
  if (run.signaled) {
    o.kind = OutcomeKind::kCrash;
    o.signal = ClassifySignal(run.signo);
    o.signal_number = run.signo;
    const char* name = ::strsignal(run.signo);
    o.message = Truncate("killed by signal " + std::to_string(run.signo) +
                         (name ? std::string(" (") + name + ")" : ""));
    if (*o.signal == CrashSignal::kAbort && profile.abort_is_exception) {
      o.kind = OutcomeKind::kException;
      o.signal.reset();
    }
    return o;
  }
  std::vector<std::string> lines = Lines(run.out);
  auto parse = [](const std::string& line) {
    json j = json::parse(line, nullptr, false);
    return j.is_object() ? j : json();
  };
  if (lines.empty() || parse(lines[0]).value("version", -1) != kProtocolVersion) {
    if (run.exit_code != 0 && lines.empty()) {
      throw HarnessError("worker exited with status " + std::to_string(run.exit_code) +
                         " before the handshake: " + Truncate(run.err));
    }
    throw HarnessError("protocol desync: expected {\"version\": " +
                       std::to_string(kProtocolVersion) + "}, got '" +
                       Truncate(lines.empty() ? "" : lines[0]) + "'");
  }
  if (lines.size() < 2) {
    if (run.exit_code != 0) {
      o.kind = OutcomeKind::kException;
      o.message = Truncate("worker exited with status " + std::to_string(run.exit_code) + ": " +
                           run.err);
      return o;
    }
    throw HarnessError("worker exited without a result record");
  }
  json result = parse(lines[1]);
  std::string status = result.value("status", "");
  if (status != "pass" && status != "exception") {
    throw HarnessError("protocol desync: bad result record '" + Truncate(lines[1]) + "'");
  }
  o.message = Truncate(result.value("message", ""));
  if (run.exit_code != 0) {
    o.kind = OutcomeKind::kException;
    o.message = Truncate("worker exited with status " + std::to_string(run.exit_code) + ": " +
                         o.message);
    return o;
  }
  o.kind = status == "pass" ? OutcomeKind::kPass : OutcomeKind::kException;
  return o;
}

}  // namespace

std::string_view OutcomeKindName(OutcomeKind k) {
  switch (k) {
    case OutcomeKind::kPass:
      return "PASS";
    case OutcomeKind::kException:
      return "EXCEPTION";
    case OutcomeKind::kTimeout:
      return "TIMEOUT";
    case OutcomeKind::kCrash:
      return "CRASH";
  }
  return "PASS";
}

std::string_view CrashSignalName(CrashSignal s) {
  switch (s) {
    case CrashSignal::kSegfault:
      return "SEGFAULT";
    case CrashSignal::kFpe:
      return "FPE";
    case CrashSignal::kAbort:
      return "ABORT";
    case CrashSignal::kBus:
      return "BUS";
    case CrashSignal::kOther:
      return "OTHER";
  }
  return "OTHER";
}

std::optional<CrashSignal> CrashSignalFromName(std::string_view name) {
  for (CrashSignal s : {CrashSignal::kSegfault, CrashSignal::kFpe, CrashSignal::kAbort,
                        CrashSignal::kBus, CrashSignal::kOther}) {
    if (CrashSignalName(s) == name) return s;
  }
  return std::nullopt;
}

CrashSignal ClassifySignal(int signo) {
  switch (signo) {
    case SIGSEGV:
      return CrashSignal::kSegfault;
    case SIGFPE:
      return CrashSignal::kFpe;
    case SIGABRT:
      return CrashSignal::kAbort;
    case SIGBUS:
      return CrashSignal::kBus;
    default:
      return CrashSignal::kOther;
  }
}

std::string Outcome::Label() const {
  std::string s(OutcomeKindName(kind));
  if (signal) s += "(" + std::string(CrashSignalName(*signal)) + ")";
  return s;
}

json Outcome::ToJson(bool with_timing) const {
  json j;
  j["kind"] = std::string(OutcomeKindName(kind));
  j["signal"] = signal ? json(std::string(CrashSignalName(*signal))) : json(nullptr);
  j["signal_number"] = signal_number;
  j["message"] = message;
  j["retried"] = retried;
  j["bug_id"] = bug_id;
  if (with_timing) j["duration_ms"] = duration_ms;
  return j;
}

Outcome Outcome::FromJson(const json& j) {
  Outcome o;
  std::string kind = j.at("kind").get<std::string>();
  bool found = false;
  for (OutcomeKind k : {OutcomeKind::kPass, OutcomeKind::kException, OutcomeKind::kTimeout,
                        OutcomeKind::kCrash}) {
    if (OutcomeKindName(k) == kind) {
      o.kind = k;
      found = true;
    }
  }
  if (!found) throw SchemaError("outcome.kind", "unknown kind '" + kind + "'");
  if (j.contains("signal") && j["signal"].is_string()) {
    o.signal = CrashSignalFromName(j["signal"].get<std::string>());
  }
  o.signal_number = j.value("signal_number", 0);
  o.message = j.value("message", "");
  o.retried = j.value("retried", false);
  o.bug_id = j.value("bug_id", "");
  o.duration_ms = j.value("duration_ms", int64_t{0});
  return o;
}

bool IsBug(const Outcome& o) {
  return o.kind == OutcomeKind::kCrash || (o.kind == OutcomeKind::kTimeout && o.retried);
}

void TargetProfile::Check() const {
  if (command.empty() || command[0].empty()) throw Error("target profile: empty worker command");
  if (timeout_ms <= 0) throw Error("target profile: timeout_ms must be positive");
}

json TargetProfile::ToJson() const {
  return {{"target", target},
          {"command", command},
          {"abort_is_exception", abort_is_exception},
          {"timeout_ms", timeout_ms}};
}

TargetProfile TargetProfile::FromJson(const json& j) {
  if (!j.is_object()) throw SchemaError("target", "expected an object");
  TargetProfile p;
  try {
    p.target = j.value("target", p.target);
    p.command = j.value("command", p.command);
    p.abort_is_exception = j.value("abort_is_exception", p.abort_is_exception);
    p.timeout_ms = j.value("timeout_ms", p.timeout_ms);
  } catch (const json::exception& e) {
    throw SchemaError("target", e.what());
  }
  return p;
}

Outcome Evaluate(const GeneratedInput& input, const TargetProfile& profile) {
  profile.Check();
  std::string payload = json{{"hello", "paramspec-harness"}, {"version", kProtocolVersion}}.dump() +
                        "\n" + input.WireRecord().dump() + "\n";
  std::vector<std::string> argv = profile.command;
  if (profile.target != "mocklib" && !profile.target.empty()) {
    argv.push_back("--target");
    argv.push_back(profile.target);
  }
  Outcome o = Classify(Spawn(argv, payload, profile.timeout_ms), profile);
  if (o.kind == OutcomeKind::kTimeout) {
    o = Classify(Spawn(argv, payload, profile.timeout_ms * 10), profile);
    o.retried = true;
  }
  return o;
}

ProcessHarness::ProcessHarness(TargetProfile profile) : profile_(std::move(profile)) {
  profile_.Check();
}

Outcome StubHarness::Run(const GeneratedInput& input) {
  MockResult r = RunMock(input);
  Outcome o;
  o.message = Truncate(r.message);
  o.bug_id = r.bug_id;
  auto crash = [&](CrashSignal s, int signo) {
    o.kind = OutcomeKind::kCrash;
    o.signal = s;
    o.signal_number = signo;
  };
  switch (r.fault) {
    case Fault::kNone:
      o.kind = r.pass ? OutcomeKind::kPass : OutcomeKind::kException;
      break;
    case Fault::kSegv:
      crash(CrashSignal::kSegfault, SIGSEGV);
      break;
    case Fault::kFpe:
      crash(CrashSignal::kFpe, SIGFPE);
      break;
    case Fault::kAbort:
      if (abort_is_exception_) {
        o.kind = OutcomeKind::kException;
      } else {
        crash(CrashSignal::kAbort, SIGABRT);
      }
      break;
    case Fault::kBus:
      crash(CrashSignal::kBus, SIGBUS);
      break;
    case Fault::kHang:
      o.kind = OutcomeKind::kTimeout;
      o.retried = true;
      break;
    case Fault::kSlow:
      o.kind = OutcomeKind::kPass;
      o.retried = true;
      break;
    case Fault::kExit3:
      o.kind = OutcomeKind::kException;
      o.message = "worker exited with status 3";
      break;
  }
  return o;
}

}  // namespace paramspec
