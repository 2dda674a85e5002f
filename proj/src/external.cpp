// Copyright 2026 The hornlin Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hornlin/external.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <sstream>
#include <vector>

#include "hornlin/errors.hpp"

namespace hornlin {

namespace {

constexpr int kExecFailed = 127;

ExternalResult::Kind classify(const std::string& out) {
  std::istringstream is(out);
  std::string tok;
  while (is >> tok) {
    if (tok == "sat") return ExternalResult::Sat;
    if (tok == "unsat") return ExternalResult::Unsat;
    if (tok == "unknown") return ExternalResult::Unknown;
  }
  return ExternalResult::SolverError;
}

// Temporary script file removed on scope exit.
class ScriptFile {
 public:
  explicit ScriptFile(const std::string& text) {
    const char* dir = std::getenv("TMPDIR");
    path_ = std::string(dir && *dir ? dir : "/tmp") + "/hornlin-XXXXXX.smt2";
    int fd = mkstemps(path_.data(), 5);
    if (fd < 0) throw Error("cannot create temporary file: " + std::string(std::strerror(errno)));
    size_t done = 0;
    while (done < text.size()) {
      ssize_t n = write(fd, text.data() + done, text.size() - done);
      if (n <= 0) {
        close(fd);
        throw Error("cannot write temporary file " + path_);
      }
      done += static_cast<size_t>(n);
    }
    close(fd);
  }
  ~ScriptFile() { std::remove(path_.c_str()); }
  ScriptFile(const ScriptFile&) = delete;
  ScriptFile& operator=(const ScriptFile&) = delete;

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace

ExternalResult run_external(const std::string& script, const std::string& command,
                            double timeout_seconds) {
  ExternalResult res;
  if (timeout_seconds <= 0) {
    res.kind = ExternalResult::Timeout;
    return res;
  }
  std::vector<std::string> argv_s;
  {
    std::istringstream is(command);
    std::string w;
    while (is >> w) argv_s.push_back(w);
  }
  if (argv_s.empty()) {
    res.output = "empty solver command";
    return res;
  }
  ScriptFile file(script);
  argv_s.push_back(file.path());
  std::vector<char*> argv;
  for (auto& a : argv_s) argv.push_back(a.data());
  argv.push_back(nullptr);

  int fds[2];
  if (pipe(fds) != 0) throw Error("pipe failed: " + std::string(std::strerror(errno)));
  auto start = std::chrono::steady_clock::now();
  pid_t pid = fork();
  if (pid < 0) {
    close(fds[0]);
    close(fds[1]);
    throw Error("fork failed: " + std::string(std::strerror(errno)));
  }
  if (pid == 0) {
    setpgid(0, 0);
    dup2(fds[1], STDOUT_FILENO);
    dup2(fds[1], STDERR_FILENO);
    close(fds[0]);
    close(fds[1]);
    execvp(argv[0], argv.data());
    std::string msg = std::string("cannot run ") + argv[0] + ": " + std::strerror(errno) + "\n";
    ssize_t ignored = write(STDERR_FILENO, msg.data(), msg.size());
    (void)ignored;
    _exit(kExecFailed);
  }
  setpgid(pid, pid);
  close(fds[1]);
  fcntl(fds[0], F_SETFL, O_NONBLOCK);
  bool timed_out = false;
  char buf[4096];
  for (;;) {
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    double left = timeout_seconds - elapsed;
    if (left <= 0) {
      timed_out = true;
      break;
    }
    pollfd p{fds[0], POLLIN, 0};
    int wait_ms = static_cast<int>(std::min(left * 1000.0, 200.0)) + 1;
    int r = poll(&p, 1, wait_ms);
    if (r > 0) {
      ssize_t n = read(fds[0], buf, sizeof buf);
      if (n > 0) {
        res.output.append(buf, static_cast<size_t>(n));
        continue;
      }
      if (n == 0) break;
      if (errno != EAGAIN && errno != EINTR) break;
    }
  }
  int status = 0;
  if (timed_out) {
    kill(-pid, SIGKILL);
    kill(pid, SIGKILL);
  }
  waitpid(pid, &status, 0);
  close(fds[0]);
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (timed_out) {
    res.kind = ExternalResult::Timeout;
  } else if (WIFEXITED(status) && WEXITSTATUS(status) == kExecFailed &&
             classify(res.output) == ExternalResult::SolverError) {
    res.kind = ExternalResult::SolverError;
  } else {
    res.kind = classify(res.output);
  }
  return res;
}

std::optional<std::string> configured_solver(const std::string& flag) {
  if (!flag.empty()) return flag;
  const char* env = std::getenv("HL_SOLVER");
  if (env && *env) return std::string(env);
  return std::nullopt;
}

std::optional<std::string> find_on_path(const std::string& name) {
  const char* path = std::getenv("PATH");
  if (!path) return std::nullopt;
  std::istringstream is(path);
  std::string dir;
  while (std::getline(is, dir, ':')) {
    if (dir.empty()) continue;
    std::string full = dir + "/" + name;
    if (access(full.c_str(), X_OK) == 0) return full;
  }
  return std::nullopt;
}

std::string to_string(ExternalResult::Kind k) {
  switch (k) {
    case ExternalResult::Sat:
      return "sat";
    case ExternalResult::Unsat:
      return "unsat";
    case ExternalResult::Unknown:
      return "unknown";
    case ExternalResult::Timeout:
      return "timeout";
    case ExternalResult::SolverError:
      return "solver-error";
  }
  return "solver-error";
}

}  // namespace hornlin
