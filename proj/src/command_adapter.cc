// Copyright 2026 The ocrkit Authors
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

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>

#include "ocrkit/engines.h"
#include "ocrkit/status.h"
#include "ocrkit/unicode.h"

extern char** environ;

namespace ocrkit {
namespace {

std::string Substitute(std::string arg, const std::string& key,
                       const std::string& value) {
  for (std::size_t pos = arg.find(key); pos != std::string::npos;
       pos = arg.find(key, pos + value.size())) {
    arg.replace(pos, key.size(), value);
  }
  return arg;
}

class Fd {
 public:
  explicit Fd(int fd = -1) : fd_(fd) {}
  Fd(const Fd&) = delete;
  Fd& operator=(const Fd&) = delete;
  ~Fd() { Close(); }
  int get() const { return fd_; }
  void Reset(int fd) {
    Close();
    fd_ = fd;
  }
  void Close() {
    if (fd_ >= 0) ::close(fd_);
    fd_ = -1;
  }

 private:
  int fd_;
};

struct Pipe {
  Fd read;
  Fd write;
};

void MakePipe(Pipe& p) {
  int fds[2];
  if (::pipe2(fds, O_CLOEXEC) != 0) {
    throw Error(ErrorCode::kInternal,
                std::string("pipe failed: ") + std::strerror(errno));
  }
  p.read.Reset(fds[0]);
  p.write.Reset(fds[1]);
}

}  // namespace

CommandEngine::CommandEngine(CommandEngineConfig config)
    : config_(std::move(config)) {
  if (config_.argv.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "command engine needs an argv");
  }
}

std::set<std::string> CommandEngine::supported_languages() const {
  if (!config_.languages.empty()) return config_.languages;
  return MappedLanguages(config_.language_table);
}

std::string CommandEngine::RecognizeText(const std::string& image_ref,
                                         const std::string& language) {
  const std::string code = MapLanguageCode(language, config_.language_table);
  std::vector<std::string> args;
  for (const std::string& a : config_.argv) {
    args.push_back(Substitute(Substitute(a, "{image}", image_ref), "{lang}", code));
  }
  for (const auto& [k, v] : config_.options) {
    args.push_back(k);
    if (!v.empty()) args.push_back(v);
  }
  std::vector<char*> cargv;
  for (std::string& a : args) cargv.push_back(a.data());
  cargv.push_back(nullptr);

  Pipe out, err;
  MakePipe(out);
  MakePipe(err);

  posix_spawn_file_actions_t actions;
  posix_spawn_file_actions_init(&actions);
  posix_spawn_file_actions_adddup2(&actions, out.write.get(), STDOUT_FILENO);
  posix_spawn_file_actions_adddup2(&actions, err.write.get(), STDERR_FILENO);
  posix_spawn_file_actions_addopen(&actions, STDIN_FILENO, "/dev/null",
                                   O_RDONLY, 0);
  pid_t pid = 0;
  const int rc =
      posix_spawnp(&pid, cargv[0], &actions, nullptr, cargv.data(), environ);
  posix_spawn_file_actions_destroy(&actions);
  out.write.Close();
  err.write.Close();
  if (rc != 0) {
    throw Error(ErrorCode::kEngineUnavailable,
                "cannot run '" + args[0] + "': " + std::strerror(rc));
  }

  std::string stdout_text, stderr_text;
  const auto deadline = std::chrono::steady_clock::now() + config_.timeout;
  bool out_open = true, err_open = true, timed_out = false;
  char buf[65536];
  while (out_open || err_open) {
    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
        deadline - std::chrono::steady_clock::now());
    if (left.count() <= 0) {
      timed_out = true;
      break;
    }
    pollfd fds[2];
    int n = 0;
    if (out_open) fds[n++] = {out.read.get(), POLLIN, 0};
    if (err_open) fds[n++] = {err.read.get(), POLLIN, 0};
    const int pr = ::poll(fds, n, static_cast<int>(left.count()));
    if (pr < 0) {
      if (errno == EINTR) continue;
      break;
    }
    for (int i = 0; i < n; ++i) {
      if (fds[i].revents == 0) continue;
      const bool is_out = fds[i].fd == out.read.get();
      const ssize_t got = ::read(fds[i].fd, buf, sizeof buf);
      if (got > 0) {
        (is_out ? stdout_text : stderr_text).append(buf, static_cast<std::size_t>(got));
      } else if (got == 0 || errno != EINTR) {
        (is_out ? out_open : err_open) = false;
      }
    }
  }
  if (timed_out) ::kill(pid, SIGKILL);
  int status = 0;
  while (::waitpid(pid, &status, 0) < 0 && errno == EINTR) {
  }
  if (timed_out) {
    throw Error(ErrorCode::kTimeout, "'" + args[0] + "' timed out after " +
                                         std::to_string(config_.timeout.count()) +
                                         " ms");
  }
  if (WIFEXITED(status) && WEXITSTATUS(status) == 127 && stdout_text.empty()) {
    throw Error(ErrorCode::kEngineUnavailable,
                "'" + args[0] + "' not found or not executable");
  }
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
    if (stderr_text.size() > 2000) stderr_text.resize(2000);
    throw Error(ErrorCode::kEngineUnavailable,
                "'" + args[0] + "' failed (status " + std::to_string(status) +
                    "): " + stderr_text);
  }
  if (!IsValidUtf8(stdout_text)) {
    throw Error(ErrorCode::kInvalidUtf8,
                "'" + args[0] + "' produced invalid UTF-8");
  }
  return stdout_text;
}

}  // namespace ocrkit
