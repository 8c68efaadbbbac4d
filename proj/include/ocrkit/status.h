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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ocrkit {

enum class ErrorCode {
  kInvalidArgument,
  kIo,
  kManifestParse,
  kDuplicateId,
  kInvalidUtf8,
  kEmptyReference,
  kEmptyCorpus,
  kGroupTooSmall,
  kEmptyModel,
  kUnreachable,
  kUnknownGroup,
  kUnknownMapping,
  kEngineUnavailable,
  kUnsupportedLanguage,
  kTimeout,
  kInternal,
};

std::string_view ErrorCodeName(ErrorCode code);

// Process exit code for a failure of this kind: 1 I/O, 2 domain, 3 engine.
int ExitCodeFor(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ocrkit
