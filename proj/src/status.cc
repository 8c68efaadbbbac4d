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

#include "ocrkit/status.h"

namespace ocrkit {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIo: return "Io";
    case ErrorCode::kManifestParse: return "ManifestParse";
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kInvalidUtf8: return "InvalidUtf8";
    case ErrorCode::kEmptyReference: return "EmptyReference";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
    case ErrorCode::kGroupTooSmall: return "GroupTooSmall";
    case ErrorCode::kEmptyModel: return "EmptyModel";
    case ErrorCode::kUnreachable: return "Unreachable";
    case ErrorCode::kUnknownGroup: return "UnknownGroup";
    case ErrorCode::kUnknownMapping: return "UnknownMapping";
    case ErrorCode::kEngineUnavailable: return "EngineUnavailable";
    case ErrorCode::kUnsupportedLanguage: return "UnsupportedLanguage";
    case ErrorCode::kTimeout: return "Timeout";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIo:
    case ErrorCode::kManifestParse:
    case ErrorCode::kInvalidUtf8:
      return 1;
    case ErrorCode::kEngineUnavailable:
    case ErrorCode::kUnsupportedLanguage:
    case ErrorCode::kTimeout:
      return 3;
    default:
      return 2;
  }
}

}  // namespace ocrkit
