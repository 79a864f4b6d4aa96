// Copyright 2026 The faithcheck Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FAITHCHECK_ERROR_H_
#define FAITHCHECK_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace faithcheck {

enum class ErrorCode {
  kInvalidArgument,
  kEmptySummarySentence,
  kEmptyCorpus,
  kEmptySources,
  kMissingReference,
  kGenerationFailure,
  kBackendUnavailable,
  kMalformedResponse,
  kConstantVector,
  kInsufficientData,
  kParseError,
  kSchemaError,
  kDuplicateId,
  kIo,
};

// Stable kebab-case name, used in reports and row statuses.
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// True for failures of an external QA service rather than of the input data.
inline bool is_backend_error(ErrorCode code) {
  return code == ErrorCode::kBackendUnavailable ||
         code == ErrorCode::kMalformedResponse;
}

}  // namespace faithcheck

#endif  // FAITHCHECK_ERROR_H_
