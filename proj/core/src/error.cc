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

#include "faithcheck/error.h"

namespace faithcheck {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kEmptySummarySentence: return "empty-summary-sentence";
    case ErrorCode::kEmptyCorpus: return "empty-corpus";
    case ErrorCode::kEmptySources: return "empty-sources";
    case ErrorCode::kMissingReference: return "missing-reference";
    case ErrorCode::kGenerationFailure: return "generation-failure";
    case ErrorCode::kBackendUnavailable: return "backend-unavailable";
    case ErrorCode::kMalformedResponse: return "malformed-response";
    case ErrorCode::kConstantVector: return "constant-vector";
    case ErrorCode::kInsufficientData: return "insufficient-data";
    case ErrorCode::kParseError: return "parse-error";
    case ErrorCode::kSchemaError: return "schema-error";
    case ErrorCode::kDuplicateId: return "duplicate-id";
    case ErrorCode::kIo: return "io-error";
  }
  return "unknown";
}

}  // namespace faithcheck
