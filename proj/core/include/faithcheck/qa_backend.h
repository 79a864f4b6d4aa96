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

#ifndef FAITHCHECK_QA_BACKEND_H_
#define FAITHCHECK_QA_BACKEND_H_

#include <chrono>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

namespace faithcheck {

// Answer from an extractive QA model. `answer_text` is empty iff the
// question was judged unanswerable.
struct QaAnswer {
  std::string answer_text;
  bool unanswerable = true;
  double confidence = 0.0;

  friend bool operator==(const QaAnswer&, const QaAnswer&) = default;
};

// Implementations must be safe to call from several threads at once.
class QaBackend {
 public:
  virtual ~QaBackend() = default;
  virtual QaAnswer answer(std::string_view question, std::string_view context) = 0;
  virtual std::string name() const = 0;
};

inline QaAnswer answer_question(QaBackend& backend, std::string_view question,
                                std::string_view context) {
  return backend.answer(question, context);
}

// Deterministic lexical reader. Picks the context sentence with the largest
// unigram overlap with the question, then the span in it whose answer type
// fits the wh-word, preferring spans whose neighbourhood matches the
// question text around the wh-phrase. Spans restated by the question are
// never answers. Unanswerable when the best sentence shares fewer than two
// content words with the question or holds no fitting span.
class LexicalQaBackend final : public QaBackend {
 public:
  QaAnswer answer(std::string_view question, std::string_view context) override;
  std::string name() const override { return "lexical"; }
};

// --- Remote protocol -------------------------------------------------------
//
// POST {endpoint}/answer  {"question": str, "context": str}
//   200 -> {"answer": str, "unanswerable": bool, "confidence": float}
// JSON over HTTP/1.1, UTF-8.

std::string encode_qa_request(std::string_view question, std::string_view context);

// Validates a response body against the protocol: all three fields present
// and typed, confidence in [0, 1], answer empty iff unanswerable.
// Throws Error(kMalformedResponse) otherwise.
QaAnswer decode_qa_response(std::string_view body);

struct RemoteQaOptions {
  std::chrono::milliseconds connect_timeout{3000};
  std::chrono::milliseconds read_timeout{30000};
  // Extra attempts after a connection failure, timeout or 5xx.
  int retries = 2;
  std::chrono::milliseconds retry_backoff{100};
  // Upper bound on concurrent requests issued by one backend instance.
  std::size_t max_in_flight = 8;
};

// Client for a QA service speaking the protocol above. `endpoint` is
// "http://host[:port][/base/path]". Throws Error(kInvalidArgument) for
// unsupported endpoints. answer() throws kBackendUnavailable when the
// service cannot be reached after all retries and kMalformedResponse on
// protocol violations.
class RemoteQaBackend final : public QaBackend {
 public:
  explicit RemoteQaBackend(std::string endpoint, RemoteQaOptions options = {});
  ~RemoteQaBackend() override;

  QaAnswer answer(std::string_view question, std::string_view context) override;
  std::string name() const override { return "remote"; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace faithcheck

#endif  // FAITHCHECK_QA_BACKEND_H_
