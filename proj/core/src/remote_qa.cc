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

#include <charconv>
#include <semaphore>
#include <thread>

#include "faithcheck/error.h"
#include "faithcheck/qa_backend.h"
#include "httplib.h"
#include "json.hpp"

namespace faithcheck {
namespace {

using nlohmann::json;

[[noreturn]] void malformed(const std::string& why) {
  throw Error(ErrorCode::kMalformedResponse, "QA backend response: " + why);
}

struct Endpoint {
  std::string host;
  int port = 80;
  std::string base_path;
};

Endpoint parse_endpoint(std::string_view url) {
  constexpr std::string_view kScheme = "http://";
  if (!url.starts_with(kScheme)) {
    throw Error(ErrorCode::kInvalidArgument,
                "QA endpoint must start with http:// (got '" + std::string(url) + "')");
  }
  std::string_view rest = url.substr(kScheme.size());
  Endpoint out;
  const auto slash = rest.find('/');
  if (slash != std::string_view::npos) {
    out.base_path = std::string(rest.substr(slash));
    rest = rest.substr(0, slash);
  }
  while (!out.base_path.empty() && out.base_path.back() == '/') {
    out.base_path.pop_back();
  }
  const auto colon = rest.rfind(':');
  if (colon != std::string_view::npos) {
    const std::string_view port = rest.substr(colon + 1);
    auto [ptr, ec] = std::from_chars(port.data(), port.data() + port.size(), out.port);
    if (ec != std::errc() || ptr != port.data() + port.size() || out.port <= 0 ||
        out.port > 65535) {
      throw Error(ErrorCode::kInvalidArgument,
                  "bad port in QA endpoint '" + std::string(url) + "'");
    }
    rest = rest.substr(0, colon);
  }
  if (rest.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "missing host in QA endpoint '" + std::string(url) + "'");
  }
  out.host = std::string(rest);
  return out;
}

class SlotGuard {
 public:
  explicit SlotGuard(std::counting_semaphore<>& slots) : slots_(slots) { slots_.acquire(); }
  ~SlotGuard() { slots_.release(); }
  SlotGuard(const SlotGuard&) = delete;
  SlotGuard& operator=(const SlotGuard&) = delete;

 private:
  std::counting_semaphore<>& slots_;
};

}  // namespace

std::string encode_qa_request(std::string_view question, std::string_view context) {
  return json{{"question", question}, {"context", context}}.dump();
}

QaAnswer decode_qa_response(std::string_view body) {
  const json doc = json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) malformed("not valid JSON");
  if (!doc.is_object()) malformed("not a JSON object");
  for (const char* field : {"answer", "unanswerable", "confidence"}) {
    if (!doc.contains(field)) malformed(std::string("missing field '") + field + "'");
  }
  if (!doc["answer"].is_string()) malformed("'answer' is not a string");
  if (!doc["unanswerable"].is_boolean()) malformed("'unanswerable' is not a boolean");
  if (!doc["confidence"].is_number()) malformed("'confidence' is not a number");

  QaAnswer out;
  out.answer_text = doc["answer"].get<std::string>();
  out.unanswerable = doc["unanswerable"].get<bool>();
  out.confidence = doc["confidence"].get<double>();
  if (!(out.confidence >= 0.0 && out.confidence <= 1.0)) {
    malformed("'confidence' outside [0, 1]");
  }
  if (out.answer_text.empty() != out.unanswerable) {
    malformed("'answer' must be empty exactly when 'unanswerable' is true");
  }
  return out;
}

struct RemoteQaBackend::Impl {
  Impl(Endpoint e, RemoteQaOptions o)
      : endpoint(std::move(e)),
        options(o),
        slots(static_cast<std::ptrdiff_t>(std::max<std::size_t>(o.max_in_flight, 1))) {}

  Endpoint endpoint;
  RemoteQaOptions options;
  std::counting_semaphore<> slots;
};

RemoteQaBackend::RemoteQaBackend(std::string endpoint, RemoteQaOptions options)
    : impl_(std::make_unique<Impl>(parse_endpoint(endpoint), options)) {}

RemoteQaBackend::~RemoteQaBackend() = default;

QaAnswer RemoteQaBackend::answer(std::string_view question, std::string_view context) {
  const std::string body = encode_qa_request(question, context);
  const std::string path = impl_->endpoint.base_path + "/answer";
  std::string last_error;

  for (int attempt = 0; attempt <= impl_->options.retries; ++attempt) {
    if (attempt > 0) std::this_thread::sleep_for(impl_->options.retry_backoff * attempt);

    httplib::Result result;
    {
      SlotGuard slot(impl_->slots);
      httplib::Client client(impl_->endpoint.host, impl_->endpoint.port);
      client.set_connection_timeout(impl_->options.connect_timeout);
      client.set_read_timeout(impl_->options.read_timeout);
      client.set_write_timeout(impl_->options.read_timeout);
      result = client.Post(path, body, "application/json");
    }

    if (!result) {
      last_error = httplib::to_string(result.error());
      continue;
    }
    if (result->status >= 500) {
      last_error = "HTTP " + std::to_string(result->status);
      continue;
    }
    if (result->status != 200) {
      malformed("HTTP " + std::to_string(result->status) + ": " + result->body);
    }
    return decode_qa_response(result->body);
  }
  throw Error(ErrorCode::kBackendUnavailable,
              "QA backend at " + impl_->endpoint.host + ":" +
                  std::to_string(impl_->endpoint.port) + " unavailable: " + last_error);
}

}  // namespace faithcheck
