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

#include "faithcheck/corpus.h"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_map>

#include "faithcheck/error.h"
#include "faithcheck/text.h"
#include "json.hpp"

namespace faithcheck {
namespace {

using nlohmann::json;

[[noreturn]] void schema_error(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kSchemaError,
              "line " + std::to_string(line) + ": " + what);
}

std::string required_string(const json& obj, const char* field, std::size_t line) {
  if (!obj.contains(field)) {
    schema_error(line, std::string("missing field '") + field + "'");
  }
  if (!obj[field].is_string()) {
    schema_error(line, std::string("field '") + field + "' must be a string");
  }
  return to_nfc(obj[field].get<std::string>());
}

double finite_number(const json& value, const std::string& field, std::size_t line) {
  if (!value.is_number()) {
    schema_error(line, "field '" + field + "' must be a number");
  }
  const double v = value.get<double>();
  if (!std::isfinite(v)) schema_error(line, "field '" + field + "' is not finite");
  return v;
}

Record parse_record(const json& obj, std::size_t line, const LoadOptions& options) {
  if (!obj.is_object()) schema_error(line, "record must be a JSON object");
  Record record;
  record.id = required_string(obj, "id", line);
  if (record.id.empty()) schema_error(line, "field 'id' is empty");
  record.document = required_string(obj, "document", line);
  if (trim(record.document).empty()) schema_error(line, "field 'document' is empty");

  if (!obj.contains("summary_sentences")) {
    schema_error(line, "missing field 'summary_sentences'");
  }
  const json& sentences = obj["summary_sentences"];
  if (!sentences.is_array() || sentences.empty()) {
    schema_error(line, "field 'summary_sentences' must be a non-empty array");
  }
  for (const auto& s : sentences) {
    if (!s.is_string()) schema_error(line, "summary sentences must be strings");
    std::string text = to_nfc(s.get<std::string>());
    if (options.split_summary) {
      for (auto& piece : split_sentences(text)) {
        record.summary_sentences.push_back(std::move(piece.text));
      }
      continue;
    }
    if (tokenize(text).empty()) schema_error(line, "empty summary sentence");
    record.summary_sentences.push_back(std::move(text));
  }
  if (record.summary_sentences.empty()) schema_error(line, "no summary sentences");

  if (obj.contains("reference") && !obj["reference"].is_null()) {
    record.reference = required_string(obj, "reference", line);
  }
  if (obj.contains("human_score") && !obj["human_score"].is_null()) {
    record.human_score = finite_number(obj["human_score"], "human_score", line);
  }
  if (obj.contains("external_scores") && !obj["external_scores"].is_null()) {
    const json& ext = obj["external_scores"];
    if (!ext.is_object()) schema_error(line, "field 'external_scores' must be an object");
    for (const auto& [name, value] : ext.items()) {
      record.external_scores[name] =
          finite_number(value, "external_scores." + name, line);
    }
  }
  return record;
}

}  // namespace

std::vector<Record> read_corpus(std::istream& in, const LoadOptions& options) {
  std::vector<Record> records;
  std::unordered_map<std::string, std::size_t> first_seen;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (trim(text).empty()) continue;
    json obj = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (obj.is_discarded()) {
      throw Error(ErrorCode::kParseError,
                  "line " + std::to_string(line) + ": malformed JSON");
    }
    Record record = parse_record(obj, line, options);
    auto [it, inserted] = first_seen.emplace(record.id, line);
    if (!inserted) {
      throw Error(ErrorCode::kDuplicateId,
                  "line " + std::to_string(line) + ": duplicate id '" + record.id +
                      "' (first on line " + std::to_string(it->second) + ")");
    }
    records.push_back(std::move(record));
  }
  return records;
}

std::vector<Record> load_corpus(const std::filesystem::path& path,
                                const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot open corpus '" + path.string() + "'");
  }
  return read_corpus(in, options);
}

void write_corpus(std::ostream& out, const std::vector<Record>& records) {
  for (const auto& r : records) {
    json obj = {{"id", r.id},
                {"document", r.document},
                {"summary_sentences", r.summary_sentences}};
    if (r.reference) obj["reference"] = *r.reference;
    if (r.human_score) obj["human_score"] = *r.human_score;
    if (!r.external_scores.empty()) obj["external_scores"] = r.external_scores;
    out << obj.dump() << '\n';
  }
}

}  // namespace faithcheck
