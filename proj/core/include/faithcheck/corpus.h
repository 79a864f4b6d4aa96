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

#ifndef FAITHCHECK_CORPUS_H_
#define FAITHCHECK_CORPUS_H_

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace faithcheck {

// One evaluation unit: a source document and the generated summary sentences
// judged against it.
struct Record {
  std::string id;
  std::string document;
  std::vector<std::string> summary_sentences;
  std::optional<std::string> reference;
  std::optional<double> human_score;
  std::map<std::string, double> external_scores;

  friend bool operator==(const Record&, const Record&) = default;
};

struct LoadOptions {
  // Re-split each summary sentence entry with split_sentences().
  bool split_summary = false;
};

// Reads JSON Lines, one record per non-blank line. Text fields are NFC
// normalized. Errors carry the 1-based line number:
//   kParseError   malformed JSON
//   kSchemaError  missing/mistyped field, empty document or summary sentence
//   kDuplicateId  id seen on an earlier line
std::vector<Record> read_corpus(std::istream& in, const LoadOptions& options = {});
std::vector<Record> load_corpus(const std::filesystem::path& path,
                                const LoadOptions& options = {});

// Inverse of read_corpus for already-normalized records.
void write_corpus(std::ostream& out, const std::vector<Record>& records);

}  // namespace faithcheck

#endif  // FAITHCHECK_CORPUS_H_
