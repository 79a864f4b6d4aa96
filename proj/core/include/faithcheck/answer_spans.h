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

#ifndef FAITHCHECK_ANSWER_SPANS_H_
#define FAITHCHECK_ANSWER_SPANS_H_

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "faithcheck/text.h"

namespace faithcheck {

enum class AnswerType { kPerson, kDate, kDuration, kNumber, kLocation, kEntity, kPhrase };

std::string_view answer_type_name(AnswerType type);

// A maskable span of a sentence. [begin, end) indexes the sentence's
// tokenize_with_offsets() tokens; `text` is the verbatim sentence slice they
// cover.
struct AnswerSpan {
  std::string text;
  std::size_t begin = 0;
  std::size_t end = 0;
  AnswerType type = AnswerType::kPhrase;

  friend bool operator==(const AnswerSpan&, const AnswerSpan&) = default;
};

inline constexpr std::size_t kDefaultMaxSpans = 10;

// Heuristic chunker standing in for a parser plus NER. Left to right, non
// overlapping, at most `max_spans`:
//   Date      month-name patterns, weekdays, 4-digit years
//   Duration  number + time unit ("six months")
//   Number    numerals / number words, optional multiplier and unit noun
//   Person, Location, Entity
//             runs of capitalized tokens (sentence-initial function words and
//             leading role titles dropped)
//   Phrase    determiner + non-function words
// Throws Error(kInvalidArgument) when max_spans == 0.
std::vector<AnswerSpan> extract_answer_spans(const Sentence& sentence,
                                             std::size_t max_spans = kDefaultMaxSpans);
std::vector<AnswerSpan> extract_answer_spans(std::string_view sentence,
                                             std::span<const Token> tokens,
                                             std::size_t max_spans);

// Pluggable span source, e.g. parser output supplied from outside.
using SpanExtractor =
    std::function<std::vector<AnswerSpan>(const Sentence&, std::size_t)>;

}  // namespace faithcheck

#endif  // FAITHCHECK_ANSWER_SPANS_H_
