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

#ifndef FAITHCHECK_QUESTION_GEN_H_
#define FAITHCHECK_QUESTION_GEN_H_

#include <string>

#include "faithcheck/answer_spans.h"
#include "faithcheck/text.h"

namespace faithcheck {

// A question whose gold answer is a masked span of `source_sentence`.
struct QaPair {
  std::string question;
  AnswerSpan gold_answer;
  std::string source_sentence;

  friend bool operator==(const QaPair&, const QaPair&) = default;
};

// Rule-based declarative-to-question rewrite.
//
// Spans in subject position (no verb or auxiliary before them) are replaced
// in place by the wh-phrase:
//   "Dean Marney and Steven Reid could return ..." / "Dean Marney"
//     -> "Who and Steven Reid could return ...?"
// Other spans are fronted: the first auxiliary moves in front of the
// subject, or do-support is inserted and the verb lemmatized:
//   "Sally was born in 1958" / "1958"  -> "When was Sally born?"
//   "The dog ate the cake" / "the cake" -> "What did the dog eat?"
//
// Throws Error(kGenerationFailure) when no well-formed question results,
// including when every normalized gold token would appear in the question.
// Throws Error(kInvalidArgument) when the span is outside the sentence.
QaPair generate_question(const Sentence& sentence, const AnswerSpan& span);

}  // namespace faithcheck

#endif  // FAITHCHECK_QUESTION_GEN_H_
