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

// QA-based faithfulness: mask answer spans in a summary sentence, turn each
// into a question, answer the questions from the source document and average
// the token F1 between document answers and the masked summary spans.

#ifndef FAITHCHECK_FEQA_H_
#define FAITHCHECK_FEQA_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "faithcheck/answer_spans.h"
#include "faithcheck/qa_backend.h"
#include "faithcheck/question_gen.h"
#include "faithcheck/text.h"

namespace faithcheck {

// SQuAD token F1 over normalize_answer() bags. Both empty -> 1, one empty -> 0.
double token_f1(std::string_view gold, std::string_view predicted);

struct QuestionResult {
  QaPair pair;
  QaAnswer answer;
  double f1 = 0.0;
};

enum class FeqaStatus { kScored, kNoQuestions };

struct FaithfulnessScore {
  double value = 0.0;  // mean of per_question f1 when kScored, else 0
  std::vector<QuestionResult> per_question;
  FeqaStatus status = FeqaStatus::kNoQuestions;
  // Spans for which no question could be generated.
  std::size_t skipped_spans = 0;
};

struct FeqaConfig {
  std::size_t max_spans = kDefaultMaxSpans;
  // Defaults to extract_answer_spans when empty.
  SpanExtractor span_extractor;
};

// Questions for every extracted span, failures skipped, identical
// (question, gold text) pairs kept once. `skipped` receives the number of
// spans that produced no question.
std::vector<QaPair> generate_qa_pairs(const Sentence& sentence,
                                      const FeqaConfig& config = {},
                                      std::size_t* skipped = nullptr);

// Unanswerable questions score 0. Backend errors propagate.
// Throws Error(kInvalidArgument) for an empty document.
FaithfulnessScore feqa_score(const Sentence& summary_sentence,
                             std::string_view document, QaBackend& backend,
                             const FeqaConfig& config = {});

}  // namespace faithcheck

#endif  // FAITHCHECK_FEQA_H_
