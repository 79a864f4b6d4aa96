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

#include "faithcheck/feqa.h"

#include <map>
#include <set>
#include <utility>

#include "faithcheck/error.h"

namespace faithcheck {

double token_f1(std::string_view gold, std::string_view predicted) {
  const TokenSeq g = normalize_answer(gold);
  const TokenSeq p = normalize_answer(predicted);
  if (g.empty() && p.empty()) return 1.0;
  if (g.empty() || p.empty()) return 0.0;

  std::map<std::string_view, std::size_t> gold_counts;
  for (const auto& t : g) ++gold_counts[t];
  std::size_t common = 0;
  for (const auto& t : p) {
    auto it = gold_counts.find(t);
    if (it != gold_counts.end() && it->second > 0) {
      --it->second;
      ++common;
    }
  }
  if (common == 0) return 0.0;
  const double precision = static_cast<double>(common) / static_cast<double>(p.size());
  const double recall = static_cast<double>(common) / static_cast<double>(g.size());
  return 2.0 * precision * recall / (precision + recall);
}

std::vector<QaPair> generate_qa_pairs(const Sentence& sentence,
                                      const FeqaConfig& config,
                                      std::size_t* skipped) {
  const std::vector<AnswerSpan> spans =
      config.span_extractor ? config.span_extractor(sentence, config.max_spans)
                            : extract_answer_spans(sentence, config.max_spans);
  std::vector<QaPair> pairs;
  std::set<std::pair<std::string, std::string>> seen;
  std::size_t failures = 0;
  for (const auto& span : spans) {
    try {
      QaPair pair = generate_question(sentence, span);
      if (seen.emplace(pair.question, pair.gold_answer.text).second) {
        pairs.push_back(std::move(pair));
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kGenerationFailure) throw;
      ++failures;
    }
  }
  if (skipped != nullptr) *skipped = failures;
  return pairs;
}

FaithfulnessScore feqa_score(const Sentence& summary_sentence,
                             std::string_view document, QaBackend& backend,
                             const FeqaConfig& config) {
  if (trim(document).empty()) {
    throw Error(ErrorCode::kInvalidArgument, "FEQA needs a non-empty document");
  }
  FaithfulnessScore score;
  std::vector<QaPair> pairs =
      generate_qa_pairs(summary_sentence, config, &score.skipped_spans);
  if (pairs.empty()) return score;

  double total = 0.0;
  for (auto& pair : pairs) {
    QaAnswer answer = backend.answer(pair.question, document);
    const double f1 =
        answer.unanswerable ? 0.0 : token_f1(pair.gold_answer.text, answer.answer_text);
    total += f1;
    score.per_question.push_back({std::move(pair), std::move(answer), f1});
  }
  score.status = FeqaStatus::kScored;
  score.value = total / static_cast<double>(score.per_question.size());
  return score;
}

}  // namespace faithcheck
