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

#include <algorithm>
#include <limits>
#include <set>
#include <string>
#include <vector>

#include "faithcheck/answer_spans.h"
#include "faithcheck/qa_backend.h"
#include "faithcheck/text.h"
#include "lexicon.h"

namespace faithcheck {
namespace {

namespace lx = lexicon;

constexpr std::size_t kContextWindow = 6;
constexpr std::size_t kMinContentOverlap = 2;

using KeySet = std::set<std::string>;

bool is_kept(std::string_view lower) {
  return (lx::is_alpha_word(lower) || lx::is_numeral(lower)) &&
         !lx::is_article(lower);
}

// Question analysis: the wh-phrase location, the answer types it admits and
// the lexical keys on either side of it.
struct QuestionShape {
  std::set<AnswerType> expected;
  std::vector<std::string> left;   // keys before the wh-phrase, in order
  std::vector<std::string> right;  // keys after it, in order
  KeySet keys;
  KeySet content;
};

QuestionShape analyze(std::string_view question) {
  const std::vector<Token> tokens = tokenize_with_offsets(question);
  std::vector<std::string> lower;
  for (const auto& t : tokens) lower.push_back(to_lower(t.text));

  std::size_t wh = lower.size();
  std::size_t wh_end = lower.size();
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (!lx::is_wh_word(lower[i])) continue;
    wh = i;
    wh_end = i + 1;
    if (lower[i] == "how" && i + 1 < lower.size() &&
        (lower[i + 1] == "long" || lower[i + 1] == "many" ||
         lower[i + 1] == "much")) {
      wh_end = i + 2;
    }
    break;
  }

  QuestionShape shape;
  if (wh == lower.size()) {
    shape.expected = {AnswerType::kPerson,   AnswerType::kDate,
                      AnswerType::kDuration, AnswerType::kNumber,
                      AnswerType::kLocation, AnswerType::kEntity,
                      AnswerType::kPhrase};
    wh = 0;
    wh_end = 0;
  } else {
    const std::string& w = lower[wh];
    const std::string next = wh + 1 < wh_end ? lower[wh + 1] : "";
    if (w == "who" || w == "whom" || w == "whose") {
      shape.expected = {AnswerType::kPerson};
    } else if (w == "when") {
      shape.expected = {AnswerType::kDate};
    } else if (w == "where") {
      shape.expected = {AnswerType::kLocation};
    } else if (w == "how" && next == "long") {
      shape.expected = {AnswerType::kDuration};
    } else if (w == "how" && (next == "many" || next == "much")) {
      shape.expected = {AnswerType::kNumber};
    } else {
      shape.expected = {AnswerType::kEntity, AnswerType::kPhrase};
    }
  }

  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (i >= wh && i < wh_end) continue;
    if (!is_kept(lower[i]) || lx::is_wh_word(lower[i])) continue;
    std::string key = lx::match_key(lower[i]);
    shape.keys.insert(key);
    if (!lx::is_closed_class(lower[i])) shape.content.insert(key);
    (i < wh ? shape.left : shape.right).push_back(std::move(key));
  }
  return shape;
}

std::size_t count_shared(const KeySet& a, const std::vector<std::string>& b) {
  KeySet seen;
  std::size_t shared = 0;
  for (const auto& key : b) {
    if (a.contains(key) && seen.insert(key).second) ++shared;
  }
  return shared;
}

struct SentenceView {
  std::vector<Token> tokens;
  std::vector<std::string> keys;  // per token; empty when not kept
  KeySet key_set;
};

SentenceView view_of(std::string_view text) {
  SentenceView view;
  view.tokens = tokenize_with_offsets(text);
  for (const auto& t : view.tokens) {
    const std::string lower = to_lower(t.text);
    std::string key = is_kept(lower) ? lx::match_key(lower) : std::string();
    if (!key.empty()) view.key_set.insert(key);
    view.keys.push_back(std::move(key));
  }
  return view;
}

std::size_t context_score(const SentenceView& sentence, const AnswerSpan& span,
                          const QuestionShape& shape) {
  std::vector<std::string> left;
  for (std::size_t i = span.begin; i-- > 0 && left.size() < kContextWindow;) {
    if (!sentence.keys[i].empty()) left.push_back(sentence.keys[i]);
  }
  std::vector<std::string> right;
  for (std::size_t i = span.end;
       i < sentence.keys.size() && right.size() < kContextWindow; ++i) {
    if (!sentence.keys[i].empty()) right.push_back(sentence.keys[i]);
  }
  // Question text nearest the wh-phrase on each side.
  const std::size_t lcount = std::min(kContextWindow, shape.left.size());
  const KeySet q_left(shape.left.end() - static_cast<std::ptrdiff_t>(lcount),
                      shape.left.end());
  const std::size_t rcount = std::min(kContextWindow, shape.right.size());
  const KeySet q_right(shape.right.begin(),
                       shape.right.begin() + static_cast<std::ptrdiff_t>(rcount));

  const std::size_t sided = count_shared(q_left, left) + count_shared(q_right, right);
  std::vector<std::string> around = left;
  around.insert(around.end(), right.begin(), right.end());
  return 2 * sided + count_shared(shape.keys, around);
}

}  // namespace

QaAnswer LexicalQaBackend::answer(std::string_view question,
                                  std::string_view context) {
  const QaAnswer unanswerable{"", true, 0.0};
  if (trim(context).empty() || trim(question).empty()) return unanswerable;

  const QuestionShape shape = analyze(question);
  const std::vector<Sentence> sentences = split_sentences(context);

  std::size_t best = sentences.size();
  std::size_t best_overlap = 0;
  std::size_t best_content = 0;
  SentenceView best_view;
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    SentenceView view = view_of(sentences[s].text);
    std::size_t overlap = 0;
    std::size_t content = 0;
    for (const auto& key : shape.keys) {
      if (!view.key_set.contains(key)) continue;
      ++overlap;
      if (shape.content.contains(key)) ++content;
    }
    if (best == sentences.size() || overlap > best_overlap ||
        (overlap == best_overlap && content > best_content)) {
      best = s;
      best_overlap = overlap;
      best_content = content;
      best_view = std::move(view);
    }
  }
  if (best == sentences.size() || best_content < kMinContentOverlap) {
    return unanswerable;
  }

  const TokenSeq question_norm = normalize_answer(question);
  const KeySet question_words(question_norm.begin(), question_norm.end());
  const auto spans = extract_answer_spans(
      sentences[best].text, best_view.tokens,
      std::numeric_limits<std::size_t>::max());

  const AnswerSpan* chosen = nullptr;
  std::size_t chosen_score = 0;
  for (const auto& span : spans) {
    if (!shape.expected.contains(span.type)) continue;
    const TokenSeq words = normalize_answer(span.text);
    if (words.empty()) continue;
    const bool restated =
        std::all_of(words.begin(), words.end(),
                    [&](const auto& w) { return question_words.contains(w); });
    if (restated) continue;
    const std::size_t score = context_score(best_view, span, shape);
    if (chosen == nullptr || score > chosen_score) {
      chosen = &span;
      chosen_score = score;
    }
  }
  if (chosen == nullptr) return unanswerable;

  const double confidence =
      shape.content.empty()
          ? 0.0
          : std::min(1.0, static_cast<double>(best_content) /
                              static_cast<double>(shape.content.size()));
  return {chosen->text, false, confidence};
}

}  // namespace faithcheck
