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

#include "faithcheck/question_gen.h"

#include <algorithm>
#include <optional>
#include <set>

#include "faithcheck/error.h"
#include "lexicon.h"

namespace faithcheck {
namespace {

namespace lx = lexicon;

// A question piece; `origin` is the sentence token it was copied from.
struct Piece {
  std::string text;
  std::optional<std::size_t> origin;
};

std::string capitalize(std::string s) {
  if (!s.empty() && s[0] >= 'a' && s[0] <= 'z') s[0] = static_cast<char>(s[0] - 'a' + 'A');
  return s;
}

std::string decapitalize(std::string s) {
  if (!s.empty() && s[0] >= 'A' && s[0] <= 'Z') s[0] = static_cast<char>(s[0] - 'A' + 'a');
  return s;
}

bool is_word(std::string_view token) {
  return lx::is_alpha_word(token) || lx::is_numeral(token);
}

bool is_participle_like(std::string_view w) {
  return w == "been" || lx::is_irregular_participle(w) ||
         (w.size() > 3 && (w.ends_with("ed") || w.ends_with("en")));
}

bool is_light_adverb(std::string_view w) {
  return w == "not" || w == "never" || w == "already" || w == "just" ||
         w == "also" || w == "recently" || w == "since" || w == "long";
}

// Preposition left behind by fronting a span of this type.
bool drops_preposition(AnswerType type, std::string_view w) {
  switch (type) {
    case AnswerType::kDate:
      return w == "in" || w == "on" || w == "at" || w == "during";
    case AnswerType::kLocation:
      return w == "in" || w == "at";
    case AnswerType::kDuration:
      return w == "for" || w == "during";
    default:
      return false;
  }
}

[[noreturn]] void fail(const std::string& why) {
  throw Error(ErrorCode::kGenerationFailure, "question generation: " + why);
}

class QuestionBuilder {
 public:
  QuestionBuilder(const Sentence& sentence, const AnswerSpan& span)
      : span_(span),
        tokens_(tokenize_with_offsets(sentence.text)) {
    if (span.begin >= span.end || span.end > tokens_.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "answer span outside the sentence");
    }
    for (const auto& t : tokens_) lower_.push_back(to_lower(t.text));
    while (first_word_ < tokens_.size() && !is_word(lower_[first_word_])) {
      ++first_word_;
    }
    subject_start_ = first_word_;
    while (subject_start_ < tokens_.size() &&
           lx::is_role_title(lower_[subject_start_])) {
      ++subject_start_;
    }
    last_ = tokens_.size();
    while (last_ > span.end && !is_word(lower_[last_ - 1])) --last_;
  }

  std::string build() {
    if (span_.begin > 0 && span_.end < tokens_.size() &&
        lower_[span_.begin - 1] == "," && lower_[span_.end] == ",") {
      fail("appositive span");
    }
    const std::string wh = wh_phrase();
    std::vector<Piece> pieces;
    const auto aux = find_auxiliary();
    const auto verb = find_verb(/*past_only=*/aux.has_value());
    if (span_.begin <= subject_start_) {
      // A role title in front of the subject goes with it: "Winger X
      // scored" -> "Who scored".
      in_place(capitalize(wh), first_word_, &pieces);
    } else if (verb && (!aux || *verb < *aux)) {
      // The main verb comes first, so a later auxiliary belongs to an
      // embedded clause.
      fronted_with_do_support(wh, *verb, &pieces);
    } else if (aux) {
      fronted_with_auxiliary(wh, *aux, &pieces);
    } else {
      in_place(wh, span_.begin, &pieces);
    }
    return assemble(pieces);
  }

 private:
  std::string wh_phrase() const {
    switch (span_.type) {
      case AnswerType::kPerson: return "who";
      case AnswerType::kDate: return "when";
      case AnswerType::kDuration: return "how long";
      case AnswerType::kLocation: return "where";
      case AnswerType::kNumber: {
        for (std::size_t i = span_.begin; i < span_.end; ++i) {
          if (lx::is_currency(lower_[i])) return "how much";
        }
        const std::string& unit = lower_[span_.end - 1];
        if (span_.end - span_.begin > 1 && lx::is_alpha_word(unit) &&
            !lx::is_number_word(unit) && !lx::is_number_multiplier(unit)) {
          return "how many " + unit;
        }
        return "how many";
      }
      case AnswerType::kEntity:
      case AnswerType::kPhrase:
        return "what";
    }
    return "what";
  }

  std::optional<std::size_t> find_auxiliary() const {
    for (std::size_t i = first_word_; i < span_.begin; ++i) {
      if (!lx::is_auxiliary(lower_[i])) continue;
      if (!lx::is_have_form(lower_[i])) return i;
      // "has" is an auxiliary only when a participle follows.
      std::size_t k = i + 1;
      while (k < tokens_.size() && is_light_adverb(lower_[k])) ++k;
      if (k < tokens_.size() && k != span_.begin &&
          is_participle_like(lower_[k])) {
        return i;
      }
    }
    return std::nullopt;
  }

  // Lowercase open-class word not introduced by a determiner ("the injured
  // player" has no verb before "player").
  bool is_verb_candidate(std::size_t i) const {
    const std::string& w = lower_[i];
    return tokens_[i].text[0] == w[0] && lx::is_alpha_word(w) &&
           !lx::is_closed_class(w) && !lx::is_determiner(w) &&
           !lx::is_determiner(lower_[i - 1]);
  }

  // Past or have-form verbs first; bare -s forms only when `past_only` is
  // false, since a plural noun is easily mistaken for one.
  std::optional<std::size_t> find_verb(bool past_only) const {
    for (std::size_t i = first_word_ + 1; i < span_.begin; ++i) {
      const std::string& w = lower_[i];
      if (lx::is_have_form(w)) return i;
      if (!is_verb_candidate(i)) continue;
      if (lx::is_irregular_past(w) || (w.size() > 3 && w.ends_with("ed"))) {
        return i;
      }
    }
    if (past_only) return std::nullopt;
    for (std::size_t i = first_word_ + 1; i < span_.begin; ++i) {
      const std::string& w = lower_[i];
      if (is_verb_candidate(i) && w.size() > 2 && w.ends_with("s") &&
          !w.ends_with("ss")) {
        return i;
      }
    }
    return std::nullopt;
  }

  void copy(std::size_t from, std::size_t to, std::vector<Piece>* out,
            std::optional<std::size_t> skip = std::nullopt) const {
    for (std::size_t i = from; i < to; ++i) {
      if (skip && *skip == i) continue;
      out->push_back({tokens_[i].text, i});
    }
  }

  void copy_subject(std::size_t end, std::vector<Piece>* out) const {
    if (end <= first_word_) fail("empty subject");
    const std::size_t start = out->size();
    copy(first_word_, end, out);
    Piece& head = (*out)[start];
    const std::string& first = lower_[first_word_];
    if ((lx::is_closed_class(first) && first != "i") || lx::is_role_title(first)) {
      head.text = decapitalize(head.text);
    }
  }

  std::optional<std::size_t> dropped_preposition(std::size_t after) const {
    if (span_.begin == 0) return std::nullopt;
    const std::size_t p = span_.begin - 1;
    if (p > after && drops_preposition(span_.type, lower_[p])) return p;
    return std::nullopt;
  }

  // Replaces [prefix_end, span end) by the wh-phrase.
  void in_place(const std::string& wh, std::size_t prefix_end,
                std::vector<Piece>* out) const {
    copy(0, std::min(prefix_end, span_.begin), out);
    out->push_back({wh, std::nullopt});
    copy(span_.end, last_, out);
  }

  void fronted_with_auxiliary(const std::string& wh, std::size_t aux,
                              std::vector<Piece>* out) const {
    out->push_back({capitalize(wh), std::nullopt});
    out->push_back({lower_[aux], std::nullopt});
    copy_subject(aux, out);
    copy(aux + 1, span_.begin, out, dropped_preposition(aux));
    copy(span_.end, last_, out);
  }

  void fronted_with_do_support(const std::string& wh, std::size_t verb,
                               std::vector<Piece>* out) const {
    const std::string& w = lower_[verb];
    std::string support = "do";
    if (lx::is_irregular_past(w) || w.ends_with("ed")) {
      support = "did";
    } else if (w.ends_with("s")) {
      support = "does";
    }
    out->push_back({capitalize(wh), std::nullopt});
    out->push_back({support, std::nullopt});
    copy_subject(verb, out);
    out->push_back({lx::verb_lemma(w), std::nullopt});
    copy(verb + 1, span_.begin, out, dropped_preposition(verb));
    copy(span_.end, last_, out);
  }

  // Token written directly after its predecessor in the sentence.
  bool attached(std::size_t i) const {
    return i > 0 && tokens_[i - 1].end == tokens_[i].begin;
  }

  std::string assemble(const std::vector<Piece>& pieces) const {
    std::string question;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      const Piece& piece = pieces[i];
      if (i > 0) {
        const Piece& prev = pieces[i - 1];
        const bool glued =
            piece.origin && attached(*piece.origin) &&
            ((prev.origin && *prev.origin + 1 == *piece.origin) ||
             !is_word(lower_[*piece.origin]));
        if (!glued) question.push_back(' ');
      }
      question += piece.text;
    }
    // Drop punctuation left dangling before the question mark.
    while (!question.empty() &&
           (question.back() == ',' || question.back() == ';' ||
            question.back() == ':' || question.back() == ' ' ||
            question.back() == '-')) {
      question.pop_back();
    }
    question.push_back('?');
    return question;
  }

  const AnswerSpan& span_;
  std::vector<Token> tokens_;
  std::vector<std::string> lower_;
  std::size_t first_word_ = 0;
  std::size_t subject_start_ = 0;  // first word after leading role titles
  std::size_t last_ = 0;
};

}  // namespace

QaPair generate_question(const Sentence& sentence, const AnswerSpan& span) {
  const std::string question = QuestionBuilder(sentence, span).build();

  const TokenSeq gold = normalize_answer(span.text);
  if (gold.empty()) fail("gold answer normalizes to nothing");
  const TokenSeq asked = normalize_answer(question);
  const std::set<std::string> asked_set(asked.begin(), asked.end());
  const bool leaks = std::all_of(gold.begin(), gold.end(), [&](const auto& t) {
    return asked_set.contains(t);
  });
  if (leaks) fail("question would reveal the answer");

  std::size_t content = 0;
  for (const auto& t : asked) {
    if (!lx::is_wh_word(t) && t != "long" && t != "many" && t != "much") {
      ++content;
    }
  }
  if (content < 2) fail("question too short");

  return {question, span, sentence.text};
}

}  // namespace faithcheck
