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

#include "faithcheck/answer_spans.h"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include <algorithm>
#include <charconv>
#include <optional>

#include "faithcheck/error.h"
#include "lexicon.h"

namespace faithcheck {
namespace {

namespace lx = lexicon;

struct Match {
  std::size_t begin;
  std::size_t end;
  AnswerType type;
};

bool starts_upper(std::string_view text) {
  if (text.empty()) return false;
  const auto* bytes = reinterpret_cast<const uint8_t*>(text.data());
  int32_t i = 0;
  UChar32 c = 0;
  U8_NEXT(bytes, i, static_cast<int32_t>(text.size()), c);
  return c >= 0 && (u_isupper(c) || u_istitle(c));
}

bool is_acronym(std::string_view text) {
  return text.size() >= 2 && std::all_of(text.begin(), text.end(), [](char c) {
           return c >= 'A' && c <= 'Z';
         });
}

std::optional<int> parse_int(std::string_view w) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), value);
  if (ec != std::errc() || ptr != w.data() + w.size()) return std::nullopt;
  return value;
}

bool is_year(std::string_view w) {
  if (w.size() != 4) return false;
  const auto v = parse_int(w);
  return v && *v >= 1000 && *v <= 2099;
}

bool is_day(std::string_view w) {
  std::string_view digits = w;
  for (std::string_view suffix : {"st", "nd", "rd", "th"}) {
    if (w.size() > 2 && w.ends_with(suffix)) {
      digits = w.substr(0, w.size() - 2);
      break;
    }
  }
  if (digits.empty() || digits.size() > 2) return false;
  const auto v = parse_int(digits);
  return v && *v >= 1 && *v <= 31;
}

class Chunker {
 public:
  Chunker(std::string_view sentence, std::span<const Token> tokens)
      : sentence_(sentence), tokens_(tokens) {
    lower_.reserve(tokens.size());
    for (const auto& t : tokens) lower_.push_back(to_lower(t.text));
    first_word_ = 0;
    while (first_word_ < tokens.size() && !is_wordlike(first_word_)) {
      ++first_word_;
    }
  }

  std::vector<AnswerSpan> run(std::size_t max_spans) {
    std::vector<AnswerSpan> spans;
    std::size_t i = 0;
    while (i < tokens_.size() && spans.size() < max_spans) {
      std::optional<Match> m = match_date(i);
      if (!m) m = match_duration(i);
      if (!m) m = match_number(i);
      if (!m) m = match_capitalized(i);
      if (!m) m = match_phrase(i);
      if (!m) {
        ++i;
        continue;
      }
      const std::size_t from = tokens_[m->begin].begin;
      const std::size_t to = tokens_[m->end - 1].end;
      spans.push_back({std::string(sentence_.substr(from, to - from)),
                       m->begin, m->end, m->type});
      i = m->end;
    }
    return spans;
  }

 private:
  std::size_t size() const { return tokens_.size(); }
  bool upper(std::size_t i) const { return starts_upper(tokens_[i].text); }
  bool is_wordlike(std::size_t i) const {
    return lx::is_alpha_word(tokens_[i].text) || lx::is_numeral(tokens_[i].text);
  }
  bool adjacent(std::size_t a, std::size_t b) const {
    return tokens_[a].end == tokens_[b].begin;
  }
  bool is_number(std::size_t i) const {
    return lx::is_numeral(lower_[i]) || lx::is_number_word(lower_[i]);
  }

  std::optional<Match> match_date(std::size_t i) const {
    const std::string& w = lower_[i];
    if (upper(i) && lx::is_month(w)) {
      std::size_t j = i + 1;
      if (j < size() && is_day(lower_[j])) ++j;
      if (j + 1 < size() && lower_[j] == "," && is_year(lower_[j + 1])) {
        j += 2;
      } else if (j < size() && is_year(lower_[j])) {
        ++j;
      }
      // A lone month name at the sentence start is too ambiguous ("May").
      if (j > i + 1 || i != first_word_) return Match{i, j, AnswerType::kDate};
      return std::nullopt;
    }
    if (is_day(w) && i + 1 < size() && upper(i + 1) &&
        lx::is_month(lower_[i + 1])) {
      std::size_t j = i + 2;
      if (j < size() && is_year(lower_[j])) ++j;
      return Match{i, j, AnswerType::kDate};
    }
    if (upper(i) && lx::is_weekday(w)) return Match{i, i + 1, AnswerType::kDate};
    if (is_year(w)) return Match{i, i + 1, AnswerType::kDate};
    return std::nullopt;
  }

  std::size_t skip_multipliers(std::size_t j) const {
    while (j < size() && lx::is_number_multiplier(lower_[j])) ++j;
    return j;
  }

  std::optional<Match> match_duration(std::size_t i) const {
    if (!is_number(i)) return std::nullopt;
    const std::size_t j = skip_multipliers(i + 1);
    if (j < size() && lx::is_time_unit(lower_[j])) {
      return Match{i, j + 1, AnswerType::kDuration};
    }
    return std::nullopt;
  }

  bool is_unit_noun(std::size_t j) const {
    const std::string& w = lower_[j];
    if (upper(j) || w.size() < 3 || !lx::is_alpha_word(w)) return false;
    if (lx::is_closed_class(w) || lx::is_number_word(w) ||
        lx::is_irregular_verb_form(w)) {
      return false;
    }
    return !w.ends_with("ed") && !w.ends_with("ing") && !w.ends_with("ly");
  }

  std::optional<Match> match_number(std::size_t i) const {
    std::size_t j = i;
    if (lx::is_currency(lower_[i]) && i + 1 < size() &&
        lx::is_numeral(lower_[i + 1])) {
      j = i + 2;
    } else if (is_number(i)) {
      j = i + 1;
    } else {
      return std::nullopt;
    }
    j = skip_multipliers(j);
    if (j < size() && (lx::is_currency(lower_[j]) || is_unit_noun(j))) ++j;
    return Match{i, j, AnswerType::kNumber};
  }

  std::optional<Match> match_capitalized(std::size_t i) const {
    if (!upper(i) || !is_wordlike(i)) return std::nullopt;
    std::size_t j = i + 1;
    while (j < size()) {
      if (upper(j) && is_wordlike(j)) {
        ++j;
      } else if (lower_[j] == "." && lx::is_honorific(lower_[j - 1]) &&
                 j + 1 < size() && upper(j + 1)) {
        ++j;  // "Mr. Smith"
      } else if ((lower_[j] == "of" || lower_[j] == "de" ||
                  lower_[j] == "van" || lower_[j] == "von" ||
                  lower_[j] == "&") &&
                 j + 1 < size() && upper(j + 1)) {
        ++j;
      } else {
        break;
      }
    }

    std::size_t begin = i;
    if (i == first_word_) {
      while (begin < j && lx::is_closed_class(lower_[begin])) ++begin;
    }
    if (begin < j && j - begin == 1 && lx::is_closed_class(lower_[begin])) {
      return std::nullopt;  // "I", stray "The"
    }
    bool person = false;
    while (begin + 1 < j && lx::is_role_title(lower_[begin])) {
      ++begin;
      person = true;
    }
    if (begin >= j || (j - begin == 1 && lx::is_role_title(lower_[begin]))) {
      return std::nullopt;
    }
    if (lx::is_honorific(lower_[begin])) person = true;

    AnswerType type = AnswerType::kEntity;
    const bool has_org = std::any_of(
        lower_.begin() + begin, lower_.begin() + j,
        [](const std::string& w) { return lx::is_org_keyword(w); });
    const bool has_place = std::any_of(
        lower_.begin() + begin, lower_.begin() + j,
        [](const std::string& w) { return lx::is_location_keyword(w); });
    if (j - begin == 1 && is_acronym(tokens_[begin].text)) {
      type = AnswerType::kEntity;
    } else if (person) {
      type = AnswerType::kPerson;
    } else if (has_org) {
      type = AnswerType::kEntity;
    } else if (has_place ||
               (begin > 0 && lx::is_location_preposition(lower_[begin - 1]))) {
      type = AnswerType::kLocation;
    } else if (j - begin <= 3) {
      type = AnswerType::kPerson;
    }
    return Match{begin, j, type};
  }

  std::optional<Match> match_phrase(std::size_t i) const {
    if (!lx::is_determiner(lower_[i])) return std::nullopt;
    std::size_t j = i + 1;
    std::size_t words = 0;
    while (j < size() && words < 6) {
      const std::string& w = lower_[j];
      if (w == "-" && words > 0 && j + 1 < size() && adjacent(j - 1, j) &&
          adjacent(j, j + 1) && is_wordlike(j + 1)) {
        ++j;
        continue;
      }
      if (!is_wordlike(j) || lx::is_closed_class(w) ||
          lx::is_irregular_verb_form(w) || w.ends_with("ly")) {
        break;
      }
      if (words > 0 && (w.ends_with("ed") || w.ends_with("ing"))) break;
      ++words;
      ++j;
    }
    if (words == 0) return std::nullopt;
    return Match{i, j, AnswerType::kPhrase};
  }

  std::string_view sentence_;
  std::span<const Token> tokens_;
  std::vector<std::string> lower_;
  std::size_t first_word_ = 0;
};

}  // namespace

std::string_view answer_type_name(AnswerType type) {
  switch (type) {
    case AnswerType::kPerson: return "person";
    case AnswerType::kDate: return "date";
    case AnswerType::kDuration: return "duration";
    case AnswerType::kNumber: return "number";
    case AnswerType::kLocation: return "location";
    case AnswerType::kEntity: return "entity";
    case AnswerType::kPhrase: return "phrase";
  }
  return "phrase";
}

std::vector<AnswerSpan> extract_answer_spans(std::string_view sentence,
                                             std::span<const Token> tokens,
                                             std::size_t max_spans) {
  if (max_spans == 0) {
    throw Error(ErrorCode::kInvalidArgument, "max_spans must be >= 1");
  }
  return Chunker(sentence, tokens).run(max_spans);
}

std::vector<AnswerSpan> extract_answer_spans(const Sentence& sentence,
                                             std::size_t max_spans) {
  const std::vector<Token> tokens = tokenize_with_offsets(sentence.text);
  return extract_answer_spans(sentence.text, tokens, max_spans);
}

}  // namespace faithcheck
