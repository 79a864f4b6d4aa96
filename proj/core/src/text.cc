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

#include "faithcheck/text.h"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <algorithm>
#include <array>
#include <cstdint>

#include "faithcheck/error.h"

namespace faithcheck {
namespace {

struct CodePoint {
  UChar32 value;
  std::size_t next;
};

CodePoint decode_at(std::string_view text, std::size_t pos) {
  const auto* bytes = reinterpret_cast<const uint8_t*>(text.data());
  const auto length = static_cast<int32_t>(text.size());
  auto i = static_cast<int32_t>(pos);
  UChar32 c = 0;
  U8_NEXT(bytes, i, length, c);
  return {c, static_cast<std::size_t>(i)};
}

bool is_space(UChar32 c) {
  return c >= 0 && (u_isUWhiteSpace(c) || u_iscntrl(c));
}

bool is_punct_or_symbol(UChar32 c) {
  if (c < 0) return true;  // stray byte of invalid UTF-8
  if (u_ispunct(c)) return true;
  switch (u_charType(c)) {
    case U_MATH_SYMBOL:
    case U_CURRENCY_SYMBOL:
    case U_MODIFIER_SYMBOL:
    case U_OTHER_SYMBOL:
      return true;
    default:
      return false;
  }
}

bool is_digit(UChar32 c) { return c >= 0 && u_isdigit(c); }

bool is_terminator(char c) { return c == '.' || c == '?' || c == '!'; }

constexpr std::array<UChar32, 9> kClosers = {
    '"', '\'', ')', ']', '}', 0x201D, 0x2019, 0x00BB, 0x203A};
constexpr std::array<UChar32, 8> kOpeners = {
    '"', '\'', '(', '[', 0x201C, 0x2018, 0x00AB, 0x2039};

bool contains(std::span<const UChar32> set, UChar32 c) {
  return std::find(set.begin(), set.end(), c) != set.end();
}

constexpr std::array<std::string_view, 11> kAbbreviations = {
    "mr.", "mrs.", "ms.", "dr.", "st.", "vs.",
    "etc.", "e.g.", "i.e.", "u.s.", "u.k."};

// `dot` is the position of a '.' that may end a sentence.
bool ends_with_abbreviation(std::string_view text, std::size_t dot) {
  std::size_t begin = dot;
  while (begin > 0) {
    const char prev = text[begin - 1];
    if (prev == ' ' || prev == '\t' || prev == '\n' || prev == '\r') break;
    --begin;
  }
  while (begin < dot && (text[begin] == '(' || text[begin] == '"' ||
                         text[begin] == '\'' || text[begin] == '[')) {
    ++begin;
  }
  const std::string word = to_lower(text.substr(begin, dot - begin + 1));
  return std::find(kAbbreviations.begin(), kAbbreviations.end(), word) !=
         kAbbreviations.end();
}

}  // namespace

TokenSeq::TokenSeq(std::vector<std::string> tokens)
    : tokens_(std::move(tokens)) {
  for (const auto& t : tokens_) {
    if (t.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "TokenSeq: empty token");
    }
  }
}

std::size_t NGramBag::count(const NGram& gram) const {
  auto it = counts_.find(gram);
  return it == counts_.end() ? 0 : it->second;
}

void NGramBag::add(NGram gram) {
  ++counts_[std::move(gram)];
  ++total_;
}

std::string to_nfc(std::string_view text) {
  // Reject invalid UTF-8 up front; ICU would silently substitute U+FFFD.
  for (std::size_t pos = 0; pos < text.size();) {
    const auto cp = decode_at(text, pos);
    if (cp.value < 0) return std::string(text);
    pos = cp.next;
  }
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) return std::string(text);
  const auto source = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  if (nfc->isNormalized(source, status) && U_SUCCESS(status)) {
    return std::string(text);
  }
  status = U_ZERO_ERROR;
  const icu::UnicodeString normalized = nfc->normalize(source, status);
  if (U_FAILURE(status)) return std::string(text);
  std::string out;
  normalized.toUTF8String(out);
  return out;
}

std::string to_lower(std::string_view text) {
  const bool ascii = std::all_of(text.begin(), text.end(), [](char c) {
    return static_cast<unsigned char>(c) < 0x80;
  });
  if (ascii) {
    std::string out(text);
    for (char& c : out) {
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
  }
  auto s = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  s.toLower(icu::Locale::getRoot());
  std::string out;
  s.toUTF8String(out);
  return out;
}

std::string_view trim(std::string_view text) {
  std::size_t first = text.size();
  std::size_t last = 0;
  for (std::size_t pos = 0; pos < text.size();) {
    const auto cp = decode_at(text, pos);
    if (!is_space(cp.value)) {
      if (first == text.size()) first = pos;
      last = cp.next;
    }
    pos = cp.next;
  }
  if (first == text.size()) return {};
  return text.substr(first, last - first);
}

std::vector<Sentence> split_sentences(std::string_view text) {
  std::vector<Sentence> sentences;
  auto emit = [&](std::size_t begin, std::size_t end) {
    const std::string_view raw = text.substr(begin, end - begin);
    const std::string_view body = trim(raw);
    if (body.empty()) return;
    const auto offset = static_cast<std::size_t>(body.data() - text.data());
    sentences.push_back({std::string(body), sentences.size(), offset});
  };

  std::size_t start = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!is_terminator(text[i])) {
      ++i;
      continue;
    }
    const std::size_t terminator = i;
    std::size_t j = i + 1;
    while (j < text.size() && is_terminator(text[j])) ++j;
    const bool single_dot = text[terminator] == '.' && j == terminator + 1;
    while (j < text.size()) {
      const auto cp = decode_at(text, j);
      if (!contains(kClosers, cp.value)) break;
      j = cp.next;
    }
    if (j >= text.size()) break;
    // Require whitespace, then an uppercase letter (possibly behind an opener).
    std::size_t k = j;
    while (k < text.size()) {
      const auto cp = decode_at(text, k);
      if (!is_space(cp.value)) break;
      k = cp.next;
    }
    if (k == j || k >= text.size()) {
      i = j;
      continue;
    }
    auto next = decode_at(text, k);
    if (contains(kOpeners, next.value) && next.next < text.size()) {
      next = decode_at(text, next.next);
    }
    const bool upper = next.value >= 0 &&
                       (u_isupper(next.value) || u_istitle(next.value));
    if (!upper || (single_dot && ends_with_abbreviation(text, terminator))) {
      i = j;
      continue;
    }
    emit(start, j);
    start = k;
    i = k;
  }
  if (start < text.size()) emit(start, text.size());
  return sentences;
}

std::vector<Token> tokenize_with_offsets(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t word_begin = 0;
  bool in_word = false;
  UChar32 previous = -1;

  auto close_word = [&](std::size_t end) {
    if (in_word) {
      tokens.push_back(
          {std::string(text.substr(word_begin, end - word_begin)),
           word_begin, end});
      in_word = false;
    }
  };

  for (std::size_t pos = 0; pos < text.size();) {
    const auto cp = decode_at(text, pos);
    const UChar32 c = cp.value;
    if (is_space(c)) {
      close_word(pos);
    } else if (is_punct_or_symbol(c)) {
      const bool numeric_glue =
          (c == ',' || c == '.') && in_word && is_digit(previous) &&
          cp.next < text.size() && is_digit(decode_at(text, cp.next).value);
      if (!numeric_glue) {
        close_word(pos);
        tokens.push_back({std::string(text.substr(pos, cp.next - pos)), pos,
                          cp.next});
      }
    } else if (!in_word) {
      in_word = true;
      word_begin = pos;
    }
    previous = c;
    pos = cp.next;
  }
  close_word(text.size());
  return tokens;
}

TokenSeq tokenize(std::string_view text) {
  std::vector<std::string> out;
  for (auto& token : tokenize_with_offsets(text)) {
    out.push_back(to_lower(token.text));
  }
  return TokenSeq(std::move(out));
}

TokenSeq normalize_answer(std::string_view text) {
  std::string lowered = to_lower(text);
  std::string stripped;
  stripped.reserve(lowered.size());
  for (std::size_t pos = 0; pos < lowered.size();) {
    const auto cp = decode_at(lowered, pos);
    if (!is_punct_or_symbol(cp.value)) {
      stripped.append(lowered, pos, cp.next - pos);
    }
    pos = cp.next;
  }
  std::vector<std::string> words;
  std::size_t word_begin = 0;
  bool in_word = false;
  auto flush = [&](std::size_t end) {
    if (!in_word) return;
    std::string word = stripped.substr(word_begin, end - word_begin);
    if (word != "a" && word != "an" && word != "the") {
      words.push_back(std::move(word));
    }
    in_word = false;
  };
  for (std::size_t pos = 0; pos < stripped.size();) {
    const auto cp = decode_at(stripped, pos);
    if (is_space(cp.value)) {
      flush(pos);
    } else if (!in_word) {
      in_word = true;
      word_begin = pos;
    }
    pos = cp.next;
  }
  flush(stripped.size());
  return TokenSeq(std::move(words));
}

NGramBag ngrams(std::span<const std::string> tokens, int n) {
  if (n < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "ngrams: order must be >= 1, got " + std::to_string(n));
  }
  NGramBag bag(n);
  const auto order = static_cast<std::size_t>(n);
  for (std::size_t i = 0; i + order <= tokens.size(); ++i) {
    bag.add(NGram(tokens.begin() + i, tokens.begin() + i + order));
  }
  return bag;
}

std::string join(std::span<const std::string> tokens,
                 std::string_view separator) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out.append(separator);
    out.append(tokens[i]);
  }
  return out;
}

}  // namespace faithcheck
