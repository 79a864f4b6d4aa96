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

#ifndef FAITHCHECK_TEXT_H_
#define FAITHCHECK_TEXT_H_

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace faithcheck {

// A sentence of a document. `offset` is the byte offset of `text` in the
// parent document; `text` is a trimmed, verbatim slice of it.
struct Sentence {
  std::string text;
  std::size_t index = 0;
  std::size_t offset = 0;

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

// A token with its original casing and byte range in the source text.
struct Token {
  std::string text;
  std::size_t begin = 0;
  std::size_t end = 0;
};

// Ordered lowercase tokens. Never holds an empty token.
class TokenSeq {
 public:
  TokenSeq() = default;
  // Throws Error(kInvalidArgument) if any token is empty.
  explicit TokenSeq(std::vector<std::string> tokens);

  const std::vector<std::string>& tokens() const { return tokens_; }
  std::span<const std::string> view() const { return tokens_; }
  std::size_t size() const { return tokens_.size(); }
  bool empty() const { return tokens_.empty(); }
  const std::string& operator[](std::size_t i) const { return tokens_[i]; }
  auto begin() const { return tokens_.begin(); }
  auto end() const { return tokens_.end(); }

  friend bool operator==(const TokenSeq&, const TokenSeq&) = default;

 private:
  std::vector<std::string> tokens_;
};

using NGram = std::vector<std::string>;

// Multiset of n-grams of a fixed order.
class NGramBag {
 public:
  explicit NGramBag(int n) : n_(n) {}

  int order() const { return n_; }
  const std::map<NGram, std::size_t>& counts() const { return counts_; }
  std::size_t count(const NGram& gram) const;
  bool contains(const NGram& gram) const { return counts_.contains(gram); }
  // Sum of all counts.
  std::size_t total() const { return total_; }
  std::size_t distinct() const { return counts_.size(); }
  bool empty() const { return total_ == 0; }

  void add(NGram gram);

 private:
  int n_;
  std::size_t total_ = 0;
  std::map<NGram, std::size_t> counts_;
};

// Canonical composition (NFC). Invalid UTF-8 is returned unchanged.
std::string to_nfc(std::string_view text);

// Unicode lowercase of a UTF-8 string.
std::string to_lower(std::string_view text);

// Splits on {., ?, !} followed by whitespace and an uppercase letter (or an
// opening quote/bracket then an uppercase letter). Trailing closing quotes and
// brackets stay with the sentence. Known abbreviations never terminate.
std::vector<Sentence> split_sentences(std::string_view text);

// Case-preserving tokenization with byte offsets. Punctuation and symbols are
// standalone tokens except commas/periods between two digits, which stay
// inside the number ("60,000", "3.5").
std::vector<Token> tokenize_with_offsets(std::string_view text);

// Lowercased tokens of `text`.
TokenSeq tokenize(std::string_view text);

// SQuAD answer normalization: lowercase, drop punctuation, drop the articles
// a/an/the, split on whitespace.
TokenSeq normalize_answer(std::string_view text);

// Throws Error(kInvalidArgument) when n < 1.
NGramBag ngrams(std::span<const std::string> tokens, int n);
inline NGramBag ngrams(const TokenSeq& tokens, int n) {
  return ngrams(tokens.view(), n);
}

std::string join(std::span<const std::string> tokens,
                 std::string_view separator = " ");
inline std::string join(const TokenSeq& tokens,
                        std::string_view separator = " ") {
  return join(tokens.view(), separator);
}

// Strips ASCII and Unicode whitespace from both ends.
std::string_view trim(std::string_view text);

}  // namespace faithcheck

#endif  // FAITHCHECK_TEXT_H_
