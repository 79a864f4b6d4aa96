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

#ifndef FAITHCHECK_ABSTRACTIVENESS_H_
#define FAITHCHECK_ABSTRACTIVENESS_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "faithcheck/corpus.h"
#include "faithcheck/text.h"

namespace faithcheck {

// Copy types, ordered by increasing abstractiveness.
enum class CopyType {
  kSentenceExtraction,
  kSpanExtraction,
  kWordExtraction,
  kPerfectFusion,
  kOther,
};

std::string_view copy_type_name(CopyType type);

// Contiguous token span [begin, end) of source sentence `source`.
struct Fragment {
  std::size_t source = 0;
  std::size_t begin = 0;
  std::size_t end = 0;

  friend bool operator==(const Fragment&, const Fragment&) = default;
};

struct AbstractivenessLabel {
  CopyType kind = CopyType::kOther;
  // Number of fused fragments; set iff kind == kPerfectFusion.
  std::optional<int> k;
  // Source spans the summary was copied from; `source` is Sentence::index.
  std::vector<Fragment> evidence;
};

struct FusionResult {
  int k = 0;
  // One entry per summary fragment, in summary order. `source` indexes the
  // `sources` span passed to detect_perfect_fusion.
  std::vector<Fragment> fragments;
};

// Minimal k in [2, k_max] such that `summary` splits into k contiguous
// fragments, each a contiguous span of some source, drawing on at least two
// distinct sources. Adjacent fragments taken from the same source must move
// forward in it (next.begin >= previous.end). Throws kInvalidArgument when
// k_max < 2.
std::optional<FusionResult> detect_perfect_fusion(
    const TokenSeq& summary, std::span<const TokenSeq> sources, int k_max);

// Returns the first matching type in precedence order sentence > span >
// word extraction > perfect fusion (minimal k) > other.
// Throws kEmptySummarySentence for a summary without tokens, kEmptySources
// for an empty source list and kInvalidArgument for k_max < 2.
AbstractivenessLabel classify_sentence(std::string_view summary,
                                       std::span<const Sentence> sources,
                                       int k_max = 4);
AbstractivenessLabel classify_sentence(const TokenSeq& summary,
                                       std::span<const TokenSeq> sources,
                                       int k_max = 4);

// Fraction of summary n-gram positions whose n-gram never occurs in the
// document. nullopt when the summary has no n-grams of that order.
std::optional<double> novel_ngram_rate(const TokenSeq& summary,
                                       const TokenSeq& document, int n);

struct AbstractivenessReport {
  std::size_t sentence_count = 0;
  std::map<CopyType, std::size_t> counts;
  std::map<CopyType, double> fractions;
  double fusion_k2 = 0.0;
  double fusion_k_ge2 = 0.0;
  // Pooled over every summary n-gram in the corpus; nullopt if none exist.
  std::map<int, std::optional<double>> novel_ngram_rates;
};

struct ProfileOptions {
  int k_max = 4;
  std::vector<int> ngram_orders = {1, 2, 3};
  std::size_t concurrency = 1;
};

// Throws kEmptyCorpus for an empty record list.
AbstractivenessReport corpus_profile(std::span<const Record> records,
                                     const ProfileOptions& options = {});

}  // namespace faithcheck

#endif  // FAITHCHECK_ABSTRACTIVENESS_H_
