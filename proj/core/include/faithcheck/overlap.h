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

#ifndef FAITHCHECK_OVERLAP_H_
#define FAITHCHECK_OVERLAP_H_

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "faithcheck/text.h"

namespace faithcheck {

// Zero-count precisions in sentence-level BLEU are floored to this value.
inline constexpr double kBleuEpsilon = 1e-9;

struct Prf {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Harmonic mean; 0 when precision + recall == 0.
Prf make_prf(double precision, double recall);

enum class MetricKind { kRouge1, kRouge2, kRougeL, kBleu4, kFeqa, kExternal };

// A metric identity. `external` holds the score name for kExternal.
struct MetricName {
  MetricKind kind = MetricKind::kRouge1;
  std::string external;

  // "rouge1", "rouge2", "rougeL", "bleu4", "feqa" or "external:<name>".
  std::string str() const;
  // Inverse of str(); throws Error(kInvalidArgument) on unknown names.
  static MetricName parse(std::string_view text);

  friend auto operator<=>(const MetricName&, const MetricName&) = default;
};

enum class Aggregation { kAvg, kMax, kNone };

std::string_view aggregation_name(Aggregation aggregation);
Aggregation parse_aggregation(std::string_view text);

struct MetricScore {
  MetricName metric;
  double value = 0.0;
  Aggregation aggregation = Aggregation::kNone;
};

// Clipped n-gram overlap. Throws kInvalidArgument for n < 1.
Prf rouge_n(const TokenSeq& candidate, const TokenSeq& reference, int n);

std::size_t lcs_length(std::span<const std::string> a,
                       std::span<const std::string> b);

Prf rouge_l(const TokenSeq& candidate, const TokenSeq& reference);

// Sentence-level BLEU: geometric mean of clipped n-gram precisions for
// n = 1..max_order (zero matches floored to kBleuEpsilon) times the brevity
// penalty. An empty candidate scores 0.
double bleu(const TokenSeq& candidate, const TokenSeq& reference,
            int max_order = 4);

// Scores the summary against each source sentence as the reference, then
// averages or takes the maximum. ROUGE contributes its F-measure.
// Throws kEmptySources when `sources` is empty and kInvalidArgument for a
// non-overlap metric or Aggregation::kNone.
MetricScore score_vs_source(const TokenSeq& summary,
                            std::span<const TokenSeq> sources,
                            MetricKind metric, Aggregation aggregation);

// ROUGE-1/2/L F-measures against the reference summary.
// Throws kMissingReference when `reference` is empty.
std::vector<MetricScore> score_vs_reference(
    const TokenSeq& output, const std::optional<TokenSeq>& reference);

}  // namespace faithcheck

#endif  // FAITHCHECK_OVERLAP_H_
