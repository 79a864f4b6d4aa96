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

#include "faithcheck/overlap.h"

#include <algorithm>
#include <cmath>

#include "faithcheck/error.h"

namespace faithcheck {
namespace {

constexpr std::string_view kExternalPrefix = "external:";

std::size_t clipped_overlap(const NGramBag& candidate,
                            const NGramBag& reference) {
  std::size_t overlap = 0;
  for (const auto& [gram, count] : candidate.counts()) {
    overlap += std::min(count, reference.count(gram));
  }
  return overlap;
}

double ratio(std::size_t numerator, std::size_t denominator) {
  return denominator == 0
             ? 0.0
             : static_cast<double>(numerator) / static_cast<double>(denominator);
}

double pair_score(const TokenSeq& summary, const TokenSeq& source,
                  MetricKind metric) {
  switch (metric) {
    case MetricKind::kRouge1: return rouge_n(summary, source, 1).f1;
    case MetricKind::kRouge2: return rouge_n(summary, source, 2).f1;
    case MetricKind::kRougeL: return rouge_l(summary, source).f1;
    case MetricKind::kBleu4: return bleu(summary, source, 4);
    default:
      throw Error(ErrorCode::kInvalidArgument,
                  "not a word-overlap metric: " + MetricName{metric, {}}.str());
  }
}

}  // namespace

Prf make_prf(double precision, double recall) {
  Prf out{precision, recall, 0.0};
  if (precision + recall > 0.0) {
    out.f1 = 2.0 * precision * recall / (precision + recall);
  }
  return out;
}

std::string MetricName::str() const {
  switch (kind) {
    case MetricKind::kRouge1: return "rouge1";
    case MetricKind::kRouge2: return "rouge2";
    case MetricKind::kRougeL: return "rougeL";
    case MetricKind::kBleu4: return "bleu4";
    case MetricKind::kFeqa: return "feqa";
    case MetricKind::kExternal:
      return std::string(kExternalPrefix) + external;
  }
  return {};
}

MetricName MetricName::parse(std::string_view text) {
  if (text == "rouge1") return {MetricKind::kRouge1, {}};
  if (text == "rouge2") return {MetricKind::kRouge2, {}};
  if (text == "rougeL") return {MetricKind::kRougeL, {}};
  if (text == "bleu4") return {MetricKind::kBleu4, {}};
  if (text == "feqa") return {MetricKind::kFeqa, {}};
  if (text.starts_with(kExternalPrefix) &&
      text.size() > kExternalPrefix.size()) {
    return {MetricKind::kExternal,
            std::string(text.substr(kExternalPrefix.size()))};
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown metric '" + std::string(text) + "'");
}

std::string_view aggregation_name(Aggregation aggregation) {
  switch (aggregation) {
    case Aggregation::kAvg: return "avg";
    case Aggregation::kMax: return "max";
    case Aggregation::kNone: return "none";
  }
  return "none";
}

Aggregation parse_aggregation(std::string_view text) {
  if (text == "avg") return Aggregation::kAvg;
  if (text == "max") return Aggregation::kMax;
  if (text == "none") return Aggregation::kNone;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown aggregation '" + std::string(text) + "'");
}

Prf rouge_n(const TokenSeq& candidate, const TokenSeq& reference, int n) {
  const NGramBag cand = ngrams(candidate, n);
  const NGramBag ref = ngrams(reference, n);
  const std::size_t overlap = clipped_overlap(cand, ref);
  return make_prf(ratio(overlap, cand.total()), ratio(overlap, ref.total()));
}

std::size_t lcs_length(std::span<const std::string> a,
                       std::span<const std::string> b) {
  if (a.empty() || b.empty()) return 0;
  // Two rolling rows over b.
  std::vector<std::size_t> previous(b.size() + 1, 0);
  std::vector<std::size_t> current(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      current[j] = a[i - 1] == b[j - 1]
                       ? previous[j - 1] + 1
                       : std::max(previous[j], current[j - 1]);
    }
    std::swap(previous, current);
  }
  return previous[b.size()];
}

Prf rouge_l(const TokenSeq& candidate, const TokenSeq& reference) {
  const std::size_t lcs = lcs_length(candidate.view(), reference.view());
  return make_prf(ratio(lcs, candidate.size()), ratio(lcs, reference.size()));
}

double bleu(const TokenSeq& candidate, const TokenSeq& reference,
            int max_order) {
  if (max_order < 1) {
    throw Error(ErrorCode::kInvalidArgument, "BLEU max_order must be >= 1");
  }
  if (candidate.empty()) return 0.0;

  double log_precision = 0.0;
  for (int n = 1; n <= max_order; ++n) {
    const NGramBag cand = ngrams(candidate, n);
    const NGramBag ref = ngrams(reference, n);
    const std::size_t matches = clipped_overlap(cand, ref);
    const double numerator =
        matches > 0 ? static_cast<double>(matches) : kBleuEpsilon;
    const double denominator =
        static_cast<double>(std::max<std::size_t>(cand.total(), 1));
    log_precision += std::log(numerator / denominator);
  }
  double brevity = 1.0;
  if (candidate.size() < reference.size()) {
    brevity = std::exp(1.0 - static_cast<double>(reference.size()) /
                                 static_cast<double>(candidate.size()));
  }
  return brevity * std::exp(log_precision / max_order);
}

MetricScore score_vs_source(const TokenSeq& summary,
                            std::span<const TokenSeq> sources,
                            MetricKind metric, Aggregation aggregation) {
  if (sources.empty()) {
    throw Error(ErrorCode::kEmptySources, "no source sentences to score against");
  }
  if (aggregation == Aggregation::kNone) {
    throw Error(ErrorCode::kInvalidArgument,
                "source-based scores need avg or max aggregation");
  }
  double sum = 0.0;
  double best = 0.0;
  for (const auto& source : sources) {
    const double value = pair_score(summary, source, metric);
    sum += value;
    best = std::max(best, value);
  }
  const double value = aggregation == Aggregation::kMax
                           ? best
                           : sum / static_cast<double>(sources.size());
  return {MetricName{metric, {}}, value, aggregation};
}

std::vector<MetricScore> score_vs_reference(
    const TokenSeq& output, const std::optional<TokenSeq>& reference) {
  if (!reference) {
    throw Error(ErrorCode::kMissingReference, "record has no reference");
  }
  return {
      {{MetricKind::kRouge1, {}}, rouge_n(output, *reference, 1).f1,
       Aggregation::kNone},
      {{MetricKind::kRouge2, {}}, rouge_n(output, *reference, 2).f1,
       Aggregation::kNone},
      {{MetricKind::kRougeL, {}}, rouge_l(output, *reference).f1,
       Aggregation::kNone},
  };
}

}  // namespace faithcheck
