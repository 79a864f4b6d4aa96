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

#include "faithcheck/abstractiveness.h"

#include <algorithm>
#include <compare>
#include <map>
#include <string>

#include "faithcheck/error.h"
#include "parallel.h"

namespace faithcheck {
namespace {

bool is_contiguous_in(const TokenSeq& needle, const TokenSeq& haystack,
                      std::size_t* at) {
  if (needle.size() > haystack.size()) return false;
  auto it = std::search(haystack.begin(), haystack.end(), needle.begin(),
                        needle.end());
  if (it == haystack.end()) return false;
  *at = static_cast<std::size_t>(it - haystack.begin());
  return true;
}

// Greedy leftmost subsequence match; on success fills the matched runs.
bool is_subsequence_of(const TokenSeq& needle, const TokenSeq& haystack,
                       std::size_t source, std::vector<Fragment>* runs) {
  std::vector<Fragment> out;
  std::size_t h = 0;
  for (std::size_t n = 0; n < needle.size(); ++n) {
    while (h < haystack.size() && haystack[h] != needle[n]) ++h;
    if (h == haystack.size()) return false;
    if (!out.empty() && out.back().end == h) {
      out.back().end = h + 1;
    } else {
      out.push_back({source, h, h + 1});
    }
    ++h;
  }
  *runs = std::move(out);
  return true;
}

// DP state: summary position reached, source of the last fragment, end of the
// last fragment in that source, and whether two distinct sources were used.
// Two paths reaching the same state have identical futures, so the first
// (fewest fragments) one wins.
struct FusionState {
  std::size_t pos;
  std::size_t source;
  std::size_t end;
  bool multi;

  auto operator<=>(const FusionState&) const = default;
};

struct FusionParent {
  std::optional<FusionState> previous;
  Fragment fragment;
};

struct NovelCount {
  std::size_t novel = 0;
  std::size_t total = 0;
};

NovelCount count_novel(const TokenSeq& summary, const NGramBag& document) {
  NovelCount out;
  const auto order = static_cast<std::size_t>(document.order());
  for (std::size_t i = 0; i + order <= summary.size(); ++i) {
    NGram gram(summary.begin() + i, summary.begin() + i + order);
    if (!document.contains(gram)) ++out.novel;
    ++out.total;
  }
  return out;
}

}  // namespace

std::string_view copy_type_name(CopyType type) {
  switch (type) {
    case CopyType::kSentenceExtraction: return "sentence_extraction";
    case CopyType::kSpanExtraction: return "span_extraction";
    case CopyType::kWordExtraction: return "word_extraction";
    case CopyType::kPerfectFusion: return "perfect_fusion";
    case CopyType::kOther: return "other";
  }
  return "other";
}

std::optional<FusionResult> detect_perfect_fusion(
    const TokenSeq& summary, std::span<const TokenSeq> sources, int k_max) {
  if (k_max < 2) {
    throw Error(ErrorCode::kInvalidArgument, "k_max must be >= 2");
  }
  const std::size_t length = summary.size();
  if (length < 2 || sources.size() < 2) return std::nullopt;

  // run[s][p * stride + q]: length of the common run starting at source s
  // position p and summary position q.
  const std::size_t stride = length + 1;
  std::vector<std::vector<std::size_t>> run(sources.size());
  for (std::size_t s = 0; s < sources.size(); ++s) {
    const TokenSeq& src = sources[s];
    auto& table = run[s];
    table.assign((src.size() + 1) * stride, 0);
    for (std::size_t p = src.size(); p-- > 0;) {
      for (std::size_t q = length; q-- > 0;) {
        if (src[p] == summary[q]) {
          table[p * stride + q] = 1 + table[(p + 1) * stride + q + 1];
        }
      }
    }
  }
  auto run_at = [&](std::size_t s, std::size_t p, std::size_t q) {
    return run[s][p * stride + q];
  };

  std::map<FusionState, FusionParent> visited;
  std::vector<FusionState> layer;
  auto push = [&](const FusionState& state, const FusionParent& parent,
                  std::vector<FusionState>* into) {
    if (visited.emplace(state, parent).second) into->push_back(state);
  };

  for (std::size_t s = 0; s < sources.size(); ++s) {
    for (std::size_t p = 0; p < sources[s].size(); ++p) {
      for (std::size_t len = 1; len <= run_at(s, p, 0); ++len) {
        push({len, s, p + len, false}, {std::nullopt, {s, p, p + len}},
             &layer);
      }
    }
  }

  for (int k = 1; k <= k_max && !layer.empty(); ++k) {
    std::sort(layer.begin(), layer.end());
    for (const auto& state : layer) {
      if (state.pos != length || !state.multi) continue;
      FusionResult result{k, {}};
      std::optional<FusionState> cursor = state;
      while (cursor) {
        const auto& parent = visited.at(*cursor);
        result.fragments.push_back(parent.fragment);
        cursor = parent.previous;
      }
      std::reverse(result.fragments.begin(), result.fragments.end());
      return result;
    }
    if (k == k_max) break;

    std::vector<FusionState> next;
    for (const auto& state : layer) {
      if (state.pos == length) continue;
      for (std::size_t s = 0; s < sources.size(); ++s) {
        const std::size_t first = s == state.source ? state.end : 0;
        for (std::size_t p = first; p < sources[s].size(); ++p) {
          const std::size_t longest = run_at(s, p, state.pos);
          for (std::size_t len = 1; len <= longest; ++len) {
            push({state.pos + len, s, p + len,
                  state.multi || s != state.source},
                 {state, {s, p, p + len}}, &next);
          }
        }
      }
    }
    layer = std::move(next);
  }
  return std::nullopt;
}

AbstractivenessLabel classify_sentence(const TokenSeq& summary,
                                       std::span<const TokenSeq> sources,
                                       int k_max) {
  if (summary.empty()) {
    throw Error(ErrorCode::kEmptySummarySentence,
                "summary sentence has no tokens");
  }
  if (sources.empty()) {
    throw Error(ErrorCode::kEmptySources, "no source sentences");
  }
  if (k_max < 2) {
    throw Error(ErrorCode::kInvalidArgument, "k_max must be >= 2");
  }

  for (std::size_t s = 0; s < sources.size(); ++s) {
    if (summary == sources[s]) {
      return {CopyType::kSentenceExtraction, std::nullopt,
              {{s, 0, sources[s].size()}}};
    }
  }
  for (std::size_t s = 0; s < sources.size(); ++s) {
    std::size_t at = 0;
    if (is_contiguous_in(summary, sources[s], &at)) {
      return {CopyType::kSpanExtraction, std::nullopt,
              {{s, at, at + summary.size()}}};
    }
  }
  for (std::size_t s = 0; s < sources.size(); ++s) {
    std::vector<Fragment> runs;
    if (is_subsequence_of(summary, sources[s], s, &runs)) {
      return {CopyType::kWordExtraction, std::nullopt, std::move(runs)};
    }
  }
  if (auto fusion = detect_perfect_fusion(summary, sources, k_max)) {
    return {CopyType::kPerfectFusion, fusion->k, std::move(fusion->fragments)};
  }
  return {CopyType::kOther, std::nullopt, {}};
}

AbstractivenessLabel classify_sentence(std::string_view summary,
                                       std::span<const Sentence> sources,
                                       int k_max) {
  std::vector<TokenSeq> tokenized;
  tokenized.reserve(sources.size());
  for (const auto& sentence : sources) {
    tokenized.push_back(tokenize(sentence.text));
  }
  AbstractivenessLabel label =
      classify_sentence(tokenize(summary), tokenized, k_max);
  for (auto& fragment : label.evidence) {
    fragment.source = sources[fragment.source].index;
  }
  return label;
}

std::optional<double> novel_ngram_rate(const TokenSeq& summary,
                                       const TokenSeq& document, int n) {
  const NGramBag bag = ngrams(document, n);
  const NovelCount count = count_novel(summary, bag);
  if (count.total == 0) return std::nullopt;
  return static_cast<double>(count.novel) / static_cast<double>(count.total);
}

AbstractivenessReport corpus_profile(std::span<const Record> records,
                                     const ProfileOptions& options) {
  if (records.empty()) {
    throw Error(ErrorCode::kEmptyCorpus, "corpus has no records");
  }
  if (options.k_max < 2) {
    throw Error(ErrorCode::kInvalidArgument, "k_max must be >= 2");
  }
  for (int n : options.ngram_orders) {
    if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n-gram order < 1");
  }

  struct RecordResult {
    std::vector<AbstractivenessLabel> labels;
    std::vector<NovelCount> novel;  // parallel to options.ngram_orders
  };
  std::vector<RecordResult> results(records.size());

  internal::parallel_for(
      records.size(), options.concurrency, [&](std::size_t r) {
        const Record& record = records[r];
        std::vector<TokenSeq> sources;
        for (const auto& s : split_sentences(record.document)) {
          sources.push_back(tokenize(s.text));
        }
        const TokenSeq document = tokenize(record.document);
        std::vector<NGramBag> bags;
        for (int n : options.ngram_orders) bags.push_back(ngrams(document, n));

        RecordResult& out = results[r];
        out.novel.resize(bags.size());
        for (const auto& text : record.summary_sentences) {
          const TokenSeq summary = tokenize(text);
          out.labels.push_back(
              classify_sentence(summary, sources, options.k_max));
          for (std::size_t b = 0; b < bags.size(); ++b) {
            const NovelCount c = count_novel(summary, bags[b]);
            out.novel[b].novel += c.novel;
            out.novel[b].total += c.total;
          }
        }
      });

  AbstractivenessReport report;
  for (auto type : {CopyType::kSentenceExtraction, CopyType::kSpanExtraction,
                    CopyType::kWordExtraction, CopyType::kPerfectFusion,
                    CopyType::kOther}) {
    report.counts[type] = 0;
  }
  std::size_t fusion_k2 = 0;
  std::vector<NovelCount> novel(options.ngram_orders.size());
  for (const auto& result : results) {
    for (const auto& label : result.labels) {
      ++report.counts[label.kind];
      ++report.sentence_count;
      if (label.kind == CopyType::kPerfectFusion && label.k == 2) ++fusion_k2;
    }
    for (std::size_t b = 0; b < novel.size(); ++b) {
      novel[b].novel += result.novel[b].novel;
      novel[b].total += result.novel[b].total;
    }
  }
  const auto total = static_cast<double>(report.sentence_count);
  auto fraction = [total](std::size_t count) {
    return total > 0 ? static_cast<double>(count) / total : 0.0;
  };
  for (const auto& [type, count] : report.counts) {
    report.fractions[type] = fraction(count);
  }
  report.fusion_k2 = fraction(fusion_k2);
  report.fusion_k_ge2 = report.fractions[CopyType::kPerfectFusion];
  for (std::size_t b = 0; b < novel.size(); ++b) {
    std::optional<double> rate;
    if (novel[b].total > 0) {
      rate = static_cast<double>(novel[b].novel) /
             static_cast<double>(novel[b].total);
    }
    report.novel_ngram_rates[options.ngram_orders[b]] = rate;
  }
  return report;
}

}  // namespace faithcheck
