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

#include "faithcheck/commands.h"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "faithcheck/error.h"
#include "faithcheck/feqa.h"
#include "faithcheck/text.h"
#include "parallel.h"

namespace faithcheck {
namespace {

constexpr std::string_view kReferencePrefix = "ref-";

bool is_overlap(MetricKind kind) {
  return kind == MetricKind::kRouge1 || kind == MetricKind::kRouge2 ||
         kind == MetricKind::kRougeL || kind == MetricKind::kBleu4;
}

std::vector<TokenSeq> source_tokens(std::string_view document) {
  std::vector<TokenSeq> sources;
  for (const auto& s : split_sentences(document)) {
    TokenSeq tokens = tokenize(s.text);
    if (!tokens.empty()) sources.push_back(std::move(tokens));
  }
  return sources;
}

double reference_value(const std::vector<MetricScore>& scores, MetricKind kind) {
  for (const auto& s : scores) {
    if (s.metric.kind == kind) return s.value;
  }
  throw Error(ErrorCode::kInvalidArgument, "no reference score for metric");
}

RowStatus status_for(ErrorCode code) {
  return code == ErrorCode::kBackendUnavailable ? RowStatus::kBackendUnavailable
                                                : RowStatus::kMalformedResponse;
}

// Rows for one record, in (sentence, metric selection) order.
std::vector<ScoreRow> score_record(const Record& record,
                                   std::span<const MetricSpec> metrics,
                                   const RunConfig& config, QaBackend& backend) {
  const std::vector<TokenSeq> sources = source_tokens(record.document);
  std::optional<TokenSeq> reference;
  if (record.reference) reference = tokenize(*record.reference);
  const FeqaConfig feqa_config{config.max_spans, {}};

  std::vector<ScoreRow> rows;
  for (std::size_t i = 0; i < record.summary_sentences.size(); ++i) {
    const Sentence sentence{record.summary_sentences[i], i, 0};
    const TokenSeq tokens = tokenize(sentence.text);
    std::optional<std::vector<MetricScore>> vs_reference;

    for (const auto& metric : metrics) {
      ScoreRow row{record.id, i, metric.str(), Aggregation::kNone, {}, RowStatus::kOk};
      if (metric.vs_reference) {
        if (!vs_reference) vs_reference = score_vs_reference(tokens, reference);
        row.value = reference_value(*vs_reference, metric.name.kind);
      } else if (is_overlap(metric.name.kind)) {
        row.aggregation = config.aggregation;
        row.value =
            score_vs_source(tokens, sources, metric.name.kind, config.aggregation)
                .value;
      } else {
        try {
          const FaithfulnessScore s =
              feqa_score(sentence, record.document, backend, feqa_config);
          if (s.status == FeqaStatus::kScored) {
            row.value = s.value;
          } else {
            row.status = RowStatus::kNoQuestions;
          }
        } catch (const Error& e) {
          if (!is_backend_error(e.code())) throw;
          row.status = status_for(e.code());
        }
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

void check_metrics(std::span<const Record> records,
                   std::span<const MetricSpec> metrics) {
  for (const auto& metric : metrics) {
    if (!metric.vs_reference) continue;
    for (const auto& record : records) {
      if (!record.reference) {
        throw Error(ErrorCode::kMissingReference,
                    "metric " + metric.str() + " needs a reference but record '" +
                        record.id + "' has none");
      }
    }
  }
}

ScoreTable score_all(std::span<const Record> records,
                     std::span<const MetricSpec> metrics, const RunConfig& config,
                     QaBackend* backend) {
  check_metrics(records, metrics);
  std::unique_ptr<QaBackend> owned;
  const bool needs_qa = std::any_of(metrics.begin(), metrics.end(), [](const auto& m) {
    return m.name.kind == MetricKind::kFeqa;
  });
  if (needs_qa && backend == nullptr) {
    owned = make_backend(config);
    backend = owned.get();
  }
  LexicalQaBackend unused;
  QaBackend& qa = backend != nullptr ? *backend : unused;

  std::vector<std::vector<ScoreRow>> per_record(records.size());
  internal::parallel_for(records.size(), config.concurrency, [&](std::size_t r) {
    per_record[r] = score_record(records[r], metrics, config, qa);
  });

  ScoreTable table;
  for (auto& rows : per_record) {
    for (auto& row : rows) {
      if (row.status == RowStatus::kBackendUnavailable ||
          row.status == RowStatus::kMalformedResponse) {
        table.partial_failure = true;
      }
      table.rows.push_back(std::move(row));
    }
  }
  std::stable_sort(table.rows.begin(), table.rows.end(),
                   [](const ScoreRow& a, const ScoreRow& b) {
                     return std::tie(a.record_id, a.sentence, a.metric) <
                            std::tie(b.record_id, b.sentence, b.metric);
                   });
  return table;
}

}  // namespace

std::string MetricSpec::str() const {
  return vs_reference ? std::string(kReferencePrefix) + name.str() : name.str();
}

MetricSpec MetricSpec::parse(std::string_view text) {
  if (text.starts_with(kReferencePrefix)) {
    MetricName name = MetricName::parse(text.substr(kReferencePrefix.size()));
    if (name.kind != MetricKind::kRouge1 && name.kind != MetricKind::kRouge2 &&
        name.kind != MetricKind::kRougeL) {
      throw Error(ErrorCode::kInvalidArgument,
                  "only ROUGE metrics have a reference form: '" +
                      std::string(text) + "'");
    }
    return {std::move(name), true};
  }
  return {MetricName::parse(text), false};
}

std::vector<MetricSpec> parse_metric_list(std::string_view text) {
  std::vector<MetricSpec> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string_view item = trim(text.substr(start, comma - start));
    if (item.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "empty metric name in list");
    }
    MetricSpec spec = MetricSpec::parse(item);
    if (std::find(out.begin(), out.end(), spec) == out.end()) {
      out.push_back(std::move(spec));
    }
    start = comma + 1;
  }
  return out;
}

void RunConfig::validate() const {
  auto invalid = [](const std::string& why) {
    throw Error(ErrorCode::kInvalidArgument, why);
  };
  if (metrics.empty()) invalid("no metric selected");
  if (aggregation == Aggregation::kNone) invalid("aggregation must be avg or max");
  if (k_max < 2) invalid("k-max must be at least 2");
  if (ngram_orders.empty()) invalid("no n-gram orders");
  for (int n : ngram_orders) {
    if (n < 1) invalid("n-gram orders must be positive");
  }
  if (max_spans == 0) invalid("max-spans must be positive");
  if (concurrency == 0) invalid("concurrency must be positive");
  if (backend == Backend::kRemote && (!endpoint || endpoint->empty())) {
    invalid("the remote backend needs an endpoint");
  }
  if (backend == Backend::kLexical && endpoint) {
    invalid("an endpoint is only valid with the remote backend");
  }
}

std::unique_ptr<QaBackend> make_backend(const RunConfig& config) {
  if (config.backend == Backend::kRemote) {
    RemoteQaOptions options;
    options.max_in_flight = config.concurrency;
    return std::make_unique<RemoteQaBackend>(config.endpoint.value_or(""), options);
  }
  return std::make_unique<LexicalQaBackend>();
}

AbstractivenessReport run_profile(std::span<const Record> records,
                                  const RunConfig& config) {
  config.validate();
  return corpus_profile(records, {config.k_max, config.ngram_orders,
                                  config.concurrency});
}

std::string_view row_status_name(RowStatus status) {
  switch (status) {
    case RowStatus::kOk: return "ok";
    case RowStatus::kNoQuestions: return "no-questions";
    case RowStatus::kBackendUnavailable: return "backend-unavailable";
    case RowStatus::kMalformedResponse: return "malformed-response";
  }
  return "ok";
}

ScoreTable run_score(std::span<const Record> records, const RunConfig& config,
                     QaBackend* backend) {
  config.validate();
  for (const auto& metric : config.metrics) {
    if (metric.name.kind == MetricKind::kExternal) {
      throw Error(ErrorCode::kInvalidArgument,
                  "external scores are record-level; use them with correlate");
    }
  }
  return score_all(records, config.metrics, config, backend);
}

std::string_view correlation_status_name(CorrelationStatus status) {
  switch (status) {
    case CorrelationStatus::kOk: return "ok";
    case CorrelationStatus::kUndefined: return "undefined";
    case CorrelationStatus::kInsufficientData: return "insufficient-data";
  }
  return "ok";
}

CorrelationReport run_correlate(std::span<const Record> records,
                                const RunConfig& config, QaBackend* backend) {
  config.validate();
  const auto scored = std::count_if(records.begin(), records.end(),
                                    [](const Record& r) { return r.human_score.has_value(); });
  if (scored < 3) {
    throw Error(ErrorCode::kInsufficientData,
                "correlation needs human_score on at least 3 records (found " +
                    std::to_string(scored) + ")");
  }

  std::vector<MetricSpec> computed;
  for (const auto& m : config.metrics) {
    if (m.name.kind != MetricKind::kExternal) computed.push_back(m);
  }
  CorrelationReport report;
  std::map<std::pair<std::string, std::string>, std::pair<double, std::size_t>> sums;
  if (!computed.empty()) {
    const ScoreTable table = score_all(records, computed, config, backend);
    report.partial_failure = table.partial_failure;
    for (const auto& row : table.rows) {
      if (!row.value) continue;
      auto& [sum, count] = sums[{row.record_id, row.metric}];
      sum += *row.value;
      ++count;
    }
  }

  for (const auto& metric : config.metrics) {
    const std::string label = metric.str();
    CorrelationRow row;
    row.metric = label;
    std::vector<double> xs;
    std::vector<double> ys;
    for (const auto& record : records) {
      if (!record.human_score) continue;
      std::optional<double> value;
      if (metric.name.kind == MetricKind::kExternal) {
        auto it = record.external_scores.find(metric.name.external);
        if (it != record.external_scores.end()) value = it->second;
      } else {
        auto it = sums.find({record.id, label});
        if (it != sums.end()) {
          value = it->second.first / static_cast<double>(it->second.second);
        }
      }
      if (!value) {
        ++row.dropped;
        continue;
      }
      xs.push_back(*value);
      ys.push_back(*record.human_score);
    }
    row.n = xs.size();
    if (row.n < 3) {
      row.status = CorrelationStatus::kInsufficientData;
      report.rows.push_back(std::move(row));
      continue;
    }
    try {
      row.pearson = stats::pearson(xs, ys);
      stats::Correlation rho = stats::spearman(xs, ys);
      if (config.exact_spearman && row.n <= 10) {
        rho.p_value = stats::spearman_exact_p(xs, ys);
      }
      row.spearman = rho;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kConstantVector) throw;
      row.pearson.reset();
      row.spearman.reset();
      row.status = CorrelationStatus::kUndefined;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace faithcheck
