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

// Corpus-level commands behind the `faithcheck` binary and their report
// formats. Each command is a pure function of (records, config) except for
// remote QA traffic.

#ifndef FAITHCHECK_COMMANDS_H_
#define FAITHCHECK_COMMANDS_H_

#include <cstddef>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "faithcheck/abstractiveness.h"
#include "faithcheck/answer_spans.h"
#include "faithcheck/corpus.h"
#include "faithcheck/overlap.h"
#include "faithcheck/qa_backend.h"
#include "faithcheck/stats.h"

namespace faithcheck {

// A metric as selected on the command line. Overlap metrics normally score a
// summary sentence against the document; `vs_reference` scores it against the
// record's reference summary instead ("ref-rouge1", "ref-rouge2", "ref-rougeL").
struct MetricSpec {
  MetricName name;
  bool vs_reference = false;

  std::string str() const;
  // Throws Error(kInvalidArgument) for unknown names.
  static MetricSpec parse(std::string_view text);

  friend auto operator<=>(const MetricSpec&, const MetricSpec&) = default;
};

// Splits "a,b,c" and parses each entry; duplicates are dropped.
std::vector<MetricSpec> parse_metric_list(std::string_view text);

enum class Backend { kLexical, kRemote };
enum class OutputFormat { kTsv, kJson };

struct RunConfig {
  std::vector<MetricSpec> metrics = {MetricSpec{}};
  Aggregation aggregation = Aggregation::kAvg;
  int k_max = 4;
  std::vector<int> ngram_orders = {1, 2, 3};
  Backend backend = Backend::kLexical;
  std::optional<std::string> endpoint;
  std::size_t max_spans = kDefaultMaxSpans;
  std::size_t concurrency = 8;
  OutputFormat format = OutputFormat::kTsv;
  // Use the exact permutation p-value for Spearman when n <= 10.
  bool exact_spearman = false;

  // Throws Error(kInvalidArgument) when a bound is not positive, the
  // aggregation is not avg/max, or the endpoint is present without the remote
  // backend (or missing with it).
  void validate() const;
};

// Lexical or remote backend as configured.
std::unique_ptr<QaBackend> make_backend(const RunConfig& config);

// ---- profile ----

AbstractivenessReport run_profile(std::span<const Record> records,
                                  const RunConfig& config);
void write_profile(std::ostream& out, const AbstractivenessReport& report,
                   const RunConfig& config);

// ---- score ----

enum class RowStatus { kOk, kNoQuestions, kBackendUnavailable, kMalformedResponse };
std::string_view row_status_name(RowStatus status);

struct ScoreRow {
  std::string record_id;
  std::size_t sentence = 0;
  std::string metric;
  Aggregation aggregation = Aggregation::kNone;
  std::optional<double> value;  // empty unless status is kOk
  RowStatus status = RowStatus::kOk;

  friend bool operator==(const ScoreRow&, const ScoreRow&) = default;
};

struct ScoreTable {
  std::vector<ScoreRow> rows;  // sorted by (record_id, sentence, metric)
  // Some rows failed because of the QA backend.
  bool partial_failure = false;
};

// Throws kMissingReference up front when a reference metric is selected and
// a record has no reference, and kInvalidArgument for external metrics.
// `backend` overrides make_backend(config) when non-null.
ScoreTable run_score(std::span<const Record> records, const RunConfig& config,
                     QaBackend* backend = nullptr);
void write_scores(std::ostream& out, const ScoreTable& table, OutputFormat format);

// ---- correlate ----

enum class CorrelationStatus { kOk, kUndefined, kInsufficientData };
std::string_view correlation_status_name(CorrelationStatus status);

struct CorrelationRow {
  std::string metric;
  std::size_t n = 0;        // pairs used
  std::size_t dropped = 0;  // records with a human score but no metric value
  std::optional<stats::Correlation> pearson;
  std::optional<stats::Correlation> spearman;
  CorrelationStatus status = CorrelationStatus::kOk;

  friend bool operator==(const CorrelationRow&, const CorrelationRow&) = default;
};

struct CorrelationReport {
  std::vector<CorrelationRow> rows;  // in metric selection order
  bool partial_failure = false;

  friend bool operator==(const CorrelationReport&, const CorrelationReport&) = default;
};

// Record-level metric values (mean over summary sentences) correlated with
// human_score. Throws kInsufficientData when fewer than 3 records carry a
// human score.
CorrelationReport run_correlate(std::span<const Record> records,
                                const RunConfig& config,
                                QaBackend* backend = nullptr);
void write_correlation(std::ostream& out, const CorrelationReport& report,
                       OutputFormat format);

// JSON form used by write_correlation; from_json is its inverse.
std::string correlation_to_json(const CorrelationReport& report);
CorrelationReport correlation_from_json(std::string_view text);

// "12.34**" style cell: coefficient x100, * for p < 0.05, ** for p < 0.001.
std::string format_coefficient(const stats::Correlation& c);

}  // namespace faithcheck

#endif  // FAITHCHECK_COMMANDS_H_
