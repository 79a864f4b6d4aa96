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

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "faithcheck/error.h"
#include "json.hpp"
#include "oracles.h"

namespace faithcheck {
namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorCode::kInvalidArgument;
}

std::vector<Record> fixture() { return load_corpus(FAITHCHECK_FIXTURES "/corpus.jsonl"); }

RunConfig with_metrics(std::string_view list) {
  RunConfig config;
  config.metrics = parse_metric_list(list);
  return config;
}

// Records whose human score is i and whose "m" external score is f(i).
std::vector<Record> scored_records(std::size_t n, const std::function<double(double)>& f) {
  std::vector<Record> out;
  for (std::size_t i = 0; i < n; ++i) {
    Record r;
    r.id = "r" + std::to_string(i);
    r.document = "Doc.";
    r.summary_sentences = {"Doc."};
    r.human_score = static_cast<double>(i);
    r.external_scores["m"] = f(static_cast<double>(i));
    out.push_back(std::move(r));
  }
  return out;
}

TEST(MetricSpecTest, Parse) {
  EXPECT_EQ(MetricSpec::parse("ref-rougeL").str(), "ref-rougeL");
  EXPECT_TRUE(MetricSpec::parse("ref-rouge2").vs_reference);
  EXPECT_EQ(MetricSpec::parse("external:judge").str(), "external:judge");
  EXPECT_THROW(MetricSpec::parse("ref-feqa"), Error);
  EXPECT_THROW(MetricSpec::parse("ref-bleu4"), Error);
  const auto list = parse_metric_list("rouge1,feqa,rouge1");
  ASSERT_EQ(list.size(), 2u);
  EXPECT_EQ(list[1].str(), "feqa");
  EXPECT_THROW(parse_metric_list("rouge1,,feqa"), Error);
}

TEST(RunConfigTest, Validate) {
  EXPECT_NO_THROW(RunConfig{}.validate());
  auto bad = [](const std::function<void(RunConfig&)>& edit) {
    RunConfig c;
    edit(c);
    return code_of([&] { c.validate(); });
  };
  EXPECT_EQ(bad([](RunConfig& c) { c.k_max = 1; }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(bad([](RunConfig& c) { c.max_spans = 0; }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(bad([](RunConfig& c) { c.concurrency = 0; }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(bad([](RunConfig& c) { c.ngram_orders = {0}; }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(bad([](RunConfig& c) { c.aggregation = Aggregation::kNone; }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(bad([](RunConfig& c) { c.endpoint = "http://x"; }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(bad([](RunConfig& c) { c.backend = Backend::kRemote; }),
            ErrorCode::kInvalidArgument);
}

TEST(RunScoreTest, OverlapRowsMatchMetricOps) {
  const auto records = fixture();
  const ScoreTable table = run_score(records, RunConfig{});
  ASSERT_EQ(table.rows.size(), 5u);
  EXPECT_FALSE(table.partial_failure);
  for (const auto& row : table.rows) {
    const Record& rec = *std::find_if(records.begin(), records.end(),
                                      [&](const Record& r) { return r.id == row.record_id; });
    std::vector<TokenSeq> sources;
    for (const auto& s : split_sentences(rec.document)) sources.push_back(tokenize(s.text));
    const double want = score_vs_source(tokenize(rec.summary_sentences[row.sentence]), sources,
                                        MetricKind::kRouge1, Aggregation::kAvg)
                            .value;
    EXPECT_EQ(row.metric, "rouge1");
    EXPECT_EQ(row.status, RowStatus::kOk);
    EXPECT_EQ(row.aggregation, Aggregation::kAvg);
    ASSERT_TRUE(row.value);
    EXPECT_DOUBLE_EQ(*row.value, want);
  }
}

TEST(RunScoreTest, SortedAndDeterministic) {
  RunConfig config = with_metrics("rougeL,feqa,bleu4,ref-rouge1");
  config.concurrency = 3;
  const auto records = fixture();
  const ScoreTable a = run_score(records, config);
  config.concurrency = 1;
  const ScoreTable b = run_score(records, config);
  EXPECT_EQ(a.rows, b.rows);
  EXPECT_EQ(a.rows.size(), 5u * 4u);
  for (std::size_t i = 1; i < a.rows.size(); ++i) {
    const auto& p = a.rows[i - 1];
    const auto& q = a.rows[i];
    EXPECT_LT(std::tie(p.record_id, p.sentence, p.metric),
              std::tie(q.record_id, q.sentence, q.metric));
  }
  std::ostringstream x, y;
  write_scores(x, a, OutputFormat::kTsv);
  write_scores(y, b, OutputFormat::kTsv);
  EXPECT_EQ(x.str(), y.str());
  EXPECT_EQ(x.str().substr(0, x.str().find('\n')),
            "record_id\tsentence\tmetric\taggregation\tvalue\tstatus");
}

TEST(RunScoreTest, FeqaOnFaithfulCopies) {
  const auto records = fixture();
  const ScoreTable table = run_score(records, with_metrics("feqa"));
  for (const auto& row : table.rows) {
    ASSERT_EQ(row.status, RowStatus::kOk) << row.record_id;
    // r1 and the first r2 sentence are verbatim document sentences.
    if (row.record_id == "r1" || (row.record_id == "r2" && row.sentence == 0)) {
      EXPECT_DOUBLE_EQ(*row.value, 1.0) << row.record_id;
    }
    if (row.record_id == "r3") EXPECT_LT(*row.value, 1.0);
  }
}

TEST(RunScoreTest, NoQuestionsRow) {
  Record r;
  r.id = "x";
  r.document = "It rained all day.";
  r.summary_sentences = {"It rained."};
  const ScoreTable table = run_score(std::vector<Record>{r}, with_metrics("feqa"));
  ASSERT_EQ(table.rows.size(), 1u);
  EXPECT_EQ(table.rows[0].status, RowStatus::kNoQuestions);
  EXPECT_FALSE(table.rows[0].value);
  EXPECT_FALSE(table.partial_failure);
}

TEST(RunScoreTest, RemoteDownMarksRows) {
  RunConfig config = with_metrics("feqa,rouge1");
  config.backend = Backend::kRemote;
  config.endpoint = "http://127.0.0.1:1";
  RemoteQaOptions options;
  options.retries = 0;
  RemoteQaBackend down(*config.endpoint, options);
  const ScoreTable table = run_score(fixture(), config, &down);
  EXPECT_TRUE(table.partial_failure);
  for (const auto& row : table.rows) {
    if (row.metric == "feqa") {
      EXPECT_EQ(row.status, RowStatus::kBackendUnavailable);
      EXPECT_FALSE(row.value);
    } else {
      EXPECT_EQ(row.status, RowStatus::kOk);
    }
  }
}

TEST(RunScoreTest, Errors) {
  auto records = fixture();
  records[3].reference.reset();
  EXPECT_EQ(code_of([&] { run_score(records, with_metrics("ref-rouge2")); }),
            ErrorCode::kMissingReference);
  EXPECT_EQ(code_of([&] { run_score(fixture(), with_metrics("external:judge")); }),
            ErrorCode::kInvalidArgument);
}

TEST(RunScoreTest, JsonOutput) {
  const ScoreTable table = run_score(fixture(), RunConfig{});
  std::ostringstream out;
  write_scores(out, table, OutputFormat::kJson);
  const auto doc = nlohmann::json::parse(out.str());
  EXPECT_EQ(doc["rows"].size(), table.rows.size());
  EXPECT_EQ(doc["partial_failure"], false);
}

TEST(RunCorrelateTest, IdenticalScores) {
  const auto report = run_correlate(scored_records(10, [](double h) { return h; }),
                                    with_metrics("external:m"));
  ASSERT_EQ(report.rows.size(), 1u);
  const auto& row = report.rows[0];
  EXPECT_EQ(row.status, CorrelationStatus::kOk);
  EXPECT_EQ(format_coefficient(*row.pearson), "100.00**");
  EXPECT_EQ(format_coefficient(*row.spearman), "100.00**");
}

TEST(RunCorrelateTest, AffineInvariance) {
  const auto report = run_correlate(scored_records(6, [](double h) { return 2 * h + 3; }),
                                    with_metrics("external:m"));
  EXPECT_DOUBLE_EQ(report.rows[0].pearson->coefficient, 1.0);
  EXPECT_EQ(format_coefficient(*report.rows[0].pearson).substr(0, 6), "100.00");
}

TEST(RunCorrelateTest, NoisyScoresMatchOracle) {
  std::mt19937 rng(99);
  std::normal_distribution<double> noise(0.0, 3.0);
  const auto records = scored_records(40, [&](double h) { return h + noise(rng); });
  const auto report = run_correlate(records, with_metrics("external:m"));
  std::vector<double> x, y;
  for (const auto& r : records) {
    x.push_back(r.external_scores.at("m"));
    y.push_back(*r.human_score);
  }
  EXPECT_NEAR(report.rows[0].pearson->coefficient, oracle::pearson(x, y), 1e-9);
  EXPECT_NEAR(report.rows[0].spearman->coefficient,
              oracle::pearson(oracle::ranks(x), oracle::ranks(y)), 1e-9);
}

TEST(RunCorrelateTest, PairwiseDropAndStatuses) {
  auto records = scored_records(6, [](double h) { return h * h; });
  records[2].external_scores.clear();
  records[4].human_score.reset();
  const auto report = run_correlate(records, with_metrics("external:m"));
  EXPECT_EQ(report.rows[0].n, 4u);
  EXPECT_EQ(report.rows[0].dropped, 1u);

  // Dropping a record without a human score leaves the row unchanged.
  auto fewer = records;
  fewer.erase(fewer.begin() + 4);
  EXPECT_EQ(run_correlate(fewer, with_metrics("external:m")), report);

  const auto constant = run_correlate(scored_records(5, [](double) { return 1.0; }),
                                      with_metrics("external:m"));
  EXPECT_EQ(constant.rows[0].status, CorrelationStatus::kUndefined);
  EXPECT_FALSE(constant.rows[0].pearson);

  const auto sparse = run_correlate(fixture(), with_metrics("external:judge,external:none"));
  EXPECT_EQ(sparse.rows[0].status, CorrelationStatus::kOk);
  EXPECT_EQ(sparse.rows[0].n, 3u);
  EXPECT_EQ(sparse.rows[0].dropped, 1u);
  EXPECT_EQ(sparse.rows[1].status, CorrelationStatus::kInsufficientData);
  EXPECT_EQ(sparse.rows[1].dropped, 4u);
}

TEST(RunCorrelateTest, ComputedMetricsAndExactP) {
  RunConfig config = with_metrics("rouge1,feqa,ref-rougeL");
  config.exact_spearman = true;
  const auto report = run_correlate(fixture(), config);
  ASSERT_EQ(report.rows.size(), 3u);
  for (const auto& row : report.rows) {
    EXPECT_EQ(row.n, 4u) << row.metric;
    ASSERT_TRUE(row.spearman) << row.metric;
    // 24 permutations, so the exact p-value is a multiple of 1/24.
    const double scaled = row.spearman->p_value * 24.0;
    EXPECT_NEAR(scaled, std::round(scaled), 1e-9) << row.metric;
  }
}

TEST(RunCorrelateTest, InsufficientHumanScores) {
  auto records = fixture();
  records[0].human_score.reset();
  records[1].human_score.reset();
  EXPECT_EQ(code_of([&] { run_correlate(records, RunConfig{}); }),
            ErrorCode::kInsufficientData);
}

TEST(RunCorrelateTest, JsonRoundTrip) {
  const auto report =
      run_correlate(fixture(), with_metrics("rouge1,external:judge,external:none,feqa"));
  EXPECT_EQ(correlation_from_json(correlation_to_json(report)), report);
  EXPECT_EQ(code_of([] { correlation_from_json("{\"rows\":3}"); }), ErrorCode::kSchemaError);
  std::ostringstream tsv;
  write_correlation(tsv, report, OutputFormat::kTsv);
  EXPECT_EQ(tsv.str().substr(0, tsv.str().find('\n')),
            "metric\tn\tdropped\tpearson\tspearman\tpearson_p\tspearman_p\tstatus");
}

TEST(RunProfileTest, FixtureProfile) {
  const auto records = fixture();
  const auto report = run_profile(records, RunConfig{});
  std::ostringstream out;
  write_profile(out, report, RunConfig{});
  EXPECT_EQ(out.str().substr(0, out.str().find('\n')),
            "sentences\textract_sentence\textract_span\textract_word\tfusion_k2\t"
            "fusion_k_ge2\tnovel_1\tnovel_2\tnovel_3");
}

}  // namespace
}  // namespace faithcheck
