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

// faithcheck: corpus profiling, metric scoring and human correlation.
//
// Exit codes: 0 success, 1 usage or configuration error, 2 data error,
// 3 partial QA backend failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "faithcheck/commands.h"
#include "faithcheck/corpus.h"
#include "faithcheck/error.h"

namespace {

using faithcheck::ErrorCode;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitPartial = 3;
constexpr const char* kEndpointEnv = "FAITHCHECK_QA_ENDPOINT";

struct Options {
  std::string input;
  std::string output;
  std::string metrics = "rouge1";
  std::string aggregation = "avg";
  std::string backend = "lexical";
  std::string endpoint;
  std::string format = "tsv";
  std::string ngram_orders = "1,2,3";
  int k_max = 4;
  std::size_t max_spans = faithcheck::kDefaultMaxSpans;
  std::size_t concurrency = 8;
  bool split_summary = false;
  bool exact_spearman = false;
};

void add_common(CLI::App& cmd, Options& o) {
  cmd.add_option("--input", o.input, "JSONL corpus")->required()->check(CLI::ExistingFile);
  cmd.add_option("--output", o.output, "Output file (default: stdout)");
  cmd.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"tsv", "json"}))
      ->capture_default_str();
  cmd.add_option("--concurrency", o.concurrency, "Parallel records / QA requests")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd.add_flag("--split-summary", o.split_summary,
               "Re-split summary entries into sentences");
}

void add_scoring(CLI::App& cmd, Options& o) {
  cmd.add_option("--metric", o.metrics,
                 "rouge1,rouge2,rougeL,bleu4,feqa,ref-rouge1,ref-rouge2,ref-rougeL"
                 " or external:NAME (comma separated)")
      ->capture_default_str();
  cmd.add_option("--agg", o.aggregation, "Aggregation over source sentences")
      ->check(CLI::IsMember({"avg", "max"}))
      ->capture_default_str();
  cmd.add_option("--backend", o.backend, "QA backend for feqa")
      ->check(CLI::IsMember({"lexical", "remote"}))
      ->capture_default_str();
  cmd.add_option("--endpoint", o.endpoint,
                 std::string("Remote QA endpoint URL (overrides $") + kEndpointEnv + ")");
  cmd.add_option("--max-spans", o.max_spans, "Answer spans per summary sentence")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

std::vector<int> parse_orders(const std::string& text) {
  std::vector<int> orders;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      orders.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw faithcheck::Error(ErrorCode::kInvalidArgument,
                              "bad n-gram order '" + item + "'");
    }
  }
  return orders;
}

faithcheck::RunConfig make_config(const Options& o) {
  faithcheck::RunConfig config;
  config.metrics = faithcheck::parse_metric_list(o.metrics);
  config.aggregation = faithcheck::parse_aggregation(o.aggregation);
  config.k_max = o.k_max;
  config.ngram_orders = parse_orders(o.ngram_orders);
  config.backend =
      o.backend == "remote" ? faithcheck::Backend::kRemote : faithcheck::Backend::kLexical;
  if (!o.endpoint.empty()) {
    config.endpoint = o.endpoint;
  } else if (const char* env = std::getenv(kEndpointEnv);
             env != nullptr && *env != '\0' &&
             config.backend == faithcheck::Backend::kRemote) {
    config.endpoint = env;
  }
  config.max_spans = o.max_spans;
  config.concurrency = o.concurrency;
  config.format =
      o.format == "json" ? faithcheck::OutputFormat::kJson : faithcheck::OutputFormat::kTsv;
  config.exact_spearman = o.exact_spearman;
  config.validate();
  return config;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return kExitUsage;
    case ErrorCode::kBackendUnavailable:
    case ErrorCode::kMalformedResponse:
      return kExitPartial;
    default:
      return kExitData;
  }
}

int emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    std::cout.flush();
    return std::cout ? kExitOk : kExitData;
  }
  std::ofstream out(o.output, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "faithcheck: cannot write '" << o.output << "'\n";
    return kExitData;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Faithfulness and abstractiveness metrics for summaries", "faithcheck"};
  app.require_subcommand(1);
  Options o;

  CLI::App* profile = app.add_subcommand("profile", "Abstractiveness profile of a corpus");
  add_common(*profile, o);
  profile->add_option("--k-max", o.k_max, "Largest fusion fragment count")
      ->check(CLI::Range(2, 64))
      ->capture_default_str();
  profile->add_option("--ngram-orders", o.ngram_orders, "Novel n-gram orders")
      ->capture_default_str();

  CLI::App* score = app.add_subcommand("score", "Per-sentence metric scores");
  add_common(*score, o);
  add_scoring(*score, o);

  CLI::App* correlate =
      app.add_subcommand("correlate", "Pearson/Spearman correlation with human scores");
  add_common(*correlate, o);
  add_scoring(*correlate, o);
  correlate->add_flag("--exact-spearman", o.exact_spearman,
                      "Exact permutation p-value for Spearman when n <= 10");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const faithcheck::RunConfig config = make_config(o);
    const auto records = faithcheck::load_corpus(o.input, {o.split_summary});
    std::ostringstream out;
    int status = kExitOk;
    if (profile->parsed()) {
      faithcheck::write_profile(out, faithcheck::run_profile(records, config), config);
    } else if (score->parsed()) {
      const auto table = faithcheck::run_score(records, config);
      faithcheck::write_scores(out, table, config.format);
      if (table.partial_failure) status = kExitPartial;
    } else {
      const auto report = faithcheck::run_correlate(records, config);
      faithcheck::write_correlation(out, report, config.format);
      for (const auto& row : report.rows) {
        if (row.dropped > 0) {
          std::cerr << "faithcheck: warning: " << row.metric << ": dropped "
                    << row.dropped << " record(s) without a value\n";
        }
      }
      if (report.partial_failure) status = kExitPartial;
    }
    const int written = emit(o, out.str());
    if (status == kExitPartial) {
      std::cerr << "faithcheck: some rows failed because of the QA backend\n";
    }
    return written != kExitOk ? written : status;
  } catch (const faithcheck::Error& e) {
    std::cerr << "faithcheck: " << faithcheck::error_code_name(e.code()) << ": "
              << e.what() << '\n';
    return exit_code_for(e.code());
  }
}
