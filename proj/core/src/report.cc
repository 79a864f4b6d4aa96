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

// TSV and JSON emission. TSV is for reading; JSON keeps raw values.

#include <cstdio>
#include <ostream>

#include "faithcheck/commands.h"
#include "faithcheck/error.h"
#include "json.hpp"

namespace faithcheck {
namespace {

using nlohmann::json;

constexpr std::string_view kMissing = "NA";

std::string fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
  return buf;
}

std::string percent(std::optional<double> fraction) {
  return fraction ? fixed(100.0 * *fraction, 2) : std::string(kMissing);
}

std::string p_value_cell(const std::optional<stats::Correlation>& c) {
  if (!c) return std::string(kMissing);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3g", c->p_value);
  return buf;
}

json correlation_json(const std::optional<stats::Correlation>& c) {
  if (!c) return nullptr;
  return {{"coefficient", c->coefficient}, {"p_value", c->p_value}};
}

std::optional<stats::Correlation> correlation_of(const json& j) {
  if (j.is_null()) return std::nullopt;
  return stats::Correlation{j.at("coefficient").get<double>(),
                            j.at("p_value").get<double>()};
}

CorrelationStatus parse_correlation_status(const std::string& text) {
  for (auto s : {CorrelationStatus::kOk, CorrelationStatus::kUndefined,
                 CorrelationStatus::kInsufficientData}) {
    if (correlation_status_name(s) == text) return s;
  }
  throw Error(ErrorCode::kParseError, "unknown correlation status '" + text + "'");
}

}  // namespace

void write_profile(std::ostream& out, const AbstractivenessReport& report,
                   const RunConfig& config) {
  auto fraction = [&](CopyType type) {
    auto it = report.fractions.find(type);
    return it == report.fractions.end() ? 0.0 : it->second;
  };
  if (config.format == OutputFormat::kJson) {
    json novel = json::object();
    for (const auto& [n, rate] : report.novel_ngram_rates) {
      novel[std::to_string(n)] = rate ? json(*rate) : json(nullptr);
    }
    json counts = json::object();
    for (const auto& [type, count] : report.counts) {
      counts[std::string(copy_type_name(type))] = count;
    }
    const json doc = {
        {"sentences", report.sentence_count},
        {"counts", counts},
        {"extraction",
         {{"sentence", fraction(CopyType::kSentenceExtraction)},
          {"span", fraction(CopyType::kSpanExtraction)},
          {"word", fraction(CopyType::kWordExtraction)}}},
        {"perfect_fusion", {{"k2", report.fusion_k2}, {"k_ge2", report.fusion_k_ge2}}},
        {"novel_ngrams", novel}};
    out << doc.dump(2) << '\n';
    return;
  }

  out << "sentences\textract_sentence\textract_span\textract_word"
         "\tfusion_k2\tfusion_k_ge2";
  for (const auto& [n, rate] : report.novel_ngram_rates) out << "\tnovel_" << n;
  out << '\n' << report.sentence_count;
  for (auto type : {CopyType::kSentenceExtraction, CopyType::kSpanExtraction,
                    CopyType::kWordExtraction}) {
    out << '\t' << percent(fraction(type));
  }
  out << '\t' << percent(report.fusion_k2) << '\t' << percent(report.fusion_k_ge2);
  for (const auto& [n, rate] : report.novel_ngram_rates) out << '\t' << percent(rate);
  out << '\n';
}

void write_scores(std::ostream& out, const ScoreTable& table, OutputFormat format) {
  if (format == OutputFormat::kJson) {
    json rows = json::array();
    for (const auto& r : table.rows) {
      rows.push_back({{"record_id", r.record_id},
                      {"sentence", r.sentence},
                      {"metric", r.metric},
                      {"aggregation", aggregation_name(r.aggregation)},
                      {"value", r.value ? json(*r.value) : json(nullptr)},
                      {"status", row_status_name(r.status)}});
    }
    out << json{{"rows", rows}, {"partial_failure", table.partial_failure}}.dump(2)
        << '\n';
    return;
  }
  out << "record_id\tsentence\tmetric\taggregation\tvalue\tstatus\n";
  for (const auto& r : table.rows) {
    out << r.record_id << '\t' << r.sentence << '\t' << r.metric << '\t'
        << aggregation_name(r.aggregation) << '\t'
        << (r.value ? fixed(*r.value, 6) : std::string(kMissing)) << '\t'
        << row_status_name(r.status) << '\n';
  }
}

std::string format_coefficient(const stats::Correlation& c) {
  std::string cell = fixed(100.0 * c.coefficient, 2);
  if (c.p_value < 0.001) {
    cell += "**";
  } else if (c.p_value < 0.05) {
    cell += "*";
  }
  return cell;
}

std::string correlation_to_json(const CorrelationReport& report) {
  json rows = json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"metric", r.metric},
                    {"n", r.n},
                    {"dropped", r.dropped},
                    {"pearson", correlation_json(r.pearson)},
                    {"spearman", correlation_json(r.spearman)},
                    {"status", correlation_status_name(r.status)}});
  }
  return json{{"rows", rows}, {"partial_failure", report.partial_failure}}.dump(2);
}

CorrelationReport correlation_from_json(std::string_view text) {
  const json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) {
    throw Error(ErrorCode::kParseError, "correlation report is not valid JSON");
  }
  try {
    CorrelationReport report;
    report.partial_failure = doc.at("partial_failure").get<bool>();
    for (const auto& r : doc.at("rows")) {
      CorrelationRow row;
      row.metric = r.at("metric").get<std::string>();
      row.n = r.at("n").get<std::size_t>();
      row.dropped = r.at("dropped").get<std::size_t>();
      row.pearson = correlation_of(r.at("pearson"));
      row.spearman = correlation_of(r.at("spearman"));
      row.status = parse_correlation_status(r.at("status").get<std::string>());
      report.rows.push_back(std::move(row));
    }
    return report;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kSchemaError,
                std::string("correlation report: ") + e.what());
  }
}

void write_correlation(std::ostream& out, const CorrelationReport& report,
                       OutputFormat format) {
  if (format == OutputFormat::kJson) {
    out << correlation_to_json(report) << '\n';
    return;
  }
  out << "metric\tn\tdropped\tpearson\tspearman\tpearson_p\tspearman_p\tstatus\n";
  for (const auto& r : report.rows) {
    out << r.metric << '\t' << r.n << '\t' << r.dropped << '\t'
        << (r.pearson ? format_coefficient(*r.pearson) : std::string(kMissing)) << '\t'
        << (r.spearman ? format_coefficient(*r.spearman) : std::string(kMissing))
        << '\t' << p_value_cell(r.pearson) << '\t' << p_value_cell(r.spearman) << '\t'
        << correlation_status_name(r.status) << '\n';
  }
}

}  // namespace faithcheck
