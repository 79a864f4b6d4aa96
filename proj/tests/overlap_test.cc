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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "faithcheck/error.h"
#include "oracles.h"

namespace faithcheck {
namespace {

using Strings = std::vector<std::string>;

const TokenSeq kSat = tokenize("the cat sat on the mat");
const TokenSeq kLay = tokenize("the cat lay on the mat");

Strings random_tokens(std::mt19937& rng, std::size_t min_len, std::size_t max_len,
                      int vocab) {
  Strings out(std::uniform_int_distribution<std::size_t>(min_len, max_len)(rng));
  for (auto& t : out) {
    t = "w" + std::to_string(std::uniform_int_distribution<int>(0, vocab - 1)(rng));
  }
  return out;
}

TEST(RougeTest, GoldenBigram) {
  const Prf r2 = rouge_n(kSat, kLay, 2);
  EXPECT_DOUBLE_EQ(r2.precision, 0.6);
  EXPECT_DOUBLE_EQ(r2.recall, 0.6);
  EXPECT_DOUBLE_EQ(r2.f1, 0.6);
}

TEST(RougeTest, GoldenLcs) {
  EXPECT_EQ(lcs_length(kSat.view(), kLay.view()), 5u);
  const Prf rl = rouge_l(kSat, kLay);
  EXPECT_DOUBLE_EQ(rl.precision, 5.0 / 6.0);
  EXPECT_DOUBLE_EQ(rl.recall, 5.0 / 6.0);
  EXPECT_DOUBLE_EQ(rl.f1, 5.0 / 6.0);
}

TEST(RougeTest, IdentityAndDisjoint) {
  for (int n : {1, 2, 3}) {
    EXPECT_DOUBLE_EQ(rouge_n(kSat, kSat, n).f1, 1.0);
    EXPECT_DOUBLE_EQ(rouge_n(kSat, tokenize("dogs bark loudly today"), n).f1, 0.0);
  }
  EXPECT_DOUBLE_EQ(rouge_l(kSat, kSat).f1, 1.0);
  EXPECT_DOUBLE_EQ(rouge_l(kSat, TokenSeq()).f1, 0.0);
  EXPECT_DOUBLE_EQ(rouge_l(TokenSeq(), kSat).f1, 0.0);
}

TEST(RougeTest, ClipsRepeatedNGrams) {
  const Prf p = rouge_n(tokenize("the the the"), tokenize("the cat"), 1);
  EXPECT_DOUBLE_EQ(p.precision, 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(p.recall, 0.5);
}

TEST(RougeTest, InvalidOrder) {
  EXPECT_THROW(rouge_n(kSat, kLay, 0), Error);
}

TEST(RougeTest, MatchesOracleAndProperties) {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 300; ++trial) {
    const Strings a = random_tokens(rng, 0, 25, 8);
    const Strings b = random_tokens(rng, 0, 25, 8);
    const TokenSeq ta(a), tb(b);
    for (int n : {1, 2, 3}) {
      const Prf got = rouge_n(ta, tb, n);
      const oracle::Prf want = oracle::rouge_n(a, b, n);
      EXPECT_NEAR(got.precision, want.p, 1e-12);
      EXPECT_NEAR(got.recall, want.r, 1e-12);
      EXPECT_NEAR(got.f1, want.f, 1e-12);
      EXPECT_NEAR(got.f1, rouge_n(tb, ta, n).f1, 1e-12);
    }
    const std::size_t l = lcs_length(ta.view(), tb.view());
    EXPECT_EQ(l, oracle::lcs(a, b));
    EXPECT_LE(l, std::min(a.size(), b.size()));
    const Prf rl = rouge_l(ta, tb);
    EXPECT_NEAR(rl.f1, oracle::rouge_l(a, b).f, 1e-12);
    EXPECT_EQ(rl.f1 == 1.0, a == b && !a.empty());
  }
}

TEST(BleuTest, IdentityAndEmpty) {
  EXPECT_DOUBLE_EQ(bleu(kSat, kSat), 1.0);
  EXPECT_DOUBLE_EQ(bleu(TokenSeq(), kSat), 0.0);
}

TEST(BleuTest, HandRolledCase) {
  const Strings cand = {"a", "b", "c", "d", "e"};
  const Strings ref = {"a", "b", "c", "x", "y"};
  // p1 = 3/5, p2 = 2/4, p3 = 1/3, p4 = eps/2; equal lengths so BP = 1.
  const double expected = std::pow(0.6 * 0.5 * (1.0 / 3.0) * (kBleuEpsilon / 2.0), 0.25);
  EXPECT_NEAR(bleu(TokenSeq(cand), TokenSeq(ref)), expected, 1e-15);
  EXPECT_NEAR(bleu(TokenSeq(cand), TokenSeq(ref)), oracle::bleu(cand, ref), 1e-15);
}

TEST(BleuTest, BrevityPenalty) {
  const Strings ref = {"a", "b", "c", "d", "e", "f", "g", "h"};
  const Strings cand = {"a", "b", "c", "d"};
  EXPECT_NEAR(bleu(TokenSeq(cand), TokenSeq(ref)), std::exp(1.0 - 8.0 / 4.0), 1e-12);
}

TEST(BleuTest, MatchesOracleAndBounds) {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 300; ++trial) {
    const Strings a = random_tokens(rng, 0, 20, 5);
    const Strings b = random_tokens(rng, 1, 20, 5);
    const double got = bleu(TokenSeq(a), TokenSeq(b));
    EXPECT_NEAR(got, oracle::bleu(a, b), 1e-12);
    EXPECT_GE(got, 0.0);
    EXPECT_LE(got, 1.0);
  }
}

TEST(BleuTest, ReferencePrefixKeepsUnigramMatches) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Strings cand = random_tokens(rng, 1, 10, 6);
    const Strings ref = random_tokens(rng, 1, 10, 6);
    Strings prefixed = ref;
    prefixed.insert(prefixed.end(), cand.begin(), cand.end());
    EXPECT_GE(oracle::strike_out_matches(prefixed, ref),
              oracle::strike_out_matches(cand, ref));
    EXPECT_GE(rouge_n(TokenSeq(prefixed), TokenSeq(ref), 1).precision *
                  static_cast<double>(prefixed.size()),
              rouge_n(TokenSeq(cand), TokenSeq(ref), 1).precision *
                      static_cast<double>(cand.size()) -
                  1e-9);
  }
}

TEST(ScoreVsSourceTest, MaxAndAverage) {
  const std::vector<TokenSeq> sources = {tokenize("the cat sat on the mat"),
                                         tokenize("dogs bark"),
                                         tokenize("the cat lay on the mat")};
  const auto max_score = score_vs_source(kSat, sources, MetricKind::kRouge1, Aggregation::kMax);
  EXPECT_DOUBLE_EQ(max_score.value, 1.0);
  EXPECT_EQ(max_score.aggregation, Aggregation::kMax);
  const auto avg_score = score_vs_source(kSat, sources, MetricKind::kRouge1, Aggregation::kAvg);
  double sum = 0.0;
  for (const auto& s : sources) sum += rouge_n(kSat, s, 1).f1;
  EXPECT_NEAR(avg_score.value, sum / 3.0, 1e-15);
}

TEST(ScoreVsSourceTest, AverageNeverExceedsMax) {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const TokenSeq summary(random_tokens(rng, 1, 12, 6));
    std::vector<TokenSeq> sources;
    for (int s = 0; s < 1 + trial % 4; ++s) sources.emplace_back(random_tokens(rng, 1, 12, 6));
    for (auto kind : {MetricKind::kRouge1, MetricKind::kRouge2, MetricKind::kRougeL,
                      MetricKind::kBleu4}) {
      EXPECT_LE(score_vs_source(summary, sources, kind, Aggregation::kAvg).value,
                score_vs_source(summary, sources, kind, Aggregation::kMax).value + 1e-15);
    }
  }
}

TEST(ScoreVsSourceTest, Errors) {
  const std::vector<TokenSeq> none;
  try {
    score_vs_source(kSat, none, MetricKind::kRouge1, Aggregation::kAvg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptySources);
  }
  const std::vector<TokenSeq> one = {kSat};
  EXPECT_THROW(score_vs_source(kSat, one, MetricKind::kFeqa, Aggregation::kAvg), Error);
  EXPECT_THROW(score_vs_source(kSat, one, MetricKind::kRouge1, Aggregation::kNone), Error);
}

TEST(ScoreVsReferenceTest, Values) {
  const auto same = score_vs_reference(kSat, kSat);
  ASSERT_EQ(same.size(), 3u);
  for (const auto& s : same) {
    EXPECT_DOUBLE_EQ(s.value, 1.0);
    EXPECT_EQ(s.aggregation, Aggregation::kNone);
  }
  for (const auto& s : score_vs_reference(kSat, tokenize("xyz"))) {
    EXPECT_DOUBLE_EQ(s.value, 0.0);
  }
  const auto golden = score_vs_reference(kSat, kLay);
  EXPECT_EQ(golden[0].metric.str(), "rouge1");
  EXPECT_DOUBLE_EQ(golden[0].value, rouge_n(kSat, kLay, 1).f1);
  EXPECT_DOUBLE_EQ(golden[1].value, 0.6);
  EXPECT_DOUBLE_EQ(golden[2].value, 5.0 / 6.0);
}

TEST(ScoreVsReferenceTest, MissingReference) {
  try {
    score_vs_reference(kSat, std::nullopt);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMissingReference);
  }
}

TEST(MetricNameTest, RoundTrip) {
  for (const char* name : {"rouge1", "rouge2", "rougeL", "bleu4", "feqa", "external:bertscore"}) {
    EXPECT_EQ(MetricName::parse(name).str(), name);
  }
  EXPECT_THROW(MetricName::parse("rouge3"), Error);
  EXPECT_THROW(MetricName::parse("external:"), Error);
}

}  // namespace
}  // namespace faithcheck
