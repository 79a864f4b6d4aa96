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


#include "faithcheck/stats.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "faithcheck/error.h"
#include "oracles.h"

namespace faithcheck::stats {
namespace {

using Vec = std::vector<double>;

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorCode::kInvalidArgument;
}

Vec random_vec(std::mt19937& rng, std::size_t n) {
  Vec v(n);
  std::normal_distribution<double> d;
  for (auto& x : v) x = d(rng);
  return v;
}

TEST(PearsonTest, Golden) {
  const Correlation c = pearson(Vec{1, 2, 3, 4}, Vec{1, 3, 2, 4});
  EXPECT_NEAR(c.coefficient, 0.8, 1e-12);
  // t = 0.8 * sqrt(2 / 0.36), df = 2.
  EXPECT_NEAR(c.p_value, 2.0 * oracle::t_sf(0.8 * std::sqrt(2.0 / 0.36), 2.0), 1e-8);
}

TEST(PearsonTest, MatchesOracleAndAffineInvariance) {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 3 + trial % 30;
    const Vec x = random_vec(rng, n);
    const Vec y = random_vec(rng, n);
    const double r = pearson(x, y).coefficient;
    EXPECT_NEAR(r, oracle::pearson(x, y), 1e-12);
    EXPECT_GE(r, -1.0);
    EXPECT_LE(r, 1.0);
    Vec scaled = x;
    for (auto& v : scaled) v = 3.5 * v - 2.0;
    EXPECT_NEAR(pearson(scaled, y).coefficient, r, 1e-12);
    Vec flipped = x;
    for (auto& v : flipped) v = -v;
    EXPECT_NEAR(pearson(flipped, y).coefficient, -r, 1e-12);
    EXPECT_NEAR(pearson(y, x).coefficient, r, 1e-12);
  }
}

TEST(PearsonTest, PerfectAndErrors) {
  const Correlation c = pearson(Vec{1, 2, 3}, Vec{2, 4, 6});
  EXPECT_DOUBLE_EQ(c.coefficient, 1.0);
  EXPECT_DOUBLE_EQ(c.p_value, 0.0);
  EXPECT_EQ(code_of([] { pearson(Vec{1, 1, 1}, Vec{1, 2, 3}); }), ErrorCode::kConstantVector);
  EXPECT_EQ(code_of([] { pearson(Vec{1, 2}, Vec{1, 2}); }), ErrorCode::kInsufficientData);
  EXPECT_EQ(code_of([] { pearson(Vec{1, 2, 3}, Vec{1, 2}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { pearson(Vec{1, NAN, 3}, Vec{1, 2, 3}); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { ScoreVector(Vec{1, INFINITY}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { ScoreVector(Vec{1, 2}, {"a"}); }), ErrorCode::kInvalidArgument);
}

TEST(RankTest, Examples) {
  EXPECT_EQ(rank(Vec{10, 30, 20}), (Vec{1, 3, 2}));
  EXPECT_EQ(rank(Vec{5, 5, 1, 9}), (Vec{2.5, 2.5, 1, 4}));
  EXPECT_EQ(rank(Vec{7, 7, 7}), (Vec{2, 2, 2}));
  EXPECT_TRUE(rank(Vec{}).empty());
}

TEST(RankTest, MatchesOracleAndSumsToTriangle) {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 25;
    Vec v(n);
    for (auto& x : v) x = std::uniform_int_distribution<int>(0, 5)(rng);
    const Vec r = rank(v);
    EXPECT_EQ(r, oracle::ranks(v));
    EXPECT_DOUBLE_EQ(std::accumulate(r.begin(), r.end(), 0.0), n * (n + 1) / 2.0);
  }
}

TEST(SpearmanTest, EqualsPearsonOnRanksAndMonotoneInvariance) {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 3 + trial % 20;
    Vec x = random_vec(rng, n);
    const Vec y = random_vec(rng, n);
    if (trial % 3 == 0) x[0] = x[n - 1];  // ties
    const Correlation s = spearman(x, y);
    EXPECT_NEAR(s.coefficient, oracle::pearson(oracle::ranks(x), oracle::ranks(y)), 1e-12);
    Vec warped = x;
    for (auto& v : warped) v = std::exp(2.0 * v) + 7.0;
    EXPECT_NEAR(spearman(warped, y).coefficient, s.coefficient, 1e-12);
    EXPECT_NEAR(spearman(warped, y).p_value, s.p_value, 1e-12);
  }
}

TEST(SpearmanTest, ExactPValue) {
  // n = 3, perfect agreement: 2 of 6 permutations reach |rho| = 1.
  EXPECT_DOUBLE_EQ(spearman_exact_p(Vec{1, 2, 3}, Vec{1, 2, 3}), 2.0 / 6.0);
  // n = 4, rho = 0.8: identity, its reversal and their neighbours at 0.8.
  EXPECT_DOUBLE_EQ(spearman_exact_p(Vec{1, 2, 3, 4}, Vec{1, 3, 2, 4}), 8.0 / 24.0);
  const Vec big(11, 1.0);
  EXPECT_EQ(code_of([&] { spearman_exact_p(big, big); }), ErrorCode::kInvalidArgument);
}

TEST(StudentTTest, KnownValues) {
  EXPECT_DOUBLE_EQ(student_t_sf(0.0, 5.0), 0.5);
  EXPECT_NEAR(student_t_sf(1.0, 1.0), 0.25, 1e-12);
  EXPECT_NEAR(student_t_sf(2.228, 10.0), 0.025, 1e-3);
  EXPECT_NEAR(student_t_sf(-1.0, 1.0), 0.75, 1e-12);
  EXPECT_DOUBLE_EQ(student_t_sf(INFINITY, 3.0), 0.0);
  EXPECT_EQ(code_of([] { student_t_sf(1.0, 0.5); }), ErrorCode::kInvalidArgument);
}

TEST(StudentTTest, MatchesNumericIntegration) {
  for (double df : {1.0, 2.0, 3.0, 7.0, 10.0, 30.0, 98.0}) {
    for (double t : {0.1, 0.5, 1.0, 1.96, 2.5, 4.0}) {
      EXPECT_NEAR(student_t_sf(t, df), oracle::t_sf(t, df), 1e-8) << t << " " << df;
    }
  }
}

TEST(IncompleteBetaTest, Properties) {
  EXPECT_DOUBLE_EQ(incomplete_beta(2, 3, 0), 0.0);
  EXPECT_DOUBLE_EQ(incomplete_beta(2, 3, 1), 1.0);
  // I_x(1, 1) = x; I_x(a, b) = 1 - I_{1-x}(b, a).
  EXPECT_NEAR(incomplete_beta(1, 1, 0.3), 0.3, 1e-12);
  EXPECT_NEAR(incomplete_beta(2.5, 4, 0.4), 1.0 - incomplete_beta(4, 2.5, 0.6), 1e-12);
  EXPECT_EQ(code_of([] { incomplete_beta(0, 1, 0.5); }), ErrorCode::kInvalidArgument);
}

TEST(CorrelationPValueTest, Bounds) {
  EXPECT_DOUBLE_EQ(correlation_p_value(0.0, 10), 1.0);
  EXPECT_DOUBLE_EQ(correlation_p_value(1.0, 10), 0.0);
  EXPECT_LT(correlation_p_value(0.9, 10), correlation_p_value(0.5, 10));
  EXPECT_EQ(code_of([] { correlation_p_value(0.5, 2); }), ErrorCode::kInsufficientData);
}

}  // namespace
}  // namespace faithcheck::stats
