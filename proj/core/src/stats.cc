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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "faithcheck/error.h"

namespace faithcheck::stats {
namespace {

constexpr int kMaxFractionIterations = 10000;
constexpr double kFractionEpsilon = 1e-16;
constexpr double kTiny = 1e-300;

// Continued fraction for the incomplete beta function (modified Lentz).
double beta_continued_fraction(double a, double b, double x) {
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxFractionIterations; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kFractionEpsilon) break;
  }
  return h;
}

void check_pair(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "correlation inputs differ in length");
  }
  if (x.size() < 3) {
    throw Error(ErrorCode::kInsufficientData,
                "correlation needs at least 3 pairs, got " +
                    std::to_string(x.size()));
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i]) || !std::isfinite(y[i])) {
      throw Error(ErrorCode::kInvalidArgument, "non-finite score");
    }
  }
}

double mean(std::span<const double> v) {
  return std::accumulate(v.begin(), v.end(), 0.0) /
         static_cast<double>(v.size());
}

}  // namespace

ScoreVector::ScoreVector(std::vector<double> values,
                         std::vector<std::string> record_ids)
    : values_(std::move(values)), record_ids_(std::move(record_ids)) {
  for (double v : values_) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::kInvalidArgument, "ScoreVector: non-finite value");
    }
  }
  if (!record_ids_.empty() && record_ids_.size() != values_.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "ScoreVector: ids and values differ in length");
  }
}

double incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0) || !(x >= 0.0 && x <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "incomplete_beta: bad arguments");
  }
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double front =
      std::exp(std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
               a * std::log(x) + b * std::log1p(-x));
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * beta_continued_fraction(a, b, x) / a;
  }
  return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double student_t_sf(double t, double df) {
  if (!(df >= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "student_t_sf: degrees of freedom must be >= 1");
  }
  if (std::isnan(t)) {
    throw Error(ErrorCode::kInvalidArgument, "student_t_sf: t is NaN");
  }
  if (std::isinf(t)) return t > 0 ? 0.0 : 1.0;
  const double x = df / (df + t * t);
  const double tail = 0.5 * incomplete_beta(0.5 * df, 0.5, x);
  return t >= 0.0 ? tail : 1.0 - tail;
}

double correlation_p_value(double r, std::size_t n) {
  if (n < 3) {
    throw Error(ErrorCode::kInsufficientData, "p-value needs n >= 3");
  }
  if (std::fabs(r) >= 1.0) return 0.0;
  const double df = static_cast<double>(n - 2);
  const double t = r * std::sqrt(df / (1.0 - r * r));
  return std::clamp(2.0 * student_t_sf(std::fabs(t), df), 0.0, 1.0);
}

Correlation pearson(std::span<const double> x, std::span<const double> y) {
  check_pair(x, y);
  const double mx = mean(x);
  const double my = mean(y);
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw Error(ErrorCode::kConstantVector,
                "correlation undefined for a constant vector");
  }
  const double r = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
  return {r, correlation_p_value(r, x.size())};
}

std::vector<double> rank(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return values[a] < values[b];
  });
  std::vector<double> ranks(values.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) {
      ++j;
    }
    // Positions i..j (0-based) share the mean 1-based rank.
    const double shared = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = shared;
    i = j + 1;
  }
  return ranks;
}

Correlation spearman(std::span<const double> x, std::span<const double> y) {
  check_pair(x, y);
  const std::vector<double> rx = rank(x);
  const std::vector<double> ry = rank(y);
  return pearson(rx, ry);
}

double spearman_exact_p(std::span<const double> x, std::span<const double> y) {
  check_pair(x, y);
  if (x.size() > 10) {
    throw Error(ErrorCode::kInvalidArgument,
                "exact Spearman p-value limited to n <= 10");
  }
  const double observed = std::fabs(spearman(x, y).coefficient);

  std::vector<double> rx = rank(x);
  std::vector<double> ry = rank(y);
  const double mx = mean(rx);
  const double my = mean(ry);
  double sxx = 0.0;
  double syy = 0.0;
  for (auto& v : rx) {
    v -= mx;
    sxx += v * v;
  }
  for (auto& v : ry) {
    v -= my;
    syy += v * v;
  }
  const double scale = std::sqrt(sxx * syy);
  const double threshold = observed * (1.0 - 1e-12);

  std::vector<std::size_t> perm(ry.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t hits = 0;
  std::size_t total = 0;
  do {
    double sxy = 0.0;
    for (std::size_t i = 0; i < rx.size(); ++i) sxy += rx[i] * ry[perm[i]];
    if (std::fabs(sxy / scale) >= threshold) ++hits;
    ++total;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return static_cast<double>(hits) / static_cast<double>(total);
}

}  // namespace faithcheck::stats
