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

#ifndef FAITHCHECK_STATS_H_
#define FAITHCHECK_STATS_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace faithcheck::stats {

// A coefficient in [-1, 1] with its two-tailed p-value.
struct Correlation {
  double coefficient = 0.0;
  double p_value = 1.0;

  friend bool operator==(const Correlation&, const Correlation&) = default;
};

// Paired observations with optional ids, checked for finiteness.
class ScoreVector {
 public:
  // Throws Error(kInvalidArgument) on NaN/inf values or when ids are given
  // with a different length.
  explicit ScoreVector(std::vector<double> values,
                       std::vector<std::string> record_ids = {});

  std::span<const double> values() const { return values_; }
  const std::vector<std::string>& record_ids() const { return record_ids_; }
  std::size_t size() const { return values_.size(); }

 private:
  std::vector<double> values_;
  std::vector<std::string> record_ids_;
};

// Regularized incomplete beta I_x(a, b), continued-fraction evaluation.
double incomplete_beta(double a, double b, double x);

// P(T > t) for Student's t with `df` degrees of freedom.
// Throws kInvalidArgument when df < 1 or t is NaN.
double student_t_sf(double t, double df);

// Two-tailed p-value of a correlation coefficient r over n pairs, using
// t = r * sqrt((n - 2) / (1 - r^2)) with n - 2 degrees of freedom.
double correlation_p_value(double r, std::size_t n);

// Sample Pearson correlation. Throws kInvalidArgument for unequal lengths,
// kInsufficientData for n < 3 and kConstantVector when either side has zero
// variance.
Correlation pearson(std::span<const double> x, std::span<const double> y);
inline Correlation pearson(const ScoreVector& x, const ScoreVector& y) {
  return pearson(x.values(), y.values());
}

// 1-based ranks; tied values share the mean of their positions.
std::vector<double> rank(std::span<const double> values);

// Pearson on ranks, same errors and p-value approximation as pearson().
Correlation spearman(std::span<const double> x, std::span<const double> y);
inline Correlation spearman(const ScoreVector& x, const ScoreVector& y) {
  return spearman(x.values(), y.values());
}

// Exact two-tailed permutation p-value of Spearman's rho: the share of all
// n! orderings of y whose |rho| reaches the observed |rho|. Only for
// 3 <= n <= 10 (kInvalidArgument otherwise).
double spearman_exact_p(std::span<const double> x, std::span<const double> y);

}  // namespace faithcheck::stats

#endif  // FAITHCHECK_STATS_H_
