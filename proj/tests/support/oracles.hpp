// Copyright 2026 The askframe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Independent reference implementations used as test oracles. None of these
// call into the library code they check.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace askframe::testing {

// Exhaustive maximum bipartite matching between two label lists, where
// `compatible(i, j)` decides whether system label i may pair with gold label j.
inline std::size_t brute_force_matching(std::size_t n_sys, std::size_t n_gold,
                                        const std::function<bool(std::size_t, std::size_t)>& compatible) {
  std::vector<bool> used(n_gold, false);
  std::function<std::size_t(std::size_t)> go = [&](std::size_t i) -> std::size_t {
    if (i == n_sys) return 0;
    std::size_t best = go(i + 1);  // leave system label i unmatched
    for (std::size_t j = 0; j < n_gold; ++j) {
      if (used[j] || !compatible(i, j)) continue;
      used[j] = true;
      best = std::max(best, 1 + go(i + 1));
      used[j] = false;
    }
    return best;
  };
  return go(0);
}

// Row n of Pascal's triangle, built by repeated addition in exact integers.
inline std::vector<std::uint64_t> pascal_row(std::size_t n) {
  std::vector<std::uint64_t> row{1};
  for (std::size_t r = 1; r <= n; ++r) {
    std::vector<std::uint64_t> next(r + 1, 1);
    for (std::size_t k = 1; k < r; ++k) next[k] = row[k - 1] + row[k];
    row = std::move(next);
  }
  return row;
}

// Two-sided sign-test p-value by direct summation of the binomial tail.
inline double exact_sign_test_p(std::size_t b, std::size_t c) {
  std::size_t n = b + c;
  if (n == 0) return 1.0;
  auto row = pascal_row(n);
  std::size_t lo = std::min(b, c);
  std::uint64_t tail = 0;
  for (std::size_t k = 0; k <= lo; ++k) tail += row[k];
  double p = 2.0 * static_cast<double>(tail) / std::ldexp(1.0, static_cast<int>(n));
  return std::min(1.0, p);
}

// Regularized upper incomplete gamma Q(a, x) by the modified Lentz continued
// fraction (x > a + 1) or the power series for P (otherwise).
inline double upper_incomplete_gamma_q(double a, double x) {
  if (x <= 0.0) return 1.0;
  double log_prefix = a * std::log(x) - x - std::lgamma(a);
  if (x < a + 1.0) {
    double sum = 1.0 / a, term = sum;
    for (int n = 1; n < 10000; ++n) {
      term *= x / (a + n);
      sum += term;
      if (std::fabs(term) < std::fabs(sum) * 1e-17) break;
    }
    return 1.0 - sum * std::exp(log_prefix);
  }
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 10000; ++i) {
    double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-17) break;
  }
  return std::exp(log_prefix) * h;
}

// Chi-square upper tail with one degree of freedom: Q(1/2, x/2).
inline double chi_square_1df_tail(double x) { return upper_incomplete_gamma_q(0.5, x / 2.0); }

inline bool rel_close(double a, double b, double rel) {
  double scale = std::max({std::fabs(a), std::fabs(b), 1e-300});
  return std::fabs(a - b) <= rel * scale;
}

}  // namespace askframe::testing
