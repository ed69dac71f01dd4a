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

#include <askframe/error.hpp>
#include <askframe/evalkit.hpp>

#include <algorithm>
#include <cmath>

namespace askframe {

std::string_view to_string(McNemarMethod m) noexcept {
  return m == McNemarMethod::kExactBinomial ? "exact_binomial" : "chi_square_cc";
}

double binomial_two_sided_p(std::size_t n, std::size_t k) {
  if (k > n) throw Error("binomial test: k exceeds n");
  std::size_t lo = std::min(k, n - k);
  if (2 * lo == n) return 1.0;
  double tail = 0.0;
  if (n <= 1000) {
    double term = std::ldexp(1.0, -static_cast<int>(n));
    for (std::size_t i = 0; i <= lo; ++i) {
      tail += term;
      term = term * static_cast<double>(n - i) / static_cast<double>(i + 1);
    }
  } else {
    double nd = static_cast<double>(n);
    for (std::size_t i = 0; i <= lo; ++i) {
      double id = static_cast<double>(i);
      tail += std::exp(std::lgamma(nd + 1) - std::lgamma(id + 1) - std::lgamma(nd - id + 1) -
                       nd * std::log(2.0));
    }
  }
  return std::min(1.0, 2.0 * tail);
}

double chi_square_1df_upper(double x) {
  if (x <= 0.0) return 1.0;
  return std::erfc(std::sqrt(x / 2.0));
}

McNemarResult mcnemar_counts(std::size_t b, std::size_t c, std::size_t exact_below) {
  McNemarResult r;
  r.b = b;
  r.c = c;
  std::size_t n = b + c;
  if (n < exact_below) {
    r.method = McNemarMethod::kExactBinomial;
    r.statistic = static_cast<double>(std::min(b, c));
    r.p_value = n == 0 ? 1.0 : binomial_two_sided_p(n, std::min(b, c));
    return r;
  }
  r.method = McNemarMethod::kChiSquareCC;
  double diff = std::fabs(static_cast<double>(b) - static_cast<double>(c)) - 1.0;
  if (diff < 0.0) diff = 0.0;
  r.statistic = diff * diff / static_cast<double>(n);
  r.p_value = chi_square_1df_upper(r.statistic);
  return r;
}

McNemarResult mcnemar(const std::vector<bool>& correct_a, const std::vector<bool>& correct_b,
                      std::size_t exact_below) {
  if (correct_a.size() != correct_b.size())
    throw Error("mcnemar: decision vectors differ in length (" + std::to_string(correct_a.size()) +
                " vs " + std::to_string(correct_b.size()) + ")");
  std::size_t b = 0, c = 0;
  for (std::size_t i = 0; i < correct_a.size(); ++i) {
    if (correct_a[i] && !correct_b[i]) ++b;
    if (!correct_a[i] && correct_b[i]) ++c;
  }
  return mcnemar_counts(b, c, exact_below);
}

}  // namespace askframe
