// Copyright 2026 The greedybench Authors
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

#include "greedybench/simplex.hpp"

#include <optional>
#include <stdexcept>

namespace greedybench::lp {

Result maximize(const std::vector<Rational>& c, const std::vector<std::vector<Rational>>& a,
                const std::vector<Rational>& b) {
  const std::size_t n = c.size();
  const std::size_t m = a.size();
  if (b.size() != m) throw std::invalid_argument("lp: one right-hand side per row");
  for (const auto& row : a) {
    if (row.size() != n) throw std::invalid_argument("lp: ragged constraint matrix");
  }
  for (const auto& rhs : b) {
    if (rhs < 0) throw std::invalid_argument("lp: right-hand sides must be nonnegative");
  }

  // Columns 0..n-1 structural, n..n+m-1 slack, n+m the right-hand side.
  const std::size_t width = n + m + 1;
  std::vector<std::vector<Rational>> tableau(m, std::vector<Rational>(width, Rational(0)));
  std::vector<Rational> reduced(width, Rational(0));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) tableau[i][j] = a[i][j];
    tableau[i][n + i] = 1;
    tableau[i][n + m] = b[i];
    basis[i] = n + i;
  }
  for (std::size_t j = 0; j < n; ++j) reduced[j] = -c[j];

  Result result;
  for (;;) {
    // Bland: lowest-index improving column.
    std::optional<std::size_t> entering;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (reduced[j] < 0) {
        entering = j;
        break;
      }
    }
    if (!entering) break;
    const std::size_t col = *entering;

    std::optional<std::size_t> leaving;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (!(tableau[i][col] > 0)) continue;
      Rational ratio = tableau[i][n + m] / tableau[i][col];
      if (!leaving || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[*leaving])) {
        leaving = i;
        best_ratio = std::move(ratio);
      }
    }
    if (!leaving) {
      result.status = Status::kUnbounded;
      return result;
    }
    const std::size_t row = *leaving;

    const Rational pivot = tableau[row][col];
    for (auto& entry : tableau[row]) entry /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || tableau[i][col] == 0) continue;
      const Rational factor = tableau[i][col];
      for (std::size_t j = 0; j < width; ++j) {
        if (tableau[row][j] != 0) tableau[i][j] -= factor * tableau[row][j];
      }
    }
    if (reduced[col] != 0) {
      const Rational factor = reduced[col];
      for (std::size_t j = 0; j < width; ++j) {
        if (tableau[row][j] != 0) reduced[j] -= factor * tableau[row][j];
      }
    }
    basis[row] = col;
    ++result.pivots;
  }

  result.status = Status::kOptimal;
  result.value = reduced[n + m];
  result.solution.assign(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) result.solution[basis[i]] = tableau[i][n + m];
  }
  return result;
}

}  // namespace greedybench::lp
