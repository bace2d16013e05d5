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

#ifndef GREEDYBENCH_SIMPLEX_HPP_
#define GREEDYBENCH_SIMPLEX_HPP_

#include <vector>

#include "greedybench/scalar.hpp"

namespace greedybench::lp {

enum class Status { kOptimal, kUnbounded };

struct Result {
  Status status = Status::kOptimal;
  Rational value;
  std::vector<Rational> solution;
  std::size_t pivots = 0;
};

/// Solves  max c.x  subject to  A x <= b, x >= 0  exactly, with b >= 0 so the
/// slack basis is feasible from the start. Dense tableau, Bland's rule.
/// Throws std::invalid_argument on ragged input or a negative right-hand side.
Result maximize(const std::vector<Rational>& c, const std::vector<std::vector<Rational>>& a,
                const std::vector<Rational>& b);

}  // namespace greedybench::lp

#endif  // GREEDYBENCH_SIMPLEX_HPP_
