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

#ifndef GREEDYBENCH_GREEDY_HPP_
#define GREEDYBENCH_GREEDY_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "greedybench/norms.hpp"
#include "greedybench/vectors.hpp"

namespace greedybench {

/// supp(x) by nonincreasing modulus, ties by smaller index.
template <class T>
std::vector<Index> greedy_ordering(const SparseVector<T>& x);

/// G_m(x): x restricted to the first min(m, |supp x|) greedy indices.
template <class T>
SparseVector<T> greedy_approx(const SparseVector<T>& x, std::size_t m);

/// True when |a_rho(m)| = |a_rho(m+1)|, i.e. the m-term greedy set is not
/// unique. False for m = 0 and m >= |supp x|.
template <class T>
bool has_threshold_tie(const SparseVector<T>& x, std::size_t m);

template <class T>
struct SigmaTilde {
  T value{};
  /// Lexicographically smallest minimizing projection set.
  IndexSet support;
};

/// min over A in supp(x), |A| <= m of ||x - S_A x||, exactly.
template <class T>
SigmaTilde<T> sigma_tilde(const SparseVector<T>& x, std::size_t m, const BasicNormSpec<T>& spec);

struct SigmaOptions {
  Real tolerance = Real(1e-9);
  /// Candidate supports come from this window instead of supp(x) when set.
  std::optional<IndexSet> window;
  std::size_t max_cycles = 200;
};

struct SigmaResult {
  /// Upper bound on sigma_m(x), within the tolerance of the local optimum.
  Real value;
  /// Coefficients alpha; the approximant is sum alpha_n e_n.
  SparseVector<Real> alpha;
  IndexSet support;
  Real tolerance;
};

/// Cyclic coordinate descent with golden-section line search over each
/// candidate support, seeded at the coordinate projection so the result never
/// exceeds sigma_tilde. Always evaluated in Real.
SigmaResult sigma(const SparseVector<Rational>& x, std::size_t m, const NormSpec& spec,
                  const SigmaOptions& options = {});

template <class T>
struct GreedyTrace {
  SparseVector<T> x;
  std::vector<Index> ordering;
  /// ||x - G_m(x)|| for m = 0..|supp x|.
  std::vector<T> residual_norms;
};

template <class T>
GreedyTrace<T> trace(const SparseVector<T>& x, const BasicNormSpec<T>& spec);

}  // namespace greedybench

#endif  // GREEDYBENCH_GREEDY_HPP_
