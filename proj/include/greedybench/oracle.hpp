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

// Brute-force reference evaluators. These share no code with the closed
// forms in norms.hpp and are linked only into tests and the CLI audit path.

#ifndef GREEDYBENCH_ORACLE_HPP_
#define GREEDYBENCH_ORACLE_HPP_

#include <cstddef>
#include <vector>

#include "greedybench/scalar.hpp"
#include "greedybench/vectors.hpp"
#include "greedybench/weights.hpp"

namespace greedybench::oracle {

inline constexpr std::size_t kMaxPlacedEntries = 8;
inline constexpr std::size_t kMaxWindow = 20;

struct OracleConfig {
  /// Largest slot an entry may be placed in.
  std::size_t horizon = 0;
  /// E ranges over all subsets of {1..e_window}.
  std::size_t e_window = 0;
};

/// horizon = e_window + |supp f| + prefix length, the point past which
/// every placement value is already available.
OracleConfig stable_config(const Weight& w, const SparseVector<Rational>& f, std::size_t e_window);

/// max |sum a_j w_slot(j)| over injective placements of the entries of f
/// off E into slots |E|+1..horizon. Throws std::invalid_argument when more
/// than kMaxPlacedEntries entries remain or the slots cannot hold them.
Rational phi2_bruteforce(const Weight& w, const IndexSet& e, const SparseVector<Rational>& f,
                         const OracleConfig& cfg);

/// Same maximum, visiting every placement one by one without any symmetry
/// reduction. Meant for tiny instances only.
Rational phi2_naive(const Weight& w, const IndexSet& e, const SparseVector<Rational>& f,
                    std::size_t horizon);

/// max over all E in {1..e_window} of Phi_1 + phi2_bruteforce. Throws
/// std::invalid_argument unless max index <= e_window <= kMaxWindow and
/// horizon >= max index + |supp f|.
Rational dw_norm_bruteforce(const Weight& w, const SparseVector<Rational>& f,
                            const OracleConfig& cfg);

/// max over permutations of |a_pi(1) + a_pi(d)/3| + sum_{1<j<d} |a_pi(j)|.
Rational bad_dual_direct(const std::vector<Rational>& x);

/// max{alpha |a_1|, alpha |a_2|, |a_1 + a_2|}.
Rational hexagon_direct(const Rational& alpha, const std::vector<Rational>& x);

}  // namespace greedybench::oracle

#endif  // GREEDYBENCH_ORACLE_HPP_
