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

#ifndef GREEDYBENCH_POLYHEDRAL_HPP_
#define GREEDYBENCH_POLYHEDRAL_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "greedybench/scalar.hpp"
#include "greedybench/vectors.hpp"
#include "greedybench/weights.hpp"

namespace greedybench {

using Functional = std::vector<Rational>;

/// A finite set of linear functionals on R^d. The induced norm is
/// ||x|| = max_u |<u, x>|.
///
/// The stored list is deduplicated, closed under negation and sorted, so two
/// families describing the same norm through the same functionals compare
/// equal. Construction fails unless the functionals span the dual space
/// (rank d); otherwise the max would vanish on a nonzero vector.
class FunctionalFamily {
 public:
  FunctionalFamily(std::size_t dimension, std::vector<Functional> functionals);

  std::size_t dimension() const { return dimension_; }
  const std::vector<Functional>& functionals() const { return functionals_; }
  std::size_t size() const { return functionals_.size(); }
  /// Number of functionals handed to the constructor, before dedup.
  std::size_t raw_count() const { return raw_count_; }

  friend bool operator==(const FunctionalFamily&, const FunctionalFamily&) = default;

 private:
  std::size_t dimension_ = 0;
  std::size_t raw_count_ = 0;
  std::vector<Functional> functionals_;
};

/// sup_pi { |a_pi(1) + a_pi(d)/3| + sum_{1<j<d} |a_pi(j)| } on R^d, d >= 3.
struct BadDualSpec {
  std::size_t d = 3;
};

/// max{ alpha |a_1|, alpha |a_2|, |a_1 + a_2| } on R^2, alpha in (0, 1).
struct HexagonSpec {
  Rational alpha;
};

/// The D_w norm restricted to R^d (vectors supported in {1..d}), d >= 3,
/// for an eventually-constant weight.
struct PAFiniteDwSpec {
  std::size_t d = 3;
  Weight weight;
};

using FamilySpec = std::variant<BadDualSpec, HexagonSpec, PAFiniteDwSpec>;

/// The raw (pre-dedup) functional list for a named family.
std::vector<Functional> raw_functionals(const FamilySpec& spec);

/// Builds the family whose max-|<u, .>| reproduces the named norm.
/// Throws std::invalid_argument for out-of-range parameters.
FunctionalFamily family_for(const FamilySpec& spec);

std::string describe(const FamilySpec& spec);

/// max_u |<u, x>|. Throws std::invalid_argument when x has the wrong length.
template <class T>
T polyhedral_norm(const FunctionalFamily& family, std::span<const T> x);

/// Same, for a sparse vector supported in {1..d}.
template <class T>
T polyhedral_norm(const FunctionalFamily& family, const SparseVector<T>& x);

struct DualNormResult {
  Rational value;
  /// A point of the unit ball where <xstar, x> attains the value.
  std::vector<Rational> maximizer;
};

/// max{ <xstar, x> : |<u, x>| <= 1 for all u in the family }, by exact LP.
DualNormResult dual_norm(const FunctionalFamily& family, std::span<const Rational> xstar);

/// Rank of a list of rational row vectors (exact elimination).
std::size_t rank(std::vector<Functional> rows);

}  // namespace greedybench

#endif  // GREEDYBENCH_POLYHEDRAL_HPP_
