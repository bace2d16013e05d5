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

#ifndef GREEDYBENCH_CERTIFY_HPP_
#define GREEDYBENCH_CERTIFY_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "greedybench/norms.hpp"
#include "greedybench/vectors.hpp"
#include "greedybench/weights.hpp"

namespace greedybench {

enum class ConstantKind { kSuppression, kLattice, kDemocracy, kDualDemocracy, kQuasiGreedy };
enum class BoundKind { kLowerBound, kExactOverFamily };

std::string to_string(ConstantKind kind);
std::string to_string(BoundKind kind);

/// A constant value together with the vectors that realize it.
///
/// Witness layout by kind:
///   kSuppression    {f}, with `projection` = A; value ||S_A f|| / ||f||.
///   kLattice        {f, g}; value ||f|| / ||g||.
///   kDemocracy      {1_{eps,A}, 1_{delta,B}}; value ||1_{eps,A}|| / ||1_{delta,B}||.
///   kDualDemocracy  {a*, b*} as coefficient vectors; ratio of dual norms.
///   kQuasiGreedy    {x}, with `m`; value ||G_m x|| / ||x||.
template <class T>
struct Certificate {
  ConstantKind kind = ConstantKind::kSuppression;
  T value{};
  std::vector<SparseVector<T>> witness;
  IndexSet projection;
  std::size_t m = 0;
  std::string family;
  bool exact = is_exact_v<T>;
  BoundKind bound_kind = BoundKind::kLowerBound;
  std::vector<std::string> citations;
};

/// Recomputes the value from the witness. kDualDemocracy needs a
/// polyhedral spec and exact scalars.
template <class T>
T recompute(const Certificate<T>& certificate, const BasicNormSpec<T>& spec);

/// recompute() == value.
template <class T>
bool verify(const Certificate<T>& certificate, const BasicNormSpec<T>& spec);

/// Builds a certificate and fills `value` by evaluating the witness.
template <class T>
Certificate<T> make_certificate(ConstantKind kind, const BasicNormSpec<T>& spec,
                                std::vector<SparseVector<T>> witness, IndexSet projection,
                                std::size_t m, std::string family, BoundKind bound_kind,
                                std::vector<std::string> citations);

/// ||S_A f|| / ||f||. Throws std::invalid_argument for f = 0.
template <class T>
T suppression_ratio(const BasicNormSpec<T>& spec, const SparseVector<T>& f, const IndexSet& a);

/// ||f|| / ||g|| for vectors with equal moduli coordinatewise.
template <class T>
T lattice_ratio(const BasicNormSpec<T>& spec, const SparseVector<T>& f, const SparseVector<T>& g);

template <class T>
struct ExplicitFamily {
  std::string description;
  std::vector<std::pair<SparseVector<T>, IndexSet>> instances;
};

/// Coefficients from `values` on supports of size <= max_support, every
/// projection set A within the support. Symmetric norms use positions
/// {1..k}; polyhedral norms use every k-subset of {1..min(window, d)}.
struct GridFamily {
  std::vector<Rational> values;
  std::size_t max_support = 3;
  std::size_t window = 8;
};

/// {+-1, +-2/3, +-1/2, +-1/3, +-1/4}, supports up to 3, window 8.
GridFamily default_grid();

std::string describe(const GridFamily& grid);

/// Calls visit(f) for every grid vector, in a fixed order.
void for_each_grid_vector(const NormSpec& spec, const GridFamily& grid,
                          const std::function<void(const SparseVector<Rational>&)>& visit);

/// Max suppression ratio over the family; the first maximizer is the witness.
template <class T>
Certificate<T> ks_lower_bound(const BasicNormSpec<T>& spec, const ExplicitFamily<T>& family,
                              std::vector<std::string> citations = {});

Certificate<Rational> ks_lower_bound(const NormSpec& spec, const GridFamily& grid,
                                     std::vector<std::string> citations = {});

/// Max ||f|| / ||g|| over grid vectors f and every sign change g of f.
Certificate<Rational> kl_lower_bound(const NormSpec& spec, const GridFamily& grid,
                                     std::vector<std::string> citations = {});

template <class T>
struct PropertyAInstance {
  SparseVector<T> f;
  SignedSet a;
  SignedSet b;
};

enum class PropertyAStatus { kPass, kFail, kInvalidInstance };

std::string to_string(PropertyAStatus status);

template <class T>
struct PropertyAResult {
  PropertyAStatus status = PropertyAStatus::kInvalidInstance;
  T lhs{};
  T rhs{};
  /// rhs - lhs.
  T margin{};
  /// Why the instance was rejected; empty otherwise.
  std::string reason;
};

/// Tests ||1_{eps,A} + f|| <= ||1_{delta,B} + f||. The instance must have
/// sup|f| <= 1, |A| <= |B| and A, B, supp(f) pairwise disjoint.
template <class T>
PropertyAResult<T> property_a_check(const BasicNormSpec<T>& spec, const PropertyAInstance<T>& instance);

inline constexpr std::size_t kDefaultSuperdemocracyLimit = 12;

struct SuperdemocracyReport {
  Certificate<Rational> primal;
  /// Dual-basis version, for polyhedral norms only.
  std::optional<Certificate<Rational>> dual;
};

/// max ||1_{eps,A}|| / ||1_{delta,B}|| over |A| = |B| = m <= m_max and all
/// signs. Symmetric norms use A = B = {1..m}; polyhedral norms use every
/// m-subset of {1..d}.
SuperdemocracyReport superdemocracy_report(const NormSpec& spec,
                                           std::size_t m_max = kDefaultSuperdemocracyLimit);

/// r_m = ||1_{A_m}|| / ||1_{eps,A_m}|| under the signed-sup norm, |A_m| = 2m
/// with alternating signs; equals s_{2m} / (s_m - m w_inf). Throws
/// std::invalid_argument for the constant weight or w_inf = 0.
std::vector<Rational> ucc_growth(const Weight& w, std::size_t m_max);

template <class T>
struct QuasiGreedyResult {
  T value{};
  /// Smallest m attaining the value.
  std::size_t m = 0;
  /// Some level 1 <= m < |supp x| has a threshold tie.
  bool ties = false;
};

/// max_m ||G_m x|| / ||x||. Throws std::invalid_argument for x = 0.
template <class T>
QuasiGreedyResult<T> quasi_greedy_ratio(const BasicNormSpec<T>& spec, const SparseVector<T>& x);

template <class T>
struct AlmostGreedyEntry {
  std::size_t m = 0;
  T sigma_tilde{};
  T residual{};
  /// sigma_tilde - residual.
  T margin{};
  bool tie = false;
};

/// One entry per m = 0..|supp x|. Throws std::invalid_argument for x = 0.
template <class T>
std::vector<AlmostGreedyEntry<T>> almost_greedy_margin(const BasicNormSpec<T>& spec,
                                                       const SparseVector<T>& x);

}  // namespace greedybench

#endif  // GREEDYBENCH_CERTIFY_HPP_
