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

#ifndef GREEDYBENCH_NORMS_HPP_
#define GREEDYBENCH_NORMS_HPP_

#include <string>
#include <variant>

#include "greedybench/polyhedral.hpp"
#include "greedybench/scalar.hpp"
#include "greedybench/vectors.hpp"
#include "greedybench/weights.hpp"

namespace greedybench {

template <class T>
struct PhiBreakdown {
  IndexSet e;
  T phi1{};
  T phi2{};
  T phi{};
};

/// (s_n / n) * sum_{j in E} |a_j| with n = |E|; zero for E empty.
template <class T>
T phi1(const BasicWeight<T>& w, const IndexSet& e, const SparseVector<T>& f);

/// Closed form of the sup over bijections: the larger of the two global-sign
/// branches  sum_k g_k w_{n+k} - w_inf * sum(losses), where g lists the
/// entries of sign sigma off E in nonincreasing order and the losses are the
/// remaining off-E moduli. For generator weights this is the limit value.
template <class T>
T phi2(const BasicWeight<T>& w, const IndexSet& e, const SparseVector<T>& f);

template <class T>
PhiBreakdown<T> phi(const BasicWeight<T>& w, const IndexSet& e, const SparseVector<T>& f);

enum class DwStrategy {
  /// Enumerate when at most kEnumerationLimit indices are free, else kGreedySets.
  kAuto,
  /// Every E with E_f in E in supp(f).
  kEnumerate,
  /// E = (p largest positive entries) + (q largest negative entries) for all p, q.
  kGreedySets,
};

inline constexpr std::size_t kEnumerationLimit = 8;

/// The maximizing set E and its Phi values. E is empty for f = 0.
template <class T>
PhiBreakdown<T> dw_norm_detail(const BasicWeight<T>& w, const SparseVector<T>& f,
                               DwStrategy strategy = DwStrategy::kAuto);

template <class T>
T dw_norm(const BasicWeight<T>& w, const SparseVector<T>& f,
          DwStrategy strategy = DwStrategy::kAuto);

/// sum_j b_j w_j over the nonincreasing rearrangement b.
template <class T>
T lorentz_norm(const BasicWeight<T>& w, const SparseVector<T>& f);

/// max_n (s_n / n) sum_{j <= n} b_j.
template <class T>
T marcinkiewicz_norm(const BasicWeight<T>& w, const SparseVector<T>& f);

template <class T>
struct SemiNormValue {
  T value{};
  /// Set for the constant weight, where the functional vanishes on
  /// mean-zero vectors.
  bool seminorm = false;
};

/// max{Psi(f), Psi(-f)} with Psi(f) = sum b_j^+ w_j - w_inf sum b_j^-.
template <class T>
SemiNormValue<T> signedsup_norm(const BasicWeight<T>& w, const SparseVector<T>& f);

template <class T>
struct DwNorm {
  BasicWeight<T> weight;
  DwStrategy strategy = DwStrategy::kAuto;
};

template <class T>
struct LorentzNorm {
  BasicWeight<T> weight;
};

template <class T>
struct MarcinkiewiczNorm {
  BasicWeight<T> weight;
};

template <class T>
struct SignedSupNorm {
  BasicWeight<T> weight;
};

struct PolyhedralNorm {
  FunctionalFamily family;
  std::string label;
};

template <class T>
using BasicNormSpec =
    std::variant<DwNorm<T>, LorentzNorm<T>, MarcinkiewiczNorm<T>, SignedSupNorm<T>, PolyhedralNorm>;

using NormSpec = BasicNormSpec<Rational>;
using RealNormSpec = BasicNormSpec<Real>;

/// ||f|| under the spec. Polyhedral specs throw std::invalid_argument when
/// supp(f) leaves {1..d}.
template <class T>
T evaluate(const BasicNormSpec<T>& spec, const SparseVector<T>& f);

template <class T>
std::string describe(const BasicNormSpec<T>& spec);

/// True for the rearrangement-invariant kinds (all but polyhedral).
template <class T>
bool is_symmetric(const BasicNormSpec<T>& spec);

/// The weight behind a weighted spec, nullptr for polyhedral.
template <class T>
const BasicWeight<T>* weight_of(const BasicNormSpec<T>& spec);

RealNormSpec to_real(const NormSpec& spec);

}  // namespace greedybench

#endif  // GREEDYBENCH_NORMS_HPP_
