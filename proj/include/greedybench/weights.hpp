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

#ifndef GREEDYBENCH_WEIGHTS_HPP_
#define GREEDYBENCH_WEIGHTS_HPP_

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "greedybench/scalar.hpp"

namespace greedybench {

inline constexpr std::size_t kDefaultValidationHorizon = 10000;

/// A nonincreasing positive weight sequence w = (w_1, w_2, ...) with w_1 = 1.
///
/// Two representations are supported:
///  * eventually constant: an explicit prefix followed by a constant tail t,
///    so w_j = t for every j past the prefix. This is exact when T = Rational.
///  * generator: the primitive weight s_n = w_1 + ... + w_n is supplied as a
///    closed-form function together with a declared limit of w_j. The
///    sequence is validated by sampling up to a finite horizon.
///
/// Instances are immutable; all accessors are safe to call concurrently.
template <class T>
class BasicWeight {
 public:
  using Primitive = std::function<T(std::size_t)>;

  /// Throws std::invalid_argument unless w_1 = 1, the prefix is nonincreasing,
  /// ends at or above `tail`, and `tail` > 0. Trailing prefix entries equal to
  /// the tail are dropped, so equal weights have equal representations.
  static BasicWeight eventually_constant(std::vector<T> prefix, T tail);

  /// The constant weight (1, 1, 1, ...).
  static BasicWeight constant();

  /// Generator weight. `primitive(n)` must return s_n for n >= 0 with
  /// s_0 = 0. Monotonicity and positivity of w_j = s_j - s_{j-1} are checked
  /// for j <= horizon, and s_n / n must approach `limit` monotonically there.
  static BasicWeight from_primitive(std::string name, Primitive primitive, T limit,
                                    std::size_t horizon = kDefaultValidationHorizon);

  /// w_j for j >= 1.
  T operator[](std::size_t j) const;

  /// s_n = w_1 + ... + w_n, with s_0 = 0.
  T primitive(std::size_t n) const;

  /// s_n / n for n >= 1.
  T average(std::size_t n) const;

  /// w_inf = lim_j w_j.
  const T& tail_limit() const { return tail_; }

  bool is_eventually_constant() const { return !primitive_; }

  /// Length of the stored prefix (0 for generator weights). For an
  /// eventually-constant weight, w_j equals the tail for every j > prefix_length().
  std::size_t prefix_length() const { return prefix_.size(); }
  std::span<const T> prefix() const { return prefix_; }

  /// True for (1, 1, 1, ...).
  bool is_constant() const;

  /// Generator name, empty for eventually-constant weights.
  const std::string& generator_name() const { return generator_; }

 private:
  BasicWeight() = default;

  std::vector<T> prefix_;
  std::vector<T> partial_sums_;  // partial_sums_[k] = s_k for k <= prefix length
  T tail_{};
  Primitive primitive_;
  std::string generator_;
};

using Weight = BasicWeight<Rational>;
using RealWeight = BasicWeight<Real>;

/// Convenience for (1, omega, omega, ...).
template <class T>
BasicWeight<T> one_then_constant(const T& omega) {
  return BasicWeight<T>::eventually_constant({T(1)}, omega);
}

/// The Lorentz l_{2,1} weight, s_n = sqrt(n), declared limit 0.
RealWeight sqrt_primitive_weight(std::size_t horizon = kDefaultValidationHorizon);

/// Looks up a named generator weight. Known names: "sqrt_primitive".
RealWeight named_generator_weight(const std::string& name, const Real& declared_limit);

RealWeight to_real(const Weight& w);

}  // namespace greedybench

#endif  // GREEDYBENCH_WEIGHTS_HPP_
