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

// Seeded instance generators. Draws use plain modulo reduction of mt19937_64
// output so sequences are identical across standard libraries.

#ifndef GREEDYBENCH_RANDOM_HPP_
#define GREEDYBENCH_RANDOM_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "greedybench/certify.hpp"
#include "greedybench/scalar.hpp"
#include "greedybench/vectors.hpp"
#include "greedybench/weights.hpp"

namespace greedybench {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform-ish integer in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi);
  bool coin() { return (next() & 1u) != 0; }
  int sign() { return coin() ? -1 : 1; }

  /// p/q with 1 <= q <= max_den and 0 < p/q <= bound (times a random sign
  /// when signed_value is set).
  Rational rational(unsigned max_den, const Rational& bound, bool signed_value);

 private:
  std::mt19937_64 engine_;
};

/// Eventually-constant weight: w_1 = 1, a nonincreasing prefix of up to
/// max_prefix further values with denominators <= max_den, positive tail.
Weight random_weight(Rng& rng, std::size_t max_prefix = 3, unsigned max_den = 6);

/// Vector with 1..max_support nonzero entries at distinct indices in
/// {1..window}, |entries| <= 1, denominators <= max_den.
SparseVector<Rational> random_vector(Rng& rng, std::size_t max_support, std::size_t window,
                                     unsigned max_den = 6);

/// Same, with every entry positive.
SparseVector<Rational> random_nonnegative_vector(Rng& rng, std::size_t max_support,
                                                 std::size_t window, unsigned max_den = 6);

/// A vector whose moduli are pairwise distinct, so no greedy level ties.
SparseVector<Rational> random_tie_free_vector(Rng& rng, std::size_t max_support,
                                              std::size_t window, unsigned max_den = 12);

/// A valid Property (A) instance inside {1..window}.
PropertyAInstance<Rational> random_property_a_instance(Rng& rng, std::size_t window,
                                                       unsigned max_den = 6);

/// Random subset of `pool`.
IndexSet random_subset(Rng& rng, const IndexSet& pool);

}  // namespace greedybench

#endif  // GREEDYBENCH_RANDOM_HPP_
