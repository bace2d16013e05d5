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

// Named vectors and closed forms for the counterexample families.
// A_n = {2, ..., n+1}, B_n = {n+2, ..., 2n+1}.

#ifndef GREEDYBENCH_WITNESSES_HPP_
#define GREEDYBENCH_WITNESSES_HPP_

#include <cstddef>
#include <vector>

#include "greedybench/scalar.hpp"
#include "greedybench/vectors.hpp"

namespace greedybench {

/// e_1 + omega 1_{A_n}.
template <class T>
SparseVector<T> renorming_f(std::size_t n, const T& omega);

/// e_1 + omega 1_{A_n} - omega 1_{B_n}.
template <class T>
SparseVector<T> renorming_g(std::size_t n, const T& omega);

/// e_1 + omega (1_{A_n} + 1_{B_n}).
template <class T>
SparseVector<T> lattice_h(std::size_t n, const T& omega);

/// 1 + n omega^2.
Rational renorming_f_norm(std::size_t n, const Rational& omega);

/// max{1, (1 + n omega)^2 / (n + 1) + n omega^2}.
Rational renorming_g_norm(std::size_t n, const Rational& omega);

/// omega_n = 1 / (1 + sqrt(2n + 2)).
Real omega_n(std::size_t n);

/// K_n = 1 + (1 - 2 omega_n) n / (2n + 1).
Real kn_closed_form(std::size_t n);

/// 1 + 2 n omega_n^2.
Real lattice_closed_form(std::size_t n);

/// e_1 + a e_2 and e_1 + a e_2 - a e_3.
SparseVector<Rational> remark_f(const Rational& a);
SparseVector<Rational> remark_g(const Rational& a);

/// sum_{j<d} e_j - e_d / 2, with norm d - 7/6 in the bad-dual space.
std::vector<Rational> bad_dual_g(std::size_t d);

/// e_1^* - sum_{1<j<d} e_j^*.
std::vector<Rational> bad_dual_h_star(std::size_t d);

/// sum_{j<d} e_j^*.
std::vector<Rational> bad_dual_g_star(std::size_t d);

}  // namespace greedybench

#endif  // GREEDYBENCH_WITNESSES_HPP_
