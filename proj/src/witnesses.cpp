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

#include "greedybench/witnesses.hpp"

#include <stdexcept>

namespace greedybench {
namespace {

template <class T>
SparseVector<T> block_vector(std::size_t n, const T& a_value, const T& b_value) {
  if (n == 0) throw std::invalid_argument("block vectors need n >= 1");
  typename SparseVector<T>::Entries entries;
  entries.emplace(1, T(1));
  for (std::size_t j = 2; j <= n + 1; ++j) entries.emplace(j, a_value);
  for (std::size_t j = n + 2; j <= 2 * n + 1; ++j) entries.emplace(j, b_value);
  return SparseVector<T>(std::move(entries));
}

void require_dimension(std::size_t d) {
  if (d < 3) throw std::invalid_argument("bad-dual vectors need d >= 3");
}

}  // namespace

template <class T>
SparseVector<T> renorming_f(std::size_t n, const T& omega) {
  return block_vector(n, omega, T(0));
}

template <class T>
SparseVector<T> renorming_g(std::size_t n, const T& omega) {
  return block_vector(n, omega, T(-omega));
}

template <class T>
SparseVector<T> lattice_h(std::size_t n, const T& omega) {
  return block_vector(n, omega, omega);
}

Rational renorming_f_norm(std::size_t n, const Rational& omega) {
  return 1 + Rational(static_cast<unsigned long>(n)) * omega * omega;
}

Rational renorming_g_norm(std::size_t n, const Rational& omega) {
  const Rational nn(static_cast<unsigned long>(n));
  const Rational lead = 1 + nn * omega;
  Rational candidate = lead * lead / (nn + 1) + nn * omega * omega;
  return candidate > 1 ? candidate : Rational(1);
}

Real omega_n(std::size_t n) {
  ensure_precision();
  return 1 / (1 + boost::multiprecision::sqrt(Real(static_cast<unsigned long>(2 * n + 2))));
}

Real kn_closed_form(std::size_t n) {
  const Real omega = omega_n(n);
  const Real nn(static_cast<unsigned long>(n));
  return 1 + (1 - 2 * omega) * nn / (2 * nn + 1);
}

Real lattice_closed_form(std::size_t n) {
  const Real omega = omega_n(n);
  return 1 + 2 * Real(static_cast<unsigned long>(n)) * omega * omega;
}

SparseVector<Rational> remark_f(const Rational& a) {
  return SparseVector<Rational>{{1, Rational(1)}, {2, a}};
}

SparseVector<Rational> remark_g(const Rational& a) {
  return SparseVector<Rational>{{1, Rational(1)}, {2, a}, {3, Rational(-a)}};
}

std::vector<Rational> bad_dual_g(std::size_t d) {
  require_dimension(d);
  std::vector<Rational> g(d, Rational(1));
  g[d - 1] = Rational(-1, 2);
  return g;
}

std::vector<Rational> bad_dual_h_star(std::size_t d) {
  require_dimension(d);
  std::vector<Rational> h(d, Rational(-1));
  h[0] = 1;
  h[d - 1] = 0;
  return h;
}

std::vector<Rational> bad_dual_g_star(std::size_t d) {
  require_dimension(d);
  std::vector<Rational> g(d, Rational(1));
  g[d - 1] = 0;
  return g;
}

template SparseVector<Rational> renorming_f(std::size_t, const Rational&);
template SparseVector<Real> renorming_f(std::size_t, const Real&);
template SparseVector<Rational> renorming_g(std::size_t, const Rational&);
template SparseVector<Real> renorming_g(std::size_t, const Real&);
template SparseVector<Rational> lattice_h(std::size_t, const Rational&);
template SparseVector<Real> lattice_h(std::size_t, const Real&);

}  // namespace greedybench
