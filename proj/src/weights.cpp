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

#include "greedybench/weights.hpp"

#include <stdexcept>
#include <utility>

namespace greedybench {

template <class T>
BasicWeight<T> BasicWeight<T>::eventually_constant(std::vector<T> prefix, T tail) {
  if constexpr (!is_exact_v<T>) ensure_precision();
  if (!(tail > 0)) {
    throw std::invalid_argument("eventually-constant weight needs a positive tail");
  }
  while (!prefix.empty() && prefix.back() == tail) prefix.pop_back();
  const T first = prefix.empty() ? tail : prefix.front();
  if (first != 1) throw std::invalid_argument("weight must satisfy w_1 = 1");
  for (std::size_t j = 0; j + 1 < prefix.size(); ++j) {
    if (prefix[j] < prefix[j + 1]) {
      throw std::invalid_argument("weight prefix must be nonincreasing");
    }
  }
  if (!prefix.empty() && prefix.back() < tail) {
    throw std::invalid_argument("weight prefix must end at or above the tail");
  }
  BasicWeight w;
  w.prefix_ = std::move(prefix);
  w.tail_ = std::move(tail);
  w.partial_sums_.reserve(w.prefix_.size() + 1);
  w.partial_sums_.emplace_back(0);
  for (const T& v : w.prefix_) w.partial_sums_.push_back(w.partial_sums_.back() + v);
  return w;
}

template <class T>
BasicWeight<T> BasicWeight<T>::constant() {
  return eventually_constant({}, T(1));
}

template <class T>
BasicWeight<T> BasicWeight<T>::from_primitive(std::string name, Primitive primitive, T limit,
                                              std::size_t horizon) {
  if constexpr (!is_exact_v<T>) ensure_precision();
  if (!primitive) throw std::invalid_argument("generator weight needs a primitive");
  if (limit < 0) throw std::invalid_argument("declared limit must be nonnegative");
  if (horizon < 2) throw std::invalid_argument("validation horizon must be at least 2");
  if (primitive(0) != 0) throw std::invalid_argument("generator must satisfy s_0 = 0");
  T previous_sum = primitive(1);
  if (previous_sum != 1) throw std::invalid_argument("generator must satisfy w_1 = 1");
  T previous_weight = previous_sum;
  T previous_gap = abs_value(T(previous_sum - limit));
  for (std::size_t n = 2; n <= horizon; ++n) {
    T sum = primitive(n);
    T weight = sum - previous_sum;
    if (!(weight > 0)) {
      throw std::invalid_argument("generator weight is not positive at j = " + std::to_string(n));
    }
    if (weight > previous_weight) {
      throw std::invalid_argument("generator weight increases at j = " + std::to_string(n));
    }
    if (weight < limit) {
      throw std::invalid_argument("generator weight drops below its declared limit at j = " +
                                  std::to_string(n));
    }
    T gap = abs_value(T(sum / T(n) - limit));
    if (gap > previous_gap) {
      throw std::invalid_argument("s_n/n does not approach the declared limit monotonically");
    }
    previous_sum = std::move(sum);
    previous_weight = std::move(weight);
    previous_gap = std::move(gap);
  }
  BasicWeight w;
  w.tail_ = std::move(limit);
  w.primitive_ = std::move(primitive);
  w.generator_ = std::move(name);
  return w;
}

template <class T>
T BasicWeight<T>::operator[](std::size_t j) const {
  if (j == 0) throw std::out_of_range("weights are indexed from 1");
  if (primitive_) return primitive_(j) - primitive_(j - 1);
  return j <= prefix_.size() ? prefix_[j - 1] : tail_;
}

template <class T>
T BasicWeight<T>::primitive(std::size_t n) const {
  if (primitive_) return primitive_(n);
  const std::size_t p = prefix_.size();
  if (n <= p) return partial_sums_[n];
  return partial_sums_[p] + T(static_cast<unsigned long>(n - p)) * tail_;
}

template <class T>
T BasicWeight<T>::average(std::size_t n) const {
  if (n == 0) throw std::out_of_range("s_n / n is undefined for n = 0");
  return primitive(n) / T(static_cast<unsigned long>(n));
}

template <class T>
bool BasicWeight<T>::is_constant() const {
  return !primitive_ && prefix_.empty() && tail_ == 1;
}

template class BasicWeight<Rational>;
template class BasicWeight<Real>;

RealWeight sqrt_primitive_weight(std::size_t horizon) {
  ensure_precision();
  return RealWeight::from_primitive(
      "sqrt_primitive",
      [](std::size_t n) { return boost::multiprecision::sqrt(Real(static_cast<unsigned long>(n))); },
      Real(0), horizon);
}

RealWeight named_generator_weight(const std::string& name, const Real& declared_limit) {
  if (name == "sqrt_primitive") {
    ensure_precision();
    return RealWeight::from_primitive(
        name,
        [](std::size_t n) { return boost::multiprecision::sqrt(Real(static_cast<unsigned long>(n))); },
        declared_limit);
  }
  throw std::invalid_argument("unknown generator weight '" + name + "'");
}

RealWeight to_real(const Weight& w) {
  if (!w.is_eventually_constant()) {
    return RealWeight::from_primitive(
        w.generator_name(), [w](std::size_t n) { return to_real(w.primitive(n)); },
        to_real(w.tail_limit()));
  }
  std::vector<Real> prefix;
  prefix.reserve(w.prefix_length());
  for (const Rational& v : w.prefix()) prefix.push_back(to_real(v));
  return RealWeight::eventually_constant(std::move(prefix), to_real(w.tail_limit()));
}

}  // namespace greedybench
