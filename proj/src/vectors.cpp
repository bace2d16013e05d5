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

#include "greedybench/vectors.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace greedybench {

template <class T>
SparseVector<T>::SparseVector(Entries entries) {
  for (auto& [index, value] : entries) {
    if (index == 0) throw std::invalid_argument("vector indices are 1-based");
    if (value != 0) entries_.emplace_hint(entries_.end(), index, std::move(value));
  }
}

template <class T>
SparseVector<T> SparseVector<T>::unit(Index j, T coefficient) {
  return SparseVector(Entries{{j, std::move(coefficient)}});
}

template <class T>
SparseVector<T> SparseVector<T>::indicator(const IndexSet& indices) {
  Entries entries;
  for (Index j : indices) entries.emplace_hint(entries.end(), j, T(1));
  return SparseVector(std::move(entries));
}

template <class T>
SparseVector<T> SparseVector<T>::from_dense(const std::vector<T>& coordinates) {
  Entries entries;
  for (std::size_t k = 0; k < coordinates.size(); ++k) {
    entries.emplace_hint(entries.end(), k + 1, coordinates[k]);
  }
  return SparseVector(std::move(entries));
}

template <class T>
T SparseVector<T>::operator[](Index j) const {
  auto it = entries_.find(j);
  return it == entries_.end() ? T(0) : it->second;
}

template <class T>
IndexSet SparseVector<T>::support() const {
  IndexSet s;
  for (const auto& entry : entries_) s.insert(s.end(), entry.first);
  return s;
}

template <class T>
Index SparseVector<T>::max_index() const {
  return entries_.empty() ? 0 : entries_.rbegin()->first;
}

template <class T>
T SparseVector<T>::sup_norm() const {
  T best(0);
  for (const auto& entry : entries_) {
    T m = abs_value(entry.second);
    if (m > best) best = std::move(m);
  }
  return best;
}

template <class T>
T SparseVector<T>::l1_norm() const {
  T total(0);
  for (const auto& entry : entries_) total += abs_value(entry.second);
  return total;
}

template <class T>
std::vector<T> SparseVector<T>::to_dense(std::size_t d) const {
  if (max_index() > d) {
    throw std::invalid_argument("vector support exceeds dimension " + std::to_string(d));
  }
  std::vector<T> dense(d, T(0));
  for (const auto& [index, value] : entries_) dense[index - 1] = value;
  return dense;
}

template <class T>
SparseVector<T> SparseVector<T>::operator-() const {
  SparseVector out = *this;
  for (auto& entry : out.entries_) entry.second = -entry.second;
  return out;
}

template <class T>
SparseVector<T>& SparseVector<T>::operator+=(const SparseVector& other) {
  for (const auto& [index, value] : other.entries_) {
    auto [it, inserted] = entries_.try_emplace(index, value);
    if (!inserted) {
      it->second += value;
      if (it->second == 0) entries_.erase(it);
    }
  }
  return *this;
}

template <class T>
SparseVector<T>& SparseVector<T>::operator-=(const SparseVector& other) {
  return *this += -other;
}

template <class T>
SparseVector<T>& SparseVector<T>::operator*=(const T& scalar) {
  if (scalar == 0) {
    entries_.clear();
    return *this;
  }
  for (auto& entry : entries_) entry.second *= scalar;
  return *this;
}

SignedSet::SignedSet(std::vector<Index> indices, std::vector<int> signs)
    : indices_(std::move(indices)), signs_(std::move(signs)) {
  if (indices_.size() != signs_.size()) {
    throw std::invalid_argument("signed set: one sign per index required");
  }
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    if (indices_[k] == 0) throw std::invalid_argument("signed set: indices are 1-based");
    if (k > 0 && indices_[k - 1] >= indices_[k]) {
      throw std::invalid_argument("signed set: indices must be strictly increasing");
    }
    if (signs_[k] != 1 && signs_[k] != -1) {
      throw std::invalid_argument("signed set: signs must be +1 or -1");
    }
  }
}

SignedSet::SignedSet(const IndexSet& indices)
    : SignedSet(std::vector<Index>(indices.begin(), indices.end()),
                std::vector<int>(indices.size(), 1)) {}

template <class T>
IndexSet max_modulus_set(const SparseVector<T>& f) {
  if (f.is_zero()) throw std::invalid_argument("E_f is undefined for the zero vector");
  const T top = f.sup_norm();
  IndexSet out;
  for (const auto& [index, value] : f.entries()) {
    if (abs_value(value) == top) out.insert(out.end(), index);
  }
  return out;
}

template <class T>
std::vector<T> nonincreasing_rearrangement(const SparseVector<T>& f) {
  std::vector<T> values;
  values.reserve(f.support_size());
  for (const auto& entry : f.entries()) values.push_back(abs_value(entry.second));
  std::sort(values.begin(), values.end(), [](const T& a, const T& b) { return a > b; });
  return values;
}

template <class T>
SparseVector<T> project(const SparseVector<T>& f, const IndexSet& a) {
  typename SparseVector<T>::Entries kept;
  for (const auto& [index, value] : f.entries()) {
    if (a.contains(index)) kept.emplace_hint(kept.end(), index, value);
  }
  return SparseVector<T>(std::move(kept));
}

template <class T>
SparseVector<T> average_project(const SparseVector<T>& f, const IndexSet& a) {
  if (a.empty()) throw std::invalid_argument("average projection needs a nonempty set");
  T total(0);
  for (Index j : a) total += f[j];
  const T mean = total / T(static_cast<unsigned long>(a.size()));
  typename SparseVector<T>::Entries entries;
  for (Index j : a) entries.emplace_hint(entries.end(), j, mean);
  return SparseVector<T>(std::move(entries));
}

template <class T>
SparseVector<T> permute(const SparseVector<T>& f, const std::map<Index, Index>& pi) {
  std::map<Index, Index> inverse;
  for (const auto& [from, to] : pi) {
    if (from == 0 || to == 0) throw std::invalid_argument("permutation indices are 1-based");
    if (!inverse.emplace(to, from).second) {
      throw std::invalid_argument("permutation is not injective");
    }
  }
  for (const auto& entry : inverse) {
    if (!pi.contains(entry.first)) {
      throw std::invalid_argument("permutation does not map its domain onto itself");
    }
  }
  typename SparseVector<T>::Entries entries;
  for (const auto& [index, value] : f.entries()) {
    auto it = inverse.find(index);
    entries.emplace(it == inverse.end() ? index : it->second, value);
  }
  return SparseVector<T>(std::move(entries));
}

SparseVector<Real> to_real(const SparseVector<Rational>& f) {
  SparseVector<Real>::Entries entries;
  for (const auto& [index, value] : f.entries()) entries.emplace_hint(entries.end(), index, to_real(value));
  return SparseVector<Real>(std::move(entries));
}

IndexSet set_intersection(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

#define GREEDYBENCH_INSTANTIATE_VECTORS(T)                                             \
  template class SparseVector<T>;                                                     \
  template IndexSet max_modulus_set(const SparseVector<T>&);                          \
  template std::vector<T> nonincreasing_rearrangement(const SparseVector<T>&);        \
  template SparseVector<T> project(const SparseVector<T>&, const IndexSet&);          \
  template SparseVector<T> average_project(const SparseVector<T>&, const IndexSet&);  \
  template SparseVector<T> permute(const SparseVector<T>&, const std::map<Index, Index>&);

GREEDYBENCH_INSTANTIATE_VECTORS(Rational)
GREEDYBENCH_INSTANTIATE_VECTORS(Real)

#undef GREEDYBENCH_INSTANTIATE_VECTORS

}  // namespace greedybench
