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

#ifndef GREEDYBENCH_VECTORS_HPP_
#define GREEDYBENCH_VECTORS_HPP_

#include <cstddef>
#include <initializer_list>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "greedybench/scalar.hpp"

namespace greedybench {

/// Coordinates are 1-based.
using Index = std::size_t;
using IndexSet = std::set<Index>;

/// A finitely supported real vector. Zero entries are never stored.
template <class T>
class SparseVector {
 public:
  using Entries = std::map<Index, T>;

  SparseVector() = default;
  explicit SparseVector(Entries entries);
  SparseVector(std::initializer_list<std::pair<const Index, T>> entries)
      : SparseVector(Entries(entries)) {}

  static SparseVector unit(Index j, T coefficient = T(1));

  /// The indicator 1_A.
  static SparseVector indicator(const IndexSet& indices);

  /// Dense 1..d coordinates.
  static SparseVector from_dense(const std::vector<T>& coordinates);

  /// Coefficient at j (zero when j is off the support).
  T operator[](Index j) const;

  const Entries& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }
  IndexSet support() const;
  /// Largest index in the support, 0 for the zero vector.
  Index max_index() const;

  T sup_norm() const;
  T l1_norm() const;

  /// Dense coordinates 1..d. Throws std::invalid_argument when the support
  /// reaches past d.
  std::vector<T> to_dense(std::size_t d) const;

  SparseVector operator-() const;
  SparseVector& operator+=(const SparseVector& other);
  SparseVector& operator-=(const SparseVector& other);
  SparseVector& operator*=(const T& scalar);

  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
  friend SparseVector operator*(const T& s, SparseVector a) { return a *= s; }
  friend bool operator==(const SparseVector& a, const SparseVector& b) {
    return a.entries_ == b.entries_;
  }

 private:
  Entries entries_;
};

/// Signs in {+1, -1} attached to a strictly increasing index list.
class SignedSet {
 public:
  SignedSet() = default;
  /// Throws std::invalid_argument on unsorted/duplicate indices, a zero index,
  /// mismatched lengths or a sign outside {+1, -1}.
  SignedSet(std::vector<Index> indices, std::vector<int> signs);
  /// All signs +1.
  explicit SignedSet(const IndexSet& indices);

  const std::vector<Index>& indices() const { return indices_; }
  const std::vector<int>& signs() const { return signs_; }
  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  IndexSet index_set() const { return IndexSet(indices_.begin(), indices_.end()); }

  /// 1_{eps,A} = sum of eps_n e_n.
  template <class T>
  SparseVector<T> indicator() const {
    typename SparseVector<T>::Entries entries;
    for (std::size_t k = 0; k < indices_.size(); ++k) entries.emplace(indices_[k], T(signs_[k]));
    return SparseVector<T>(std::move(entries));
  }

 private:
  std::vector<Index> indices_;
  std::vector<int> signs_;
};

/// E_f: the indices where |a_j| attains the sup norm. Throws for f = 0.
template <class T>
IndexSet max_modulus_set(const SparseVector<T>& f);

/// |a_j| sorted in descending order, one entry per support index.
template <class T>
std::vector<T> nonincreasing_rearrangement(const SparseVector<T>& f);

/// S_A f.
template <class T>
SparseVector<T> project(const SparseVector<T>& f, const IndexSet& a);

/// Every coordinate in A replaced by the mean of f over A; zero elsewhere.
/// Throws for empty A.
template <class T>
SparseVector<T> average_project(const SparseVector<T>& f, const IndexSet& a);

/// f_pi = (a_{pi(j)})_j for a finitely supported permutation given as a map
/// j -> pi(j); indices absent from the map are fixed.
template <class T>
SparseVector<T> permute(const SparseVector<T>& f, const std::map<Index, Index>& pi);

SparseVector<Real> to_real(const SparseVector<Rational>& f);

IndexSet set_intersection(const IndexSet& a, const IndexSet& b);
IndexSet set_union(const IndexSet& a, const IndexSet& b);

}  // namespace greedybench

#endif  // GREEDYBENCH_VECTORS_HPP_
