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

#include "greedybench/random.hpp"

#include <algorithm>
#include <stdexcept>

namespace greedybench {
namespace {

std::vector<Index> distinct_indices(Rng& rng, std::size_t count, std::size_t window) {
  if (count > window) throw std::invalid_argument("more indices requested than the window holds");
  std::vector<Index> pool(window);
  for (std::size_t k = 0; k < window; ++k) pool[k] = k + 1;
  // Partial Fisher-Yates.
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t pick = static_cast<std::size_t>(rng.between(k, window - 1));
    std::swap(pool[k], pool[pick]);
  }
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace

std::uint64_t Rng::between(std::uint64_t lo, std::uint64_t hi) {
  if (hi < lo) throw std::invalid_argument("Rng::between: empty range");
  const std::uint64_t span = hi - lo + 1;
  return span == 0 ? next() : lo + next() % span;
}

Rational Rng::rational(unsigned max_den, const Rational& bound, bool signed_value) {
  if (max_den == 0 || !(bound > 0)) throw std::invalid_argument("Rng::rational: bad range");
  const unsigned long q = between(1, max_den);
  // Largest p with p/q <= bound.
  mpz_class top = bound.get_num() * q / bound.get_den();
  if (top < 1) top = 1;
  const unsigned long p = between(1, top.get_ui());
  Rational value(static_cast<long>(p), q);
  value.canonicalize();
  if (signed_value && coin()) value = -value;
  return value;
}

Weight random_weight(Rng& rng, std::size_t max_prefix, unsigned max_den) {
  const std::size_t extra = static_cast<std::size_t>(rng.between(0, max_prefix));
  std::vector<Rational> values;
  for (std::size_t k = 0; k < extra + 1; ++k) values.push_back(rng.rational(max_den, Rational(1), false));
  std::sort(values.begin(), values.end(), [](const Rational& a, const Rational& b) { return a > b; });
  std::vector<Rational> prefix{Rational(1)};
  prefix.insert(prefix.end(), values.begin(), values.end() - 1);
  return Weight::eventually_constant(std::move(prefix), values.back());
}

SparseVector<Rational> random_vector(Rng& rng, std::size_t max_support, std::size_t window,
                                     unsigned max_den) {
  const std::size_t count = static_cast<std::size_t>(rng.between(1, max_support));
  SparseVector<Rational>::Entries entries;
  for (Index j : distinct_indices(rng, count, window)) {
    entries.emplace(j, rng.rational(max_den, Rational(1), true));
  }
  return SparseVector<Rational>(std::move(entries));
}

SparseVector<Rational> random_nonnegative_vector(Rng& rng, std::size_t max_support,
                                                 std::size_t window, unsigned max_den) {
  const std::size_t count = static_cast<std::size_t>(rng.between(1, max_support));
  SparseVector<Rational>::Entries entries;
  for (Index j : distinct_indices(rng, count, window)) {
    entries.emplace(j, rng.rational(max_den, Rational(1), false));
  }
  return SparseVector<Rational>(std::move(entries));
}

SparseVector<Rational> random_tie_free_vector(Rng& rng, std::size_t max_support,
                                              std::size_t window, unsigned max_den) {
  const std::size_t count = static_cast<std::size_t>(rng.between(1, max_support));
  std::vector<Rational> moduli;
  while (moduli.size() < count) {
    Rational m = rng.rational(max_den, Rational(1), false);
    if (std::find(moduli.begin(), moduli.end(), m) == moduli.end()) moduli.push_back(std::move(m));
  }
  SparseVector<Rational>::Entries entries;
  std::size_t k = 0;
  for (Index j : distinct_indices(rng, count, window)) {
    Rational value = moduli[k++];
    if (rng.coin()) value = -value;
    entries.emplace(j, std::move(value));
  }
  return SparseVector<Rational>(std::move(entries));
}

PropertyAInstance<Rational> random_property_a_instance(Rng& rng, std::size_t window,
                                                       unsigned max_den) {
  if (window < 2) throw std::invalid_argument("Property (A) instances need a window of 2 or more");
  const std::size_t b_size = static_cast<std::size_t>(rng.between(0, std::min<std::size_t>(3, window / 2)));
  const std::size_t a_size = static_cast<std::size_t>(rng.between(0, b_size));
  const std::size_t f_size =
      static_cast<std::size_t>(rng.between(0, std::min<std::size_t>(4, window - a_size - b_size)));
  std::vector<Index> picked = distinct_indices(rng, a_size + b_size + f_size, window);
  // Shuffle the picked indices so A, B and supp(f) interleave.
  for (std::size_t k = picked.size(); k > 1; --k) {
    std::swap(picked[k - 1], picked[static_cast<std::size_t>(rng.between(0, k - 1))]);
  }
  auto take = [&picked](std::size_t from, std::size_t count) {
    std::vector<Index> out(picked.begin() + static_cast<std::ptrdiff_t>(from),
                           picked.begin() + static_cast<std::ptrdiff_t>(from + count));
    std::sort(out.begin(), out.end());
    return out;
  };
  auto signs = [&rng](std::size_t count) {
    std::vector<int> out(count);
    for (int& s : out) s = rng.sign();
    return out;
  };
  const std::vector<Index> a = take(0, a_size);
  const std::vector<Index> b = take(a_size, b_size);
  const std::vector<Index> f_indices = take(a_size + b_size, f_size);
  SparseVector<Rational>::Entries entries;
  for (Index j : f_indices) entries.emplace(j, rng.rational(max_den, Rational(1), true));
  return PropertyAInstance<Rational>{SparseVector<Rational>(std::move(entries)),
                                     SignedSet(a, signs(a.size())), SignedSet(b, signs(b.size()))};
}

IndexSet random_subset(Rng& rng, const IndexSet& pool) {
  IndexSet out;
  for (Index j : pool) {
    if (rng.coin()) out.insert(j);
  }
  return out;
}

}  // namespace greedybench
