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

#include "greedybench/greedy.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>

namespace greedybench {
namespace {

// Calls visit(A) for every A in `pool` with |A| <= m, in order of size and
// then lexicographically.
void for_each_subset(const std::vector<Index>& pool, std::size_t m,
                     const std::function<void(const IndexSet&)>& visit) {
  const std::size_t top = std::min(m, pool.size());
  std::vector<std::size_t> pick;
  for (std::size_t k = 0; k <= top; ++k) {
    pick.resize(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    for (;;) {
      IndexSet a;
      for (std::size_t i : pick) a.insert(pool[i]);
      visit(a);
      // Next k-combination in lexicographic order.
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == pool.size() - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
}

}  // namespace

template <class T>
std::vector<Index> greedy_ordering(const SparseVector<T>& x) {
  std::vector<std::pair<Index, T>> entries;
  entries.reserve(x.support_size());
  for (const auto& [index, value] : x.entries()) entries.emplace_back(index, abs_value(value));
  std::stable_sort(entries.begin(), entries.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  std::vector<Index> order;
  order.reserve(entries.size());
  for (const auto& entry : entries) order.push_back(entry.first);
  return order;
}

template <class T>
SparseVector<T> greedy_approx(const SparseVector<T>& x, std::size_t m) {
  const std::vector<Index> order = greedy_ordering(x);
  const std::size_t keep = std::min(m, order.size());
  return project(x, IndexSet(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(keep)));
}

template <class T>
bool has_threshold_tie(const SparseVector<T>& x, std::size_t m) {
  if (m == 0 || m >= x.support_size()) return false;
  const std::vector<Index> order = greedy_ordering(x);
  return abs_value(x[order[m - 1]]) == abs_value(x[order[m]]);
}

template <class T>
SigmaTilde<T> sigma_tilde(const SparseVector<T>& x, std::size_t m, const BasicNormSpec<T>& spec) {
  const IndexSet supp = x.support();
  const std::vector<Index> pool(supp.begin(), supp.end());
  SigmaTilde<T> best;
  bool have = false;
  for_each_subset(pool, m, [&](const IndexSet& a) {
    T value = evaluate(spec, x - project(x, a));
    if (!have || value < best.value || (value == best.value && a < best.support)) {
      best.value = std::move(value);
      best.support = a;
      have = true;
    }
  });
  return best;
}

SigmaResult sigma(const SparseVector<Rational>& x, std::size_t m, const NormSpec& spec,
                  const SigmaOptions& options) {
  ensure_precision();
  if (!(options.tolerance > 0)) throw std::invalid_argument("sigma: tolerance must be positive");
  const RealNormSpec real_spec = to_real(spec);
  const SparseVector<Real> target = to_real(x);
  const IndexSet window = options.window.value_or(x.support());
  const std::vector<Index> pool(window.begin(), window.end());

  SigmaResult best{to_real(evaluate(spec, x)), {}, {}, options.tolerance};
  if (target.is_zero()) return best;

  const Real radius = 2 * std::max(best.value, target.sup_norm());
  const Real inner_tol = options.tolerance / 10;
  const Real inv_phi = (boost::multiprecision::sqrt(Real(5)) - 1) / 2;

  for_each_subset(pool, m, [&](const IndexSet& a) {
    SparseVector<Real> alpha = project(target, a);
    auto objective = [&](const SparseVector<Real>& coefficients) {
      return evaluate(real_spec, target - coefficients);
    };
    // The seed is rounded once from the exact residual so the result stays
    // below sigma_tilde.
    Real current = std::min(objective(alpha), to_real(evaluate(spec, x - project(x, a))));
    for (std::size_t cycle = 0; cycle < options.max_cycles && !a.empty(); ++cycle) {
      const Real cycle_start = current;
      for (Index j : a) {
        auto at = [&](const Real& t) {
          SparseVector<Real> trial = alpha;
          trial -= SparseVector<Real>::unit(j, trial[j]);
          trial += SparseVector<Real>::unit(j, t);
          return objective(trial);
        };
        Real lo = -radius;
        Real hi = radius;
        Real c = hi - inv_phi * (hi - lo);
        Real d = lo + inv_phi * (hi - lo);
        Real fc = at(c);
        Real fd = at(d);
        while (hi - lo > inner_tol) {
          if (fc <= fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = at(c);
          } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = at(d);
          }
        }
        const Real t = (lo + hi) / 2;
        Real value = at(t);
        if (value < current) {
          alpha -= SparseVector<Real>::unit(j, alpha[j]);
          alpha += SparseVector<Real>::unit(j, t);
          current = std::move(value);
        }
      }
      if (cycle_start - current < options.tolerance) break;
    }
    if (current < best.value) {
      best.value = std::move(current);
      best.alpha = std::move(alpha);
      best.support = a;
    }
  });
  return best;
}

template <class T>
GreedyTrace<T> trace(const SparseVector<T>& x, const BasicNormSpec<T>& spec) {
  GreedyTrace<T> out;
  out.x = x;
  out.ordering = greedy_ordering(x);
  out.residual_norms.reserve(out.ordering.size() + 1);
  for (std::size_t m = 0; m <= out.ordering.size(); ++m) {
    out.residual_norms.push_back(evaluate(spec, x - greedy_approx(x, m)));
  }
  return out;
}

#define GREEDYBENCH_INSTANTIATE_GREEDY(T)                                                     \
  template std::vector<Index> greedy_ordering(const SparseVector<T>&);                       \
  template SparseVector<T> greedy_approx(const SparseVector<T>&, std::size_t);               \
  template bool has_threshold_tie(const SparseVector<T>&, std::size_t);                      \
  template SigmaTilde<T> sigma_tilde(const SparseVector<T>&, std::size_t,                    \
                                     const BasicNormSpec<T>&);                               \
  template GreedyTrace<T> trace(const SparseVector<T>&, const BasicNormSpec<T>&);

GREEDYBENCH_INSTANTIATE_GREEDY(Rational)
GREEDYBENCH_INSTANTIATE_GREEDY(Real)

#undef GREEDYBENCH_INSTANTIATE_GREEDY

}  // namespace greedybench
