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

#include "greedybench/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace greedybench::oracle {
namespace {

struct SlotClass {
  Rational weight;
  std::size_t count;
};

// Slots first..last grouped by weight value. Slots holding the same weight
// are interchangeable, so only how many of each class are used matters.
std::vector<SlotClass> slot_classes(const Weight& w, std::size_t first, std::size_t last) {
  std::vector<SlotClass> classes;
  for (std::size_t s = first; s <= last; ++s) {
    Rational value = w[s];
    auto it = std::find_if(classes.begin(), classes.end(),
                           [&value](const SlotClass& c) { return c.weight == value; });
    if (it == classes.end()) {
      classes.push_back({std::move(value), 1});
    } else {
      ++it->count;
    }
  }
  return classes;
}

class PlacementSearch {
 public:
  PlacementSearch(std::vector<Rational> values, std::vector<SlotClass> classes)
      : values_(std::move(values)), classes_(std::move(classes)) {}

  // max |sum| over all placements.
  Rational run() {
    if (values_.empty()) return Rational(0);
    std::vector<std::size_t> used(classes_.size(), 0);
    const auto& [hi, lo] = extremes(used, 0);
    return hi > -lo ? hi : Rational(-lo);
  }

 private:
  // (max, min) of the sum of values_[level..] over placements into the
  // slots left free by `used`.
  std::pair<Rational, Rational> extremes(std::vector<std::size_t>& used, std::size_t level) {
    if (level == values_.size()) return {Rational(0), Rational(0)};
    auto cached = memo_.find(used);
    if (cached != memo_.end()) return cached->second;
    std::pair<Rational, Rational> best;
    bool have = false;
    for (std::size_t k = 0; k < classes_.size(); ++k) {
      if (used[k] == classes_[k].count) continue;
      ++used[k];
      const auto sub = extremes(used, level + 1);
      --used[k];
      const Rational here = values_[level] * classes_[k].weight;
      Rational hi = here + sub.first;
      Rational lo = here + sub.second;
      if (!have) {
        best = {std::move(hi), std::move(lo)};
        have = true;
      } else {
        if (hi > best.first) best.first = std::move(hi);
        if (lo < best.second) best.second = std::move(lo);
      }
    }
    if (!have) throw std::logic_error("placement search ran out of slots");
    memo_.emplace(used, best);
    return best;
  }

  std::vector<Rational> values_;
  std::vector<SlotClass> classes_;
  std::map<std::vector<std::size_t>, std::pair<Rational, Rational>> memo_;
};

std::vector<Rational> off_values(const IndexSet& e, const SparseVector<Rational>& f) {
  std::vector<Rational> out;
  for (const auto& [index, value] : f.entries()) {
    if (!e.contains(index)) out.push_back(value);
  }
  return out;
}

Rational placement_max(const Weight& w, std::size_t n, std::vector<Rational> values,
                       std::size_t horizon) {
  if (values.size() > kMaxPlacedEntries) {
    throw std::invalid_argument("oracle: more than " + std::to_string(kMaxPlacedEntries) +
                                " entries to place");
  }
  if (values.empty()) return Rational(0);
  if (horizon < n + values.size()) {
    throw std::invalid_argument("oracle: horizon " + std::to_string(horizon) + " cannot hold " +
                                std::to_string(values.size()) + " entries past slot " +
                                std::to_string(n));
  }
  return PlacementSearch(std::move(values), slot_classes(w, n + 1, horizon)).run();
}

Rational naive_search(const std::vector<Rational>& values, const std::vector<Rational>& slots,
                      std::vector<bool>& taken, std::size_t level, const Rational& partial) {
  if (level == values.size()) return abs_value(partial);
  Rational best(0);
  for (std::size_t s = 0; s < slots.size(); ++s) {
    if (taken[s]) continue;
    taken[s] = true;
    Rational candidate = naive_search(values, slots, taken, level + 1, partial + values[level] * slots[s]);
    taken[s] = false;
    if (candidate > best) best = std::move(candidate);
  }
  return best;
}

}  // namespace

OracleConfig stable_config(const Weight& w, const SparseVector<Rational>& f, std::size_t e_window) {
  return OracleConfig{e_window + f.support_size() + w.prefix_length(), e_window};
}

Rational phi2_bruteforce(const Weight& w, const IndexSet& e, const SparseVector<Rational>& f,
                         const OracleConfig& cfg) {
  return placement_max(w, e.size(), off_values(e, f), cfg.horizon);
}

Rational phi2_naive(const Weight& w, const IndexSet& e, const SparseVector<Rational>& f,
                    std::size_t horizon) {
  const std::vector<Rational> values = off_values(e, f);
  if (values.size() > 6) throw std::invalid_argument("phi2_naive: at most 6 entries");
  const std::size_t n = e.size();
  if (values.empty()) return Rational(0);
  if (horizon < n + values.size()) throw std::invalid_argument("phi2_naive: horizon too small");
  std::vector<Rational> slots;
  for (std::size_t s = n + 1; s <= horizon; ++s) slots.push_back(w[s]);
  std::vector<bool> taken(slots.size(), false);
  return naive_search(values, slots, taken, 0, Rational(0));
}

Rational dw_norm_bruteforce(const Weight& w, const SparseVector<Rational>& f, const OracleConfig& cfg) {
  if (cfg.e_window > kMaxWindow) {
    throw std::invalid_argument("oracle: e_window above " + std::to_string(kMaxWindow));
  }
  if (cfg.e_window < f.max_index()) throw std::invalid_argument("oracle: e_window below max index");
  if (cfg.horizon < f.max_index() + f.support_size()) {
    throw std::invalid_argument("oracle: horizon below max index + |supp|");
  }
  std::map<std::pair<std::size_t, std::vector<Rational>>, Rational> memo;
  Rational best(0);
  for (unsigned long mask = 0; mask < (1ul << cfg.e_window); ++mask) {
    IndexSet e;
    for (std::size_t k = 0; k < cfg.e_window; ++k) {
      if ((mask >> k) & 1ul) e.insert(k + 1);
    }
    const std::size_t n = e.size();
    Rational total(0);
    if (n > 0) {
      Rational mass(0);
      for (Index j : e) mass += abs_value(f[j]);
      total = w.primitive(n) / Rational(static_cast<unsigned long>(n)) * mass;
    }
    auto key = std::make_pair(n, off_values(e, f));
    auto it = memo.find(key);
    if (it == memo.end()) {
      Rational value = placement_max(w, n, key.second, cfg.horizon);
      it = memo.emplace(std::move(key), std::move(value)).first;
    }
    total += it->second;
    if (total > best) best = std::move(total);
  }
  return best;
}

Rational bad_dual_direct(const std::vector<Rational>& x) {
  const std::size_t d = x.size();
  if (d < 3) throw std::invalid_argument("bad_dual_direct: d >= 3");
  std::vector<std::size_t> pi(d);
  std::iota(pi.begin(), pi.end(), 0);
  Rational best(0);
  do {
    Rational value = abs_value(Rational(x[pi[0]] + x[pi[d - 1]] / 3));
    for (std::size_t j = 1; j + 1 < d; ++j) value += abs_value(x[pi[j]]);
    if (value > best) best = std::move(value);
  } while (std::next_permutation(pi.begin(), pi.end()));
  return best;
}

Rational hexagon_direct(const Rational& alpha, const std::vector<Rational>& x) {
  if (x.size() != 2) throw std::invalid_argument("hexagon_direct: d = 2");
  Rational best = alpha * abs_value(x[0]);
  const Rational second = alpha * abs_value(x[1]);
  const Rational sum = abs_value(Rational(x[0] + x[1]));
  if (second > best) best = second;
  if (sum > best) best = sum;
  return best;
}

}  // namespace greedybench::oracle
