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

#include "greedybench/norms.hpp"

#include <algorithm>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

namespace greedybench {
namespace {

template <class T>
void sort_descending(std::vector<T>& values) {
  std::sort(values.begin(), values.end(), [](const T& a, const T& b) { return a > b; });
}

// sum_k desc[k-1] * w_{offset+k}.
template <class T>
T weighted_sum(const BasicWeight<T>& w, std::size_t offset, const std::vector<T>& desc) {
  T total(0);
  if (w.is_eventually_constant()) {
    const std::size_t p = w.prefix_length();
    T rest(0);
    for (std::size_t k = 1; k <= desc.size(); ++k) {
      if (offset + k <= p) {
        total += desc[k - 1] * w[offset + k];
      } else {
        rest += desc[k - 1];
      }
    }
    if (rest != 0) total += rest * w.tail_limit();
    return total;
  }
  for (std::size_t k = 1; k <= desc.size(); ++k) total += desc[k - 1] * w[offset + k];
  return total;
}

// Phi_2 from n = |E| and the signed entries off E.
template <class T>
T phi2_from_values(const BasicWeight<T>& w, std::size_t n, const std::vector<T>& off) {
  std::vector<T> positive;
  std::vector<T> negative;
  T positive_mass(0);
  T negative_mass(0);
  for (const T& v : off) {
    if (v > 0) {
      positive.push_back(v);
      positive_mass += v;
    } else {
      negative.push_back(-v);
      negative_mass -= v;
    }
  }
  sort_descending(positive);
  sort_descending(negative);
  const T& tail = w.tail_limit();
  T plus = weighted_sum(w, n, positive) - tail * negative_mass;
  T minus = weighted_sum(w, n, negative) - tail * positive_mass;
  return plus > minus ? plus : minus;
}

template <class T>
T phi1_from_mass(const BasicWeight<T>& w, std::size_t n, const T& mass) {
  if (n == 0) return T(0);
  return w.average(n) * mass;
}

template <class T>
PhiBreakdown<T> breakdown(const BasicWeight<T>& w, IndexSet e, const SparseVector<T>& f) {
  T mass(0);
  std::vector<T> off;
  for (const auto& [index, value] : f.entries()) {
    if (e.contains(index)) {
      mass += abs_value(value);
    } else {
      off.push_back(value);
    }
  }
  PhiBreakdown<T> out;
  out.phi1 = phi1_from_mass(w, e.size(), mass);
  out.phi2 = phi2_from_values(w, e.size(), off);
  out.phi = out.phi1 + out.phi2;
  out.e = std::move(e);
  return out;
}

template <class T>
PhiBreakdown<T> enumerate_windows(const BasicWeight<T>& w, const SparseVector<T>& f) {
  const IndexSet forced = max_modulus_set(f);
  std::vector<Index> free;
  for (const auto& entry : f.entries()) {
    if (!forced.contains(entry.first)) free.push_back(entry.first);
  }
  if (free.size() >= 63) throw std::invalid_argument("dw_norm: too many free indices to enumerate");
  PhiBreakdown<T> best;
  bool have = false;
  for (unsigned long long mask = 0; mask < (1ull << free.size()); ++mask) {
    IndexSet e = forced;
    for (std::size_t k = 0; k < free.size(); ++k) {
      if ((mask >> k) & 1ull) e.insert(free[k]);
    }
    PhiBreakdown<T> candidate = breakdown(w, std::move(e), f);
    if (!have || candidate.phi > best.phi) {
      best = std::move(candidate);
      have = true;
    }
  }
  return best;
}

// Entries of one sign sorted by nonincreasing modulus, with suffix sums of
// the moduli.
template <class T>
struct SignedRun {
  std::vector<std::pair<Index, T>> entries;  // (index, modulus)
  std::vector<T> suffix;                     // suffix[k] = sum of moduli from k on

  void finish() {
    std::stable_sort(entries.begin(), entries.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    suffix.assign(entries.size() + 1, T(0));
    for (std::size_t k = entries.size(); k-- > 0;) suffix[k] = suffix[k + 1] + entries[k].second;
  }

  // sum_{k >= 1} modulus[start + k - 1] * w_{offset + k}.
  T weighted_from(const BasicWeight<T>& w, std::size_t offset, std::size_t start) const {
    T total(0);
    std::size_t k = start;
    if (w.is_eventually_constant()) {
      const std::size_t p = w.prefix_length();
      for (; k < entries.size() && offset + (k - start) + 1 <= p; ++k) {
        total += entries[k].second * w[offset + (k - start) + 1];
      }
      if (k < entries.size()) total += suffix[k] * w.tail_limit();
      return total;
    }
    for (; k < entries.size(); ++k) total += entries[k].second * w[offset + (k - start) + 1];
    return total;
  }
};

// Exchanging an element of E for a larger same-sign element outside E raises
// Phi_1 by (s_n/n) * gap and lowers each Phi_2 branch by at most w_{n+1} * gap,
// so some maximizer takes the largest entries of each sign.
template <class T>
PhiBreakdown<T> enumerate_greedy_sets(const BasicWeight<T>& w, const SparseVector<T>& f) {
  SignedRun<T> positive;
  SignedRun<T> negative;
  for (const auto& [index, value] : f.entries()) {
    if (value > 0) {
      positive.entries.emplace_back(index, value);
    } else {
      negative.entries.emplace_back(index, -value);
    }
  }
  positive.finish();
  negative.finish();
  const T& tail = w.tail_limit();

  std::size_t best_p = 0;
  std::size_t best_q = 0;
  PhiBreakdown<T> best;
  bool have = false;
  for (std::size_t p = 0; p <= positive.entries.size(); ++p) {
    for (std::size_t q = 0; q <= negative.entries.size(); ++q) {
      const std::size_t n = p + q;
      const T mass = (positive.suffix[0] - positive.suffix[p]) + (negative.suffix[0] - negative.suffix[q]);
      T p1 = phi1_from_mass(w, n, mass);
      T plus = positive.weighted_from(w, n, p) - tail * negative.suffix[q];
      T minus = negative.weighted_from(w, n, q) - tail * positive.suffix[p];
      T p2 = plus > minus ? std::move(plus) : std::move(minus);
      T total = p1 + p2;
      if (!have || total > best.phi) {
        best.phi1 = std::move(p1);
        best.phi2 = std::move(p2);
        best.phi = std::move(total);
        best_p = p;
        best_q = q;
        have = true;
      }
    }
  }
  for (std::size_t k = 0; k < best_p; ++k) best.e.insert(positive.entries[k].first);
  for (std::size_t k = 0; k < best_q; ++k) best.e.insert(negative.entries[k].first);
  return best;
}

}  // namespace

template <class T>
T phi1(const BasicWeight<T>& w, const IndexSet& e, const SparseVector<T>& f) {
  T mass(0);
  for (Index j : e) mass += abs_value(f[j]);
  return phi1_from_mass(w, e.size(), mass);
}

template <class T>
T phi2(const BasicWeight<T>& w, const IndexSet& e, const SparseVector<T>& f) {
  std::vector<T> off;
  for (const auto& [index, value] : f.entries()) {
    if (!e.contains(index)) off.push_back(value);
  }
  return phi2_from_values(w, e.size(), off);
}

template <class T>
PhiBreakdown<T> phi(const BasicWeight<T>& w, const IndexSet& e, const SparseVector<T>& f) {
  return breakdown(w, e, f);
}

template <class T>
PhiBreakdown<T> dw_norm_detail(const BasicWeight<T>& w, const SparseVector<T>& f,
                               DwStrategy strategy) {
  if (f.is_zero()) return PhiBreakdown<T>{{}, T(0), T(0), T(0)};
  if (strategy == DwStrategy::kAuto) {
    const std::size_t free = f.support_size() - max_modulus_set(f).size();
    strategy = free <= kEnumerationLimit ? DwStrategy::kEnumerate : DwStrategy::kGreedySets;
  }
  return strategy == DwStrategy::kEnumerate ? enumerate_windows(w, f) : enumerate_greedy_sets(w, f);
}

template <class T>
T dw_norm(const BasicWeight<T>& w, const SparseVector<T>& f, DwStrategy strategy) {
  return dw_norm_detail(w, f, strategy).phi;
}

template <class T>
T lorentz_norm(const BasicWeight<T>& w, const SparseVector<T>& f) {
  return weighted_sum(w, 0, nonincreasing_rearrangement(f));
}

template <class T>
T marcinkiewicz_norm(const BasicWeight<T>& w, const SparseVector<T>& f) {
  const std::vector<T> b = nonincreasing_rearrangement(f);
  T best(0);
  T running(0);
  for (std::size_t n = 1; n <= b.size(); ++n) {
    running += b[n - 1];
    T candidate = w.average(n) * running;
    if (candidate > best) best = std::move(candidate);
  }
  return best;
}

template <class T>
SemiNormValue<T> signedsup_norm(const BasicWeight<T>& w, const SparseVector<T>& f) {
  std::vector<T> values;
  values.reserve(f.support_size());
  for (const auto& entry : f.entries()) values.push_back(entry.second);
  return SemiNormValue<T>{phi2_from_values(w, 0, values), w.is_constant()};
}

template <class T>
T evaluate(const BasicNormSpec<T>& spec, const SparseVector<T>& f) {
  return std::visit(
      [&f](const auto& s) -> T {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, DwNorm<T>>) {
          return dw_norm(s.weight, f, s.strategy);
        } else if constexpr (std::is_same_v<S, LorentzNorm<T>>) {
          return lorentz_norm(s.weight, f);
        } else if constexpr (std::is_same_v<S, MarcinkiewiczNorm<T>>) {
          return marcinkiewicz_norm(s.weight, f);
        } else if constexpr (std::is_same_v<S, SignedSupNorm<T>>) {
          return signedsup_norm(s.weight, f).value;
        } else {
          return polyhedral_norm<T>(s.family, f);
        }
      },
      spec);
}

namespace {

template <class T>
std::string describe_weight(const BasicWeight<T>& w) {
  if (!w.is_eventually_constant()) {
    return "generator " + w.generator_name() + ", limit " + format_value(w.tail_limit());
  }
  std::string out = "(";
  for (const T& v : w.prefix()) out += format_value(v) + ", ";
  out += format_value(w.tail_limit()) + ", ...)";
  return out;
}

}  // namespace

template <class T>
std::string describe(const BasicNormSpec<T>& spec) {
  return std::visit(
      [](const auto& s) -> std::string {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, DwNorm<T>>) {
          return "dw " + describe_weight(s.weight);
        } else if constexpr (std::is_same_v<S, LorentzNorm<T>>) {
          return "lorentz " + describe_weight(s.weight);
        } else if constexpr (std::is_same_v<S, MarcinkiewiczNorm<T>>) {
          return "marcinkiewicz " + describe_weight(s.weight);
        } else if constexpr (std::is_same_v<S, SignedSupNorm<T>>) {
          return "signedsup " + describe_weight(s.weight);
        } else {
          return "polyhedral " + (s.label.empty() ? "d=" + std::to_string(s.family.dimension())
                                                  : s.label);
        }
      },
      spec);
}

template <class T>
bool is_symmetric(const BasicNormSpec<T>& spec) {
  return !std::holds_alternative<PolyhedralNorm>(spec);
}

template <class T>
const BasicWeight<T>* weight_of(const BasicNormSpec<T>& spec) {
  return std::visit(
      [](const auto& s) -> const BasicWeight<T>* {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, PolyhedralNorm>) {
          return nullptr;
        } else {
          return &s.weight;
        }
      },
      spec);
}

RealNormSpec to_real(const NormSpec& spec) {
  return std::visit(
      [](const auto& s) -> RealNormSpec {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, DwNorm<Rational>>) {
          return DwNorm<Real>{to_real(s.weight), s.strategy};
        } else if constexpr (std::is_same_v<S, LorentzNorm<Rational>>) {
          return LorentzNorm<Real>{to_real(s.weight)};
        } else if constexpr (std::is_same_v<S, MarcinkiewiczNorm<Rational>>) {
          return MarcinkiewiczNorm<Real>{to_real(s.weight)};
        } else if constexpr (std::is_same_v<S, SignedSupNorm<Rational>>) {
          return SignedSupNorm<Real>{to_real(s.weight)};
        } else {
          return s;
        }
      },
      spec);
}

#define GREEDYBENCH_INSTANTIATE_NORMS(T)                                                       \
  template T phi1(const BasicWeight<T>&, const IndexSet&, const SparseVector<T>&);            \
  template T phi2(const BasicWeight<T>&, const IndexSet&, const SparseVector<T>&);            \
  template PhiBreakdown<T> phi(const BasicWeight<T>&, const IndexSet&, const SparseVector<T>&); \
  template PhiBreakdown<T> dw_norm_detail(const BasicWeight<T>&, const SparseVector<T>&,      \
                                          DwStrategy);                                        \
  template T dw_norm(const BasicWeight<T>&, const SparseVector<T>&, DwStrategy);              \
  template T lorentz_norm(const BasicWeight<T>&, const SparseVector<T>&);                     \
  template T marcinkiewicz_norm(const BasicWeight<T>&, const SparseVector<T>&);               \
  template SemiNormValue<T> signedsup_norm(const BasicWeight<T>&, const SparseVector<T>&);    \
  template T evaluate(const BasicNormSpec<T>&, const SparseVector<T>&);                       \
  template std::string describe(const BasicNormSpec<T>&);                                     \
  template bool is_symmetric(const BasicNormSpec<T>&);                                        \
  template const BasicWeight<T>* weight_of(const BasicNormSpec<T>&);

GREEDYBENCH_INSTANTIATE_NORMS(Rational)
GREEDYBENCH_INSTANTIATE_NORMS(Real)

#undef GREEDYBENCH_INSTANTIATE_NORMS

}  // namespace greedybench
