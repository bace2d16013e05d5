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

#include "greedybench/certify.hpp"

#include <algorithm>
#include <stdexcept>
#include <type_traits>

#include "greedybench/greedy.hpp"
#include "greedybench/polyhedral.hpp"

namespace greedybench {
namespace {

template <class T>
T checked_ratio(const T& numerator, const T& denominator) {
  if (denominator == 0) throw std::invalid_argument("ratio with a zero denominator");
  return numerator / denominator;
}

// All k-subsets of {1..n}, lexicographic.
std::vector<std::vector<Index>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<Index>> out;
  if (k > n) return out;
  std::vector<Index> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i + 1;
  for (;;) {
    out.push_back(pick);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

std::size_t polyhedral_dimension(const NormSpec& spec) {
  return std::get<PolyhedralNorm>(spec).family.dimension();
}

template <class T>
std::size_t dimension_limit(const BasicNormSpec<T>& spec) {
  if (const auto* poly = std::get_if<PolyhedralNorm>(&spec)) return poly->family.dimension();
  return static_cast<std::size_t>(-1);
}

template <class T>
SparseVector<T> signed_indicator(const std::vector<Index>& indices, unsigned long signs) {
  typename SparseVector<T>::Entries entries;
  for (std::size_t k = 0; k < indices.size(); ++k) {
    entries.emplace(indices[k], (signs >> k) & 1ul ? T(-1) : T(1));
  }
  return SparseVector<T>(std::move(entries));
}

}  // namespace

std::string to_string(ConstantKind kind) {
  switch (kind) {
    case ConstantKind::kSuppression:
      return "suppression";
    case ConstantKind::kLattice:
      return "lattice";
    case ConstantKind::kDemocracy:
      return "democracy";
    case ConstantKind::kDualDemocracy:
      return "dual_democracy";
    case ConstantKind::kQuasiGreedy:
      return "quasi_greedy";
  }
  return "unknown";
}

std::string to_string(BoundKind kind) {
  return kind == BoundKind::kLowerBound ? "lower_bound" : "exact_over_family";
}

std::string to_string(PropertyAStatus status) {
  switch (status) {
    case PropertyAStatus::kPass:
      return "pass";
    case PropertyAStatus::kFail:
      return "fail";
    case PropertyAStatus::kInvalidInstance:
      return "invalid_instance";
  }
  return "unknown";
}

template <class T>
T suppression_ratio(const BasicNormSpec<T>& spec, const SparseVector<T>& f, const IndexSet& a) {
  if (f.is_zero()) throw std::invalid_argument("suppression ratio of the zero vector");
  return checked_ratio(evaluate(spec, project(f, a)), evaluate(spec, f));
}

template <class T>
T lattice_ratio(const BasicNormSpec<T>& spec, const SparseVector<T>& f, const SparseVector<T>& g) {
  if (g.is_zero()) throw std::invalid_argument("lattice ratio against the zero vector");
  if (f.support() != g.support()) throw std::invalid_argument("lattice ratio: supports differ");
  for (const auto& [index, value] : f.entries()) {
    if (abs_value(value) != abs_value(g[index])) {
      throw std::invalid_argument("lattice ratio: moduli differ at index " + std::to_string(index));
    }
  }
  return checked_ratio(evaluate(spec, f), evaluate(spec, g));
}

template <class T>
T recompute(const Certificate<T>& c, const BasicNormSpec<T>& spec) {
  auto need = [&c](std::size_t count) {
    if (c.witness.size() != count) {
      throw std::invalid_argument(to_string(c.kind) + " certificate needs " +
                                  std::to_string(count) + " witness vectors");
    }
  };
  switch (c.kind) {
    case ConstantKind::kSuppression:
      need(1);
      return suppression_ratio(spec, c.witness[0], c.projection);
    case ConstantKind::kLattice:
      need(2);
      return lattice_ratio(spec, c.witness[0], c.witness[1]);
    case ConstantKind::kDemocracy:
      need(2);
      return checked_ratio(evaluate(spec, c.witness[0]), evaluate(spec, c.witness[1]));
    case ConstantKind::kDualDemocracy: {
      need(2);
      if constexpr (is_exact_v<T>) {
        const auto* poly = std::get_if<PolyhedralNorm>(&spec);
        if (poly == nullptr) throw std::invalid_argument("dual certificates need a polyhedral norm");
        const std::size_t d = poly->family.dimension();
        const std::vector<Rational> a = c.witness[0].to_dense(d);
        const std::vector<Rational> b = c.witness[1].to_dense(d);
        return checked_ratio(dual_norm(poly->family, a).value, dual_norm(poly->family, b).value);
      } else {
        throw std::invalid_argument("dual certificates need exact scalars");
      }
    }
    case ConstantKind::kQuasiGreedy:
      need(1);
      return checked_ratio(evaluate(spec, greedy_approx(c.witness[0], c.m)),
                           evaluate(spec, c.witness[0]));
  }
  throw std::logic_error("unknown certificate kind");
}

template <class T>
bool verify(const Certificate<T>& certificate, const BasicNormSpec<T>& spec) {
  return recompute(certificate, spec) == certificate.value;
}

template <class T>
Certificate<T> make_certificate(ConstantKind kind, const BasicNormSpec<T>& spec,
                                std::vector<SparseVector<T>> witness, IndexSet projection,
                                std::size_t m, std::string family, BoundKind bound_kind,
                                std::vector<std::string> citations) {
  Certificate<T> c;
  c.kind = kind;
  c.witness = std::move(witness);
  c.projection = std::move(projection);
  c.m = m;
  c.family = std::move(family);
  c.bound_kind = bound_kind;
  c.citations = std::move(citations);
  c.value = recompute(c, spec);
  return c;
}

GridFamily default_grid() {
  GridFamily grid;
  for (const Rational& v : {Rational(1), Rational(2, 3), Rational(1, 2), Rational(1, 3), Rational(1, 4)}) {
    grid.values.push_back(v);
    grid.values.push_back(-v);
  }
  return grid;
}

std::string describe(const GridFamily& grid) {
  std::string out = "grid values {";
  for (std::size_t k = 0; k < grid.values.size(); ++k) {
    if (k > 0) out += ", ";
    out += format_rational(grid.values[k]);
  }
  out += "}, support <= " + std::to_string(grid.max_support) + ", window " +
         std::to_string(grid.window) + ", all projection sets";
  return out;
}

void for_each_grid_vector(const NormSpec& spec, const GridFamily& grid,
                          const std::function<void(const SparseVector<Rational>&)>& visit) {
  if (grid.values.empty()) throw std::invalid_argument("grid has no coefficient values");
  for (const Rational& v : grid.values) {
    if (v == 0) throw std::invalid_argument("grid values must be nonzero");
  }
  const bool symmetric = is_symmetric(spec);
  const std::size_t window = symmetric ? grid.window : std::min(grid.window, polyhedral_dimension(spec));
  const std::size_t base = grid.values.size();
  for (std::size_t k = 1; k <= grid.max_support && k <= window; ++k) {
    std::vector<std::vector<Index>> placements;
    if (symmetric) {
      std::vector<Index> first(k);
      for (std::size_t i = 0; i < k; ++i) first[i] = i + 1;
      placements.push_back(std::move(first));
    } else {
      placements = combinations(window, k);
    }
    std::size_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= base;
    for (const auto& positions : placements) {
      for (std::size_t code = 0; code < total; ++code) {
        SparseVector<Rational>::Entries entries;
        std::size_t rest = code;
        for (Index j : positions) {
          entries.emplace(j, grid.values[rest % base]);
          rest /= base;
        }
        visit(SparseVector<Rational>(std::move(entries)));
      }
    }
  }
}

template <class T>
Certificate<T> ks_lower_bound(const BasicNormSpec<T>& spec, const ExplicitFamily<T>& family,
                              std::vector<std::string> citations) {
  if (family.instances.empty()) throw std::invalid_argument("ks_lower_bound: empty family");
  std::size_t best = 0;
  T best_value{};
  for (std::size_t k = 0; k < family.instances.size(); ++k) {
    T value = suppression_ratio(spec, family.instances[k].first, family.instances[k].second);
    if (k == 0 || value > best_value) {
      best_value = std::move(value);
      best = k;
    }
  }
  return make_certificate<T>(ConstantKind::kSuppression, spec, {family.instances[best].first},
                             family.instances[best].second, 0, family.description,
                             BoundKind::kLowerBound, std::move(citations));
}

Certificate<Rational> ks_lower_bound(const NormSpec& spec, const GridFamily& grid,
                                     std::vector<std::string> citations) {
  std::optional<std::pair<SparseVector<Rational>, IndexSet>> best;
  Rational best_value;
  for_each_grid_vector(spec, grid, [&](const SparseVector<Rational>& f) {
    const Rational norm = evaluate(spec, f);
    const std::vector<Index> support = [&f] {
      const IndexSet s = f.support();
      return std::vector<Index>(s.begin(), s.end());
    }();
    for (unsigned long mask = 0; mask < (1ul << support.size()); ++mask) {
      IndexSet a;
      for (std::size_t k = 0; k < support.size(); ++k) {
        if ((mask >> k) & 1ul) a.insert(support[k]);
      }
      Rational value = evaluate(spec, project(f, a)) / norm;
      if (!best || value > best_value) {
        best_value = std::move(value);
        best.emplace(f, std::move(a));
      }
    }
  });
  if (!best) throw std::invalid_argument("ks_lower_bound: empty grid");
  return make_certificate<Rational>(ConstantKind::kSuppression, spec, {best->first}, best->second, 0,
                                    describe(grid) + " under " + describe(spec),
                                    BoundKind::kLowerBound, std::move(citations));
}

Certificate<Rational> kl_lower_bound(const NormSpec& spec, const GridFamily& grid,
                                     std::vector<std::string> citations) {
  std::optional<std::pair<SparseVector<Rational>, SparseVector<Rational>>> best;
  Rational best_value;
  for_each_grid_vector(spec, grid, [&](const SparseVector<Rational>& f) {
    const Rational norm = evaluate(spec, f);
    const IndexSet s = f.support();
    const std::vector<Index> support(s.begin(), s.end());
    for (unsigned long mask = 0; mask < (1ul << support.size()); ++mask) {
      SparseVector<Rational> g = f;
      for (std::size_t k = 0; k < support.size(); ++k) {
        if ((mask >> k) & 1ul) {
          const Rational v = f[support[k]];
          g -= SparseVector<Rational>::unit(support[k], 2 * v);
        }
      }
      Rational value = norm / evaluate(spec, g);
      if (!best || value > best_value) {
        best_value = std::move(value);
        best.emplace(f, std::move(g));
      }
    }
  });
  if (!best) throw std::invalid_argument("kl_lower_bound: empty grid");
  return make_certificate<Rational>(ConstantKind::kLattice, spec, {best->first, best->second}, {}, 0,
                                    describe(grid) + ", all sign changes, under " + describe(spec),
                                    BoundKind::kLowerBound, std::move(citations));
}

template <class T>
PropertyAResult<T> property_a_check(const BasicNormSpec<T>& spec, const PropertyAInstance<T>& instance) {
  PropertyAResult<T> result;
  const IndexSet a = instance.a.index_set();
  const IndexSet b = instance.b.index_set();
  const IndexSet supp = instance.f.support();
  if (instance.f.sup_norm() > 1) {
    result.reason = "sup |f| exceeds 1";
  } else if (a.size() > b.size()) {
    result.reason = "|A| exceeds |B|";
  } else if (!set_intersection(a, b).empty()) {
    result.reason = "A and B intersect";
  } else if (!set_intersection(a, supp).empty() || !set_intersection(b, supp).empty()) {
    result.reason = "A or B meets supp(f)";
  } else {
    const std::size_t limit = dimension_limit(spec);
    const Index reach = std::max({instance.f.max_index(), a.empty() ? Index(0) : *a.rbegin(),
                                  b.empty() ? Index(0) : *b.rbegin()});
    if (reach > limit) result.reason = "instance leaves the dimension of the space";
  }
  if (!result.reason.empty()) return result;
  result.lhs = evaluate(spec, SparseVector<T>(instance.a.template indicator<T>() + instance.f));
  result.rhs = evaluate(spec, SparseVector<T>(instance.b.template indicator<T>() + instance.f));
  result.margin = result.rhs - result.lhs;
  result.status = result.margin >= 0 ? PropertyAStatus::kPass : PropertyAStatus::kFail;
  return result;
}

SuperdemocracyReport superdemocracy_report(const NormSpec& spec, std::size_t m_max) {
  if (m_max == 0) throw std::invalid_argument("superdemocracy_report: m_max must be >= 1");
  if (m_max > 20) throw std::invalid_argument("superdemocracy_report: m_max above 20 is not enumerable");
  const bool symmetric = is_symmetric(spec);
  const std::size_t top = std::min(m_max, dimension_limit(spec));

  using Extremes = std::pair<std::pair<Rational, SparseVector<Rational>>,
                             std::pair<Rational, SparseVector<Rational>>>;
  auto scan = [&](std::size_t m, const std::function<Rational(const SparseVector<Rational>&)>& norm) {
    const std::vector<std::vector<Index>> sets =
        combinations(symmetric ? m : dimension_limit(spec), m);
    std::optional<Extremes> ext;
    for (const auto& set : sets) {
      for (unsigned long signs = 0; signs < (1ul << m); ++signs) {
        SparseVector<Rational> v = signed_indicator<Rational>(set, signs);
        Rational value = norm(v);
        if (!ext) {
          ext.emplace(std::make_pair(value, v), std::make_pair(value, v));
          continue;
        }
        if (value > ext->first.first) ext->first = {value, v};
        if (value < ext->second.first) ext->second = {std::move(value), std::move(v)};
      }
    }
    return *ext;
  };

  auto best_over_m = [&](const std::function<Rational(const SparseVector<Rational>&)>& norm,
                         std::size_t limit) {
    std::optional<Extremes> best;
    Rational best_ratio;
    for (std::size_t m = 1; m <= limit; ++m) {
      Extremes ext = scan(m, norm);
      Rational ratio = ext.first.first / ext.second.first;
      if (!best || ratio > best_ratio) {
        best_ratio = std::move(ratio);
        best = std::move(ext);
      }
    }
    return *best;
  };

  const std::string sets_text = symmetric ? "A = B = {1..m}" : "all m-subsets of {1..d}";
  const std::string family = "|A| = |B| = m <= " + std::to_string(top) + ", " + sets_text +
                             ", all signs, under " + describe(spec);
  Extremes primal = best_over_m([&spec](const SparseVector<Rational>& v) { return evaluate(spec, v); },
                                top);
  SuperdemocracyReport report{
      make_certificate<Rational>(ConstantKind::kDemocracy, spec,
                                 {primal.first.second, primal.second.second}, {}, 0, family,
                                 BoundKind::kExactOverFamily, {}),
      std::nullopt};
  if (const auto* poly = std::get_if<PolyhedralNorm>(&spec)) {
    const std::size_t d = poly->family.dimension();
    Extremes dual = best_over_m(
        [poly, d](const SparseVector<Rational>& v) {
          const std::vector<Rational> dense = v.to_dense(d);
          return dual_norm(poly->family, dense).value;
        },
        top);
    report.dual = make_certificate<Rational>(ConstantKind::kDualDemocracy, spec,
                                             {dual.first.second, dual.second.second}, {}, 0,
                                             "dual functionals, " + family,
                                             BoundKind::kExactOverFamily, {});
  }
  return report;
}

std::vector<Rational> ucc_growth(const Weight& w, std::size_t m_max) {
  if (w.is_constant()) throw std::invalid_argument("ucc_growth: the constant weight degenerates");
  if (w.tail_limit() == 0) throw std::invalid_argument("ucc_growth: needs w_inf > 0");
  std::vector<Rational> out;
  out.reserve(m_max);
  for (std::size_t m = 1; m <= m_max; ++m) {
    std::vector<Index> a(2 * m);
    for (std::size_t k = 0; k < a.size(); ++k) a[k] = k + 1;
    SparseVector<Rational>::Entries flat;
    SparseVector<Rational>::Entries signed_entries;
    for (std::size_t k = 0; k < a.size(); ++k) {
      flat.emplace(a[k], Rational(1));
      signed_entries.emplace(a[k], k % 2 == 0 ? Rational(1) : Rational(-1));
    }
    const Rational top = signedsup_norm(w, SparseVector<Rational>(std::move(flat))).value;
    const Rational bottom = signedsup_norm(w, SparseVector<Rational>(std::move(signed_entries))).value;
    out.push_back(checked_ratio(top, bottom));
  }
  return out;
}

template <class T>
QuasiGreedyResult<T> quasi_greedy_ratio(const BasicNormSpec<T>& spec, const SparseVector<T>& x) {
  if (x.is_zero()) throw std::invalid_argument("quasi_greedy_ratio of the zero vector");
  const T norm = evaluate(spec, x);
  QuasiGreedyResult<T> result;
  for (std::size_t m = 1; m <= x.support_size(); ++m) {
    T value = evaluate(spec, greedy_approx(x, m)) / norm;
    if (m == 1 || value > result.value) {
      result.value = std::move(value);
      result.m = m;
    }
    if (has_threshold_tie(x, m)) result.ties = true;
  }
  return result;
}

template <class T>
std::vector<AlmostGreedyEntry<T>> almost_greedy_margin(const BasicNormSpec<T>& spec,
                                                       const SparseVector<T>& x) {
  if (x.is_zero()) throw std::invalid_argument("almost_greedy_margin of the zero vector");
  std::vector<AlmostGreedyEntry<T>> out;
  for (std::size_t m = 0; m <= x.support_size(); ++m) {
    AlmostGreedyEntry<T> entry;
    entry.m = m;
    entry.sigma_tilde = sigma_tilde(x, m, spec).value;
    entry.residual = evaluate(spec, x - greedy_approx(x, m));
    entry.margin = entry.sigma_tilde - entry.residual;
    entry.tie = has_threshold_tie(x, m);
    out.push_back(std::move(entry));
  }
  return out;
}

#define GREEDYBENCH_INSTANTIATE_CERTIFY(T)                                                         \
  template T recompute(const Certificate<T>&, const BasicNormSpec<T>&);                            \
  template bool verify(const Certificate<T>&, const BasicNormSpec<T>&);                            \
  template Certificate<T> make_certificate(ConstantKind, const BasicNormSpec<T>&,                 \
                                           std::vector<SparseVector<T>>, IndexSet, std::size_t,   \
                                           std::string, BoundKind, std::vector<std::string>);     \
  template T suppression_ratio(const BasicNormSpec<T>&, const SparseVector<T>&, const IndexSet&); \
  template T lattice_ratio(const BasicNormSpec<T>&, const SparseVector<T>&,                       \
                           const SparseVector<T>&);                                               \
  template Certificate<T> ks_lower_bound(const BasicNormSpec<T>&, const ExplicitFamily<T>&,        \
                                         std::vector<std::string>);                               \
  template PropertyAResult<T> property_a_check(const BasicNormSpec<T>&,                            \
                                               const PropertyAInstance<T>&);                      \
  template QuasiGreedyResult<T> quasi_greedy_ratio(const BasicNormSpec<T>&,                        \
                                                   const SparseVector<T>&);                       \
  template std::vector<AlmostGreedyEntry<T>> almost_greedy_margin(const BasicNormSpec<T>&,         \
                                                                  const SparseVector<T>&);

GREEDYBENCH_INSTANTIATE_CERTIFY(Rational)
GREEDYBENCH_INSTANTIATE_CERTIFY(Real)

#undef GREEDYBENCH_INSTANTIATE_CERTIFY

}  // namespace greedybench
