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

#include "greedybench/polyhedral.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "greedybench/simplex.hpp"

namespace greedybench {
namespace {

std::vector<Functional> bad_dual_raw(std::size_t d) {
  if (d < 3) throw std::invalid_argument("bad-dual family needs d >= 3");
  if (d > 10) throw std::invalid_argument("bad-dual family is enumerated only for d <= 10");
  const Rational third(1, 3);
  std::vector<Functional> out;
  for (std::size_t first = 0; first < d; ++first) {
    for (std::size_t last = 0; last < d; ++last) {
      if (last == first) continue;
      std::vector<std::size_t> middle;
      for (std::size_t j = 0; j < d; ++j) {
        if (j != first && j != last) middle.push_back(j);
      }
      // Bit 0 of `signs` is the sign of the (first, last) block.
      for (unsigned long signs = 0; signs < (1ul << (d - 1)); ++signs) {
        Functional u(d, Rational(0));
        const int lead = (signs & 1ul) ? -1 : 1;
        u[first] = lead;
        u[last] = Rational(lead) * third;
        for (std::size_t k = 0; k < middle.size(); ++k) {
          u[middle[k]] = (signs >> (k + 1)) & 1ul ? -1 : 1;
        }
        out.push_back(std::move(u));
      }
    }
  }
  return out;
}

std::vector<Functional> hexagon_raw(const Rational& alpha) {
  if (!(alpha > 0 && alpha < 1)) throw std::invalid_argument("hexagon needs alpha in (0, 1)");
  return {{alpha, Rational(0)}, {Rational(0), alpha}, {Rational(1), Rational(1)}};
}

// Every distinct vector of slot weights that an injective placement of
// `count` coordinates into slots first_slot, first_slot + 1, ... can produce.
// Slots sharing a weight value are interchangeable, so at each depth only
// the lowest free slot of each value is tried.
void slot_assignments(const Weight& w, std::size_t first_slot, std::size_t count,
                      std::vector<std::vector<Rational>>& out) {
  const std::size_t last_slot = std::max(first_slot - 1, w.prefix_length()) + count;
  std::vector<Rational> slot_weight;
  for (std::size_t s = first_slot; s <= last_slot; ++s) slot_weight.push_back(w[s]);
  std::vector<bool> used(slot_weight.size(), false);
  std::vector<Rational> current;
  auto recurse = [&](auto&& self) -> void {
    if (current.size() == count) {
      out.push_back(current);
      return;
    }
    std::vector<Rational> tried;
    for (std::size_t s = 0; s < slot_weight.size(); ++s) {
      if (used[s]) continue;
      if (std::find(tried.begin(), tried.end(), slot_weight[s]) != tried.end()) continue;
      tried.push_back(slot_weight[s]);
      used[s] = true;
      current.push_back(slot_weight[s]);
      self(self);
      current.pop_back();
      used[s] = false;
    }
  };
  recurse(recurse);
}

std::vector<Functional> pafinite_raw(const PAFiniteDwSpec& spec) {
  const std::size_t d = spec.d;
  if (d < 3) throw std::invalid_argument("PAFinite family needs d >= 3");
  if (d > 7) throw std::invalid_argument("PAFinite family is enumerated only for d <= 7");
  if (!spec.weight.is_eventually_constant()) {
    throw std::invalid_argument("PAFinite family needs an eventually-constant weight");
  }
  std::vector<Functional> out;
  for (unsigned long mask = 0; mask < (1ul << d); ++mask) {
    std::vector<std::size_t> in_e;
    std::vector<std::size_t> off_e;
    for (std::size_t j = 0; j < d; ++j) ((mask >> j) & 1ul ? in_e : off_e).push_back(j);
    const std::size_t n = in_e.size();
    const Rational concentration = n == 0 ? Rational(0) : spec.weight.average(n);
    std::vector<std::vector<Rational>> tails;
    slot_assignments(spec.weight, n + 1, off_e.size(), tails);
    for (unsigned long eps = 0; eps < (1ul << n); ++eps) {
      for (int sigma : {1, -1}) {
        for (const auto& tail : tails) {
          Functional u(d, Rational(0));
          for (std::size_t k = 0; k < n; ++k) {
            u[in_e[k]] = (eps >> k) & 1ul ? Rational(-concentration) : concentration;
          }
          for (std::size_t k = 0; k < off_e.size(); ++k) u[off_e[k]] = Rational(sigma) * tail[k];
          out.push_back(std::move(u));
        }
      }
    }
  }
  return out;
}

}  // namespace

FunctionalFamily::FunctionalFamily(std::size_t dimension, std::vector<Functional> functionals)
    : dimension_(dimension), raw_count_(functionals.size()) {
  if (dimension == 0) throw std::invalid_argument("functional family needs d >= 1");
  if (functionals.empty()) throw std::invalid_argument("functional family is empty");
  std::set<Functional> unique;
  for (auto& u : functionals) {
    if (u.size() != dimension) {
      throw std::invalid_argument("functional has length " + std::to_string(u.size()) +
                                  ", expected " + std::to_string(dimension));
    }
    if (std::all_of(u.begin(), u.end(), [](const Rational& v) { return v == 0; })) continue;
    Functional negated(u.size());
    std::transform(u.begin(), u.end(), negated.begin(), [](const Rational& v) { return Rational(-v); });
    unique.insert(std::move(negated));
    unique.insert(std::move(u));
  }
  functionals_.assign(unique.begin(), unique.end());
  if (functionals_.empty() || rank(functionals_) != dimension) {
    throw std::invalid_argument("functional family does not span the dual space");
  }
}

std::vector<Functional> raw_functionals(const FamilySpec& spec) {
  return std::visit(
      [](const auto& s) -> std::vector<Functional> {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, BadDualSpec>) {
          return bad_dual_raw(s.d);
        } else if constexpr (std::is_same_v<S, HexagonSpec>) {
          return hexagon_raw(s.alpha);
        } else {
          return pafinite_raw(s);
        }
      },
      spec);
}

FunctionalFamily family_for(const FamilySpec& spec) {
  const std::size_t d = std::visit(
      [](const auto& s) -> std::size_t {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, HexagonSpec>) {
          return 2;
        } else {
          return s.d;
        }
      },
      spec);
  return FunctionalFamily(d, raw_functionals(spec));
}

std::string describe(const FamilySpec& spec) {
  return std::visit(
      [](const auto& s) -> std::string {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, BadDualSpec>) {
          return "bad_dual(d=" + std::to_string(s.d) + ")";
        } else if constexpr (std::is_same_v<S, HexagonSpec>) {
          return "hexagon(alpha=" + format_rational(s.alpha) + ")";
        } else {
          return "pafinite_dw(d=" + std::to_string(s.d) + ")";
        }
      },
      spec);
}

template <class T>
T polyhedral_norm(const FunctionalFamily& family, std::span<const T> x) {
  if (x.size() != family.dimension()) {
    throw std::invalid_argument("vector has length " + std::to_string(x.size()) +
                                ", family dimension is " + std::to_string(family.dimension()));
  }
  T best(0);
  for (const Functional& u : family.functionals()) {
    T pairing(0);
    for (std::size_t j = 0; j < u.size(); ++j) {
      if (u[j] == 0 || x[j] == 0) continue;
      if constexpr (is_exact_v<T>) {
        pairing += u[j] * x[j];
      } else {
        pairing += to_real(u[j]) * x[j];
      }
    }
    // The family is closed under negation, so the signed max is the max of |.|.
    if (pairing > best) best = std::move(pairing);
  }
  return best;
}

template <class T>
T polyhedral_norm(const FunctionalFamily& family, const SparseVector<T>& x) {
  const std::vector<T> dense = x.to_dense(family.dimension());
  return polyhedral_norm<T>(family, std::span<const T>(dense));
}

DualNormResult dual_norm(const FunctionalFamily& family, std::span<const Rational> xstar) {
  const std::size_t d = family.dimension();
  if (xstar.size() != d) {
    throw std::invalid_argument("functional has length " + std::to_string(xstar.size()) +
                                ", family dimension is " + std::to_string(d));
  }
  // x = x_plus - x_minus with both halves nonnegative.
  std::vector<Rational> objective(2 * d);
  for (std::size_t j = 0; j < d; ++j) {
    objective[j] = xstar[j];
    objective[d + j] = -xstar[j];
  }
  std::vector<std::vector<Rational>> rows;
  rows.reserve(family.size());
  for (const Functional& u : family.functionals()) {
    std::vector<Rational> row(2 * d);
    for (std::size_t j = 0; j < d; ++j) {
      row[j] = u[j];
      row[d + j] = -u[j];
    }
    rows.push_back(std::move(row));
  }
  const std::vector<Rational> rhs(rows.size(), Rational(1));
  lp::Result solved = lp::maximize(objective, rows, rhs);
  if (solved.status == lp::Status::kUnbounded) {
    throw std::logic_error("dual norm LP is unbounded: the family does not span");
  }
  DualNormResult out;
  out.value = solved.value;
  out.maximizer.resize(d);
  for (std::size_t j = 0; j < d; ++j) out.maximizer[j] = solved.solution[j] - solved.solution[d + j];
  return out;
}

std::size_t rank(std::vector<Functional> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const Rational factor = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= factor * rows[r][j];
    }
    ++r;
  }
  return r;
}

template Rational polyhedral_norm(const FunctionalFamily&, std::span<const Rational>);
template Real polyhedral_norm(const FunctionalFamily&, std::span<const Real>);
template Rational polyhedral_norm(const FunctionalFamily&, const SparseVector<Rational>&);
template Real polyhedral_norm(const FunctionalFamily&, const SparseVector<Real>&);

}  // namespace greedybench
