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

#include <gtest/gtest.h>

#include <optional>
#include <stdexcept>

#include "greedybench/oracle.hpp"
#include "greedybench/polyhedral.hpp"
#include "greedybench/random.hpp"
#include "greedybench/witnesses.hpp"
#include "test_util.hpp"

namespace greedybench {
namespace {

using testing::Q;
using testing::w1t;

std::vector<Rational> random_dense(Rng& rng, std::size_t d) {
  std::vector<Rational> x(d);
  for (auto& v : x) v = rng.coin() ? Rational(0) : rng.rational(6, 2, true);
  return x;
}

std::optional<std::vector<Rational>> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t d = b.size();
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t pivot = col;
    while (pivot < d && a[pivot][col] == 0) ++pivot;
    if (pivot == d) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t row = 0; row < d; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational factor = a[row][col] / a[col][col];
      for (std::size_t k = col; k < d; ++k) a[row][k] -= factor * a[col][k];
      b[row] -= factor * b[col];
    }
  }
  std::vector<Rational> x(d);
  for (std::size_t k = 0; k < d; ++k) x[k] = b[k] / a[k][k];
  return x;
}

// Max of <xstar, v> over the vertices of the unit ball, found by solving
// every d x d system u_i . v = 1 and keeping the feasible solutions.
Rational dual_by_vertices(const FunctionalFamily& family, const std::vector<Rational>& xstar) {
  const auto& rows = family.functionals();
  const std::size_t d = family.dimension();
  std::optional<Rational> best;
  std::vector<std::size_t> pick(d);
  auto feasible = [&rows](const std::vector<Rational>& v) {
    for (const auto& u : rows) {
      Rational s(0);
      for (std::size_t k = 0; k < u.size(); ++k) s += u[k] * v[k];
      if (abs_value(s) > 1) return false;
    }
    return true;
  };
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t start) {
    if (depth == d) {
      std::vector<std::vector<Rational>> a;
      for (std::size_t i : pick) a.push_back(rows[i]);
      const auto v = solve(a, std::vector<Rational>(d, Rational(1)));
      if (!v || !feasible(*v)) return;
      Rational s(0);
      for (std::size_t k = 0; k < d; ++k) s += xstar[k] * (*v)[k];
      if (!best || s > *best) best = s;
      return;
    }
    for (std::size_t i = start; i < rows.size(); ++i) {
      pick[depth] = i;
      rec(depth + 1, i + 1);
    }
  };
  rec(0, 0);
  return *best;
}

TEST(Families, RawCounts) {
  EXPECT_EQ(raw_functionals(BadDualSpec{3}).size(), 24u);
  EXPECT_EQ(raw_functionals(HexagonSpec{Q("1/2")}).size(), 3u);
  EXPECT_EQ(family_for(HexagonSpec{Q("1/2")}).functionals().size(), 6u);
}

TEST(Families, HexagonReadsOffMaxFormula) {
  const auto family = family_for(HexagonSpec{Q("1/2")});
  const std::vector<Functional> expected{{Q("1/2"), 0}, {0, Q("1/2")}, {1, 1}};
  for (const auto& u : expected) {
    const Functional neg{-u[0], -u[1]};
    const auto& fs = family.functionals();
    EXPECT_NE(std::find(fs.begin(), fs.end(), u), fs.end());
    EXPECT_NE(std::find(fs.begin(), fs.end(), neg), fs.end());
  }
}

TEST(Families, InvalidParameters) {
  EXPECT_THROW(family_for(BadDualSpec{2}), std::invalid_argument);
  EXPECT_THROW(family_for(HexagonSpec{Q("1")}), std::invalid_argument);
  EXPECT_THROW(family_for(HexagonSpec{Q("0")}), std::invalid_argument);
  EXPECT_THROW(family_for(PAFiniteDwSpec{2, w1t("1/3")}), std::invalid_argument);
  EXPECT_THROW(FunctionalFamily(2, {{1, 1}}), std::invalid_argument);
}

TEST(Polyhedral, NormExamples) {
  const auto bad = family_for(BadDualSpec{3});
  EXPECT_EQ(polyhedral_norm<Rational>(bad, std::span<const Rational>(bad_dual_g(3))), Rational(11, 6));
  const auto hex = family_for(HexagonSpec{Q("1/2")});
  EXPECT_EQ(polyhedral_norm<Rational>(hex, SparseVector<Rational>{{1, 2}, {2, -2}}), Rational(1));
  EXPECT_EQ(polyhedral_norm<Rational>(hex, SparseVector<Rational>{{1, 2}}), Rational(2));
  const auto pa = family_for(PAFiniteDwSpec{3, w1t("1/3")});
  EXPECT_EQ(polyhedral_norm<Rational>(pa, SparseVector<Rational>{{1, 1}, {2, Q("1/3")}}), Rational(10, 9));
  EXPECT_THROW(polyhedral_norm<Rational>(pa, SparseVector<Rational>{{4, 1}}), std::invalid_argument);
}

TEST(Polyhedral, BadDualAgreesWithDirectFormula) {
  Rng rng(31);
  for (std::size_t d = 3; d <= 5; ++d) {
    const auto family = family_for(BadDualSpec{d});
    for (int trial = 0; trial < 100; ++trial) {
      const auto x = random_dense(rng, d);
      EXPECT_EQ(polyhedral_norm<Rational>(family, std::span<const Rational>(x)), oracle::bad_dual_direct(x));
    }
  }
}

TEST(Polyhedral, HexagonAgreesWithDirectFormula) {
  Rng rng(32);
  for (const char* alpha : {"1/2", "1/3", "2/3", "3/4"}) {
    const auto family = family_for(HexagonSpec{Q(alpha)});
    for (int trial = 0; trial < 100; ++trial) {
      const auto x = random_dense(rng, 2);
      EXPECT_EQ(polyhedral_norm<Rational>(family, std::span<const Rational>(x)),
                oracle::hexagon_direct(Q(alpha), x));
    }
  }
}

TEST(Polyhedral, PAFiniteAgreesWithDw) {
  Rng rng(33);
  for (std::size_t d = 3; d <= 4; ++d) {
    for (const char* tail : {"1/3", "1/2"}) {
      const Weight w = w1t(tail);
      const auto family = family_for(PAFiniteDwSpec{d, w});
      for (int trial = 0; trial < 200; ++trial) {
        const auto f = random_vector(rng, d, d);
        EXPECT_EQ(polyhedral_norm<Rational>(family, f), dw_norm(w, f));
      }
    }
  }
  const Weight w = Weight::eventually_constant({1, Q("2/3")}, Q("1/3"));
  const auto family = family_for(PAFiniteDwSpec{3, w});
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = random_vector(rng, 3, 3);
    EXPECT_EQ(polyhedral_norm<Rational>(family, f), dw_norm(w, f));
  }
}

TEST(DualNorm, Examples) {
  const auto bad = family_for(BadDualSpec{3});
  EXPECT_EQ(dual_norm(bad, bad_dual_h_star(3)).value, Rational(1));
  EXPECT_EQ(dual_norm(bad, bad_dual_g_star(3)).value, Rational(12, 11));
  EXPECT_EQ(dual_norm(family_for(HexagonSpec{Q("1/2")}), std::vector<Rational>{1, 0}).value, Rational(2));
}

TEST(DualNorm, MaximizerIsFeasibleAndAttains) {
  Rng rng(34);
  const auto family = family_for(BadDualSpec{4});
  for (int trial = 0; trial < 30; ++trial) {
    const auto xstar = random_dense(rng, 4);
    const auto r = dual_norm(family, xstar);
    EXPECT_LE(polyhedral_norm<Rational>(family, std::span<const Rational>(r.maximizer)), 1);
    Rational s(0);
    for (std::size_t k = 0; k < 4; ++k) s += xstar[k] * r.maximizer[k];
    EXPECT_EQ(s, r.value);
  }
}

TEST(DualNorm, MatchesVertexEnumeration) {
  Rng rng(35);
  const std::vector<FunctionalFamily> families{
      family_for(HexagonSpec{Q("1/2")}), family_for(HexagonSpec{Q("2/3")}), family_for(BadDualSpec{3}),
      family_for(PAFiniteDwSpec{3, w1t("1/3")})};
  for (const auto& family : families) {
    for (int trial = 0; trial < 15; ++trial) {
      const auto xstar = random_dense(rng, family.dimension());
      EXPECT_EQ(dual_norm(family, xstar).value, dual_by_vertices(family, xstar));
    }
  }
}

TEST(DualNorm, DualityInequality) {
  Rng rng(36);
  for (std::size_t d = 3; d <= 4; ++d) {
    const auto family = family_for(BadDualSpec{d});
    for (int trial = 0; trial < 50; ++trial) {
      const auto xstar = random_dense(rng, d);
      const auto x = random_dense(rng, d);
      Rational pairing(0);
      for (std::size_t k = 0; k < d; ++k) pairing += xstar[k] * x[k];
      EXPECT_LE(pairing, dual_norm(family, xstar).value *
                             polyhedral_norm<Rational>(family, std::span<const Rational>(x)));
    }
  }
}

TEST(Rank, Basics) {
  EXPECT_EQ(rank({{1, 0}, {2, 0}}), 1u);
  EXPECT_EQ(rank({{1, 2, 3}, {0, 1, 1}, {1, 3, 4}}), 2u);
  EXPECT_EQ(rank({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 3u);
}

}  // namespace
}  // namespace greedybench
