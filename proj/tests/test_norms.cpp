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

#include <algorithm>
#include <random>

#include "greedybench/random.hpp"
#include "greedybench/witnesses.hpp"
#include "test_util.hpp"

namespace greedybench {
namespace {

using testing::Q;
using testing::vec;
using testing::w1t;

TEST(Phi1, Examples) {
  const Weight w = w1t("1/3");
  const auto f = vec({{1, "1"}, {2, "1/3"}});
  EXPECT_EQ(phi1(w, IndexSet{1}, f), Rational(1));
  EXPECT_EQ(phi1(w, IndexSet{1, 2}, f), Rational(8, 9));
  EXPECT_EQ(phi1(w, IndexSet{}, f), Rational(0));
}

TEST(Phi2, Examples) {
  const Weight w = w1t("1/3");
  EXPECT_EQ(phi2(w, IndexSet{}, vec({{1, "1"}, {2, "1/3"}})), Rational(10, 9));
  EXPECT_EQ(phi2(w, IndexSet{1}, renorming_g<Rational>(1, Q("1/3"))), Rational(0));
  EXPECT_EQ(phi2(w, IndexSet{1, 2, 3}, renorming_g<Rational>(1, Q("1/3"))), Rational(0));
}

TEST(Phi, BreakdownAddsUp) {
  Rng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const Weight w = random_weight(rng);
    const auto f = random_vector(rng, 5, 7);
    const IndexSet e = random_subset(rng, f.support());
    const auto b = phi(w, e, f);
    EXPECT_EQ(b.phi, b.phi1 + b.phi2);
    EXPECT_GE(b.phi2, 0);
  }
}

TEST(DwNorm, Examples) {
  const Weight w = w1t("1/3");
  EXPECT_EQ(dw_norm(w, renorming_f<Rational>(1, Q("1/3"))), Rational(10, 9));
  EXPECT_EQ(dw_norm(w, renorming_g<Rational>(1, Q("1/3"))), Rational(1));
  EXPECT_EQ(dw_norm(w, SparseVector<Rational>()), Rational(0));
  for (std::size_t m = 1; m <= 8; ++m) {
    IndexSet a;
    for (std::size_t j = 1; j <= m; ++j) a.insert(2 * j);
    EXPECT_EQ(dw_norm(w, SparseVector<Rational>::indicator(a)), w.primitive(m));
  }
}

TEST(DwNorm, StrategiesAgree) {
  Rng rng(22);
  for (int trial = 0; trial < 1500; ++trial) {
    const Weight w = random_weight(rng);
    const auto f = random_vector(rng, 9, 12, 4);
    const Rational enumerated = dw_norm(w, f, DwStrategy::kEnumerate);
    EXPECT_EQ(dw_norm(w, f, DwStrategy::kGreedySets), enumerated);
    EXPECT_EQ(dw_norm(w, f), enumerated);
  }
}

TEST(DwNorm, GreedySetsOnLargeSupport) {
  Rng rng(23);
  for (int trial = 0; trial < 5; ++trial) {
    const Weight w = random_weight(rng);
    const auto f = random_vector(rng, 14, 14, 3);
    EXPECT_EQ(dw_norm(w, f, DwStrategy::kGreedySets), dw_norm(w, f, DwStrategy::kEnumerate));
  }
}

TEST(Lorentz, Examples) {
  const Weight w = w1t("1/3");
  EXPECT_EQ(lorentz_norm(w, vec({{1, "1"}, {2, "1/2"}})), Rational(7, 6));
  EXPECT_EQ(lorentz_norm(w, vec({{1, "1"}, {4, "-1"}, {9, "1"}})), w.primitive(3));
}

TEST(Marcinkiewicz, Examples) {
  const Weight w = w1t("1/3");
  EXPECT_EQ(marcinkiewicz_norm(w, vec({{1, "1"}, {2, "1"}})), Rational(4, 3));
  EXPECT_EQ(marcinkiewicz_norm(w, vec({{6, "-5/7"}})), Rational(5, 7));
}

TEST(SignedSup, Examples) {
  const Weight w = w1t("1/3");
  EXPECT_EQ(signedsup_norm(w, vec({{1, "1"}, {2, "-1"}})).value, Rational(2, 3));
  EXPECT_EQ(signedsup_norm(w, vec({{1, "1"}, {2, "1"}})).value, Rational(4, 3));
  EXPECT_FALSE(signedsup_norm(w, vec({{1, "1"}})).seminorm);
  for (std::size_t m = 1; m <= 6; ++m) {
    SparseVector<Rational>::Entries alt;
    for (std::size_t j = 1; j <= 2 * m; ++j) alt.emplace(j, j % 2 == 1 ? Rational(1) : Rational(-1));
    EXPECT_EQ(signedsup_norm(w, SparseVector<Rational>(alt)).value,
              w.primitive(m) - Rational(static_cast<unsigned long>(m)) * w.tail_limit());
  }
}

TEST(SignedSup, ConstantWeightIsFlaggedSeminorm) {
  const auto r = signedsup_norm(Weight::constant(), vec({{1, "1"}, {2, "-1"}}));
  EXPECT_TRUE(r.seminorm);
  EXPECT_EQ(r.value, Rational(0));
}

TEST(NormProperties, SandwichComparisonAndConstantSign) {
  Rng rng(24);
  for (int trial = 0; trial < 1000; ++trial) {
    const Weight w = random_weight(rng);
    const auto f = random_vector(rng, 6, 10);
    const Rational d = dw_norm(w, f);
    EXPECT_LE(marcinkiewicz_norm(w, f), d);
    EXPECT_LE(d, lorentz_norm(w, f));
    EXPECT_LE(lorentz_norm(w, f), 4 * d);
    const auto p = random_nonnegative_vector(rng, 6, 10);
    EXPECT_EQ(dw_norm(w, p), lorentz_norm(w, p));
    EXPECT_EQ(dw_norm(w, -p), lorentz_norm(w, p));
  }
}

TEST(NormProperties, PermutationInvariance) {
  Rng rng(25);
  for (int trial = 0; trial < 400; ++trial) {
    const Weight w = random_weight(rng);
    const auto f = random_vector(rng, 6, 8);
    std::vector<Index> targets(12);
    for (Index j = 0; j < 12; ++j) targets[j] = j + 1;
    std::shuffle(targets.begin(), targets.end(), std::mt19937_64(rng.next()));
    std::map<Index, Index> pi;
    for (Index j = 1; j <= 12; ++j) pi[j] = targets[j - 1];
    EXPECT_EQ(dw_norm(w, permute(f, pi)), dw_norm(w, f));
  }
}

TEST(NormProperties, LatticeMonotonicity) {
  Rng rng(26);
  for (int trial = 0; trial < 400; ++trial) {
    const Weight w = random_weight(rng);
    const auto f = random_vector(rng, 6, 8);
    SparseVector<Rational>::Entries bigger;
    for (const auto& [j, v] : f.entries()) bigger.emplace(j, abs_value(v) + rng.rational(4, 1, false));
    bigger.emplace(9, rng.rational(4, 1, false));
    EXPECT_LE(dw_norm(w, f), dw_norm(w, SparseVector<Rational>(bigger)));
  }
}

TEST(NormProperties, TriangleAndHomogeneity) {
  Rng rng(27);
  for (int trial = 0; trial < 400; ++trial) {
    const Weight w = random_weight(rng);
    const auto f = random_vector(rng, 5, 8);
    const auto g = random_vector(rng, 5, 8);
    const Rational c = rng.rational(5, 3, true);
    EXPECT_LE(dw_norm(w, f + g), dw_norm(w, f) + dw_norm(w, g));
    EXPECT_EQ(dw_norm(w, c * f), abs_value(c) * dw_norm(w, f));
  }
}

TEST(NormProperties, BidemocracyPairing) {
  Rng rng(28);
  for (int trial = 0; trial < 400; ++trial) {
    const Weight w = random_weight(rng);
    const auto f = random_vector(rng, 6, 8);
    IndexSet a = random_subset(rng, IndexSet{1, 2, 3, 4, 5, 6, 7, 8});
    if (a.empty()) continue;
    Rational pairing(0);
    for (Index j : a) pairing += rng.sign() * f[j];
    const Rational m(static_cast<unsigned long>(a.size()));
    EXPECT_LE(abs_value(pairing) * w.primitive(a.size()), m * dw_norm(w, f));
  }
}

TEST(NormSpecs, EvaluateDispatchAndDescribe) {
  const Weight w = w1t("1/3");
  const auto f = vec({{1, "1"}, {2, "1/2"}});
  EXPECT_EQ(evaluate(NormSpec(LorentzNorm<Rational>{w}), f), Rational(7, 6));
  EXPECT_EQ(evaluate(NormSpec(DwNorm<Rational>{w}), SparseVector<Rational>()), Rational(0));
  EXPECT_TRUE(is_symmetric(NormSpec(DwNorm<Rational>{w})));
  EXPECT_NE(weight_of(NormSpec(MarcinkiewiczNorm<Rational>{w})), nullptr);
  EXPECT_FALSE(describe(NormSpec(SignedSupNorm<Rational>{w})).empty());
}

TEST(RealPath, AgreesWithRationalPath) {
  Rng rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const Weight w = random_weight(rng);
    const auto f = random_vector(rng, 5, 8);
    const Real exact = to_real(dw_norm(w, f));
    const Real approx = dw_norm(to_real(w), to_real(f));
    EXPECT_LE(abs_value(Real(exact - approx)), Real("1e-60"));
  }
}

TEST(RealPath, SqrtWeightIndicatorNorm) {
  const RealWeight w = sqrt_primitive_weight(100);
  const auto one = SparseVector<Real>::indicator(IndexSet{1, 2, 3, 4});
  EXPECT_LE(abs_value(Real(dw_norm(w, one) - 2)), Real("1e-60"));
}

}  // namespace
}  // namespace greedybench
