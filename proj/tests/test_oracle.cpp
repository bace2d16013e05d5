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

#include <stdexcept>

#include "greedybench/oracle.hpp"
#include "greedybench/random.hpp"
#include "greedybench/witnesses.hpp"
#include "test_util.hpp"

namespace greedybench {
namespace {

using oracle::OracleConfig;
using testing::Q;
using testing::vec;
using testing::w1t;

std::size_t stable_horizon(const Weight& w, const IndexSet& e, const SparseVector<Rational>& f) {
  return e.size() + f.support_size() + w.prefix_length() + 1;
}

TEST(Phi2Oracle, Examples) {
  const Weight w = w1t("1/3");
  const auto f = vec({{1, "1"}, {2, "1/3"}});
  EXPECT_EQ(oracle::phi2_bruteforce(w, IndexSet{}, f, OracleConfig{10, 0}), Rational(10, 9));
  EXPECT_EQ(oracle::phi2_bruteforce(w, IndexSet{1, 2}, f, OracleConfig{10, 0}), Rational(0));
  const auto p = vec({{2, "1/2"}, {5, "1"}, {7, "1/4"}});
  EXPECT_EQ(oracle::phi2_bruteforce(w, IndexSet{}, p, OracleConfig{12, 0}), lorentz_norm(w, p));
}

TEST(Phi2Oracle, RejectsLargeSupport) {
  SparseVector<Rational>::Entries big;
  for (Index j = 1; j <= 9; ++j) big.emplace(j, Rational(1));
  EXPECT_THROW(oracle::phi2_bruteforce(w1t("1/3"), IndexSet{}, SparseVector<Rational>(big), OracleConfig{30, 0}),
               std::invalid_argument);
}

TEST(Phi2Oracle, ClosedFormWithHorizonSweep) {
  Rng rng(61);
  for (int trial = 0; trial < 600; ++trial) {
    const Weight w = random_weight(rng);
    const auto f = random_vector(rng, 5, 8);
    const IndexSet e = random_subset(rng, f.support());
    const std::size_t base = stable_horizon(w, e, f);
    const Rational closed = phi2(w, e, f);
    Rational previous(-1);
    for (std::size_t h = f.support_size(); h <= 4 * base; ++h) {
      const Rational value = oracle::phi2_bruteforce(w, e, f, OracleConfig{h, 0});
      EXPECT_GE(value, previous);
      EXPECT_LE(value, closed);
      previous = value;
      if (h >= base && h % base == 0) {
        EXPECT_EQ(value, closed) << "horizon " << h;
      }
    }
  }
}

TEST(Phi2Oracle, DpMatchesNaiveEnumeration) {
  Rng rng(62);
  for (int trial = 0; trial < 300; ++trial) {
    const Weight w = random_weight(rng);
    const auto f = random_vector(rng, 5, 7);
    const IndexSet e = random_subset(rng, f.support());
    const std::size_t h = e.size() + f.support_size() + rng.between(0, 3);
    EXPECT_EQ(oracle::phi2_bruteforce(w, e, f, OracleConfig{h, 0}), oracle::phi2_naive(w, e, f, h));
  }
}

TEST(DwOracle, Examples) {
  const Weight w = w1t("1/3");
  const auto f = renorming_f<Rational>(1, Q("1/3"));
  EXPECT_EQ(oracle::dw_norm_bruteforce(w, f, oracle::stable_config(w, f, 4)), Rational(10, 9));
  const auto one = SparseVector<Rational>::indicator(IndexSet{1, 2});
  EXPECT_EQ(oracle::dw_norm_bruteforce(w, one, oracle::stable_config(w, one, 4)), Rational(4, 3));
  const auto g = renorming_g<Rational>(1, Q("1/3"));
  EXPECT_EQ(oracle::dw_norm_bruteforce(w, g, oracle::stable_config(w, g, 12)), Rational(1));
}

TEST(DwOracle, OffSupportSetsNeverExceed) {
  const Weight w = w1t("1/3");
  const auto g = renorming_g<Rational>(1, Q("1/3"));
  EXPECT_LE(phi(w, IndexSet{1, 4}, g).phi, Rational(1));
  EXPECT_LE(phi(w, IndexSet{4}, g).phi, Rational(1));
}

TEST(DwOracle, RejectsBadConfig) {
  const Weight w = w1t("1/3");
  const auto f = vec({{5, "1"}});
  EXPECT_THROW(oracle::dw_norm_bruteforce(w, f, OracleConfig{30, 21}), std::invalid_argument);
  EXPECT_THROW(oracle::dw_norm_bruteforce(w, f, OracleConfig{30, 4}), std::invalid_argument);
  EXPECT_THROW(oracle::dw_norm_bruteforce(w, f, OracleConfig{5, 8}), std::invalid_argument);
}

TEST(DwOracle, MatchesDwNormOnRandomInstances) {
  Rng rng(63);
  for (int trial = 0; trial < 300; ++trial) {
    const Weight w = random_weight(rng);
    const auto f = random_vector(rng, 5, 12);
    EXPECT_EQ(oracle::dw_norm_bruteforce(w, f, oracle::stable_config(w, f, 12)), dw_norm(w, f));
  }
}

}  // namespace
}  // namespace greedybench
