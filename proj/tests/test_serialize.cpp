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

#include "greedybench/serialize.hpp"
#include "greedybench/witnesses.hpp"
#include "test_util.hpp"

namespace greedybench {
namespace {

using testing::Q;
using testing::vec;
using testing::w1t;

TEST(Serialize, WeightRoundTrip) {
  const Json j = Json::parse(R"({"prefix": ["1", "1/2"], "tail": "1/3"})");
  const auto w = weight_from_json(j);
  ASSERT_TRUE(std::holds_alternative<Weight>(w));
  EXPECT_EQ(std::get<Weight>(w).primitive(3), Q("11/6"));
  EXPECT_EQ(weight_to_json(std::get<Weight>(w)), j);
}

TEST(Serialize, GeneratorWeight) {
  const auto w = weight_from_json(Json::parse(R"({"generator": "sqrt_primitive", "limit": "0"})"));
  ASSERT_TRUE(std::holds_alternative<RealWeight>(w));
  EXPECT_EQ(std::get<RealWeight>(w).primitive(9), Real(3));
  EXPECT_THROW(weight_from_json(Json::parse(R"({"generator": "nope", "limit": "0"})")), std::invalid_argument);
}

TEST(Serialize, VectorRoundTrip) {
  const auto f = vec({{1, "1"}, {2, "1/3"}, {3, "-1/3"}});
  const Json j = vector_to_json(f);
  EXPECT_EQ(j.dump(), R"({"entries":{"1":"1","2":"1/3","3":"-1/3"}})");
  EXPECT_EQ(vector_from_json(j), f);
  EXPECT_THROW(vector_from_json(Json::parse(R"({"entries":{"0":"1"}})")), std::invalid_argument);
  EXPECT_THROW(vector_from_json(Json::parse(R"({"entries":{"x":"1"}})")), std::invalid_argument);
  EXPECT_THROW(vector_from_json(Json::parse(R"({"entries":{"1":"1/0"}})")), std::invalid_argument);
}

TEST(Serialize, NormSpecs) {
  const auto dw = norm_spec_from_json(Json::parse(R"({"kind":"dw","weight":{"prefix":["1"],"tail":"1/3"}})"));
  ASSERT_TRUE(std::holds_alternative<NormSpec>(dw));
  EXPECT_EQ(evaluate(std::get<NormSpec>(dw), renorming_f<Rational>(1, Q("1/3"))), Q("10/9"));
  EXPECT_EQ(norm_spec_to_json(std::get<NormSpec>(dw))["kind"], "dw");

  const auto poly = norm_spec_from_json(
      Json::parse(R"({"kind":"polyhedral","family":{"d":2,"functionals":[["1/2","0"],["0","1/2"],["1","1"]]}})"));
  ASSERT_TRUE(std::holds_alternative<NormSpec>(poly));
  EXPECT_EQ(evaluate(std::get<NormSpec>(poly), vec({{1, "2"}})), Rational(2));

  const auto named = norm_spec_from_json(Json::parse(R"({"kind":"polyhedral","family":{"name":"bad_dual","d":3}})"));
  EXPECT_EQ(evaluate(std::get<NormSpec>(named), vec({{1, "1"}, {2, "1"}, {3, "-1/2"}})), Q("11/6"));

  const auto real = norm_spec_from_json(
      Json::parse(R"({"kind":"lorentz","weight":{"generator":"sqrt_primitive","limit":"0"}})"));
  EXPECT_TRUE(std::holds_alternative<RealNormSpec>(real));

  EXPECT_THROW(norm_spec_from_json(Json::parse(R"({"kind":"what","weight":{"tail":"1"}})")), std::invalid_argument);
  EXPECT_THROW(norm_spec_from_json(Json::parse(R"({"weight":{"tail":"1"}})")), std::invalid_argument);
}

TEST(Serialize, FamilyRoundTrip) {
  const auto family = family_for(HexagonSpec{Q("1/3")});
  EXPECT_EQ(family_from_json(family_to_json(family)).functionals(), family.functionals());
}

TEST(Serialize, CertificateFields) {
  const NormSpec spec = DwNorm<Rational>{w1t("1/3")};
  const auto g = renorming_g<Rational>(1, Q("1/3"));
  const auto cert = ks_lower_bound<Rational>(spec, ExplicitFamily<Rational>{"pair", {{g, IndexSet{1, 2}}}}, {"c"});
  const Json j = certificate_to_json(cert);
  for (const char* key : {"kind", "value", "witness", "family", "exact", "bound_kind", "citations"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["value"], "10/9");
  EXPECT_EQ(j["bound_kind"], "lower_bound");
  EXPECT_EQ(j["witness"]["projection"], Json::parse("[1, 2]"));
}

TEST(Serialize, TraceShape) {
  const NormSpec spec = DwNorm<Rational>{w1t("1/3")};
  const Json j = trace_to_json(trace(renorming_f<Rational>(1, Q("1/3")), spec));
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j[0]["residual"], "10/9");
  EXPECT_EQ(j[1]["support"], Json::parse("[1]"));
  EXPECT_EQ(j[2]["residual"], "0");
}

}  // namespace
}  // namespace greedybench
