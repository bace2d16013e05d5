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

#include "greedybench/serialize.hpp"

#include <stdexcept>
#include <string>

namespace greedybench {
namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("JSON: missing field '") + key + "'");
  }
  return j.at(key);
}

std::size_t size_from_json(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw std::invalid_argument(std::string("JSON: '") + what + "' must be a nonnegative integer");
  }
  return j.get<std::size_t>();
}

template <class T>
Json weight_json(const BasicWeight<T>& w) {
  Json out = Json::object();
  if (!w.is_eventually_constant()) {
    out["generator"] = w.generator_name();
    out["limit"] = value_to_json(w.tail_limit());
    return out;
  }
  Json prefix = Json::array();
  for (const T& v : w.prefix()) prefix.push_back(value_to_json(v));
  out["prefix"] = std::move(prefix);
  out["tail"] = value_to_json(w.tail_limit());
  return out;
}

}  // namespace

template <class T>
Json value_to_json(const T& value) {
  return format_value(value);
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("JSON: rationals are strings like \"p/q\" or integers");
}

Json weight_to_json(const Weight& w) { return weight_json(w); }
Json weight_to_json(const RealWeight& w) { return weight_json(w); }

std::variant<Weight, RealWeight> weight_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("JSON: weight must be an object");
  if (j.contains("generator")) {
    const std::string name = field(j, "generator").get<std::string>();
    const Rational limit = rational_from_json(field(j, "limit"));
    return named_generator_weight(name, to_real(limit));
  }
  std::vector<Rational> prefix;
  if (j.contains("prefix")) {
    const Json& items = j.at("prefix");
    if (!items.is_array()) throw std::invalid_argument("JSON: 'prefix' must be an array");
    for (const Json& item : items) prefix.push_back(rational_from_json(item));
  }
  return Weight::eventually_constant(std::move(prefix), rational_from_json(field(j, "tail")));
}

template <class T>
Json vector_to_json(const SparseVector<T>& f) {
  Json entries = Json::object();
  for (const auto& [index, value] : f.entries()) entries[std::to_string(index)] = value_to_json(value);
  Json out = Json::object();
  out["entries"] = std::move(entries);
  return out;
}

SparseVector<Rational> vector_from_json(const Json& j) {
  const Json& entries = field(j, "entries");
  if (!entries.is_object()) throw std::invalid_argument("JSON: 'entries' must be an object");
  SparseVector<Rational>::Entries out;
  for (const auto& [key, value] : entries.items()) {
    std::size_t pos = 0;
    unsigned long index = 0;
    try {
      index = std::stoul(key, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != key.size() || index == 0) {
      throw std::invalid_argument("JSON: vector index '" + key + "' is not a positive integer");
    }
    if (!out.emplace(index, rational_from_json(value)).second) {
      throw std::invalid_argument("JSON: duplicate index " + key);
    }
  }
  return SparseVector<Rational>(std::move(out));
}

Json indices_to_json(const IndexSet& s) {
  Json out = Json::array();
  for (Index j : s) out.push_back(j);
  return out;
}

IndexSet indices_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("JSON: index sets are arrays");
  IndexSet out;
  for (const Json& item : j) {
    const std::size_t index = size_from_json(item, "index");
    if (index == 0) throw std::invalid_argument("JSON: indices are 1-based");
    out.insert(index);
  }
  return out;
}

Json family_to_json(const FunctionalFamily& family) {
  Json functionals = Json::array();
  for (const Functional& u : family.functionals()) {
    Json row = Json::array();
    for (const Rational& v : u) row.push_back(format_rational(v));
    functionals.push_back(std::move(row));
  }
  Json out = Json::object();
  out["d"] = family.dimension();
  out["functionals"] = std::move(functionals);
  return out;
}

FunctionalFamily family_from_json(const Json& j, std::string* label) {
  if (!j.is_object()) throw std::invalid_argument("JSON: family must be an object");
  if (j.contains("name")) {
    const std::string name = j.at("name").get<std::string>();
    FamilySpec spec;
    if (name == "bad_dual") {
      spec = BadDualSpec{size_from_json(field(j, "d"), "d")};
    } else if (name == "hexagon") {
      spec = HexagonSpec{rational_from_json(field(j, "alpha"))};
    } else if (name == "pafinite_dw") {
      auto weight = weight_from_json(field(j, "weight"));
      if (!std::holds_alternative<Weight>(weight)) {
        throw std::invalid_argument("JSON: pafinite_dw needs an eventually-constant weight");
      }
      spec = PAFiniteDwSpec{size_from_json(field(j, "d"), "d"), std::get<Weight>(weight)};
    } else {
      throw std::invalid_argument("JSON: unknown family '" + name + "'");
    }
    if (label != nullptr) *label = describe(spec);
    return family_for(spec);
  }
  const std::size_t d = size_from_json(field(j, "d"), "d");
  const Json& rows = field(j, "functionals");
  if (!rows.is_array()) throw std::invalid_argument("JSON: 'functionals' must be an array");
  std::vector<Functional> functionals;
  for (const Json& row : rows) {
    if (!row.is_array()) throw std::invalid_argument("JSON: each functional is an array");
    Functional u;
    for (const Json& v : row) u.push_back(rational_from_json(v));
    functionals.push_back(std::move(u));
  }
  if (label != nullptr) *label = "explicit(d=" + std::to_string(d) + ")";
  return FunctionalFamily(d, std::move(functionals));
}

template <class T>
Json norm_spec_to_json(const BasicNormSpec<T>& spec) {
  Json out = Json::object();
  std::visit(
      [&out](const auto& s) {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, PolyhedralNorm>) {
          out["kind"] = "polyhedral";
          if (!s.label.empty()) out["label"] = s.label;
          out["family"] = family_to_json(s.family);
        } else {
          if constexpr (std::is_same_v<S, DwNorm<T>>) {
            out["kind"] = "dw";
          } else if constexpr (std::is_same_v<S, LorentzNorm<T>>) {
            out["kind"] = "lorentz";
          } else if constexpr (std::is_same_v<S, MarcinkiewiczNorm<T>>) {
            out["kind"] = "marcinkiewicz";
          } else {
            out["kind"] = "signedsup";
          }
          out["weight"] = weight_to_json(s.weight);
        }
      },
      spec);
  return out;
}

std::variant<NormSpec, RealNormSpec> norm_spec_from_json(const Json& j) {
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "polyhedral") {
    std::string label;
    FunctionalFamily family = family_from_json(field(j, "family"), &label);
    if (j.contains("label")) label = j.at("label").get<std::string>();
    return NormSpec(PolyhedralNorm{std::move(family), std::move(label)});
  }
  DwStrategy strategy = DwStrategy::kAuto;
  if (j.contains("strategy")) {
    const std::string s = j.at("strategy").get<std::string>();
    if (s == "enumerate") {
      strategy = DwStrategy::kEnumerate;
    } else if (s == "greedy_sets") {
      strategy = DwStrategy::kGreedySets;
    } else if (s != "auto") {
      throw std::invalid_argument("JSON: unknown strategy '" + s + "'");
    }
  }
  auto build = [&](auto weight) -> std::variant<NormSpec, RealNormSpec> {
    using W = decltype(weight);
    using T = std::conditional_t<std::is_same_v<W, Weight>, Rational, Real>;
    using Spec = BasicNormSpec<T>;
    if (kind == "dw") return Spec(DwNorm<T>{std::move(weight), strategy});
    if (kind == "lorentz") return Spec(LorentzNorm<T>{std::move(weight)});
    if (kind == "marcinkiewicz") return Spec(MarcinkiewiczNorm<T>{std::move(weight)});
    if (kind == "signedsup") return Spec(SignedSupNorm<T>{std::move(weight)});
    throw std::invalid_argument("JSON: unknown norm kind '" + kind + "'");
  };
  return std::visit(build, weight_from_json(field(j, "weight")));
}

template <class T>
Json certificate_to_json(const Certificate<T>& c) {
  Json witness = Json::object();
  Json vectors = Json::array();
  for (const auto& v : c.witness) vectors.push_back(vector_to_json(v));
  witness["vectors"] = std::move(vectors);
  if (c.kind == ConstantKind::kSuppression) witness["projection"] = indices_to_json(c.projection);
  if (c.kind == ConstantKind::kQuasiGreedy) witness["m"] = c.m;
  Json out = Json::object();
  out["kind"] = to_string(c.kind);
  out["value"] = value_to_json(c.value);
  out["witness"] = std::move(witness);
  out["family"] = c.family;
  out["exact"] = c.exact;
  out["bound_kind"] = to_string(c.bound_kind);
  out["citations"] = c.citations;
  return out;
}

template <class T>
Json trace_to_json(const GreedyTrace<T>& t) {
  Json out = Json::array();
  for (std::size_t m = 0; m < t.residual_norms.size(); ++m) {
    Json row = Json::object();
    row["m"] = m;
    row["residual"] = value_to_json(t.residual_norms[m]);
    row["support"] = indices_to_json(IndexSet(t.ordering.begin(),
                                              t.ordering.begin() + static_cast<std::ptrdiff_t>(m)));
    out.push_back(std::move(row));
  }
  return out;
}

template <class T>
Json property_a_to_json(const PropertyAResult<T>& r) {
  Json out = Json::object();
  out["status"] = to_string(r.status);
  if (r.status == PropertyAStatus::kInvalidInstance) {
    out["reason"] = r.reason;
    return out;
  }
  out["lhs"] = value_to_json(r.lhs);
  out["rhs"] = value_to_json(r.rhs);
  out["margin"] = value_to_json(r.margin);
  return out;
}

template <class T>
Json almost_greedy_to_json(const std::vector<AlmostGreedyEntry<T>>& entries) {
  Json out = Json::array();
  for (const auto& e : entries) {
    Json row = Json::object();
    row["m"] = e.m;
    row["sigma_tilde"] = value_to_json(e.sigma_tilde);
    row["residual"] = value_to_json(e.residual);
    row["margin"] = value_to_json(e.margin);
    row["tie"] = e.tie;
    out.push_back(std::move(row));
  }
  return out;
}

#define GREEDYBENCH_INSTANTIATE_SERIALIZE(T)                                        \
  template Json value_to_json(const T&);                                           \
  template Json vector_to_json(const SparseVector<T>&);                            \
  template Json norm_spec_to_json(const BasicNormSpec<T>&);                        \
  template Json certificate_to_json(const Certificate<T>&);                        \
  template Json trace_to_json(const GreedyTrace<T>&);                              \
  template Json property_a_to_json(const PropertyAResult<T>&);                     \
  template Json almost_greedy_to_json(const std::vector<AlmostGreedyEntry<T>>&);

GREEDYBENCH_INSTANTIATE_SERIALIZE(Rational)
GREEDYBENCH_INSTANTIATE_SERIALIZE(Real)

#undef GREEDYBENCH_INSTANTIATE_SERIALIZE

}  // namespace greedybench
