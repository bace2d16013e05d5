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

// JSON forms. Exact rationals travel as "p/q" strings, reals as decimal
// strings. Parsers throw std::invalid_argument on malformed input.

#ifndef GREEDYBENCH_SERIALIZE_HPP_
#define GREEDYBENCH_SERIALIZE_HPP_

#include <variant>
#include <vector>

#include "json.hpp"

#include "greedybench/certify.hpp"
#include "greedybench/greedy.hpp"
#include "greedybench/norms.hpp"
#include "greedybench/polyhedral.hpp"
#include "greedybench/vectors.hpp"
#include "greedybench/weights.hpp"

namespace greedybench {

using Json = nlohmann::ordered_json;

template <class T>
Json value_to_json(const T& value);

Rational rational_from_json(const Json& j);

/// {"prefix": [...], "tail": "t"} or, for generator weights,
/// {"generator": name, "limit": "l"}.
Json weight_to_json(const Weight& w);
Json weight_to_json(const RealWeight& w);

/// Generator weights come back as RealWeight.
std::variant<Weight, RealWeight> weight_from_json(const Json& j);

/// {"entries": {"1": "1", "2": "1/3"}}.
template <class T>
Json vector_to_json(const SparseVector<T>& f);

SparseVector<Rational> vector_from_json(const Json& j);

Json indices_to_json(const IndexSet& s);
IndexSet indices_from_json(const Json& j);

/// {"d": 3, "functionals": [[...], ...]}.
Json family_to_json(const FunctionalFamily& family);

/// Accepts the explicit form above or a named family:
/// {"name": "bad_dual", "d": 3}, {"name": "hexagon", "alpha": "1/2"},
/// {"name": "pafinite_dw", "d": 3, "weight": {...}}.
FunctionalFamily family_from_json(const Json& j, std::string* label = nullptr);

template <class T>
Json norm_spec_to_json(const BasicNormSpec<T>& spec);

/// {"kind": "dw"|"lorentz"|"marcinkiewicz"|"signedsup", "weight": {...}}
/// or {"kind": "polyhedral", "family": {...}}. A generator weight yields a
/// RealNormSpec.
std::variant<NormSpec, RealNormSpec> norm_spec_from_json(const Json& j);

template <class T>
Json certificate_to_json(const Certificate<T>& c);

template <class T>
Json trace_to_json(const GreedyTrace<T>& t);

template <class T>
Json property_a_to_json(const PropertyAResult<T>& r);

template <class T>
Json almost_greedy_to_json(const std::vector<AlmostGreedyEntry<T>>& entries);

}  // namespace greedybench

#endif  // GREEDYBENCH_SERIALIZE_HPP_
