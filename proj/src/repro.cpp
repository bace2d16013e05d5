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

#include "greedybench/repro.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "greedybench/certify.hpp"
#include "greedybench/random.hpp"
#include "greedybench/witnesses.hpp"

namespace greedybench {
namespace {

constexpr const char* kExact = "exact";
constexpr const char* kRealTolText = "1e-12";

Real real_tolerance() { return Real("1e-12"); }

const char* const kCiteK1 =
    "K_1 = 10/9: ||f_{1,1/3}|| / ||g_{1,1/3}|| under w = (1, 1/3, 1/3, ...)";
const char* const kCiteRenormingNorms =
    "||f_{n,w}|| = 1 + n w^2 and ||g_{n,w}|| = max{1, (1 + n w)^2 / (n + 1) + n w^2}";
const char* const kCiteKn =
    "K_n = 1 + n omega_n^2 = 1 + (1 - 2 omega_n) n / (2n + 1) increases from 10/9 to 3/2";
const char* const kCiteBadDual = "bad-dual space: ||g|| = d - 7/6 and ||h*|| <= 1 < ||g*||";
const char* const kCiteHexagon =
    "hexagon norm: ||alpha^-1 (e_1 - e_2)|| = 1 while ||alpha^-1 e_1|| = alpha^-1";
const char* const kCitePAFinite =
    "D_w restricted to R^d has Property (A) and suppression constant K_s >= 10/9";
const char* const kCiteLattice =
    "||h_n|| / ||g_n|| = 1 + 2 n w_n^2 = 1 + (1 - 2 omega_n) 2n / (2n + 1) -> 2 from below";
const char* const kCiteUcc =
    "s_{2m} = ||1_{A_m}|| <= C ||1_{eps,A_m}|| = C (s_m - m w_inf) fails for every C";
const char* const kCiteRemark =
    "max of ||f_a|| / ||g_a|| over 0 < a < 1 and all weights is 10/9, at a = 1/3 and "
    "w = (1, 1/3, 1/3, ...)";
const char* const kCiteSandwich = "||f||_{m,w} <= ||f||_{D,w} <= ||f||_{1,w}";
const char* const kCiteCompare = "||f||_{1,w} <= 4 ||f||_{D,w} for real scalars";
const char* const kCiteConstantSign = "||f||_{D,w} = ||f||_{1,w} for f of constant sign";

// --- parameters -----------------------------------------------------------

std::size_t param_size(const ScenarioParameters& p, const std::string& key, std::size_t lo,
                       std::size_t hi) {
  const std::string& text = p.at(key);
  std::size_t pos = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != text.size() || value < lo || value > hi) {
    throw std::invalid_argument("parameter '" + key + "' must be an integer in [" +
                                std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return value;
}

std::vector<Rational> param_rationals(const ScenarioParameters& p, const std::string& key) {
  std::vector<Rational> out;
  std::stringstream stream(p.at(key));
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (!item.empty()) out.push_back(parse_rational(item));
  }
  return out;
}

// --- expectation helpers ---------------------------------------------------

Expectation exact(std::string label, const Rational& expected, const Rational& computed,
                  std::string citation) {
  return {std::move(label), format_rational(expected), format_rational(computed), kExact,
          expected == computed, std::move(citation)};
}

Expectation within(std::string label, const Real& expected, const Real& computed,
                   std::string citation) {
  const Real gap = abs_value(Real(computed - expected));
  return {std::move(label), format_decimal(expected, 20), format_decimal(computed, 20), kRealTolText,
          gap <= real_tolerance(), std::move(citation)};
}

// relation is one of "<=", ">=", "<", ">".
template <class T>
Expectation bound(std::string label, const std::string& relation, const T& limit, const T& computed,
                  std::string citation) {
  bool ok = false;
  if (relation == "<=") ok = computed <= limit;
  if (relation == ">=") ok = computed >= limit;
  if (relation == "<") ok = computed < limit;
  if (relation == ">") ok = computed > limit;
  std::string shown_limit;
  std::string shown_value;
  if constexpr (is_exact_v<T>) {
    shown_limit = format_rational(limit);
    shown_value = format_rational(computed);
  } else {
    shown_limit = format_decimal(limit, 20);
    shown_value = format_decimal(computed, 20);
  }
  return {std::move(label), relation + " " + shown_limit, std::move(shown_value),
          is_exact_v<T> ? kExact : kRealTolText, ok, std::move(citation)};
}

Expectation count_zero(std::string label, std::size_t violations, std::size_t total,
                       std::string citation) {
  return {std::move(label), "0 of " + std::to_string(total),
          std::to_string(violations) + " of " + std::to_string(total), kExact, violations == 0,
          std::move(citation)};
}

Expectation holds(std::string label, bool ok, std::string citation) {
  return {std::move(label), "true", ok ? "true" : "false", kExact, ok, std::move(citation)};
}

std::vector<std::string> rational_cells(const Rational& q) {
  return {format_decimal(q, 15), format_rational(q)};
}

std::string n_label(const char* what, std::size_t n) {
  return std::string(what) + " (n=" + std::to_string(n) + ")";
}

// --- scenarios ---------------------------------------------------------------

void k1_witness(const ScenarioParameters&, ScenarioReport& r) {
  const Rational third(1, 3);
  const NormSpec spec = DwNorm<Rational>{one_then_constant(third)};
  const auto f = renorming_f<Rational>(1, third);
  const auto g = renorming_g<Rational>(1, third);
  r.expectations.push_back(exact("||f_{1,1/3}||_{D,w}", Rational(10, 9), evaluate(spec, f), kCiteK1));
  r.expectations.push_back(exact("||g_{1,1/3}||_{D,w}", Rational(1), evaluate(spec, g), kCiteK1));
  const auto cert = ks_lower_bound<Rational>(
      spec, ExplicitFamily<Rational>{"g_{1,1/3} projected onto {1, 2}", {{g, IndexSet{1, 2}}}},
      {kCiteK1});
  r.expectations.push_back(exact("suppression ratio ||S_{1,2} g|| / ||g||", Rational(10, 9), cert.value,
                                 kCiteK1));
  r.expectations.push_back(holds("certificate re-verifies", verify(cert, spec), kCiteK1));
  r.certificates.push_back(certificate_to_json(cert));
  for (std::size_t n = 1; n <= 3; ++n) {
    r.expectations.push_back(exact(n_label("||f_{n,1/3}|| closed form", n), renorming_f_norm(n, third),
                                   evaluate(spec, renorming_f<Rational>(n, third)),
                                   kCiteRenormingNorms));
    r.expectations.push_back(exact(n_label("||g_{n,1/3}|| closed form", n), renorming_g_norm(n, third),
                                   evaluate(spec, renorming_g<Rational>(n, third)),
                                   kCiteRenormingNorms));
  }
}

void kn_curve(const ScenarioParameters& p, ScenarioReport& r) {
  const std::size_t top = param_size(p, "n", 1, 256);
  r.csv.header = {"n", "omega_n", "K_n", "K_n_closed_form", "abs_diff"};
  {
    const Rational third(1, 3);
    const NormSpec spec = DwNorm<Rational>{one_then_constant(third)};
    r.expectations.push_back(exact("K_1 on the rational path (omega_1 = 1/3)", Rational(10, 9),
                                   suppression_ratio(spec, renorming_g<Rational>(1, third),
                                                     IndexSet{1, 2}),
                                   kCiteKn));
  }
  std::vector<Real> values;
  bool all_below = true;
  for (std::size_t n = 1; n <= top; ++n) {
    const Real omega = omega_n(n);
    const RealNormSpec spec = DwNorm<Real>{one_then_constant(omega)};
    const Real ratio = evaluate(spec, renorming_f<Real>(n, omega)) /
                       evaluate(spec, renorming_g<Real>(n, omega));
    const Real closed = kn_closed_form(n);
    r.expectations.push_back(within(n_label("K_n", n), closed, ratio, kCiteKn));
    r.csv.rows.push_back({std::to_string(n), format_decimal(omega, 15), format_decimal(ratio, 15),
                          format_decimal(closed, 15),
                          format_decimal(Real(abs_value(Real(ratio - closed))), 3)});
    if (!(ratio < Real(3) / 2)) all_below = false;
    values.push_back(ratio);
  }
  bool increasing = true;
  for (std::size_t k = 1; k < values.size(); ++k) {
    if (!(values[k] > values[k - 1])) increasing = false;
  }
  r.expectations.push_back(holds("K_n strictly increasing", increasing, kCiteKn));
  r.expectations.push_back(holds("every K_n < 3/2", all_below, kCiteKn));
}

void bad_dual(const ScenarioParameters& p, ScenarioReport& r) {
  const std::size_t lo = param_size(p, "d_min", 3, 7);
  const std::size_t hi = param_size(p, "d_max", lo, 7);
  r.csv.header = {"d", "norm_g", "norm_g_pq", "dual_h_star", "dual_h_star_pq", "dual_g_star",
                  "dual_g_star_pq"};
  for (std::size_t d = lo; d <= hi; ++d) {
    const BadDualSpec family_spec{d};
    const NormSpec spec = PolyhedralNorm{family_for(family_spec), describe(family_spec)};
    const FunctionalFamily& family = std::get<PolyhedralNorm>(spec).family;
    const std::vector<Rational> g = bad_dual_g(d);
    const Rational dd(static_cast<unsigned long>(d));
    const Rational norm_g = polyhedral_norm<Rational>(family, std::span<const Rational>(g));
    const Rational h_star = dual_norm(family, bad_dual_h_star(d)).value;
    const Rational g_star = dual_norm(family, bad_dual_g_star(d)).value;
    const std::string tag = " (d=" + std::to_string(d) + ")";
    r.expectations.push_back(exact("||g||" + tag, dd - Rational(7, 6), norm_g, kCiteBadDual));
    r.expectations.push_back(bound("||h*||" + tag, "<=", Rational(1), h_star, kCiteBadDual));
    r.expectations.push_back(
        bound("||g*||" + tag, ">=", Rational((dd - 1) / (dd - Rational(7, 6))), g_star, kCiteBadDual));
    r.expectations.push_back(bound("||g*|| > 1" + tag, ">", Rational(1), g_star, kCiteBadDual));
    const auto cert = make_certificate<Rational>(
        ConstantKind::kDualDemocracy, spec,
        {SparseVector<Rational>::from_dense(bad_dual_g_star(d)),
         SparseVector<Rational>::from_dense(bad_dual_h_star(d))},
        {}, 0, "dual indicators g* and h* on A = {1..d-1}", BoundKind::kLowerBound, {kCiteBadDual});
    r.expectations.push_back(bound("dual superdemocracy ratio ||g*|| / ||h*||" + tag, ">", Rational(1),
                                   cert.value, kCiteBadDual));
    r.certificates.push_back(certificate_to_json(cert));
    std::vector<std::string> row{std::to_string(d)};
    for (const Rational& q : {norm_g, h_star, g_star}) {
      for (auto& cell : rational_cells(q)) row.push_back(std::move(cell));
    }
    r.csv.rows.push_back(std::move(row));
  }
}

void hexagon(const ScenarioParameters& p, ScenarioReport& r) {
  r.csv.header = {"alpha", "alpha_pq", "ratio", "ratio_pq"};
  for (const Rational& alpha : param_rationals(p, "alpha")) {
    const HexagonSpec family_spec{alpha};
    const NormSpec spec = PolyhedralNorm{family_for(family_spec), describe(family_spec)};
    const Rational inverse = 1 / alpha;
    const std::string tag = " (alpha=" + format_rational(alpha) + ")";
    const SparseVector<Rational> diff{{1, inverse}, {2, Rational(-inverse)}};
    const SparseVector<Rational> e1{{1, inverse}};
    r.expectations.push_back(exact("||alpha^-1 (e_1 - e_2)||" + tag, Rational(1), evaluate(spec, diff),
                                   kCiteHexagon));
    r.expectations.push_back(exact("||alpha^-1 e_1||" + tag, inverse, evaluate(spec, e1), kCiteHexagon));
    const SparseVector<Rational> two_diff{{1, Rational(2)}, {2, Rational(-2)}};
    const auto cert = ks_lower_bound<Rational>(
        spec, ExplicitFamily<Rational>{"2(e_1 - e_2) projected onto {1}", {{two_diff, IndexSet{1}}}},
        {kCiteHexagon});
    r.expectations.push_back(exact("suppression ratio of 2(e_1 - e_2) onto {1}" + tag, inverse,
                                   cert.value, kCiteHexagon));
    r.expectations.push_back(exact("||e_1^*|| in the dual" + tag, inverse,
                                   dual_norm(std::get<PolyhedralNorm>(spec).family,
                                             std::vector<Rational>{Rational(1), Rational(0)})
                                       .value,
                                   kCiteHexagon));
    r.certificates.push_back(certificate_to_json(cert));
    std::vector<std::string> row = rational_cells(alpha);
    for (auto& cell : rational_cells(cert.value)) row.push_back(std::move(cell));
    r.csv.rows.push_back(std::move(row));
  }
}

void pafinite(const ScenarioParameters& p, ScenarioReport& r) {
  const std::size_t d = param_size(p, "d", 3, 5);
  const std::size_t instances = param_size(p, "instances", 1, 1000000);
  const Rational tail = parse_rational(p.at("tail"));
  const Weight w = one_then_constant(tail);
  const PAFiniteDwSpec family_spec{d, w};
  const NormSpec poly = PolyhedralNorm{family_for(family_spec), describe(family_spec)};
  const NormSpec dw = DwNorm<Rational>{w};

  const auto cert = ks_lower_bound(poly, default_grid(), {kCitePAFinite});
  r.expectations.push_back(bound("K_s grid lower bound", ">=", Rational(10, 9), cert.value, kCitePAFinite));
  r.certificates.push_back(certificate_to_json(cert));

  std::size_t checked = 0;
  std::size_t mismatches = 0;
  for_each_grid_vector(poly, default_grid(), [&](const SparseVector<Rational>& f) {
    ++checked;
    if (evaluate(poly, f) != evaluate(dw, f)) ++mismatches;
  });
  r.expectations.push_back(count_zero("polyhedral norm differs from D_w on grid vectors", mismatches,
                                      checked, kCitePAFinite));

  Rng rng(param_size(p, "seed", 0, ~std::size_t{0} >> 1));
  std::size_t failures = 0;
  for (std::size_t k = 0; k < instances; ++k) {
    const auto result = property_a_check(poly, random_property_a_instance(rng, d));
    if (result.status != PropertyAStatus::kPass) ++failures;
  }
  r.expectations.push_back(count_zero("Property (A) failures on random instances", failures, instances,
                                      kCitePAFinite));
}

void lattice_ratio_scenario(const ScenarioParameters& p, ScenarioReport& r) {
  const std::size_t top = param_size(p, "n", 1, 256);
  r.csv.header = {"n", "omega_n", "ratio", "closed_form", "abs_diff"};
  {
    const Rational third(1, 3);
    const NormSpec spec = DwNorm<Rational>{one_then_constant(third)};
    const auto cert = make_certificate<Rational>(
        ConstantKind::kLattice, spec, {lattice_h<Rational>(1, third), renorming_g<Rational>(1, third)},
        {}, 0, "h_1 against g_1 with omega = 1/3", BoundKind::kLowerBound, {kCiteLattice});
    r.expectations.push_back(exact("||h_1|| / ||g_1|| at omega = 1/3", Rational(11, 9), cert.value,
                                   kCiteLattice));
    r.certificates.push_back(certificate_to_json(cert));
  }
  std::vector<Real> values;
  bool below_two = true;
  for (std::size_t n = 1; n <= top; ++n) {
    const Real omega = omega_n(n);
    const RealNormSpec spec = DwNorm<Real>{one_then_constant(omega)};
    const Real ratio = lattice_ratio(spec, lattice_h<Real>(n, omega), renorming_g<Real>(n, omega));
    const Real closed = lattice_closed_form(n);
    r.expectations.push_back(within(n_label("||h_n|| / ||g_n||", n), closed, ratio, kCiteLattice));
    r.csv.rows.push_back({std::to_string(n), format_decimal(omega, 15), format_decimal(ratio, 15),
                          format_decimal(closed, 15),
                          format_decimal(Real(abs_value(Real(ratio - closed))), 3)});
    if (!(ratio < 2)) below_two = false;
    values.push_back(ratio);
  }
  bool increasing = true;
  for (std::size_t k = 1; k < values.size(); ++k) {
    if (!(values[k] > values[k - 1])) increasing = false;
  }
  r.expectations.push_back(holds("lattice ratios strictly increasing", increasing, kCiteLattice));
  r.expectations.push_back(holds("every lattice ratio < 2", below_two, kCiteLattice));
}

void ucc_growth_scenario(const ScenarioParameters& p, ScenarioReport& r) {
  const std::size_t top = param_size(p, "m", 2, 200);
  std::vector<Rational> prefix = param_rationals(p, "prefix");
  const Weight w = Weight::eventually_constant(prefix, parse_rational(p.at("tail")));
  const std::vector<Rational> ratios = ucc_growth(w, top);
  r.csv.header = {"m", "r_m", "r_m_pq"};
  const Rational& t = w.tail_limit();
  for (std::size_t m = 1; m <= top; ++m) {
    const Rational mm(static_cast<unsigned long>(m));
    const Rational closed = w.primitive(2 * m) / (w.primitive(m) - mm * t);
    r.expectations.push_back(exact(n_label("r_m = s_{2m} / (s_m - m w_inf)", m),
                                   closed, ratios[m - 1], kCiteUcc));
    std::vector<std::string> row{std::to_string(m)};
    for (auto& cell : rational_cells(ratios[m - 1])) row.push_back(std::move(cell));
    r.csv.rows.push_back(std::move(row));
  }
  bool increasing = true;
  for (std::size_t k = 1; k < ratios.size(); ++k) {
    if (!(ratios[k] > ratios[k - 1])) increasing = false;
  }
  r.expectations.push_back(holds("r_m strictly increasing", increasing, kCiteUcc));
  // Past the prefix the growth is linear: constant first differences.
  const std::size_t settled = std::max<std::size_t>(w.prefix_length(), 1);
  bool linear = true;
  for (std::size_t m = settled + 1; m + 1 <= top; ++m) {
    if (ratios[m] - ratios[m - 1] != ratios[settled] - ratios[settled - 1]) linear = false;
  }
  r.expectations.push_back(holds("r_m grows linearly past the prefix", linear, kCiteUcc));
}

void remark_10_9(const ScenarioParameters& p, ScenarioReport& r) {
  const std::size_t grid = param_size(p, "grid", 2, 600);
  r.csv.header = {"a", "a_pq", "omega", "omega_pq", "ratio", "ratio_pq"};
  Rational best(0);
  Rational best_a;
  Rational best_omega;
  const Rational denominator(static_cast<unsigned long>(grid));
  for (std::size_t k = 1; k < grid; ++k) {
    const Rational a = Rational(static_cast<unsigned long>(k)) / denominator;
    const SparseVector<Rational> f = remark_f(a);
    const SparseVector<Rational> g = remark_g(a);
    for (std::size_t l = 1; l < grid; ++l) {
      const Rational omega = Rational(static_cast<unsigned long>(l)) / denominator;
      const Weight w = one_then_constant(omega);
      const Rational ratio = dw_norm(w, f) / dw_norm(w, g);
      if (ratio > best) {
        best = ratio;
        best_a = a;
        best_omega = omega;
      }
      std::vector<std::string> row = rational_cells(a);
      for (const Rational& q : {omega, ratio}) {
        for (auto& cell : rational_cells(q)) row.push_back(std::move(cell));
      }
      r.csv.rows.push_back(std::move(row));
    }
  }
  r.expectations.push_back(exact("grid maximum of ||f_a|| / ||g_a||", Rational(10, 9), best, kCiteRemark));
  r.expectations.push_back(exact("maximizing a", Rational(1, 3), best_a, kCiteRemark));
  r.expectations.push_back(exact("maximizing omega", Rational(1, 3), best_omega, kCiteRemark));
}

void sandwich_compare(const ScenarioParameters& p, ScenarioReport& r) {
  const std::size_t instances = param_size(p, "instances", 1, 10000000);
  Rng rng(param_size(p, "seed", 0, ~std::size_t{0} >> 1));
  std::size_t marc_dw = 0;
  std::size_t dw_lorentz = 0;
  std::size_t lorentz_four = 0;
  for (std::size_t k = 0; k < instances; ++k) {
    const Weight w = random_weight(rng);
    const auto f = random_vector(rng, 6, 10);
    const Rational m = marcinkiewicz_norm(w, f);
    const Rational d = dw_norm(w, f);
    const Rational l = lorentz_norm(w, f);
    if (m > d) ++marc_dw;
    if (d > l) ++dw_lorentz;
    if (l > 4 * d) ++lorentz_four;
  }
  std::size_t two_violations = 0;
  std::size_t collapse_violations = 0;
  for (std::size_t k = 0; k < instances; ++k) {
    const Weight w = random_weight(rng);
    auto f = random_nonnegative_vector(rng, 6, 10);
    if (rng.coin()) f = -f;
    const Rational d = dw_norm(w, f);
    const Rational l = lorentz_norm(w, f);
    if (l > 2 * d) ++two_violations;
    if (l != d) ++collapse_violations;
  }
  r.expectations.push_back(count_zero("marcinkiewicz > dw", marc_dw, instances, kCiteSandwich));
  r.expectations.push_back(count_zero("dw > lorentz", dw_lorentz, instances, kCiteSandwich));
  r.expectations.push_back(count_zero("lorentz > 4 dw", lorentz_four, instances, kCiteCompare));
  r.expectations.push_back(
      count_zero("constant sign: lorentz > 2 dw", two_violations, instances, kCiteConstantSign));
  r.expectations.push_back(
      count_zero("constant sign: dw != lorentz", collapse_violations, instances, kCiteConstantSign));
}

struct Entry {
  ScenarioInfo info;
  std::function<void(const ScenarioParameters&, ScenarioReport&)> run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> registry = {
      {{"k1-witness", "||f_{1,1/3}|| = 10/9, ||g_{1,1/3}|| = 1, ratio 10/9", {}}, k1_witness},
      {{"kn-curve", "K_n against its closed form, n = 1..N", {{"n", "64"}}}, kn_curve},
      {{"bad-dual", "||g|| = d - 7/6 and ||h*|| <= 1 < ||g*||", {{"d_min", "3"}, {"d_max", "6"}}},
       bad_dual},
      {{"hexagon", "hexagon norm suppression ratio alpha^-1", {{"alpha", "1/2,1/3,2/3"}}}, hexagon},
      {{"pafinite", "finite D_w polyhedral norm: K_s >= 10/9 and Property (A)",
        {{"d", "3"}, {"tail", "1/3"}, {"instances", "1000"}, {"seed", "7"}}},
       pafinite},
      {{"lattice-ratio", "||h_n|| / ||g_n|| against 1 + 2 n omega_n^2", {{"n", "32"}}},
       lattice_ratio_scenario},
      {{"ucc-growth", "signed-sup ratios r_m grow without bound",
        {{"prefix", "1"}, {"tail", "1/3"}, {"m", "10"}}},
       ucc_growth_scenario},
      {{"remark-10-9", "grid search of ||f_a|| / ||g_a|| over a and omega", {{"grid", "60"}}},
       remark_10_9},
      {{"sandwich+compare", "marcinkiewicz <= dw <= lorentz <= 4 dw on random instances",
        {{"instances", "10000"}, {"seed", "11"}}},
       sandwich_compare},
  };
  return registry;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

bool ScenarioReport::passed() const {
  return std::all_of(expectations.begin(), expectations.end(),
                     [](const Expectation& e) { return e.pass; });
}

const std::vector<ScenarioInfo>& scenario_registry() {
  static const std::vector<ScenarioInfo> infos = [] {
    std::vector<ScenarioInfo> out;
    for (const Entry& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

ScenarioReport run_scenario(const std::string& name, const ScenarioParameters& parameters) {
  ensure_precision();
  const auto& registry = entries();
  auto it = std::find_if(registry.begin(), registry.end(),
                         [&name](const Entry& e) { return e.info.name == name; });
  if (it == registry.end()) throw std::invalid_argument("unknown scenario '" + name + "'");
  ScenarioParameters merged = it->info.defaults;
  for (const auto& [key, value] : parameters) {
    if (!merged.contains(key)) {
      throw std::invalid_argument("scenario '" + name + "' has no parameter '" + key + "'");
    }
    merged[key] = value;
  }
  ScenarioReport report;
  report.name = name;
  report.parameters = merged;
  it->run(merged, report);
  return report;
}

Json report_to_json(const ScenarioReport& report) {
  Json out = Json::object();
  out["name"] = report.name;
  out["parameters"] = report.parameters;
  out["pass"] = report.passed();
  Json expectations = Json::array();
  for (const Expectation& e : report.expectations) {
    Json row = Json::object();
    row["label"] = e.label;
    row["expected"] = e.expected;
    row["computed"] = e.computed;
    row["tolerance"] = e.tolerance;
    row["pass"] = e.pass;
    row["citation"] = e.citation;
    expectations.push_back(std::move(row));
  }
  out["expectations"] = std::move(expectations);
  out["certificates"] = report.certificates;
  out["csv_rows"] = report.csv.rows.size();
  return out;
}

void write_csv(const CsvTable& table, std::ostream& out) {
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (k > 0) out << ',';
      out << csv_field(cells[k]);
    }
    out << '\n';
  };
  line(table.header);
  for (const auto& row : table.rows) line(row);
}

void print_report(const ScenarioReport& report, std::ostream& out) {
  out << "scenario " << report.name << '\n';
  for (const Expectation& e : report.expectations) {
    out << "  " << (e.pass ? "PASS" : "FAIL") << "  " << e.label << ": " << e.computed << " vs "
        << e.expected << " [" << e.tolerance << "]";
    if (!e.pass) out << "  (" << e.citation << ")";
    out << '\n';
  }
  out << (report.passed() ? "PASS " : "FAIL ") << report.name << '\n';
}

}  // namespace greedybench
