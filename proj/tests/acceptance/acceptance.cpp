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

// Acceptance checks 1-12. One PASS/FAIL line per criterion; exit status 1
// when any criterion fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "greedybench/certify.hpp"
#include "greedybench/oracle.hpp"
#include "greedybench/polyhedral.hpp"
#include "greedybench/random.hpp"
#include "greedybench/witnesses.hpp"

namespace gb = greedybench;
using gb::IndexSet;
using gb::NormSpec;
using gb::Rational;
using gb::Real;
using gb::SparseVector;
using gb::Weight;

namespace {

// Pinned tolerances and budgets.
const char* const kRealTolerance = "1e-12";
const char* const kGeneratorSlack = "1e-10";
constexpr double kBudgetK1Seconds = 1.0;
constexpr double kBudgetClosedFormSeconds = 10.0;
constexpr double kBudgetOracleSeconds = 60.0;
constexpr std::uint64_t kSeed = 20261016;

struct Outcome {
  bool pass = true;
  std::string detail;
};

Weight w1t(const Rational& t) { return gb::one_then_constant(t); }

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome budget(Outcome o, double elapsed, double limit) {
  std::ostringstream s;
  s << o.detail << "; " << elapsed << " s (budget " << limit << " s)";
  return {o.pass && elapsed < limit, s.str()};
}

Outcome criterion1() {
  const auto start = std::chrono::steady_clock::now();
  const Rational third(1, 3);
  const NormSpec spec = gb::DwNorm<Rational>{w1t(third)};
  const auto f = gb::renorming_f<Rational>(1, third);
  const auto g = gb::renorming_g<Rational>(1, third);
  const Rational nf = gb::evaluate(spec, f);
  const Rational ng = gb::evaluate(spec, g);
  const Rational ratio = gb::suppression_ratio(spec, g, IndexSet{1, 2});
  const Outcome o{nf == Rational(10, 9) && ng == 1 && ratio == Rational(10, 9),
                  "||f|| = " + gb::format_rational(nf) + ", ||g|| = " + gb::format_rational(ng) +
                      ", ratio = " + gb::format_rational(ratio)};
  return budget(o, seconds_since(start), kBudgetK1Seconds);
}

Outcome criterion2() {
  const auto start = std::chrono::steady_clock::now();
  std::size_t checked = 0;
  std::size_t bad = 0;
  for (const Rational& omega : {Rational(1, 3), Rational(1, 4), Rational(1, 5)}) {
    const Weight w = w1t(omega);
    for (std::size_t n = 1; n <= 20; ++n) {
      checked += 2;
      if (gb::dw_norm(w, gb::renorming_f<Rational>(n, omega)) != gb::renorming_f_norm(n, omega)) ++bad;
      if (gb::dw_norm(w, gb::renorming_g<Rational>(n, omega)) != gb::renorming_g_norm(n, omega)) ++bad;
    }
  }
  return budget({bad == 0, std::to_string(checked - bad) + "/" + std::to_string(checked) + " exact"},
                seconds_since(start), kBudgetClosedFormSeconds);
}

Outcome criterion3() {
  const Real tol(kRealTolerance);
  Real worst(0);
  bool increasing = true;
  bool below = true;
  Real previous(0);
  for (std::size_t n = 1; n <= 64; ++n) {
    const Real omega = gb::omega_n(n);
    const gb::RealNormSpec spec = gb::DwNorm<Real>{gb::one_then_constant(omega)};
    IndexSet a;
    for (gb::Index j = 1; j <= n + 1; ++j) a.insert(j);
    const Real k = gb::suppression_ratio(spec, gb::renorming_g<Real>(n, omega), a);
    worst = std::max(worst, gb::abs_value(Real(k - gb::kn_closed_form(n))));
    if (n > 1 && !(k > previous)) increasing = false;
    if (!(k < Real(3) / 2)) below = false;
    previous = k;
  }
  return {worst <= tol && increasing && below,
          "max |K_n - closed form| = " + gb::format_decimal(worst, 3) + " (tol " + kRealTolerance +
              "), increasing = " + (increasing ? "yes" : "no") + ", all < 3/2 = " + (below ? "yes" : "no") +
              ", precision " + std::to_string(gb::precision_bits()) + " bits"};
}

Outcome criterion4() {
  bool ok = true;
  std::string detail;
  for (std::size_t d = 3; d <= 6; ++d) {
    const auto family = gb::family_for(gb::BadDualSpec{d});
    const Rational dd(static_cast<unsigned long>(d));
    const auto g = gb::bad_dual_g(d);
    const Rational ng = gb::polyhedral_norm<Rational>(family, std::span<const Rational>(g));
    const Rational h = gb::dual_norm(family, gb::bad_dual_h_star(d)).value;
    const Rational gs = gb::dual_norm(family, gb::bad_dual_g_star(d)).value;
    const Rational bound = (dd - 1) / (dd - Rational(7, 6));
    ok = ok && ng == dd - Rational(7, 6) && h <= 1 && gs >= bound && bound > 1;
    detail += "d=" + std::to_string(d) + ": ||g||=" + gb::format_rational(ng) + " ||h*||=" +
              gb::format_rational(h) + " ||g*||=" + gb::format_rational(gs) + (d < 6 ? "; " : "");
  }
  return {ok, detail};
}

Outcome criterion5() {
  bool ok = true;
  std::string detail;
  for (const Rational& alpha : {Rational(1, 2), Rational(1, 3), Rational(2, 3)}) {
    const NormSpec spec = gb::PolyhedralNorm{gb::family_for(gb::HexagonSpec{alpha}), "hexagon"};
    const Rational r = gb::suppression_ratio(spec, SparseVector<Rational>{{1, 2}, {2, -2}}, IndexSet{1});
    ok = ok && r == 1 / alpha;
    detail += "alpha=" + gb::format_rational(alpha) + ": " + gb::format_rational(r) + " ";
  }
  return {ok, detail};
}

Outcome criterion6() {
  const auto start = std::chrono::steady_clock::now();
  gb::Rng rng(kSeed + 6);
  std::size_t phi_bad = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Weight w = gb::random_weight(rng);
    const auto f = gb::random_vector(rng, 5, 8);
    const IndexSet e = gb::random_subset(rng, f.support());
    const Rational closed = gb::phi2(w, e, f);
    const std::size_t minimum = e.size() + f.support_size() + w.prefix_length() + 1;
    for (std::size_t k = 1; k <= 4; ++k) {
      if (gb::oracle::phi2_bruteforce(w, e, f, gb::oracle::OracleConfig{k * minimum, 0}) != closed) ++phi_bad;
    }
  }
  std::size_t dw_bad = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Weight w = gb::random_weight(rng);
    const auto f = gb::random_vector(rng, 5, 12);
    if (gb::oracle::dw_norm_bruteforce(w, f, gb::oracle::stable_config(w, f, 12)) != gb::dw_norm(w, f)) ++dw_bad;
  }
  return budget({phi_bad == 0 && dw_bad == 0, "phi2 mismatches " + std::to_string(phi_bad) +
                                                  "/4000 (1000 instances x 4 horizons), dw mismatches " +
                                                  std::to_string(dw_bad) + "/1000"},
                seconds_since(start), kBudgetOracleSeconds);
}

Outcome criterion7() {
  gb::Rng rng(kSeed + 7);
  const std::vector<Weight> weights{w1t(Rational(1, 3)), w1t(Rational(1, 2)),
                                    Weight::eventually_constant({1, Rational(2, 3)}, Rational(1, 3))};
  std::size_t failures = 0;
  for (const Weight& w : weights) {
    const NormSpec spec = gb::DwNorm<Rational>{w};
    for (int trial = 0; trial < 10000; ++trial) {
      const auto r = gb::property_a_check(spec, gb::random_property_a_instance(rng, 10));
      if (r.status != gb::PropertyAStatus::kPass) ++failures;
    }
  }
  return {failures == 0, std::to_string(failures) + " failures in 3 x 10000 instances"};
}

Outcome criterion8() {
  gb::Rng rng(kSeed + 8);
  std::size_t bad = 0;
  std::size_t bad_sign = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const Weight w = gb::random_weight(rng);
    const auto f = gb::random_vector(rng, 6, 10);
    const Rational d = gb::dw_norm(w, f);
    const Rational l = gb::lorentz_norm(w, f);
    if (gb::marcinkiewicz_norm(w, f) > d || d > l || l > 4 * d) ++bad;
    auto p = gb::random_nonnegative_vector(rng, 6, 10);
    if (rng.coin()) p = -p;
    if (gb::lorentz_norm(w, p) > 2 * gb::dw_norm(w, p)) ++bad_sign;
  }
  return {bad == 0 && bad_sign == 0, "sandwich violations " + std::to_string(bad) +
                                         "/10000, constant-sign violations " + std::to_string(bad_sign) + "/10000"};
}

Outcome criterion9() {
  bool ok = true;
  std::string detail;
  for (const Rational& omega : {Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(3, 4)}) {
    const NormSpec spec = gb::DwNorm<Rational>{w1t(omega)};
    const auto cert = gb::ks_lower_bound(spec, gb::default_grid());
    const Rational limit = std::min(Rational(2), Rational(1 / omega));
    ok = ok && cert.value <= limit;
    detail += "w=" + gb::format_rational(omega) + ": " + gb::format_rational(cert.value) + " <= " +
              gb::format_rational(limit) + "; ";
  }
  gb::Rng rng(kSeed + 9);
  const gb::RealWeight w = gb::sqrt_primitive_weight();
  const gb::RealNormSpec spec = gb::DwNorm<Real>{w};
  const Real ceiling = Real(1) + Real(kGeneratorSlack);
  Real worst(0);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto f = gb::random_vector(rng, 5, 8);
    IndexSet a = gb::random_subset(rng, f.support());
    worst = std::max(worst, gb::suppression_ratio(spec, gb::to_real(f), a));
  }
  ok = ok && worst <= ceiling;
  detail += "sqrt weight: max of 1000 ratios " + gb::format_decimal(worst, 12) + " (<= 1 + " + kGeneratorSlack + ")";
  return {ok, detail};
}

Outcome criterion10() {
  gb::Rng rng(kSeed + 10);
  std::size_t bad = 0;
  std::size_t levels = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const NormSpec spec = gb::DwNorm<Rational>{gb::random_weight(rng)};
    for (const auto& e : gb::almost_greedy_margin(spec, gb::random_tie_free_vector(rng, 6, 10))) {
      ++levels;
      if (e.margin < 0) ++bad;
    }
  }
  return {bad == 0, std::to_string(bad) + " negative margins over " + std::to_string(levels) + " levels"};
}

Outcome criterion11() {
  const Real tol(kRealTolerance);
  Real worst(0);
  Real min_late(10);
  for (std::size_t n = 1; n <= 32; ++n) {
    const Real omega = gb::omega_n(n);
    const gb::RealNormSpec spec = gb::DwNorm<Real>{gb::one_then_constant(omega)};
    const Real r = gb::lattice_ratio(spec, gb::lattice_h<Real>(n, omega), gb::renorming_g<Real>(n, omega));
    worst = std::max(worst, gb::abs_value(Real(r - gb::lattice_closed_form(n))));
    if (n >= 24) min_late = std::min(min_late, r);
  }
  const bool closed_ok = worst <= tol;
  const bool threshold_ok = min_late > Real("1.9");
  return {closed_ok && threshold_ok,
          "max |ratio - (1 + 2 n omega_n^2)| = " + gb::format_decimal(worst, 3) + " (tol " + kRealTolerance +
              ", " + (closed_ok ? "ok" : "fails") + "); min ratio over 24 <= n <= 32 = " +
              gb::format_decimal(min_late, 10) + " vs threshold 1.9 (" + (threshold_ok ? "ok" : "fails") + ")"};
}

Outcome criterion12() {
  gb::Rng rng(kSeed + 12);
  std::size_t bad = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const NormSpec spec = gb::DwNorm<Rational>{gb::random_weight(rng)};
    const auto f = gb::random_vector(rng, 2, 8);
    const IndexSet support = f.support();
    const std::vector<gb::Index> s(support.begin(), support.end());
    for (unsigned mask = 0; mask < (1u << s.size()); ++mask) {
      IndexSet a;
      for (std::size_t k = 0; k < s.size(); ++k) {
        if ((mask >> k) & 1u) a.insert(s[k]);
      }
      if (gb::suppression_ratio(spec, f, a) > 1) ++bad;
    }
  }
  Rational best(0);
  Rational best_a;
  Rational best_w;
  for (unsigned k = 1; k < 60; ++k) {
    Rational a(k, 60);
    a.canonicalize();
    const auto f = gb::remark_f(a);
    const auto g = gb::remark_g(a);
    for (unsigned l = 1; l < 60; ++l) {
      Rational omega(l, 60);
      omega.canonicalize();
      const Weight w = w1t(omega);
      const Rational r = gb::dw_norm(w, f) / gb::dw_norm(w, g);
      if (r > best) {
        best = r;
        best_a = a;
        best_w = omega;
      }
    }
  }
  const bool grid_ok = best == Rational(10, 9) && best_a == Rational(1, 3) && best_w == Rational(1, 3);
  return {bad == 0 && grid_ok, std::to_string(bad) + " ratios > 1 on |supp| <= 2; grid max " +
                                   gb::format_rational(best) + " at (a, w) = (" + gb::format_rational(best_a) +
                                   ", " + gb::format_rational(best_w) + ")"};
}

}  // namespace

int main() {
  gb::ensure_precision();
  const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3,  criterion4,
                                                       criterion5, criterion6, criterion7,  criterion8,
                                                       criterion9, criterion10, criterion11, criterion12};
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (k + 1) << ": " << o.detail << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
            << " criteria pass" << std::endl;
  return failures == 0 ? 0 : 1;
}
