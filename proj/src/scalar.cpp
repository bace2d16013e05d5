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

#include "greedybench/scalar.hpp"

#include <atomic>
#include <cctype>
#include <cstdlib>
#include <mutex>
#include <stdexcept>

namespace greedybench {
namespace {

std::atomic<unsigned> g_requested_bits{0};
std::atomic<unsigned> g_applied_bits{0};
std::mutex g_precision_mutex;

unsigned bits_from_environment() {
  const char* raw = std::getenv("GREEDYBENCH_PRECISION_BITS");
  if (raw == nullptr || *raw == '\0') return kDefaultPrecisionBits;
  char* end = nullptr;
  const unsigned long bits = std::strtoul(raw, &end, 10);
  if (end == raw || *end != '\0' || bits < 53 || bits > 1u << 20) {
    throw std::invalid_argument(
        "GREEDYBENCH_PRECISION_BITS must be an integer in [53, 1048576]");
  }
  return static_cast<unsigned>(bits);
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Rational parse_decimal(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = body.substr(e + 1);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6) {
      throw std::invalid_argument("malformed exponent in '" + std::string(text) + "'");
    }
    exponent = std::stol(std::string(exp_text));
    if (exp_negative) exponent = -exponent;
    body = body.substr(0, e);
  }
  std::string digits;
  long fraction_digits = 0;
  if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty())) {
      throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
    }
    digits = std::string(whole) + std::string(frac);
    fraction_digits = static_cast<long>(frac.size());
  } else {
    if (!all_digits(body)) {
      throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    }
    digits = std::string(body);
  }
  mpz_class numerator(digits, 10);
  mpz_class scale = 1;
  const long shift = exponent - fraction_digits;
  mpz_class ten_power;
  mpz_ui_pow_ui(ten_power.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  Rational value;
  if (shift >= 0) {
    value = Rational(numerator * ten_power);
  } else {
    value = Rational(numerator, ten_power);
  }
  value.canonicalize();
  if (negative) value = -value;
  return value;
}

}  // namespace

unsigned precision_bits() {
  unsigned bits = g_requested_bits.load();
  if (bits == 0) {
    std::lock_guard lock(g_precision_mutex);
    bits = g_requested_bits.load();
    if (bits == 0) {
      bits = bits_from_environment();
      g_requested_bits.store(bits);
    }
  }
  return bits;
}

void set_precision_bits(unsigned bits) {
  if (bits < 53) throw std::invalid_argument("precision must be at least 53 bits");
  g_requested_bits.store(bits);
  ensure_precision();
}

void ensure_precision() {
  const unsigned bits = precision_bits();
  if (g_applied_bits.load() == bits) return;
  std::lock_guard lock(g_precision_mutex);
  // digits10 rounded up so the backend allocates at least `bits` bits.
  const unsigned digits10 = bits * 30103u / 100000u + 2u;
  Real::default_precision(digits10);
  g_applied_bits.store(bits);
}

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    std::string_view num_digits = num;
    if (!num_digits.empty() && (num_digits.front() == '-' || num_digits.front() == '+')) {
      num_digits.remove_prefix(1);
    }
    if (!all_digits(num_digits) || !all_digits(den)) {
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num_digits), 10);
    if (!num.empty() && num.front() == '-') n = -n;
    mpz_class d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
  }
  return parse_decimal(text);
}

std::string format_rational(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str(10);
}

std::string format_decimal(const Real& x, int significant) {
  return x.str(significant);
}

std::string format_decimal(const Rational& q, int significant) {
  return format_decimal(to_real(q), significant);
}

Real to_real(const Rational& q) {
  ensure_precision();
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

double to_double(const Rational& q) { return q.get_d(); }

double to_double(const Real& x) { return x.convert_to<double>(); }

Rational abs_value(const Rational& x) { return Rational(abs(x)); }

Real abs_value(const Real& x) { return boost::multiprecision::abs(x); }

}  // namespace greedybench
