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

#ifndef GREEDYBENCH_SCALAR_HPP_
#define GREEDYBENCH_SCALAR_HPP_

#include <gmpxx.h>

#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <string_view>
#include <type_traits>

namespace greedybench {

/// Exact rational scalar. Every value the library reports as "exact" lives here.
using Rational = mpq_class;

/// Variable-precision binary float. The working precision is process-wide and
/// is fixed on first use (see precision_bits()).
using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<0>, boost::multiprecision::et_off>;

template <class T>
inline constexpr bool is_exact_v = std::is_same_v<T, Rational>;

inline constexpr unsigned kDefaultPrecisionBits = 256;

/// Working precision of Real in bits. Read once from GREEDYBENCH_PRECISION_BITS
/// (default 256) unless set_precision_bits() ran first.
unsigned precision_bits();

/// Overrides the working precision. Only Reals created afterwards pick it up.
void set_precision_bits(unsigned bits);

/// Applies the configured precision to Real's default. Idempotent; every entry
/// point that creates Reals calls it.
void ensure_precision();

/// Parses "p/q", "p", "-p/q" and finite decimals such as "0.25" or "-1.5e-3".
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when the denominator is 1).
std::string format_rational(const Rational& q);

/// Scientific-free decimal rendering with the given significant digits.
std::string format_decimal(const Real& x, int significant = 15);
std::string format_decimal(const Rational& q, int significant = 15);

Real to_real(const Rational& q);
double to_double(const Rational& q);
double to_double(const Real& x);

Rational abs_value(const Rational& x);
Real abs_value(const Real& x);

template <class T>
T from_rational(const Rational& q) {
  if constexpr (is_exact_v<T>) {
    return q;
  } else {
    return to_real(q);
  }
}

template <class T>
std::string format_value(const T& x) {
  if constexpr (is_exact_v<T>) {
    return format_rational(x);
  } else {
    return format_decimal(x, 30);
  }
}

}  // namespace greedybench

#endif  // GREEDYBENCH_SCALAR_HPP_
