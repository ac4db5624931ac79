// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qpoch {

using Integer = mpz_class;
/// Always kept canonical: positive denominator, reduced.
using Rational = mpq_class;

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

/// Parses "p", "p/q" or a terminating decimal such as "0.5".
/// std::invalid_argument on malformed text or zero denominator.
Rational parse_rational(std::string_view text);

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

}  // namespace qpoch
