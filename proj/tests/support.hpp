// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qpoch/complex.hpp"

namespace qpoch::testing {

/// log2 |a - b|, -inf when equal.
inline double log2_err(const Complex& a, const Complex& b) { return abs(a - b).log2_abs(); }
inline double log2_err(const Real& a, const Real& b) { return abs(a - b).log2_abs(); }

inline Precision bits(unsigned b) { return Precision(b); }

inline Complex cx(double re, double im, unsigned b) { return Complex(re, im, Precision(b)); }
inline Real rl(const char* text, unsigned b) { return Real::parse(text, Precision(b)); }

}  // namespace qpoch::testing
