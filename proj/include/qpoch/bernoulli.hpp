// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "qpoch/complex.hpp"
#include "qpoch/rational.hpp"

namespace qpoch {

/// Exact B_k with B_1 = -1/2. Backed by a process-wide cache filled from
/// the tangent-number recurrence; safe to call from several threads.
Rational bernoulli_number(unsigned k);

/// B_0, ..., B_kmax in one locked read of the cache.
std::vector<Rational> bernoulli_numbers(unsigned kmax);

Real bernoulli_real(unsigned k, Precision p);

/// Exact coefficients of B_n(x) = sum_j c_j x^j, index j.
std::vector<Rational> bernoulli_poly_coeffs(unsigned n);

/// B_n(x) by Horner on exact coefficients.
Complex bernoulli_poly(unsigned n, const Complex& x);

/// Floor sum plus the first K terms of the sine series of B_n(x),
/// valid for odd n >= 3 and x >= 0. DomainError for other n or x < 0.
Real bernoulli_poly_fourier(unsigned n, const Real& x, long K);

/// Eulerian number <n, k>; zero outside 0 <= k <= n-1, <0, 0> = 1.
Integer eulerian(unsigned n, long k);
/// Row <n, 0>, ..., <n, n-1> (the single entry 1 for n = 0).
std::vector<Integer> eulerian_row(unsigned n);

}  // namespace qpoch
