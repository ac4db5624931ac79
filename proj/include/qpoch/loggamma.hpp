// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qpoch/complex.hpp"

namespace qpoch {

/// f_N(x) or log Gamma(x) with the order used and a bound on what was
/// left out.
struct StirlingEval {
  Complex value;
  unsigned N = 0;
  Real tail_bound;
};

/// log Gamma(x) on the branch real for x > 0 and continuous off R_{<=0}.
/// DomainError for x in R_{<=0}.
Complex log_gamma(const Complex& x, Precision prec);

/// |B_{2N+2}| / ((2N+1)(2N+2) |x|^{2N+1} cos^{2N+2}(arg(x)/2)).
/// DomainError for |arg x| > 3 pi / 4 or x = 0.
Real bound_fN(const Complex& x, unsigned N);

/// Stirling remainder after the B_{2N} term; tail_bound = bound_fN(x, N).
StirlingEval stirling_fN(const Complex& x, unsigned N, Precision prec);

/// f_1(x) as a sum of `terms` terms of Artin's series, written in the
/// telescoped form whose terms decay like (x+n)^{-4}.
Complex artin_f1(const Complex& x, long terms);

}  // namespace qpoch

namespace qpoch::detail {

/// f_N(x) for any x off R_{<=0}, without the sector restriction and
/// without a bound.
Complex stirling_remainder(const Complex& x, unsigned N, Precision prec);

}  // namespace qpoch::detail
