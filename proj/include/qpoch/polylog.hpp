// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qpoch/branch.hpp"
#include "qpoch/complex.hpp"

namespace qpoch {

/// Li_n(z) for n <= 0 as a rational function of z (Eulerian numbers).
/// DomainError at z = 1.
Complex li_nonpos(int n, const Complex& z);

/// Li_{-n}(e^{-y}) for n >= 0, accurate also for y close to 0.
/// DomainError for y in 2 pi i Z.
Complex li_neg_exp(unsigned n, const Complex& y);

/// Li_{-n}(e^{-y}) - n!/y^{n+1}, the part analytic at y = 0, computed
/// without forming the cancelling difference when y is small.
Complex li_neg_exp_regular(unsigned n, const Complex& y);

/// A value of Li_1 or Li_2 together with the branch it was taken on.
struct PolylogValue {
  Complex value;
  BranchContext branch;
  int order;
};

/// Li_n(e^{-y}), n in {1, 2}, on the branch real for y > 0 and analytic
/// off 2 pi i Z + beta R_{<=0}. Supported for Re y > 0 or |y| < 2 pi after
/// strip reduction. DomainError on a cut or outside that region.
PolylogValue li12_strip_branch(int n, const Complex& y, const BranchContext& ctx);

/// Li_{2-k}(e^{-x}) from its expansion at x = 0: the singular part plus
/// `terms` terms of the Bernoulli series. ConvergenceError for |x| >= 2 pi.
Complex li_series_exp(unsigned k, const Complex& x, const BranchContext& ctx, long terms);

/// Sum over k in Z of (x + 2 pi i k)^{-(n+1)}, n >= 1, to working precision;
/// the k = 0 term is left out when `skip_zero`.
Complex parfrac_sum(unsigned n, const Complex& x, bool skip_zero);

/// Partial sums over |k| <= M: for n = 0 the symmetric principal-value sum
/// of 1/(x + 2 pi i k); for n >= 1 the sum of (x + 2 pi i k)^{-(n+1)}.
/// DomainError at a pole.
Complex parfrac_partial(unsigned n, const Complex& x, long M);

}  // namespace qpoch
