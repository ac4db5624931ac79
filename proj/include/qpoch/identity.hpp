// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qpoch/branch.hpp"
#include "qpoch/complex.hpp"

namespace qpoch {

/// log (e^{-y}; e^{-beta})_inf on the branch vanishing as y -> +inf.
struct QPochEval {
  Complex log_value;
  Real tail_bound;
  long terms_used = 0;
};

/// Two sides of an exact identity and how far apart they came out.
struct IdentityReport {
  Complex lhs;
  Complex rhs;
  Real residual;
  Real certified_tail;
};

/// Y_max(theta) = min(0.9 pi |cot theta|, pi sqrt 3), pi sqrt 3 for theta = 0.
Real region_y_max(const Complex& beta);

/// Rejects |arg beta| >= pi/2, y on beta R_{<=0}, and Re y <= -Y_max
/// after strip reduction. Returns the reduced y.
Complex require_region(const Complex& y, const Complex& beta);

/// sum_k log(1 - e^{-y-k beta}) with a geometric tail below `tol`.
/// Terms with Re(y + k beta) <= 0 get their branch by continuation along
/// y + t beta from large t. ConvergenceError if tol < 2^{-prec}.
QPochEval oracle_log_qpoch(const Complex& y, const Complex& beta, const Real& tol);

/// prod_j (1 - z q^j) with the omitted factor within `tol` of one.
/// DomainError for |q| >= 1.
Complex qpoch_product(const Complex& z, const Complex& q, const Real& tol);

/// Bernoulli-polylog head minus sum_{|n|<=M} f_N((y + 2 pi i n)/beta);
/// tail_bound covers |n| > M.
QPochEval identity_rhs(const Complex& y, const Complex& beta, unsigned N, long M);

/// The N = 0 form, summed symmetrically over |n| <= M.
QPochEval identity_rhs_pv(const Complex& y, const Complex& beta, long M);

/// Product of e^{-1}(1 + beta/y_n)^{y_n/beta + 1/2} over |n| <= M against
/// its closed form in Li_2 and square roots.
IdentityReport consequence_check(const Complex& y, const Complex& beta, long M);

/// (e^{-beta}; e^{-beta}) against its image under beta -> 4 pi^2 / beta.
IdentityReport dedekind_check(const Complex& beta);

/// Modular transformation of the theta-type product at (x, beta).
/// DomainError when a side vanishes.
IdentityReport theta_modular_check(const Complex& x, const Complex& beta);

/// prod_{n<=M} e^{-1}(1 + 1/(x+n))^{x+n+1/2} against
/// Gamma(x) e^x x^{1/2-x} / sqrt(2 pi).
IdentityReport artin_product_check(const Complex& x, long M);

}  // namespace qpoch
