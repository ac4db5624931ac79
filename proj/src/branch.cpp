// SPDX-License-Identifier: Apache-2.0
#include "qpoch/branch.hpp"

#include "qpoch/constants.hpp"

namespace qpoch {

BranchContext::BranchContext(Complex beta, CutConvention convention)
    : beta_(std::move(beta)), convention_(convention) {
  if (beta_.is_zero()) throw DomainError("beta must be non-zero");
  if (beta_.real().sign() <= 0) throw DomainError("beta must satisfy |arg beta| < pi/2");
  log_beta_ = log(beta_);
}

Complex log_off_ray(const Complex& y, const Complex& log_dir) {
  if (y.is_zero()) throw DomainError("log of zero");
  const Precision p = max(y.precision(), log_dir.precision());
  Complex w = y * exp(-log_dir);
  if (w.real().sign() <= 0) {
    const double rel = abs(w.imag()).log2_abs() - abs(w).log2_abs();
    if (w.imag().is_zero() || rel < -static_cast<double>(p.bits) + 8.0) {
      throw DomainError("argument lies on the branch cut");
    }
  }
  return log(w) + log_dir;
}

Complex branched_log(const Complex& y, const BranchContext& ctx) {
  if (y.is_zero()) throw DomainError("log of zero");
  if (ctx.beta().is_real()) {
    if (y.real().sign() <= 0) {
      const double rel = abs(y.imag()).log2_abs() - abs(y).log2_abs();
      if (y.imag().is_zero() || rel < -static_cast<double>(y.precision().bits) + 8.0) {
        throw DomainError("argument lies on the branch cut");
      }
    }
    return log(y);
  }
  return log_off_ray(y, ctx.log_beta());
}

StripReduced reduce_strip(const Complex& y) {
  const Precision w = y.precision().guarded();
  const Real two_pi = ldexp(const_pi(w), 1);
  const Real pi = const_pi(w);
  // winding = ceil((Im y - pi) / (2 pi)) keeps Im y' = pi on the boundary
  Real t = (y.imag().rounded(w) - pi) / two_pi;
  Real f = floor(t);
  long winding = f.to_long();
  if (f < t) ++winding;
  if (winding == 0) return {y, 0};
  Complex r = y;
  r.imag() = (y.imag().rounded(w) - two_pi * winding).rounded(y.precision());
  return {std::move(r), winding};
}

}  // namespace qpoch
