// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qpoch/complex.hpp"

namespace qpoch {

enum class CutConvention {
  /// Cuts along 2 pi i Z + beta R_{<=0}; values real on the positive ray.
  strip_cuts,
};

/// The nome direction beta fixing the cut rays, with |arg beta| < pi/2.
class BranchContext {
 public:
  /// DomainError if beta = 0 or |arg beta| >= pi/2.
  explicit BranchContext(Complex beta, CutConvention convention = CutConvention::strip_cuts);

  [[nodiscard]] const Complex& beta() const { return beta_; }
  /// Principal log of beta.
  [[nodiscard]] const Complex& log_beta() const { return log_beta_; }
  [[nodiscard]] CutConvention convention() const { return convention_; }

 private:
  Complex beta_;
  Complex log_beta_;
  CutConvention convention_;
};

/// log y with the cut along beta R_{<=0}: principal_log(y/beta) + log beta.
/// DomainError when y/beta lies on R_{<=0} within 2^{-prec+8}.
Complex branched_log(const Complex& y, const BranchContext& ctx);

/// log y with the cut along the ray exp(log_dir) R_{<=0}, continuous from
/// the positive axis: principal_log(y e^{-log_dir}) + log_dir. `log_dir`
/// need not be a principal logarithm (e.g. (1-c) log beta for large c).
Complex log_off_ray(const Complex& y, const Complex& log_dir);

/// y shifted by a multiple of 2 pi i into the strip -pi < Im y <= pi.
struct StripReduced {
  Complex y;
  long winding;
};

/// y' = y - 2 pi i winding with Im y' in (-pi, pi].
StripReduced reduce_strip(const Complex& y);

}  // namespace qpoch
