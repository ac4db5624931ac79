// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qpoch/real.hpp"

namespace qpoch {

/// Riemann zeta at an integer k >= 2. Even k from the Bernoulli number
/// B_k; odd k from Borwein's accelerated alternating series with an
/// explicit truncation bound below 2^{-prec}. DomainError for k < 2.
Real zeta_int(unsigned k, Precision prec);

}  // namespace qpoch
