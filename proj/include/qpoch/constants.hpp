// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qpoch/real.hpp"

namespace qpoch {

/// Bits of Euler's constant carried by the stored literal.
inline constexpr unsigned kEulerGammaCapacityBits = 4096;

Real const_pi(Precision prec);
/// Euler's constant from a stored literal; PrecisionError above
/// kEulerGammaCapacityBits.
Real const_euler_gamma(Precision prec);
Real const_log2(Precision prec);
/// log(2 pi)
Real const_log_2pi(Precision prec);

}  // namespace qpoch
