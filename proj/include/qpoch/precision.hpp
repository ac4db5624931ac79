// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <string>

#include "qpoch/errors.hpp"

namespace qpoch {

/// Binary precision of significands. Every value produced inside one
/// operation shares a single Precision.
struct Precision {
  static constexpr unsigned kMinBits = 64;
  static constexpr unsigned kGuardBits = 32;

  unsigned bits = kMinBits;

  constexpr Precision() = default;
  constexpr explicit Precision(unsigned b) : bits(b) {
    if (b < kMinBits) {
      throw PrecisionError("precision must be at least 64 bits, got " + std::to_string(b));
    }
  }

  /// Precision used internally by an operation asked for `*this`.
  [[nodiscard]] constexpr Precision guarded() const { return Precision(bits + kGuardBits); }
  [[nodiscard]] constexpr Precision plus(unsigned extra) const { return Precision(bits + extra); }

  /// Number of decimal digits carried by the significand.
  [[nodiscard]] int digits10() const {
    return static_cast<int>(std::floor(static_cast<double>(bits) * 0.30102999566398120));
  }

  friend constexpr bool operator==(Precision, Precision) = default;
  friend constexpr auto operator<=>(Precision a, Precision b) { return a.bits <=> b.bits; }
};

constexpr Precision max(Precision a, Precision b) { return a.bits >= b.bits ? a : b; }

}  // namespace qpoch
