// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <concepts>
#include <string>
#include <string_view>
#include <utility>

#include "qpoch/precision.hpp"

namespace qpoch {

/// Arbitrary-precision real number with its own binary precision.
///
/// Binary operations round to the larger precision of the two operands.
/// Kernels that can overflow or hit an invalid argument raise DomainError
/// instead of returning NaN or infinity.
class Real {
 public:
  Real() : Real(Precision{}) {}
  explicit Real(Precision p) {
    mpfr_init2(v_, p.bits);
    mpfr_set_zero(v_, 1);
  }
  template <std::signed_integral I>
  Real(I v, Precision p) {
    mpfr_init2(v_, p.bits);
    mpfr_set_si(v_, static_cast<long>(v), MPFR_RNDN);
  }
  template <std::unsigned_integral I>
  Real(I v, Precision p) {
    mpfr_init2(v_, p.bits);
    mpfr_set_ui(v_, static_cast<unsigned long>(v), MPFR_RNDN);
  }
  template <std::floating_point F>
  Real(F v, Precision p) {
    mpfr_init2(v_, p.bits);
    mpfr_set_d(v_, static_cast<double>(v), MPFR_RNDN);
  }
  Real(const mpz_class& z, Precision p) {
    mpfr_init2(v_, p.bits);
    mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
  }
  Real(const mpq_class& q, Precision p) {
    mpfr_init2(v_, p.bits);
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }

  Real(const Real& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  Real(Real&& other) noexcept {
    v_[0] = other.v_[0];
    other.v_[0]._mpfr_d = nullptr;
  }
  Real& operator=(const Real& other) {
    if (this != &other) {
      if (v_[0]._mpfr_d == nullptr) {
        mpfr_init2(v_, mpfr_get_prec(other.v_));
      } else {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
      }
      mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& other) noexcept {
    std::swap(v_[0], other.v_[0]);
    return *this;
  }
  ~Real() {
    if (v_[0]._mpfr_d != nullptr) mpfr_clear(v_);
  }

  /// Parses a decimal literal ("1.25", "-3e-4") or a ratio "p/q".
  static Real parse(std::string_view text, Precision p);

  [[nodiscard]] Precision precision() const {
    return Precision(static_cast<unsigned>(mpfr_get_prec(v_)));
  }
  /// Copy rounded (or exactly widened) to precision `p`.
  [[nodiscard]] Real rounded(Precision p) const {
    Real r(p);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  [[nodiscard]] mpfr_ptr raw() { return v_; }
  [[nodiscard]] mpfr_srcptr raw() const { return v_; }

  [[nodiscard]] double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  [[nodiscard]] long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  [[nodiscard]] int sign() const { return mpfr_sgn(v_); }
  [[nodiscard]] bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  [[nodiscard]] bool is_finite() const { return mpfr_number_p(v_) != 0; }
  /// log2|x| as a double; -inf for zero. Safe far outside the double range.
  [[nodiscard]] double log2_abs() const;

  /// Scientific notation with `digits` significant decimal digits, e.g.
  /// "-1.2345e-7". Zero prints as "0".
  [[nodiscard]] std::string to_string(int digits) const;
  /// Same, with all digits carried by the precision.
  [[nodiscard]] std::string to_string() const { return to_string(precision().digits10()); }

  Real operator-() const {
    Real r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  Real& operator+=(const Real& o) { widen(o); mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { widen(o); mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { widen(o); mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& o);

  template <std::integral I>
  Real& operator+=(I o) { mpfr_add_si(v_, v_, static_cast<long>(o), MPFR_RNDN); return *this; }
  template <std::integral I>
  Real& operator-=(I o) { mpfr_sub_si(v_, v_, static_cast<long>(o), MPFR_RNDN); return *this; }
  template <std::integral I>
  Real& operator*=(I o) { mpfr_mul_si(v_, v_, static_cast<long>(o), MPFR_RNDN); return *this; }
  template <std::integral I>
  Real& operator/=(I o);

  friend Real operator+(Real a, const Real& b) { a += b; return a; }
  friend Real operator-(Real a, const Real& b) { a -= b; return a; }
  friend Real operator*(Real a, const Real& b) { a *= b; return a; }
  friend Real operator/(Real a, const Real& b) { a /= b; return a; }

  template <std::integral I> friend Real operator+(Real a, I b) { a += b; return a; }
  template <std::integral I> friend Real operator-(Real a, I b) { a -= b; return a; }
  template <std::integral I> friend Real operator*(Real a, I b) { a *= b; return a; }
  template <std::integral I> friend Real operator/(Real a, I b) { a /= b; return a; }
  template <std::integral I> friend Real operator+(I a, Real b) { b += a; return b; }
  template <std::integral I> friend Real operator*(I a, Real b) { b *= a; return b; }
  template <std::integral I>
  friend Real operator-(I a, const Real& b) {
    Real r(b.precision());
    mpfr_si_sub(r.v_, static_cast<long>(a), b.v_, MPFR_RNDN);
    return r;
  }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b) {
    if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
    const int c = mpfr_cmp(a.v_, b.v_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }
  template <std::integral I>
  friend std::partial_ordering operator<=>(const Real& a, I b) {
    const int c = mpfr_cmp_si(a.v_, static_cast<long>(b));
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }
  template <std::integral I>
  friend bool operator==(const Real& a, I b) { return mpfr_cmp_si(a.v_, static_cast<long>(b)) == 0; }

 private:
  void widen(const Real& o) {
    if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
  }

  mpfr_t v_;
};

namespace detail {
/// Raises DomainError if `x` is NaN or infinite.
const Real& require_finite(const Real& x, const char* what);
}  // namespace detail

template <std::integral I>
Real& Real::operator/=(I o) {
  if (o == 0) throw DomainError("division by zero");
  mpfr_div_si(v_, v_, static_cast<long>(o), MPFR_RNDN);
  return *this;
}

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real expm1(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real log2(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real atan(const Real& x);
Real atan2(const Real& y, const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real floor(const Real& x);
Real round(const Real& x);
/// x * 2^e, exact.
Real ldexp(const Real& x, long e);
const Real& max(const Real& a, const Real& b);
const Real& min(const Real& a, const Real& b);

/// 2^e at precision p.
Real exp2i(long e, Precision p);

}  // namespace qpoch
