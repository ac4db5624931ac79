// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <concepts>
#include <string>
#include <string_view>

#include "qpoch/real.hpp"

namespace qpoch {

/// Arbitrary-precision complex number; the carrier for every y, beta, x, z
/// and q in the library.
class Complex {
 public:
  Complex() = default;
  explicit Complex(Precision p) : re_(p), im_(p) {}
  Complex(Real re) : re_(std::move(re)), im_(re_.precision()) {}  // NOLINT(google-explicit-constructor)
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
  Complex(double re, double im, Precision p) : re_(re, p), im_(im, p) {}

  /// Accepts "a", "a+bi", "a-bi", "bi" with decimal or p/q components.
  static Complex parse(std::string_view text, Precision p);

  [[nodiscard]] const Real& real() const { return re_; }
  [[nodiscard]] const Real& imag() const { return im_; }
  [[nodiscard]] Real& real() { return re_; }
  [[nodiscard]] Real& imag() { return im_; }
  [[nodiscard]] Precision precision() const { return max(re_.precision(), im_.precision()); }
  [[nodiscard]] Complex rounded(Precision p) const { return {re_.rounded(p), im_.rounded(p)}; }
  [[nodiscard]] bool is_real() const { return im_.is_zero(); }
  [[nodiscard]] bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  /// "re" when the imaginary part is zero, else "re+imi" / "re-imi".
  [[nodiscard]] std::string to_string(int digits) const;

  Complex operator-() const { return {-re_, -im_}; }

  Complex& operator+=(const Complex& o) { re_ += o.re_; im_ += o.im_; return *this; }
  Complex& operator-=(const Complex& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex& operator+=(const Real& o) { re_ += o; return *this; }
  Complex& operator-=(const Real& o) { re_ -= o; return *this; }
  Complex& operator*=(const Real& o) { re_ *= o; im_ *= o; return *this; }
  Complex& operator/=(const Real& o) { re_ /= o; im_ /= o; return *this; }
  template <std::integral I> Complex& operator+=(I o) { re_ += o; return *this; }
  template <std::integral I> Complex& operator-=(I o) { re_ -= o; return *this; }
  template <std::integral I> Complex& operator*=(I o) { re_ *= o; im_ *= o; return *this; }
  template <std::integral I> Complex& operator/=(I o) { re_ /= o; im_ /= o; return *this; }

  friend Complex operator+(Complex a, const Complex& b) { a += b; return a; }
  friend Complex operator-(Complex a, const Complex& b) { a -= b; return a; }
  friend Complex operator*(Complex a, const Complex& b) { a *= b; return a; }
  friend Complex operator/(Complex a, const Complex& b) { a /= b; return a; }
  friend Complex operator+(Complex a, const Real& b) { a += b; return a; }
  friend Complex operator-(Complex a, const Real& b) { a -= b; return a; }
  friend Complex operator*(Complex a, const Real& b) { a *= b; return a; }
  friend Complex operator/(Complex a, const Real& b) { a /= b; return a; }
  friend Complex operator+(const Real& a, Complex b) { b += a; return b; }
  friend Complex operator*(const Real& a, Complex b) { b *= a; return b; }
  friend Complex operator-(const Real& a, const Complex& b) { return {a - b.re_, -b.im_}; }
  friend Complex operator/(const Real& a, const Complex& b) { return Complex(a) / b; }
  template <std::integral I> friend Complex operator+(Complex a, I b) { a += b; return a; }
  template <std::integral I> friend Complex operator-(Complex a, I b) { a -= b; return a; }
  template <std::integral I> friend Complex operator*(Complex a, I b) { a *= b; return a; }
  template <std::integral I> friend Complex operator/(Complex a, I b) { a /= b; return a; }
  template <std::integral I> friend Complex operator+(I a, Complex b) { b += a; return b; }
  template <std::integral I> friend Complex operator*(I a, Complex b) { b *= a; return b; }
  template <std::integral I>
  friend Complex operator-(I a, const Complex& b) { return {a - b.re_, -b.im_}; }
  template <std::integral I>
  friend Complex operator/(I a, const Complex& b) { return Complex(Real(a, b.precision())) / b; }

  friend bool operator==(const Complex& a, const Complex& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

 private:
  Real re_;
  Real im_;
};

Complex conj(const Complex& z);
Real abs(const Complex& z);
/// |z|^2
Real norm(const Complex& z);
/// Principal argument in (-pi, pi].
Real arg(const Complex& z);

Complex exp(const Complex& z);
/// e^z - 1 without cancellation near z = 0.
Complex expm1(const Complex& z);
/// e^{i t}
Complex expi(const Real& t);
/// Principal logarithm; imaginary part in (-pi, pi]. DomainError at 0.
Complex log(const Complex& z);
/// log(1 + z) on the principal branch, accurate for small |z|.
Complex log1p(const Complex& z);
/// Principal square root.
Complex sqrt(const Complex& z);
/// z^w = exp(w log z), principal branch of log.
Complex pow(const Complex& z, const Complex& w);
/// Integer power by repeated squaring.
Complex pow(const Complex& z, long n);
Complex sin(const Complex& z);
Complex cos(const Complex& z);
/// coth z; DomainError at the poles z in i*pi*Z.
Complex coth(const Complex& z);

}  // namespace qpoch
