// SPDX-License-Identifier: Apache-2.0
#include "qpoch/complex.hpp"

#include "qpoch/constants.hpp"

#include <stdexcept>
#include <string>

namespace qpoch {

namespace {

Real hypot(const Real& a, const Real& b) {
  Real r(max(a.precision(), b.precision()));
  mpfr_hypot(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

Real sinh(const Real& x) {
  Real r(x.precision());
  mpfr_sinh(r.raw(), x.raw(), MPFR_RNDN);
  detail::require_finite(r, "sinh");
  return r;
}

Real cosh(const Real& x) {
  Real r(x.precision());
  mpfr_cosh(r.raw(), x.raw(), MPFR_RNDN);
  detail::require_finite(r, "cosh");
  return r;
}

void sin_cos(const Real& x, Real& s, Real& c) {
  s = Real(x.precision());
  c = Real(x.precision());
  mpfr_sin_cos(s.raw(), c.raw(), x.raw(), MPFR_RNDN);
}

}  // namespace

Complex expm1(const Complex& z) {
  if (z.is_real()) return Complex(qpoch::expm1(z.real()));
  Real s, c;
  sin_cos(z.imag(), s, c);
  Real half_s = sin(ldexp(z.imag(), -1));
  Real re = qpoch::expm1(z.real()) * c - ldexp(half_s * half_s, 1);
  Real im = exp(z.real()) * s;
  return {std::move(re), std::move(im)};
}

Complex Complex::parse(std::string_view text, Precision p) {
  std::string s;
  for (char ch : text) {
    if (ch != ' ') s += ch;
  }
  if (s.empty()) throw std::invalid_argument("empty complex number");
  if (s.back() != 'i') return Complex(Real::parse(s, p));
  s.pop_back();
  // split at the last sign that is not part of an exponent
  std::size_t cut = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      cut = i;
      break;
    }
  }
  auto imag_part = [&](const std::string& t) {
    if (t.empty() || t == "+") return Real(1, p);
    if (t == "-") return Real(-1, p);
    return Real::parse(t[0] == '+' ? t.substr(1) : t, p);
  };
  if (cut == std::string::npos) return {Real(p), imag_part(s)};
  return {Real::parse(s.substr(0, cut), p), imag_part(s.substr(cut))};
}

std::string Complex::to_string(int digits) const {
  if (im_.is_zero()) return re_.to_string(digits);
  std::string out = re_.to_string(digits);
  std::string im = im_.to_string(digits);
  if (im[0] != '-') out += '+';
  out += im;
  out += 'i';
  return out;
}

Complex& Complex::operator*=(const Complex& o) {
  if (o.im_.is_zero()) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  if (im_.is_zero()) {
    im_ = re_ * o.im_;
    re_ *= o.re_;
    return *this;
  }
  Real re = re_ * o.re_ - im_ * o.im_;
  Real im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  if (o.im_.is_zero()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  Real d = norm(o);
  if (d.is_zero()) throw DomainError("division by zero");
  Real re = (re_ * o.re_ + im_ * o.im_) / d;
  Real im = (im_ * o.re_ - re_ * o.im_) / d;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Complex conj(const Complex& z) { return {z.real(), -z.imag()}; }

Real abs(const Complex& z) {
  if (z.is_real()) return abs(z.real());
  return hypot(z.real(), z.imag());
}

Real norm(const Complex& z) { return z.real() * z.real() + z.imag() * z.imag(); }

Real arg(const Complex& z) {
  // a signed zero must not move the negative axis to -pi
  if (z.imag().is_zero()) {
    if (z.real().sign() < 0) return const_pi(z.precision());
    return Real(z.precision());
  }
  return atan2(z.imag(), z.real());
}

Complex exp(const Complex& z) {
  if (z.is_real()) return Complex(exp(z.real()), Real(z.precision()));
  Real m = exp(z.real());
  Real s, c;
  sin_cos(z.imag(), s, c);
  return {m * c, m * s};
}

Complex expi(const Real& t) {
  Real s, c;
  sin_cos(t, s, c);
  return {std::move(c), std::move(s)};
}

Complex log(const Complex& z) {
  if (z.is_zero()) throw DomainError("log of zero");
  if (z.is_real()) {
    Real a = abs(z.real());
    return {log(a), arg(z)};
  }
  return {log(abs(z)), arg(z)};
}

Complex log1p(const Complex& z) {
  if (z.is_real() && z.real() > -1) return Complex(log1p(z.real()), Real(z.precision()));
  Real one_plus_re = z.real() + 1;
  // |1+z|^2 - 1 = 2 Re z + |z|^2
  Real t = ldexp(z.real(), 1) + norm(z);
  if (t <= -1) throw DomainError("log1p of -1");
  return {ldexp(log1p(t), -1), atan2(z.imag(), one_plus_re)};
}

Complex sqrt(const Complex& z) {
  if (z.is_zero()) return Complex(z.precision());
  if (z.is_real() && z.real().sign() > 0) return Complex(sqrt(z.real()), Real(z.precision()));
  Real r = abs(z);
  if (z.real().sign() >= 0) {
    Real t = sqrt(ldexp(r + z.real(), -1));
    Real im = z.imag() / ldexp(t, 1);
    return {std::move(t), std::move(im)};
  }
  Real t = sqrt(ldexp(r - z.real(), -1));
  Real re = abs(z.imag()) / ldexp(t, 1);
  if (z.imag().sign() < 0) t = -t;
  return {std::move(re), std::move(t)};
}

Complex pow(const Complex& z, const Complex& w) {
  if (z.is_zero()) {
    if (w.is_real() && w.real().sign() > 0) return Complex(z.precision());
    throw DomainError("0 raised to a non-positive power");
  }
  return exp(w * log(z));
}

Complex pow(const Complex& z, long n) {
  if (n < 0) return Complex(Real(1, z.precision())) / pow(z, -n);
  Complex result(Real(1, z.precision()));
  Complex base = z;
  unsigned long e = static_cast<unsigned long>(n);
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

Complex sin(const Complex& z) {
  if (z.is_real()) return Complex(sin(z.real()));
  Real s, c;
  sin_cos(z.real(), s, c);
  return {s * cosh(z.imag()), c * sinh(z.imag())};
}

Complex cos(const Complex& z) {
  if (z.is_real()) return Complex(cos(z.real()));
  Real s, c;
  sin_cos(z.real(), s, c);
  return {c * cosh(z.imag()), -(s * sinh(z.imag()))};
}

Complex coth(const Complex& z) {
  // coth z = 1 + 2 / (e^{2z} - 1)
  Complex d = expm1(z * 2);
  const double tiny = -static_cast<double>(z.precision().bits) + 8.0;
  if (d.is_zero() || abs(d).log2_abs() < tiny) throw DomainError("coth: pole at z in i*pi*Z");
  Complex r = Complex(Real(2, z.precision())) / d;
  r += 1;
  return r;
}

}  // namespace qpoch
