// SPDX-License-Identifier: Apache-2.0
#include "qpoch/real.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace qpoch {

namespace detail {

const Real& require_finite(const Real& x, const char* what) {
  if (!x.is_finite()) {
    throw DomainError(std::string(what) + ": result is not finite");
  }
  return x;
}

}  // namespace detail

namespace {

template <class F>
Real unary(const Real& x, F&& f, const char* what) {
  Real r(x.precision());
  f(r.raw(), x.raw(), MPFR_RNDN);
  detail::require_finite(r, what);
  return r;
}

}  // namespace

Real Real::parse(std::string_view text, Precision p) {
  const std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty number");
  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed ratio '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    q.canonicalize();
    return Real(q, p);
  }
  Real r(p);
  char* end = nullptr;
  mpfr_strtofr(r.raw(), s.c_str(), &end, 10, MPFR_RNDN);
  if (end == s.c_str() || *end != '\0' || !r.is_finite()) {
    throw std::invalid_argument("malformed number '" + s + "'");
  }
  return r;
}

double Real::log2_abs() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  long e = 0;
  const double m = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
  return std::log2(std::fabs(m)) + static_cast<double>(e);
}

std::string Real::to_string(int digits) const {
  if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (sign() < 0 ? "-inf" : "inf");
  if (is_zero()) return "0";
  if (digits < 1) digits = 1;
  mpfr_exp_t e = 0;
  char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
  std::string m(s);
  mpfr_free_str(s);
  std::string out;
  std::size_t i = 0;
  if (m[0] == '-') {
    out += '-';
    i = 1;
  }
  out += m[i];
  if (m.size() > i + 1) {
    // trailing zeros carry no information and make golden output noisy
    std::size_t last = m.find_last_not_of('0');
    if (last > i) {
      out += '.';
      out.append(m, i + 1, last - i);
    }
  }
  const long exp10 = static_cast<long>(e) - 1;
  if (exp10 != 0) out += "e" + std::to_string(exp10);
  return out;
}

Real& Real::operator/=(const Real& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  widen(o);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real abs(const Real& x) {
  return unary(x, [](mpfr_ptr r, mpfr_srcptr a, mpfr_rnd_t m) { return mpfr_abs(r, a, m); }, "abs");
}

Real sqrt(const Real& x) {
  if (x.sign() < 0) throw DomainError("sqrt of a negative number");
  return unary(x, mpfr_sqrt, "sqrt");
}

Real exp(const Real& x) { return unary(x, mpfr_exp, "exp"); }
Real expm1(const Real& x) { return unary(x, mpfr_expm1, "expm1"); }

Real log(const Real& x) {
  if (x.sign() <= 0) throw DomainError("log of a non-positive number");
  return unary(x, mpfr_log, "log");
}

Real log1p(const Real& x) {
  if (x <= -1) throw DomainError("log1p argument <= -1");
  return unary(x, mpfr_log1p, "log1p");
}

Real log2(const Real& x) {
  if (x.sign() <= 0) throw DomainError("log2 of a non-positive number");
  return unary(x, mpfr_log2, "log2");
}

Real sin(const Real& x) { return unary(x, mpfr_sin, "sin"); }
Real cos(const Real& x) { return unary(x, mpfr_cos, "cos"); }
Real atan(const Real& x) { return unary(x, mpfr_atan, "atan"); }

Real atan2(const Real& y, const Real& x) {
  Real r(max(y.precision(), x.precision()));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, const Real& y) {
  Real r(max(x.precision(), y.precision()));
  mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  detail::require_finite(r, "pow");
  return r;
}

Real pow(const Real& x, long n) {
  if (n < 0 && x.is_zero()) throw DomainError("negative power of zero");
  Real r(x.precision());
  mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
  detail::require_finite(r, "pow");
  return r;
}

Real floor(const Real& x) {
  Real r(x.precision());
  mpfr_floor(r.raw(), x.raw());
  return r;
}

Real round(const Real& x) {
  Real r(x.precision());
  mpfr_round(r.raw(), x.raw());
  return r;
}

Real ldexp(const Real& x, long e) {
  Real r(x.precision());
  mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}

const Real& max(const Real& a, const Real& b) { return (a < b) ? b : a; }
const Real& min(const Real& a, const Real& b) { return (b < a) ? b : a; }

Real exp2i(long e, Precision p) { return ldexp(Real(1, p), e); }

}  // namespace qpoch
