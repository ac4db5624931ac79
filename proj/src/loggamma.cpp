// SPDX-License-Identifier: Apache-2.0
#include "qpoch/loggamma.hpp"

#include <cmath>
#include <complex>
#include <limits>

#include "qpoch/bernoulli.hpp"
#include "qpoch/constants.hpp"

namespace qpoch {

namespace {

constexpr double kLn2 = 0.6931471805599453;
constexpr double kPi = 3.141592653589793;
constexpr unsigned kMaxOrder = 64;

// log2 |B_{2k}| from |B_{2k}| = 2 (2k)! zeta(2k) / (2 pi)^{2k}.
double log2_bernoulli(unsigned two_k) {
  return 1.0 + std::lgamma(two_k + 1.0) / kLn2 - two_k * std::log2(2 * kPi);
}

// log2 of bound_fN for a double-precision point.
double log2_bound(std::complex<double> x, unsigned N) {
  const double th = std::arg(x);
  const double c = std::cos(th / 2);
  return log2_bernoulli(2 * N + 2) - std::log2((2.0 * N + 1) * (2.0 * N + 2)) - (2.0 * N + 1) * std::log2(std::abs(x)) -
         (2.0 * N + 2) * std::log2(c);
}

std::complex<double> to_cd(const Complex& z) { return {z.real().to_double(), z.imag().to_double()}; }

// (x - 1/2) log x - x + log(2 pi)/2 + sum_{k<=N} B_2k / (2k (2k-1) x^{2k-1})
Complex stirling_sum(const Complex& x, unsigned N, Precision w) {
  const Complex lx = log(x);
  Complex s = (x - Real::parse("1/2", w)) * lx - x + const_log_2pi(w) / 2;
  if (N == 0) return s;
  const auto b = bernoulli_numbers(2 * N);
  const Complex inv = Complex(Real(1, w)) / x;
  const Complex inv2 = inv * inv;
  Complex power = inv;
  for (unsigned k = 1; k <= N; ++k) {
    s += power * Real(b[2 * k] / Rational(Integer(2 * k) * (2 * k - 1)), w);
    power *= inv2;
  }
  return s;
}

// sum_{j<m} log(x + j) on the principal branch of each term, built from
// chunked products; the argument sum is tracked in double precision.
Complex log_rising(const Complex& x, long m, Precision w) {
  Complex total(w);
  if (m <= 0) return total;
  const Real tp = ldexp(const_pi(w), 1);
  const std::complex<double> xd = to_cd(x);
  long j = 0;
  while (j < m) {
    const long end = std::min(m, j + 48);
    Complex prod(Real(1, w));
    double arg_sum = 0.0;
    for (long i = j; i < end; ++i) {
      prod *= x + i;
      arg_sum += std::arg(xd + static_cast<double>(i));
    }
    Complex l = log(prod);
    const double shift = std::round((arg_sum - l.imag().to_double()) / (2 * kPi));
    if (shift != 0.0) l.imag() += tp * static_cast<long>(shift);
    total += l;
    j = end;
  }
  return total;
}

void require_sector(const Complex& x) {
  if (x.is_zero()) throw DomainError("Stirling remainder at x = 0");
  const double th = std::abs(std::arg(to_cd(x)));
  if (th > 0.75 * kPi) throw DomainError("Stirling remainder needs |arg x| <= 3 pi / 4");
}

}  // namespace

Complex log_gamma(const Complex& x, Precision prec) {
  if (x.imag().is_zero() && x.real().sign() <= 0) throw DomainError("log Gamma on R_{<=0}");
  const Precision w = prec.guarded();
  const double target = -static_cast<double>(w.bits) - 8.0;
  const std::complex<double> xd = to_cd(x);
  long m = 0;
  if (xd.real() < 1.0) m = static_cast<long>(std::ceil(1.0 - xd.real()));
  unsigned N = 1;
  for (;; ++m) {
    const std::complex<double> z = xd + static_cast<double>(m);
    N = static_cast<unsigned>(std::min<double>(kMaxOrder, std::max(1.0, std::floor(kPi * std::abs(z)))));
    if (std::abs(std::arg(z)) <= 0.75 * kPi && log2_bound(z, N) < target) break;
    if (m > 100000000) throw ConvergenceError("log Gamma shift does not settle");
    // jump ahead when far from the target, the bound falls like |z|^{-2N-1}
    const double gap = log2_bound(z, N) - target;
    if (gap > 64.0 && std::abs(z) > 4.0) {
      const double grow = std::exp2(gap / (2.0 * N + 1)) - 1.0;
      m += static_cast<long>(std::max(0.0, std::floor(std::abs(z) * std::min(grow, 1.0) * 0.5)));
    }
  }
  const Complex xw = x.rounded(w);
  const Complex shifted = xw + m;
  Complex r = stirling_sum(shifted, N, w) - log_rising(xw, m, w);
  return r.rounded(prec);
}

Real bound_fN(const Complex& x, unsigned N) {
  require_sector(x);
  const Precision w = x.precision().guarded();
  const Real th = arg(x.rounded(w));
  const Real c = cos(ldexp(th, -1));
  Real den = Real(Integer(Integer(2 * N + 1) * (2 * N + 2)), w) * pow(abs(x.rounded(w)), static_cast<long>(2 * N + 1)) *
             pow(c, static_cast<long>(2 * N + 2));
  Real b = abs(bernoulli_real(2 * N + 2, w)) / den;
  return b.rounded(x.precision());
}

StirlingEval stirling_fN(const Complex& x, unsigned N, Precision prec) {
  require_sector(x);
  const Precision w = prec.guarded();
  const std::complex<double> xd = to_cd(x);
  Real bound = bound_fN(x.rounded(prec), N);

  // Far out, the remainder itself is an asymptotic sum that reaches the
  // target before it starts to diverge.
  const double scale = log2_bound(xd, N);
  const double target = std::min(scale, 0.0) - static_cast<double>(w.bits) - 4.0;
  for (unsigned K = N + 1; K <= N + 96; ++K) {
    if (log2_bound(xd, K) < target) {
      const Complex xw = x.rounded(w);
      const auto b = bernoulli_numbers(2 * K);
      const Complex inv = Complex(Real(1, w)) / xw;
      const Complex inv2 = inv * inv;
      Complex power = pow(inv, static_cast<long>(2 * N + 1));
      Complex s(w);
      for (unsigned k = N + 1; k <= K; ++k) {
        s += power * Real(b[2 * k] / Rational(Integer(2 * k) * (2 * k - 1)), w);
        power *= inv2;
      }
      return {s.rounded(prec), N, bound};
    }
    if (log2_bound(xd, K) > log2_bound(xd, K - 1)) break;
  }

  // Otherwise subtract from log Gamma with the cancellation paid for.
  const double lx = std::log2(std::max(2.0, std::abs(xd)));
  const double loss = lx + std::log2(std::max(1.0, std::log(std::abs(xd)))) + std::max(0.0, -scale) + 8.0;
  const Precision wg = w.plus(static_cast<unsigned>(loss));
  const Complex xg = x.rounded(wg);
  Complex f = log_gamma(xg, wg) - stirling_sum(xg, N, wg);
  return {f.rounded(prec), N, bound};
}

namespace detail {

Complex stirling_remainder(const Complex& x, unsigned N, Precision prec) {
  if (x.imag().is_zero() && x.real().sign() <= 0) throw DomainError("Stirling remainder on R_{<=0}");
  const std::complex<double> xd = to_cd(x);
  if (std::abs(std::arg(xd)) <= 0.75 * kPi) return stirling_fN(x, N, prec).value;
  const double lx = std::log2(std::max(2.0, std::abs(xd)));
  const Precision wg = prec.guarded().plus(static_cast<unsigned>(lx * (2.0 * N + 2)) + 16);
  const Complex xg = x.rounded(wg);
  return (log_gamma(xg, wg) - stirling_sum(xg, N, wg)).rounded(prec);
}

}  // namespace detail

Complex artin_f1(const Complex& x, long terms) {
  if (x.imag().is_zero() && x.real().sign() <= 0) throw DomainError("Artin series on R_{<=0}");
  const Precision p = x.precision();
  // log(z+1) - log(z) cancels about log2(terms) bits
  const Precision w = p.plus(Precision::kGuardBits + 24);
  const Complex xw = x.rounded(w);
  const Real half = Real::parse("1/2", w);
  // phi(z) = (z + 1/2) log(1 + 1/z) - 1 - 1/(12 z (z + 1)) = O(z^{-4});
  // log(z) and 1/z are carried over from one term to the next
  Complex sum(w);
  Complex z = xw;
  Complex log_z = log(z);
  Complex inv_z = Complex(Real(1, w)) / z;
  for (long n = 0; n < terms; ++n) {
    Complex z1 = z + 1;
    Complex log_z1 = log(z1);
    Complex inv_z1 = Complex(Real(1, w)) / z1;
    Complex t = (z + half) * (log_z1 - log_z) - 1;
    t -= inv_z * inv_z1 / 12;
    sum += t;
    z = std::move(z1);
    log_z = std::move(log_z1);
    inv_z = std::move(inv_z1);
  }
  return sum.rounded(p);
}

}  // namespace qpoch
