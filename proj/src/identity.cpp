// SPDX-License-Identifier: Apache-2.0
#include "qpoch/identity.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include "qpoch/bernoulli.hpp"
#include "qpoch/constants.hpp"
#include "qpoch/loggamma.hpp"
#include "qpoch/polylog.hpp"

namespace qpoch {

namespace {

using cd = std::complex<double>;
constexpr double kPi = 3.141592653589793;

cd to_cd(const Complex& z) { return {z.real().to_double(), z.imag().to_double()}; }

Complex i_times(const Real& t) { return {Real(t.precision()), t}; }

// Im log(1 - e^{-(y + t beta)}) at t = 0, 1, ..., kmax, continued from
// a point t = S far enough out that the principal branch applies.
std::vector<double> tracked_imag(cd y, cd beta, long kmax) {
  long S = kmax + 1;
  while ((y + static_cast<double>(S) * beta).real() < 0.5) ++S;
  auto f = [&](double t) { return 1.0 - std::exp(-(y + t * beta)); };
  std::vector<double> out(static_cast<std::size_t>(kmax + 1), 0.0);
  double t = static_cast<double>(S);
  cd prev = f(t);
  double theta = std::arg(prev);
  const double bmod = std::abs(beta);
  while (t > 0.0) {
    const cd u = y + t * beta;
    const double rate = bmod / std::abs(std::exp(u) - 1.0);
    double h = std::min(1.0, 0.25 / rate);
    if (h < 1e-13) throw DomainError("y lies too close to a zero of the product");
    const double next_int = std::ceil(t) - 1.0;  // largest integer below t
    if (t - h < next_int) h = t - next_int;
    t -= h;
    if (t - std::floor(t) < 1e-15) t = std::floor(t);
    const cd cur = f(t);
    theta += std::arg(cur / prev);
    prev = cur;
    const double r = std::round(t);
    if (std::abs(t - r) < 1e-15 && r <= static_cast<double>(kmax)) out[static_cast<std::size_t>(r)] = theta;
  }
  return out;
}

// sum_{n >= M+1} (2n - 1)^{-s} <= (2M+1)^{-s} + (2M+1)^{1-s} / (2 (s - 1))
Real odd_power_tail(long M, unsigned s, Precision w) {
  const Real a(2 * M + 1, w);
  Real r = pow(a, -static_cast<long>(s));
  if (s > 1) r += pow(a, 1 - static_cast<long>(s)) / Real(2 * (static_cast<long>(s) - 1), w);
  return r;
}

// Bound on sum_{|n| > M} bound_fN((y + 2 pi i n)/beta, N) using
// |y + 2 pi i n| >= (2|n| - 1) pi and a uniform angle bound.
Real rhs_tail(const Complex& ys, const Complex& beta, unsigned N, long M, Precision w) {
  const Real pi = const_pi(w);
  const Real theta = abs(arg(beta));
  const Real phi = pi / 2 + theta + atan(abs(ys.real()) / (pi * (2 * M + 1)));
  if (phi.to_double() > 0.75 * kPi) throw DomainError("far terms leave the Stirling sector");
  const unsigned s = 2 * N + 1;
  const Real c = cos(ldexp(phi, -1));
  Real b = abs(bernoulli_real(2 * N + 2, w)) /
           (Real(Integer(Integer(2 * N + 1) * (2 * N + 2)), w) * pow(c, static_cast<long>(2 * N + 2)));
  b *= pow(abs(beta) / pi, static_cast<long>(s));
  return b * 2 * odd_power_tail(M, s, w);
}

// sum_{|n|<=M} f_N((y + 2 pi i n) / beta), n and -n added as a pair.
Complex remainder_sum(const Complex& ys, const Complex& beta, unsigned N, long M, Precision w) {
  const Real tp = ldexp(const_pi(w), 1);
  Complex sum = detail::stirling_remainder(ys / beta, N, w);
  for (long n = 1; n <= M; ++n) {
    const Complex a = (ys + i_times(tp * n)) / beta;
    const Complex b = (ys - i_times(tp * n)) / beta;
    sum += stirling_fN(a, N, w).value + stirling_fN(b, N, w).value;
  }
  return sum;
}

Real abs_diff(const Complex& a, const Complex& b) { return abs(a - b); }

}  // namespace

Real region_y_max(const Complex& beta) {
  const Precision w = beta.precision();
  const Real pi = const_pi(w);
  const Real cap = pi * sqrt(Real(3, w));
  const Real th = arg(beta);
  if (th.is_zero()) return cap;
  Real cot = abs(cos(th) / sin(th));
  Real y = pi * cot * Real::parse("0.9", w);
  return min(y, cap);
}

Complex require_region(const Complex& y, const Complex& beta) {
  if (beta.is_zero() || beta.real().sign() <= 0) throw DomainError("beta must satisfy |arg beta| < pi/2");
  Complex ys = reduce_strip(y).y;
  if (!(ys.real() > -region_y_max(beta))) throw DomainError("Re y is below -Y_max after strip reduction");
  // y on beta R_{<=0}
  const Complex r = ys / beta;
  if (r.real().sign() <= 0) {
    const double rel = abs(r.imag()).log2_abs() - abs(r).log2_abs();
    if (r.is_zero() || r.imag().is_zero() || rel < -static_cast<double>(y.precision().bits) + 8.0) {
      throw DomainError("y lies on the cut beta R_{<=0}");
    }
  }
  return ys;
}

QPochEval oracle_log_qpoch(const Complex& y, const Complex& beta, const Real& tol) {
  const Precision p = max(y.precision(), beta.precision());
  if (tol.sign() <= 0 || tol.log2_abs() < -static_cast<double>(p.bits)) {
    throw ConvergenceError("tolerance below the working precision");
  }
  const Precision w = p.guarded();
  const Complex bw = beta.rounded(w);
  const Complex ys = require_region(y.rounded(w), bw);
  const Real half_tol = ldexp(tol.rounded(w), -1);

  // terms whose real part is not positive need their branch tracked
  const cd yd = to_cd(ys), bd = to_cd(bw);
  long k_neg = -1;
  while ((yd + static_cast<double>(k_neg + 1) * bd).real() <= 0.0) ++k_neg;
  std::vector<double> theta;
  if (k_neg >= 0) theta = tracked_imag(yd, bd, k_neg);

  const Complex q = exp(-bw);
  const Real rho = abs(q);
  const Real one_minus_rho = -expm1(-bw.real());
  Complex wk = exp(-ys);  // e^{-y - k beta}
  Complex sum(w);
  const Real tp = ldexp(const_pi(w), 1);
  long k = 0;
  Real tail(w);
  for (;; ++k) {
    if (k <= k_neg) {
      const Complex u = ys + bw * k;
      Complex v = log(-expm1(-u));
      const double shift = std::round((theta[static_cast<std::size_t>(k)] - v.imag().to_double()) / (2 * kPi));
      if (shift != 0.0) v.imag() += tp * static_cast<long>(shift);
      sum += v;
    } else {
      sum += log1p(-wk);
    }
    wk *= q;
    // sum_{j > k} |log(1 - w_j)| <= |w_{k+1}| / ((1 - |w_{k+1}|)(1 - rho))
    if (k > k_neg) {
      const Real a = abs(wk);
      if (a < 1) {
        tail = a / ((1 - a) * one_minus_rho);
        if (tail <= half_tol) break;
      }
    }
    if (k > 50000000) throw ConvergenceError("oracle product does not settle");
  }
  (void)rho;
  return {sum.rounded(p), tail.rounded(p), k + 1};
}

Complex qpoch_product(const Complex& z, const Complex& q, const Real& tol) {
  const Precision p = max(z.precision(), q.precision());
  const Precision w = p.guarded();
  const Real aq = abs(q.rounded(w));
  if (aq >= 1) throw DomainError("qpoch_product needs |q| < 1");
  const Complex qw = q.rounded(w);
  const Complex zw = z.rounded(w);
  const Real one_minus = 1 - aq;
  Complex prod(Real(1, w));
  Complex zq = zw;
  for (long j = 0;; ++j) {
    prod *= Real(1, w) - zq;
    zq *= qw;
    // |prod_{i>j} (1 - z q^i) - 1| <= exp(t) - 1 with t = |z q^{j+1}| / (1 - |q|)
    const Real t = abs(zq) / one_minus;
    if (t.is_zero() || expm1(t) <= tol) break;
    if (j > 50000000) throw ConvergenceError("product does not settle");
  }
  return prod.rounded(p);
}

QPochEval identity_rhs(const Complex& y, const Complex& beta, unsigned N, long M) {
  if (N < 1) throw DomainError("identity_rhs needs N >= 1");
  if (M < 1) throw DomainError("identity_rhs needs M >= 1");
  const Precision p = max(y.precision(), beta.precision());
  const Precision w = p.guarded();
  const Complex bw = beta.rounded(w);
  const Complex ys = require_region(y.rounded(w), bw);
  const BranchContext ctx(bw);

  // sum_{k<=2N} B_k Li_{2-k}(e^{-y}) (-beta)^{k-1} / k!
  Complex head = -li12_strip_branch(2, ys, ctx).value / bw;
  head -= li12_strip_branch(1, ys, ctx).value / 2;
  const auto b = bernoulli_numbers(2 * N);
  const Complex b2 = bw * bw;
  Complex power = bw;  // (-beta)^{k-1} for even k
  for (unsigned k = 2; k <= 2 * N; k += 2) {
    const Rational c = b[k] / Rational(factorial(k));
    head -= li_neg_exp(k - 2, ys) * power * Real(c, w);
    power *= b2;
  }
  const Complex rem = remainder_sum(ys, bw, N, M, w);
  const Real tail = rhs_tail(ys, bw, N, M, w);
  return {(head - rem).rounded(p), tail.rounded(p), 2 * M + 1};
}

QPochEval identity_rhs_pv(const Complex& y, const Complex& beta, long M) {
  if (M < 1) throw DomainError("identity_rhs_pv needs M >= 1");
  const Precision p = max(y.precision(), beta.precision());
  const Precision w = p.guarded();
  const Complex bw = beta.rounded(w);
  const Complex ys = require_region(y.rounded(w), bw);
  const BranchContext ctx(bw);
  Complex v = -li12_strip_branch(1, ys, ctx).value / 2 + bw / 24 - li12_strip_branch(2, ys, ctx).value / bw;
  v -= remainder_sum(ys, bw, 0, M, w);
  // paired 1/(12 x_n) terms leave |beta| |y| / (24 pi^2 (M - c)), c = |y| / (2 pi)
  const Real pi = const_pi(w);
  const Real ay = abs(ys);
  const Real c = ay / (pi * 2);
  Real tail = rhs_tail(ys, bw, 1, M, w);
  if (Real(M, w) > c) tail += abs(bw) * ay / (pi * pi * 24 * (Real(M, w) - c));
  return {v.rounded(p), tail.rounded(p), 2 * M + 1};
}

IdentityReport consequence_check(const Complex& y, const Complex& beta, long M) {
  const Precision p = max(y.precision(), beta.precision());
  const Precision w = p.guarded();
  const Complex bw = beta.rounded(w);
  const Complex ys = require_region(y.rounded(w), bw);
  const Complex ys1 = require_region(ys + bw, bw);
  const BranchContext ctx(bw);
  const Real tp = ldexp(const_pi(w), 1);
  const Real half = Real::parse("1/2", w);
  auto factor = [&](const Complex& yn) { return (yn / bw + half) * log1p(bw / yn) - 1; };
  Complex lsum = factor(ys);
  for (long n = 1; n <= M; ++n) {
    lsum += factor(ys + i_times(tp * n));
    lsum += factor(ys - i_times(tp * n));
  }
  const Complex lhs = exp(lsum);
  // (Li2(e^{-y-beta}) - Li2(e^{-y})) / beta + (Li1(e^{-y}) + Li1(e^{-y-beta})) / 2
  Complex lr = (li12_strip_branch(2, ys1, ctx).value - li12_strip_branch(2, ys, ctx).value) / bw;
  lr += (li12_strip_branch(1, ys, ctx).value + li12_strip_branch(1, ys1, ctx).value) / 2;
  const Complex rhs = exp(lr);
  // omitted factors are 1 + O(|beta/y_n|^2)
  const Real pi = const_pi(w);
  Real t = abs(bw) * abs(bw) / (pi * pi * 6) * odd_power_tail(M, 2, w);
  t *= Real::parse("1.5", w);
  const Real tail = abs(rhs) * expm1(t);
  return {lhs.rounded(p), rhs.rounded(p), abs_diff(lhs, rhs).rounded(p), tail.rounded(p)};
}

IdentityReport dedekind_check(const Complex& beta) {
  const Precision p = beta.precision();
  const Precision w = p.guarded();
  const Complex bw = beta.rounded(w);
  if (bw.is_zero() || bw.real().sign() <= 0) throw DomainError("beta must satisfy |arg beta| < pi/2");
  const Real tol = exp2i(-static_cast<long>(w.bits) + 8, w);
  const Complex lhs = exp(oracle_log_qpoch(bw, bw, tol).log_value);
  const Real pi = const_pi(w);
  const Complex tq = -(pi * pi * 4) / bw;
  const Complex qt = exp(tq);
  Complex rhs = sqrt(Complex(ldexp(pi, 1)) / bw) * exp(bw / 24 - Complex(pi * pi) / (bw * 6));
  rhs *= qpoch_product(qt, qt, tol);
  return {lhs.rounded(p), rhs.rounded(p), abs_diff(lhs, rhs).rounded(p), Real(p)};
}

IdentityReport theta_modular_check(const Complex& x, const Complex& beta) {
  const Precision p = max(x.precision(), beta.precision());
  const Precision w = p.guarded();
  const Complex bw = beta.rounded(w);
  const Complex xw = x.rounded(w);
  if (bw.is_zero() || bw.real().sign() <= 0) throw DomainError("beta must satisfy |arg beta| < pi/2");
  const Real tol = exp2i(-static_cast<long>(w.bits) + 8, w);
  const Real pi = const_pi(w);
  const Complex q = exp(-bw);
  const Complex lhs = qpoch_product(exp(-(xw + 1) * bw), q, tol) * qpoch_product(exp(xw * bw), q, tol);
  const Complex qt = exp(-(pi * pi * 4) / bw);
  const Complex two_pi_i_x = i_times(ldexp(pi, 1)) * xw;
  const Real half = Real::parse("1/2", w);
  Complex e = -Complex(pi * pi) / (bw * 3) - i_times(pi) * (xw + half);
  e += (xw * xw / 2 + xw / 2 + Complex(Real(1, w) / 12)) * bw;
  const Complex rhs = exp(e) * qpoch_product(exp(two_pi_i_x), qt, tol) * qpoch_product(exp(-two_pi_i_x) * qt, qt, tol);
  const double floor = -static_cast<double>(p.bits) + 8.0;
  if (lhs.is_zero() || rhs.is_zero() || abs(lhs).log2_abs() < floor || abs(rhs).log2_abs() < floor) {
    throw DomainError("theta product vanishes at this x");
  }
  return {lhs.rounded(p), rhs.rounded(p), abs_diff(lhs, rhs).rounded(p), Real(p)};
}

IdentityReport artin_product_check(const Complex& x, long M) {
  if (x.imag().is_zero() && x.real().sign() <= 0) throw DomainError("Artin product on R_{<=0}");
  const Precision p = x.precision();
  const Precision w = p.guarded();
  const Complex xw = x.rounded(w);
  const Real half = Real::parse("1/2", w);
  Complex lsum(w);
  for (long n = 0; n <= M; ++n) {
    const Complex z = xw + n;
    lsum += (z + half) * log1p(Complex(Real(1, w)) / z) - 1;
  }
  const Complex lhs = exp(lsum);
  const Complex rhs = exp(log_gamma(xw, w) + xw + (half - xw) * log(xw) - const_log_2pi(w) / 2);
  // omitted log terms are below 1/(12 z (z+1)), summing to 1/(12 (x + M + 1))
  const Real t = Real(1, w) / (abs(xw + (M + 1)) * 12);
  const Real tail = abs(rhs) * expm1(t);
  return {lhs.rounded(p), rhs.rounded(p), abs_diff(lhs, rhs).rounded(p), tail.rounded(p)};
}

}  // namespace qpoch
