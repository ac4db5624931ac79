// SPDX-License-Identifier: Apache-2.0
#include "qpoch/polylog.hpp"

#include <cmath>
#include <limits>

#include "qpoch/bernoulli.hpp"
#include "qpoch/constants.hpp"

namespace qpoch {

namespace {

constexpr double kLn2 = 0.6931471805599453;
constexpr double kTwoPi = 6.283185307179586;

Real two_pi(Precision p) { return ldexp(const_pi(p), 1); }

// y - 2 pi i k with k the nearest integer to Im y / (2 pi).
Complex nearest_period(const Complex& y, Precision w) {
  const Real tp = two_pi(w);
  const long k = round(y.imag().rounded(w) / tp).to_long();
  if (k == 0) return y.rounded(w);
  return {y.real().rounded(w), y.imag().rounded(w) - tp * k};
}

void require_off_pole(const Complex& y0, Precision p, const char* what) {
  if (y0.is_zero() || abs(y0).log2_abs() < -static_cast<double>(p.bits) + 8.0) {
    throw DomainError(std::string(what) + ": pole at y in 2 pi i Z");
  }
}

// (n+1) * 6 >= w keeps the period sum to at most ~64 pairs.
bool period_sum_is_short(unsigned n, Precision w) { return n >= 1 && 6.0 * (n + 1) >= w.bits; }

Complex inv_pow(const Complex& z, unsigned long m) {
  return Complex(Real(1, z.precision())) / pow(z, static_cast<long>(m));
}

// (-1)^n sum_j B_{n+j+1} y^j / ((n+j+1) j!), the regular part at y = 0.
Complex regular_by_bernoulli(unsigned n, const Complex& y, Precision w) {
  const double r = abs(y).to_double() / kTwoPi;
  if (!(r < 0.9)) throw ConvergenceError("Bernoulli series needs |y| well inside 2 pi");
  const double guard = (n + 1) * std::log2(1.0 / (1.0 - r)) + 16.0;
  const Precision wg = w.plus(static_cast<unsigned>(guard));
  // term size relative to the leading scale is about C(n+j, j) r^j
  long J = 0;
  if (r > 0.0) {
    const double target = -static_cast<double>(wg.bits) - 8.0;
    const double peak = (n + 1) * r / (1.0 - r);
    for (long j = 1;; ++j) {
      const double lc = (std::lgamma(n + j + 1.0) - std::lgamma(j + 1.0) - std::lgamma(n + 1.0)) / kLn2 +
                        j * std::log2(r);
      if (j > peak && lc < target) {
        J = j;
        break;
      }
      if (j > 1000000) throw ConvergenceError("Bernoulli series does not settle");
    }
  }
  const auto b = bernoulli_numbers(static_cast<unsigned>(n + J + 1));
  const Complex yw = y.rounded(wg);
  Complex power(Real(1, wg));  // y^j / j!
  Complex sum(wg);
  for (long j = 0; j <= J; ++j) {
    const unsigned idx = n + static_cast<unsigned>(j) + 1;
    if (b[idx] != 0) {
      Rational c = b[idx] / Rational(idx);
      sum += power * Real(c, wg);
    }
    power *= yw;
    power /= j + 1;
  }
  if (n % 2 == 1) sum = -sum;
  return sum.rounded(w);
}

Complex dilog_series(const Complex& z, Precision w) {
  // sum z^k / k^2 for |z| < 1
  const double lz = abs(z).log2_abs();
  if (!(lz < 0.0)) throw ConvergenceError("dilog series needs |z| < 1");
  Complex sum(w);
  Complex power = z.rounded(w);
  const double stop = -static_cast<double>(w.bits) - 4.0;
  for (long k = 1;; ++k) {
    Complex t = power / (Real(k, w) * k);
    sum += t;
    // remaining tail <= |z|^{k+1} / (k+1)^2 / (1 - |z|)
    const double tail = (k + 1) * lz - 2.0 * std::log2(k + 1.0) - std::log2(1.0 - std::exp2(lz));
    if (tail < stop) break;
    power *= z;
  }
  return sum;
}

// Integer m with branched_log(y) - log(y) = 2 pi i m.
long branch_shift(const Complex& y, const BranchContext& ctx, Precision w) {
  Complex b = branched_log(y.rounded(w), ctx);
  Complex l = log(y.rounded(w));
  return round((b.imag() - l.imag()) / two_pi(w)).to_long();
}

}  // namespace

Complex li_nonpos(int n, const Complex& z) {
  if (n > 0) throw DomainError("li_nonpos needs n <= 0");
  const Precision p = z.precision();
  Precision w = p.guarded();
  const unsigned m = static_cast<unsigned>(-n);
  const std::vector<Integer> row = m == 0 ? std::vector<Integer>{} : eulerian_row(m);
  for (int attempt = 0;; ++attempt) {
    const Complex zw = z.rounded(w);
    Complex one_minus = Real(1, w) - zw;
    if (one_minus.is_zero() || abs(one_minus).log2_abs() < -static_cast<double>(p.bits) + 8.0) {
      throw DomainError("Li_n(z) has a pole at z = 1");
    }
    if (m == 0) return (zw / one_minus).rounded(p);
    // numerator sum_k <m,k> z^{m-k} by Horner, with the absolute sum
    // alongside to detect cancellation
    Complex acc(Real(row[0], w));
    const Real az = abs(zw);
    Real aacc(row[0], Precision(64));
    for (unsigned k = 1; k < m; ++k) {
      acc *= zw;
      acc += Real(row[k], w);
      aacc *= az.rounded(Precision(64));
      aacc += Real(row[k], Precision(64));
    }
    acc *= zw;
    aacc *= az.rounded(Precision(64));
    const double loss = acc.is_zero() ? static_cast<double>(w.bits) : aacc.log2_abs() - abs(acc).log2_abs();
    if (loss > 24.0 && attempt == 0) {
      w = w.plus(static_cast<unsigned>(loss) + 16);
      continue;
    }
    return (acc / pow(one_minus, static_cast<long>(m + 1))).rounded(p);
  }
}

Complex li_neg_exp(unsigned n, const Complex& y) {
  const Precision p = y.precision();
  const Precision w = p.guarded();
  const Complex y0 = nearest_period(y, w);
  require_off_pole(y0, p, "Li_{-n}(e^{-y})");
  if (period_sum_is_short(n, w)) {
    Complex s = parfrac_sum(n, y0, false);
    return (s * Real(factorial(n), w)).rounded(p);
  }
  if (abs(y0).to_double() <= 3.14159) {
    Complex head = Complex(Real(factorial(n), w)) * inv_pow(y0, n + 1);
    return (head + regular_by_bernoulli(n, y0, w)).rounded(p);
  }
  return li_nonpos(-static_cast<int>(n), exp(-y0)).rounded(p);
}

Complex li_neg_exp_regular(unsigned n, const Complex& y) {
  const Precision p = y.precision();
  const Precision w = p.guarded();
  const Complex y0 = nearest_period(y, w);
  if (y0 != y.rounded(w)) require_off_pole(y0, p, "regular part");
  if (period_sum_is_short(n, w)) return parfrac_sum(n, y.rounded(w), true).rounded(p) * Real(factorial(n), p);
  if (abs(y).to_double() <= 3.14159) return regular_by_bernoulli(n, y.rounded(w), w).rounded(p);
  const double guard = 1.6 * (n + 1) + 8.0;
  const Precision wg = w.plus(static_cast<unsigned>(guard));
  const Complex yg = y.rounded(wg);
  Complex full = li_neg_exp(n, yg);
  Complex head = Complex(Real(factorial(n), wg)) * inv_pow(yg, n + 1);
  return (full - head).rounded(p);
}

PolylogValue li12_strip_branch(int n, const Complex& y, const BranchContext& ctx) {
  if (n != 1 && n != 2) throw DomainError("li12_strip_branch needs n in {1, 2}");
  const Precision p = y.precision();
  const Precision w = p.guarded();
  const Complex ys = reduce_strip(y).y.rounded(w);
  if (ys.is_zero()) throw DomainError("Li_n(e^{-y}) is singular at y = 0");
  const Real re = ys.real();
  if (re.sign() <= 0 && abs(ys).to_double() >= kTwoPi) {
    throw DomainError("Re y <= 0 with |y| >= 2 pi is outside the supported region");
  }
  // log y on the cut beta R_{<=0}; also rejects y on that cut
  const bool left = re.sign() <= 0;
  long shift = 0;
  if (left) shift = branch_shift(ys, ctx, w);
  const Real tp = two_pi(w);

  if (n == 1) {
    // -log(1 - e^{-y}) on the principal branch, moved by the log monodromy
    Complex v = -log(-expm1(-ys));
    if (shift != 0) v.imag() -= tp * shift;
    return {v.rounded(p), ctx, 1};
  }

  const double a = re.to_double();
  Complex v(w);
  if (a >= 0.223) {
    v = dilog_series(exp(-ys), w);
  } else if (a <= -0.223) {
    // Li2(z) = -pi^2/6 - log(-z)^2 / 2 - Li2(1/z), log(-z) = -y + i pi s
    const Real pi = const_pi(w);
    Complex lm = -ys;
    if (ys.imag().sign() >= 0) lm.imag() += pi;
    else lm.imag() -= pi;
    v = -(pi * pi) / 6 - lm * lm / 2 - dilog_series(exp(ys), w);
    // the strip branch adds y times the log shift
    if (shift != 0) v += ys * Complex(Real(w), tp * shift);
  } else {
    // pi^2/6 + y log y - y + sum_k B_k y^{k+1} / (k (k+1)!)
    const Complex L = branched_log(ys, ctx);
    const Real pi = const_pi(w);
    v = Complex(pi * pi / 6) + ys * L - ys;
    const double r = abs(ys).to_double() / kTwoPi;
    const long K = static_cast<long>(std::ceil((w.bits + 8) / -std::log2(r))) + 2;
    const auto b = bernoulli_numbers(static_cast<unsigned>(K));
    Complex power = ys * ys / 2;  // y^{k+1} / (k+1)!
    for (long k = 1; k <= K; ++k) {
      if (b[k] != 0) v += power * Real(b[k] / Rational(k), w);
      power *= ys;
      power /= k + 2;
    }
  }
  return {v.rounded(p), ctx, 2};
}

Complex li_series_exp(unsigned k, const Complex& x, const BranchContext& ctx, long terms) {
  const Precision p = x.precision();
  const double r = abs(x).to_double() / kTwoPi;
  if (!(r < 1.0)) throw ConvergenceError("expansion at x = 0 needs |x| < 2 pi");
  const Precision w = p.plus(Precision::kGuardBits + static_cast<unsigned>(k * std::log2(1.0 / (1.0 - r))) + 16);
  const Complex xw = x.rounded(w);
  Complex sing(w);
  if (k == 0) {
    const Real pi = const_pi(w);
    sing = Complex(pi * pi / 6) + xw * branched_log(xw, ctx) - xw;
  } else if (k == 1) {
    sing = -branched_log(xw, ctx);
  } else {
    sing = Complex(Real(factorial(k - 2), w)) * inv_pow(xw, k - 1);
  }
  const unsigned n0 = std::max(1U, k == 0 ? 1U : k - 1);
  const unsigned n1 = n0 + static_cast<unsigned>(std::max(0L, terms)) - 1;
  if (terms <= 0) return sing.rounded(p);
  const auto b = bernoulli_numbers(n1);
  Complex sum(w);
  for (unsigned n = n0; n <= n1; ++n) {
    if (b[n] == 0) continue;
    const unsigned e = n + 1 - k;  // n - k + 1 >= 0
    Rational c = b[n] / (Rational(n) * Rational(factorial(e)));
    if (k % 2 == 1) c = -c;
    sum += pow(xw, static_cast<long>(e)) * Real(c, w);
  }
  return (sing + sum).rounded(p);
}

Complex parfrac_sum(unsigned n, const Complex& x, bool skip_zero) {
  if (n < 1) throw DomainError("parfrac_sum needs n >= 1");
  const Precision p = x.precision();
  const Precision w = p.guarded();
  const Complex xw = x.rounded(w);
  const Real tp = two_pi(w);
  Complex sum(w);
  if (!skip_zero) {
    require_off_pole(xw, p, "partial fractions");
    sum = inv_pow(xw, n + 1);
  }
  const double ax = abs(xw).to_double();
  double scale = skip_zero ? -std::numeric_limits<double>::infinity() : abs(sum).log2_abs();
  for (long k = 1;; ++k) {
    const Complex a = xw + Complex(Real(w), tp * k);
    const Complex b = xw - Complex(Real(w), tp * k);
    require_off_pole(a, p, "partial fractions");
    require_off_pole(b, p, "partial fractions");
    Complex t = inv_pow(a, n + 1) + inv_pow(b, n + 1);
    if (k == 1) scale = std::max(scale, std::max(abs(inv_pow(a, n + 1)).log2_abs(), abs(inv_pow(b, n + 1)).log2_abs()));
    sum += t;
    // tail over |j| > k bounded by 2 [d^{-(n+1)} + d^{-n} / (2 pi n)], d = 2 pi (k+1) - |x|
    const double d = kTwoPi * (k + 1) - ax;
    if (d > 1.0) {
      const double ld = std::log2(d);
      const double tail = 1.0 + std::log2(std::exp2(-(n + 1.0) * ld) + std::exp2(-n * ld) / (kTwoPi * n));
      double tl = tail;
      if (!std::isfinite(tl)) tl = 1.0 - n * ld;
      if (tl < scale - static_cast<double>(w.bits)) break;
    }
    if (k > 10000000) throw ConvergenceError("partial-fraction sum does not settle");
  }
  return sum.rounded(p);
}

Complex parfrac_partial(unsigned n, const Complex& x, long M) {
  const Precision p = x.precision();
  const Precision w = p.guarded();
  const Complex xw = x.rounded(w);
  require_off_pole(nearest_period(xw, w), p, "partial fractions");
  const Real tp = two_pi(w);
  if (n == 0) {
    // pairs 1/(x + 2 pi i k) + 1/(x - 2 pi i k) = 2x / (x^2 + (2 pi k)^2)
    Complex sum = Complex(Real(1, w)) / xw;
    const Complex x2 = xw * xw;
    for (long k = 1; k <= M; ++k) {
      Real c = tp * k;
      sum += (xw * 2) / (x2 + c * c);
    }
    return sum.rounded(p);
  }
  Complex sum = inv_pow(xw, n + 1);
  for (long k = 1; k <= M; ++k) {
    const Complex a = xw + Complex(Real(w), tp * k);
    const Complex b = xw - Complex(Real(w), tp * k);
    sum += inv_pow(a, n + 1) + inv_pow(b, n + 1);
  }
  return sum.rounded(p);
}

}  // namespace qpoch
