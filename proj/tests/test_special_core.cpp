// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"
#include "qpoch/bernoulli.hpp"
#include "qpoch/constants.hpp"
#include "qpoch/polylog.hpp"
#include "qpoch/zeta.hpp"
#include "support.hpp"

using namespace qpoch;
using namespace qpoch::testing;

namespace {

// B_0..B_n from sum_{j<=m} C(m+1, j) B_j = 0.
std::vector<Rational> bernoulli_by_recurrence(unsigned n) {
  std::vector<Rational> b(n + 1);
  b[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    Rational s = 0;
    for (unsigned j = 0; j < m; ++j) s += Rational(binomial(m + 1, j)) * b[j];
    b[m] = -s / Rational(m + 1);
  }
  return b;
}

// sum_{k>=1} k^{-s} by a direct sum to N plus an Euler-Maclaurin tail.
Real zeta_direct(unsigned s, Precision p) {
  const long N = 100;
  Real sum(p);
  for (long k = N - 1; k >= 1; --k) sum += pow(Real(k, p), -static_cast<long>(s));
  const Real n(N, p);
  Real tail = pow(n, 1 - static_cast<long>(s)) / Real(static_cast<long>(s) - 1, p) + pow(n, -static_cast<long>(s)) / 2;
  const long num[] = {1, -1, 1, -1, 5, -691, 7, -3617, 43867};
  const long den[] = {6, 30, 42, 30, 66, 2730, 6, 510, 798};
  Real rising(static_cast<long>(s), p);  // s (s+1) ... (s+2j-2)
  Real fact(2, p);                        // (2j)!
  for (int j = 1; j <= 9; ++j) {
    Real b = Real(num[j - 1], p) / Real(den[j - 1], p);
    tail += b / fact * rising * pow(n, -static_cast<long>(s) - 2 * j + 1);
    rising *= static_cast<long>(s) + 2 * j - 1;
    rising *= static_cast<long>(s) + 2 * j;
    fact *= (2 * j + 1) * (2 * j + 2);
  }
  return sum + tail;
}

}  // namespace

TEST_SUITE("special_core") {

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli_number(0) == 1);
  CHECK(bernoulli_number(1) == Rational(-1, 2));
  CHECK(bernoulli_number(7) == 0);
  CHECK(bernoulli_number(12) == Rational(-691, 2730));
  const auto oracle = bernoulli_by_recurrence(60);
  const auto b = bernoulli_numbers(60);
  for (unsigned k = 0; k <= 60; ++k) CHECK(b[k] == oracle[k]);
}

TEST_CASE("odd bernoulli numbers vanish") {
  for (unsigned j = 1; j <= 50; ++j) CHECK(bernoulli_number(2 * j + 1) == 0);
}

TEST_CASE("bernoulli cache reaches 1500 and stays consistent") {
  const Rational b1500 = bernoulli_number(1500);
  CHECK(b1500 != 0);
  CHECK(sgn(b1500) == -1);  // sign (-1)^{k-1} with k = 750
  CHECK(bernoulli_number(12) == Rational(-691, 2730));
  CHECK(bernoulli_numbers(1500)[1500] == b1500);
}

TEST_CASE("bernoulli against zeta at even arguments") {
  const Precision p(128);
  const Real tp = ldexp(const_pi(p), 1);
  for (unsigned k = 1; k <= 30; ++k) {
    const Real lhs = abs(bernoulli_real(2 * k, p));
    const Real rhs = Real(factorial(2 * k), p) * 2 * zeta_direct(2 * k, p) / pow(tp, static_cast<long>(2 * k));
    CHECK(log2_err(lhs, rhs) - lhs.log2_abs() < -110.0);
  }
}

TEST_CASE("bernoulli large-index ratio tends to one") {
  const Precision p(512);
  const Real tp = ldexp(const_pi(p), 1);
  const Real ratio = abs(bernoulli_real(200, p)) * pow(tp, 200L) / (Real(factorial(200), p) * 2);
  CHECK((ratio - 1).log2_abs() < -199.0);
}

TEST_CASE("bernoulli polynomials") {
  const Precision p(128);
  CHECK(bernoulli_poly(0, Complex(1.7, -2, p)) == Complex(Real(1, p)));
  CHECK(log2_err(bernoulli_poly(2, Complex(p)), Complex(Real::parse("1/6", p))) < -125.0);
  const Real three(3, p);
  const Complex direct = bernoulli_poly(5, Complex(three));
  const Real fourier = bernoulli_poly_fourier(5, three, 10000);
  CHECK(abs(direct.real() - fourier).to_double() < 1e-6);
  // integer point: B_5(3) = 5 (1 + 2^4)
  CHECK(log2_err(direct, Complex(Real(85, p))) < -110.0);
}

TEST_CASE("bernoulli Fourier form") {
  const Precision p(128);
  CHECK(std::abs(bernoulli_poly_fourier(3, Real(p), 1000).to_double()) < 1e-3);
  const Real half = Real::parse("1/2", p);
  const Real f = bernoulli_poly_fourier(5, half, 1000);
  const Real d = bernoulli_poly(5, Complex(half)).real();
  // omitted terms: 2 5! sum_{k>K} (2 pi k)^{-5} < 2 5! / (4 (2 pi)^5 K^4)
  const double tail = 2.0 * 120.0 / (4.0 * std::pow(2 * M_PI, 5) * 1e12);
  CHECK(std::abs((f - d).to_double()) <= tail);
  CHECK_THROWS_AS(bernoulli_poly_fourier(4, half, 10), DomainError);
  CHECK_THROWS_AS(bernoulli_poly_fourier(1, half, 10), DomainError);
}

TEST_CASE("eulerian numbers") {
  CHECK(eulerian(1, 0) == 1);
  CHECK(eulerian(0, 0) == 1);
  CHECK(eulerian(3, 3) == 0);
  CHECK(eulerian(3, -1) == 0);
  // permutations of {1,2,3} with exactly one descent
  std::vector<int> perm{1, 2, 3};
  int one_descent = 0;
  do {
    int d = 0;
    for (int i = 0; i + 1 < 3; ++i) d += perm[i] > perm[i + 1];
    one_descent += d == 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(eulerian(3, 1) == one_descent);
  const auto row = eulerian_row(4);
  CHECK(std::accumulate(row.begin(), row.end(), Integer(0)) == 24);
}

TEST_CASE("polylogarithms of non-positive order") {
  const Precision p(128);
  CHECK(log2_err(li_nonpos(0, Complex(Real::parse("1/2", p))), Complex(Real(1, p))) < -125.0);
  CHECK(log2_err(li_nonpos(-1, Complex(Real::parse("1/3", p))), Complex(Real::parse("3/4", p))) < -124.0);
  Real brute(p);
  const Real half = Real::parse("1/2", p);
  Real power = half;
  for (long k = 1; k <= 400; ++k) {
    brute += power * (k * k);
    power *= half;
  }
  CHECK(log2_err(li_nonpos(-2, Complex(half)), Complex(brute)) < -100.0);
  CHECK_THROWS_AS(li_nonpos(-3, Complex(Real(1, p))), DomainError);
}

TEST_CASE("Li_{-n}(e^{-y}) routes agree") {
  const Precision p(192);
  for (unsigned n : {0U, 1U, 2U, 5U, 9U}) {
    for (const char* y : {"0.3", "2.5+1i", "4-0.5i", "0.001+0.002i"}) {
      const Complex yy = Complex::parse(y, p);
      const Complex closed = li_nonpos(-static_cast<int>(n), exp(-yy).rounded(Precision(600))).rounded(p);
      const Complex v = li_neg_exp(n, yy);
      CHECK(abs(v - closed).log2_abs() - abs(closed).log2_abs() < -150.0);
    }
  }
}

TEST_CASE("Li_{-n}(e^{-y}) regular part at small y") {
  const Precision p(256);
  const Complex y = Complex::parse("3/256", p);
  for (unsigned n : {0U, 2U, 10U, 40U, 120U}) {
    const Precision hi(3000);
    const Complex yh = y.rounded(hi);
    const Complex full = li_nonpos(-static_cast<int>(n), exp(-yh));
    const Complex head = Complex(Real(factorial(n), hi)) / pow(yh, static_cast<long>(n + 1));
    const Complex oracle = (full - head).rounded(p);
    const Complex v = li_neg_exp_regular(n, y);
    CHECK(abs(v - oracle).log2_abs() - abs(oracle).log2_abs() < -200.0);
  }
}

TEST_CASE("strip-branch Li_1 and Li_2") {
  const Precision p(128);
  const BranchContext ctx(Complex(Real(1, p)));
  CHECK(abs(li12_strip_branch(2, Complex(Real(50, p)), ctx).value).to_double() < 1e-21);
  const Complex ylog2(const_log2(p));
  Real brute(p);
  const Real half = Real::parse("1/2", p);
  Real power = half;
  for (long k = 1; k <= 200; ++k) {
    brute += power / (Real(k, p) * k);
    power *= half;
  }
  const Complex li2 = li12_strip_branch(2, ylog2, ctx).value;
  CHECK(log2_err(li2, Complex(brute)) < -120.0);
  const Real pi = const_pi(p);
  const Real lg = const_log2(p);
  CHECK(log2_err(li2, Complex(pi * pi / 12 - lg * lg / 2)) < -120.0);
  CHECK(log2_err(li12_strip_branch(1, ylog2, ctx).value, ylog2) < -120.0);
  CHECK_THROWS_AS(li12_strip_branch(3, ylog2, ctx), DomainError);
  CHECK_THROWS_AS(li12_strip_branch(2, Complex(Real(-1, p)), ctx), DomainError);
  CHECK_THROWS_AS(li12_strip_branch(2, Complex(Real(-7, p)), BranchContext(Complex(1, 0.5, p))), DomainError);
}

TEST_CASE("strip branch matches the direct series for Re y > 0") {
  const Precision p(160);
  const BranchContext ctx(Complex(1, 0.7, p));
  for (const char* ys : {"0.05+0.3i", "0.1-2.9i", "0.2+1i", "0.5-3.1i", "1.5+0.1i"}) {
    const Complex y = Complex::parse(ys, p);
    const Complex z = exp(-y);
    Complex s1(p), s2(p);
    Complex power = z;
    for (long k = 1; k <= 6000; ++k) {
      s1 += power / Real(k, p);
      s2 += power / (Real(k, p) * k);
      power *= z;
    }
    CHECK(log2_err(li12_strip_branch(2, y, ctx).value, s2) < -160.0 + 16.0);
    CHECK(log2_err(li12_strip_branch(1, y, ctx).value, s1) < -160.0 + 16.0);
  }
}

TEST_CASE("strip branch is analytic across the negative real axis") {
  const Precision p(128);
  const BranchContext ctx(Complex(1, 1, p));  // cut along the ray arg = -3 pi / 4
  for (int n : {1, 2}) {
    const Complex a = li12_strip_branch(n, Complex(-1.5, 1e-9, p), ctx).value;
    const Complex b = li12_strip_branch(n, Complex(-1.5, -1e-9, p), ctx).value;
    CHECK(abs(a - b).to_double() < 1e-7);
    // both sides of the three evaluation routes join up
    const Complex c = li12_strip_branch(n, Complex(-0.2230001, 0.5, p), ctx).value;
    const Complex d = li12_strip_branch(n, Complex(-0.2229999, 0.5, p), ctx).value;
    CHECK(abs(c - d).to_double() < 1e-6);
    const Complex e = li12_strip_branch(n, Complex(0.2229999, 2.5, p), ctx).value;
    const Complex f = li12_strip_branch(n, Complex(0.2230001, 2.5, p), ctx).value;
    CHECK(abs(e - f).to_double() < 1e-6);
  }
}

TEST_CASE("derivative relation for Li_n(e^{-x})") {
  const Precision p(192);
  const Precision g(256);
  const BranchContext ctx(Complex(Real(1, g)));
  const Real h = exp2i(-64, g);
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> re(0.1, 3.0), im(-3.0, 3.0);
  for (int i = 0; i < 10; ++i) {
    const Complex x(re(rng), im(rng), g);
    for (int n : {1, 2}) {
      const Complex up = li12_strip_branch(n, x + Complex(h), ctx).value;
      const Complex dn = li12_strip_branch(n, x - Complex(h), ctx).value;
      const Complex fd = (up - dn) / ldexp(h, 1);
      const Complex exact = n == 2 ? -li12_strip_branch(1, x, ctx).value : -li_neg_exp(0, x);
      const double rel = (abs(fd - exact) / abs(exact)).to_double();
      CHECK(rel < 1e3 * std::ldexp(1.0, -128));
    }
  }
}

TEST_CASE("expansion at zero") {
  const Precision p(128);
  const BranchContext ctx(Complex(Real(1, p)));
  const Real e = exp(Real(1, p));
  CHECK(log2_err(li_series_exp(2, Complex(Real(1, p)), ctx, 200), Complex(Real(1, p) / (e - 1))) < -120.0);
  const Complex x01(Real::parse("0.1", p));
  CHECK(log2_err(li_series_exp(0, x01, ctx, 40), li12_strip_branch(2, x01, ctx).value) < -128.0 + 16.0);
  const Complex x05(Real::parse("0.5", p));
  CHECK(log2_err(li_series_exp(3, x05, ctx, 200), li_nonpos(-1, exp(-x05))) < -128.0 + 16.0);
  CHECK_THROWS_AS(li_series_exp(2, Complex(Real(7, p)), ctx, 10), ConvergenceError);
}

TEST_CASE("zeta at integers") {
  const Precision p(128);
  const Real pi = const_pi(p);
  CHECK(log2_err(zeta_int(2, p), pi * pi / 6) < -125.0);
  CHECK(log2_err(zeta_int(4, p), pow(pi, 4L) / 90) < -125.0);
  CHECK(log2_err(zeta_int(3, p), zeta_direct(3, p)) < -110.0);
  CHECK(zeta_int(3, bits(64)).to_string(20) == "1.2020569031595942854");
  for (unsigned k : {5U, 7U, 11U, 25U}) CHECK(log2_err(zeta_int(k, p), zeta_direct(k, p)) < -110.0);
  CHECK_THROWS_AS(zeta_int(1, p), DomainError);
}

TEST_CASE("partial fractions") {
  const Precision p(128);
  const Complex one(Real(1, p));
  // Li_{-1}(e^{-1}) - partial sum ~ 2 sum_{k>M} 1/(2 pi k)^2 = 1/(2 pi^2 M)
  const Complex target = li_nonpos(-1, exp(-one));
  const double d1 = abs(parfrac_partial(1, one, 10000) - target).to_double();
  CHECK(d1 < 1.0 / (2 * M_PI * M_PI * 1e4) * 1.001);
  CHECK(d1 > 1.0 / (2 * M_PI * M_PI * 1e4) * 0.99);
  const Complex cothv = coth(Complex(Real::parse("1/2", p))) / 2;
  CHECK(abs(parfrac_partial(0, one, 10000) - cothv).to_double() < 1e-3);
  const Complex s = parfrac_partial(2, Complex(0, 1, p), 50);
  CHECK(std::abs(s.real().to_double()) < 1e-30);
  CHECK_THROWS_AS(parfrac_partial(1, Complex(Real(p), ldexp(const_pi(p), 1)), 10), DomainError);
}

TEST_CASE("partial-fraction tails shrink at least like M^-n") {
  const Precision p(128);
  for (unsigned n : {1U, 2U, 3U}) {
    for (const char* xs : {"1", "0.5+2i"}) {
      const Complex x = Complex::parse(xs, p);
      Real fac(factorial(n), p);
      const Complex target = li_neg_exp(n, x) / fac;
      double c_max = 0.0, c_last = 0.0;
      for (long M : {100L, 200L, 400L, 800L}) {
        const double err = abs(parfrac_partial(n, x, M) - target).to_double();
        c_last = err * std::pow(static_cast<double>(M), n);
        c_max = std::max(c_max, c_last);
      }
      CHECK(std::isfinite(c_max));
      CHECK(c_last <= c_max);
      CHECK(c_max < 1.0);
    }
  }
}

}
