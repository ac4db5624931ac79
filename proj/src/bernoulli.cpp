// SPDX-License-Identifier: Apache-2.0
#include "qpoch/bernoulli.hpp"

#include <algorithm>
#include <mutex>

#include "qpoch/constants.hpp"

namespace qpoch {

namespace {

// Even-index Bernoulli numbers B_0, B_2, B_4, ... computed from tangent
// numbers T_1..T_m in integer arithmetic (Brent and Harvey).
class BernoulliTable {
 public:
  std::vector<Rational> take(unsigned kmax) {
    std::lock_guard lock(mu_);
    ensure(kmax / 2);
    std::vector<Rational> out(kmax + 1);
    for (unsigned k = 0; k <= kmax; ++k) out[k] = lookup(k);
    return out;
  }

  Rational one(unsigned k) {
    std::lock_guard lock(mu_);
    ensure(k / 2);
    return lookup(k);
  }

 private:
  Rational lookup(unsigned k) const {
    if (k == 1) return Rational(-1, 2);
    if (k % 2 == 1) return Rational(0);
    return even_[k / 2];
  }

  void ensure(unsigned m) {
    if (m < even_.size()) return;
    unsigned target = std::max<unsigned>(m, 2 * static_cast<unsigned>(even_.size()));
    target = std::max(target, 32U);
    std::vector<Integer> t(target + 1);
    t[1] = 1;
    for (unsigned k = 2; k <= target; ++k) t[k] = (k - 1) * t[k - 1];
    for (unsigned k = 2; k <= target; ++k) {
      for (unsigned j = k; j <= target; ++j) t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j];
    }
    std::vector<Rational> even(target + 1);
    even[0] = 1;
    for (unsigned n = 1; n <= target; ++n) {
      Integer four_n = Integer(1) << (2 * n);
      Rational b(Integer(2 * n) * t[n], four_n * (four_n - 1));
      b.canonicalize();
      if (n % 2 == 0) b = -b;
      even[n] = b;
    }
    even_ = std::move(even);
  }

  std::mutex mu_;
  std::vector<Rational> even_;
};

BernoulliTable& table() {
  static BernoulliTable t;
  return t;
}

}  // namespace

Rational bernoulli_number(unsigned k) { return table().one(k); }

std::vector<Rational> bernoulli_numbers(unsigned kmax) { return table().take(kmax); }

Real bernoulli_real(unsigned k, Precision p) { return Real(bernoulli_number(k), p); }

std::vector<Rational> bernoulli_poly_coeffs(unsigned n) {
  const auto b = bernoulli_numbers(n);
  std::vector<Rational> c(n + 1);
  for (unsigned k = 0; k <= n; ++k) c[n - k] = Rational(binomial(n, k)) * b[k];
  return c;
}

Complex bernoulli_poly(unsigned n, const Complex& x) {
  const auto c = bernoulli_poly_coeffs(n);
  // The terms C(n,k) B_k x^{n-k} sum in absolute value to about
  // e^{2 pi |x|} times the result, so that many bits are lost.
  const Precision p = x.precision();
  const double loss = 2.0 * 3.141592653589793 * abs(x).to_double() / 0.6931471805599453;
  const Precision w = p.plus(Precision::kGuardBits + static_cast<unsigned>(loss) + 16);
  Complex xw = x.rounded(w);
  Complex acc(Real(c[n], w));
  for (unsigned j = n; j-- > 0;) {
    acc *= xw;
    acc += Real(c[j], w);
  }
  return acc.rounded(p);
}

Real bernoulli_poly_fourier(unsigned n, const Real& x, long K) {
  if (n < 3 || n % 2 == 0) throw DomainError("Fourier form needs odd n >= 3");
  if (x.sign() < 0) throw DomainError("Fourier form needs x >= 0");
  if (K < 1) throw DomainError("Fourier form needs K >= 1");
  const Precision p = x.precision();
  Real sum(p);
  const long fl = floor(x).to_long();
  for (long k = 1; k <= fl; ++k) sum += pow(x - k, static_cast<long>(n - 1));
  sum *= static_cast<long>(n);
  const Real two_pi = ldexp(const_pi(p), 1);
  Real series(p);
  for (long k = 1; k <= K; ++k) {
    Real a = two_pi * k;
    series += sin(a * x) / pow(a, static_cast<long>(n));
  }
  Real coef(factorial(n), p);
  coef *= 2;
  if (((n + 1) / 2) % 2 == 1) coef = -coef;
  return sum + coef * series;
}

Integer eulerian(unsigned n, long k) {
  if (n == 0) return k == 0 ? Integer(1) : Integer(0);
  if (k < 0 || k >= static_cast<long>(n)) return Integer(0);
  return eulerian_row(n)[static_cast<std::size_t>(k)];
}

std::vector<Integer> eulerian_row(unsigned n) {
  std::vector<Integer> row{Integer(1)};
  for (unsigned m = 1; m <= n; ++m) {
    std::vector<Integer> next(m);
    for (unsigned k = 0; k < m; ++k) {
      Integer v = 0;
      if (k < row.size()) v += (k + 1) * row[k];
      if (k >= 1 && k - 1 < row.size()) v += (m - k) * row[k - 1];
      next[k] = v;
    }
    row = std::move(next);
  }
  return row;
}

}  // namespace qpoch
