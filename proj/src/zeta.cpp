// SPDX-License-Identifier: Apache-2.0
#include "qpoch/zeta.hpp"

#include <cmath>

#include "qpoch/bernoulli.hpp"
#include "qpoch/constants.hpp"

namespace qpoch {

namespace {

// eta(s) = sum (-1)^{k} / (k+1)^s, Borwein's Algorithm 2:
// eta(s) ~ -1/d_n sum_{k<n} (-1)^k (d_k - d_n) / (k+1)^s with
// |error| <= 3 / (3 + sqrt 8)^n.
Real eta_borwein(unsigned s, Precision w) {
  const double rate = std::log2(3.0 + std::sqrt(8.0));
  const unsigned n = static_cast<unsigned>(std::ceil((w.bits + 2.0) / rate)) + 1;
  // d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!), built termwise.
  std::vector<Integer> d(n + 1);
  Integer term = 1;  // (n+i-1)! 4^i / ((n-i)! (2i)!) times n, at i = 0 it is n (n-1)!/n! = 1
  Integer acc = term;
  d[0] = acc;
  for (unsigned i = 1; i <= n; ++i) {
    // ratio of consecutive terms: (n+i-1)(n-i+1) 4 / ((2i)(2i-1))
    term *= Integer(n + i - 1) * (n - i + 1) * 4;
    term /= Integer(2 * i) * (2 * i - 1);
    acc += term;
    d[i] = acc;
  }
  Real sum(w);
  for (unsigned k = 0; k < n; ++k) {
    Real t(Integer(d[k] - d[n]), w);
    t /= pow(Real(k + 1, w), static_cast<long>(s));
    if (k % 2 == 0) sum += t;
    else sum -= t;
  }
  sum /= Real(d[n], w);
  return -sum;
}

}  // namespace

Real zeta_int(unsigned k, Precision prec) {
  if (k < 2) throw DomainError("zeta_int needs k >= 2");
  const Precision w = prec.guarded();
  if (k % 2 == 0) {
    // zeta(k) = (-1)^{k/2 - 1} B_k (2 pi)^k / (2 k!)
    Real z = abs(bernoulli_real(k, w)) * pow(ldexp(const_pi(w), 1), static_cast<long>(k));
    z /= Real(factorial(k), w) * 2;
    return z.rounded(prec);
  }
  Real eta = eta_borwein(k, w);
  // zeta = eta / (1 - 2^{1-k})
  Real denom = 1 - exp2i(1 - static_cast<long>(k), w);
  return (eta / denom).rounded(prec);
}

}  // namespace qpoch
