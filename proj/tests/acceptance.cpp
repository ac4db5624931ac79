// SPDX-License-Identifier: Apache-2.0
// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qpoch/bernoulli.hpp"
#include "qpoch/branch.hpp"
#include "qpoch/cli.hpp"
#include "qpoch/constants.hpp"
#include "qpoch/expansions.hpp"
#include "qpoch/identity.hpp"
#include "qpoch/lab.hpp"
#include "qpoch/loggamma.hpp"
#include "qpoch/polylog.hpp"

using namespace qpoch;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

std::string sci(const Real& v) { return v.to_string(3); }
std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

Real dec(const char* s, unsigned bits) { return Real::parse(s, Precision(bits)); }

// least-squares slope of log e against log b
double fitted_order(const std::vector<double>& b, const std::vector<double>& e) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    const double lx = std::log(b[i]), ly = std::log(e[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

Outcome identity_closure() {
  const Precision p(256);
  const Real slack = dec("1e-60", 256);
  const Complex betas[] = {Complex::parse("1/4", p), Complex::parse("1/16", p), expi(const_pi(p) / 6) / 8};
  Real worst(p);
  bool ok = true;
  for (const char* yt : {"0.3", "1", "2+1i"}) {
    for (const Complex& b : betas) {
      const Complex y = Complex::parse(yt, p);
      const auto o = oracle_log_qpoch(y, b, exp2i(-240, p));
      const auto r = identity_rhs(y, b, 4, 200);
      const Real err = abs(r.log_value - o.log_value);
      ok = ok && err <= r.tail_bound + slack;
      worst = max(worst, err);
    }
  }
  return {ok, "max |rhs - oracle| = " + sci(worst)};
}

Outcome modular_checks() {
  const Precision p(256);
  const Real lim = dec("1e-70", 256);
  const Complex betas[] = {Complex::parse("1", p), Complex::parse("1/2", p), expi(const_pi(p) / 6)};
  Real worst(p);
  for (const Complex& b : betas) {
    worst = max(worst, dedekind_check(b).residual);
    for (const char* xt : {"1/4", "1/3"}) worst = max(worst, theta_modular_check(Complex::parse(xt, p), b).residual);
  }
  const Complex self(ldexp(const_pi(p), 1));
  Real at_self = dedekind_check(self).residual;
  for (const char* xt : {"1/4", "1/3"}) at_self = max(at_self, theta_modular_check(Complex::parse(xt, p), self).residual);
  return {worst < lim && at_self < dec("1e-74", 256),
          "max residual " + sci(worst) + ", at beta = 2 pi " + sci(at_self)};
}

Outcome uniform_sweep() {
  const Real beta = dec("1/16", 256);
  const Regime r{RegimeKind::uniform, Rational(2)};
  const TruncEstimate e = estimate_optimal(r, dec("3", 256), beta);
  const Precision hp(1156);
  const auto rows = sweep(r, Complex(Real(3, hp)), Complex(beta.rounded(hp)), 760, hp);
  std::size_t m = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].abs_error < rows[m].abs_error) m = i;
  }
  const long order = rows[m].order;
  const Real ratio = rows[m].abs_error / e.r_star.rounded(hp);
  const bool ok = order >= 600 && order <= 680 && ratio <= 1000 && ratio >= Real::parse("1e-3", hp);
  return {ok, "argmin order " + std::to_string(order) + ", min error " + sci(rows[m].abs_error) + ", R* " +
                  sci(e.r_star) + ", N* " + e.n_star.to_string(6)};
}

Outcome coefficient_tables() {
  auto run = [](std::vector<const char*> args) {
    std::ostringstream out, err;
    args.insert(args.begin(), "qpoch");
    const int code = cli_main(static_cast<int>(args.size()), args.data(), out, err);
    return code == 0 ? out.str() : std::string("exit ") + std::to_string(code);
  };
  const std::string half =
      "beta^-1: -1/6*pi^2\n"
      "beta^-1/2: x - 1/2*x*log(beta) - x*log(x)\n"
      "beta^0: 1/4*log(beta) + 1/2*log(x) + 1/4*x^2\n"
      "beta^1/2: -1/12*x^-1 - 1/4*x - 1/72*x^3\n"
      "beta^1: 1/24 + 1/48*x^2\n";
  const std::string two =
      "beta^-1: -1/6*pi^2\n"
      "beta^0: 1/2*log(2*pi) + 3/2*log(beta) + log(x)\n"
      "beta^1: 1/24 + gamma*x - x*log(beta)\n"
      "beta^2: -1/4*x - 1/12*pi^2*x^2\n"
      "beta^3: -1/144*x + 1/4*x^2 + 1/3*zeta(3)*x^3\n";
  const bool a = run({"expand", "--c", "1/2", "--max-exp", "1"}) == half;
  const bool b = run({"expand", "--c", "2", "--max-exp", "3"}) == two;
  return {a && b, std::string("c=1/2 ") + (a ? "match" : "differs") + ", c=2 " + (b ? "match" : "differs")};
}

Outcome convergent_c1() {
  const Precision hp(1100);
  const Complex beta(Real::parse("1/16", hp));
  const Complex x(Real(3, hp));
  const Complex o = oracle_log_qpoch(x * beta, beta, exp2i(-1090, hp)).log_value;
  const Complex rem = exact_remainder_c1(Rational(3), beta);
  const Complex s200 = regime_eval(regime_coefficients(Rational(1), Rational(200)), x, beta).log_value;
  const Complex s240 = regime_eval(regime_coefficients(Rational(1), Rational(240)), x, beta).log_value;
  const Real settle = abs(s240 - s200);
  const Real closure = abs(o - s240 - rem);
  const Real conv = conv_series_check(3, dec("1/16", 256), 200).residual;
  const bool ok = settle < Real::parse("1e-300", hp) && closure < Real::parse("1e-280", hp) && conv < dec("1e-30", 256);
  return {ok, "|S240 - S200| " + sci(settle) + ", |oracle - limit - R| " + sci(closure) + ", |R| " + sci(abs(rem)) +
                  ", conv-series residual " + sci(conv)};
}

Outcome q_limits() {
  const Precision p(128);
  const std::vector<double> betas = {1.0 / 16, 1.0 / 64, 1.0 / 256};
  const Real tol = exp2i(-120, p);
  std::vector<double> e_exp, e_li2, e_gamma;
  const Complex z(Real(1, p));
  const Real half = Real::parse("1/2", p);
  for (double bd : betas) {
    const Real b(bd, p);
    const Complex q(exp(-b));
    const Real one_minus_q = -expm1(-b);
    e_exp.push_back(abs(qpoch_product(-(z * Complex(one_minus_q)), q, tol) - exp(z)).to_double());
    const auto v = oracle_log_qpoch(z, Complex(b), exp2i(-110, p));
    const Complex li2 = li12_strip_branch(2, z, BranchContext(Complex(b))).value;
    e_li2.push_back(abs(v.log_value * Complex(one_minus_q) + li2).to_double());
    const Complex g = qpoch_product(q, q, tol) * Complex(pow(one_minus_q, half)) /
                      qpoch_product(Complex(exp(-b * half)), q, tol);
    e_gamma.push_back(abs(g - Complex(sqrt(const_pi(p)))).to_double());
  }
  const double a = fitted_order(betas, e_exp), b = fitted_order(betas, e_li2), c = fitted_order(betas, e_gamma);
  return {a >= 0.9 && b >= 0.9 && c >= 0.9, "orders exp " + sci(a) + ", Li2 " + sci(b) + ", Gamma " + sci(c)};
}

Outcome appendix_a() {
  bool odd = true;
  for (unsigned k = 3; k <= 101; k += 2) odd = odd && bernoulli_number(k) == 0;

  // zeta(2k) by direct summation with an Euler-Maclaurin tail
  const Precision p(256);
  const Real tp = ldexp(const_pi(p), 1);
  const auto b = bernoulli_numbers(40);
  double zeta_worst = -1e9;
  for (unsigned k = 1; k <= 30; ++k) {
    const long s = 2 * k;
    const long N = 1000;
    Real sum(p);
    for (long n = N - 1; n >= 1; --n) sum += pow(Real(n, p), -s);
    const Real nn(N, p);
    Real tail = pow(nn, 1 - s) / Real(s - 1, p) + pow(nn, -s) / 2;
    Real rising(s, p);
    for (long j = 1; j <= 12; ++j) {
      tail += Real(b[2 * j] / Rational(factorial(2 * j)), p) * rising * pow(nn, -s - 2 * j + 1);
      rising *= s + 2 * j - 1;
      rising *= s + 2 * j;
    }
    const Real zeta = sum + tail;
    const Real lhs = abs(Real(bernoulli_number(s), p));
    const Real rhs = Real(factorial(s), p) * 2 * zeta / pow(tp, s);
    zeta_worst = std::max(zeta_worst, abs(lhs - rhs).log2_abs() - lhs.log2_abs());
  }
  const bool zeta_ok = zeta_worst < -190.0;

  // partial-fraction rates, fitted over M = 100..800
  const Precision pp(128);
  bool rates_ok = true;
  std::string rates;
  for (unsigned n = 1; n <= 4; ++n) {
    const Complex x = Complex::parse("0.5+2i", pp);
    const Complex target = li_neg_exp(n, x) / Real(factorial(n), pp);
    std::vector<double> ms, es;
    for (long M : {100L, 200L, 400L, 800L}) {
      ms.push_back(static_cast<double>(M));
      es.push_back(abs(parfrac_partial(n, x, M) - target).to_double());
    }
    const double rate = -fitted_order(ms, es);
    // even n: the odd parts of the tail cancel pairwise, one order faster
    const double want = n % 2 == 1 ? n : n + 1;
    rates_ok = rates_ok && std::abs(rate - want) <= 0.2;
    rates += (n > 1 ? ", " : "") + std::string("n=") + std::to_string(n) + ":" + sci(rate);
  }

  // Fourier form of B_n(x) on [0, 1] against the polynomial
  bool fourier_ok = true;
  for (unsigned n : {3U, 5U, 7U, 9U}) {
    for (const char* xt : {"0.25", "0.5", "0.9", "2.3", "3"}) {
      const Real x = Real::parse(xt, pp);
      const long K = 2000;
      const Real f = bernoulli_poly_fourier(n, x, K);
      const Real d = bernoulli_poly(n, Complex(x)).real();
      const double tail = 2.0 * std::tgamma(n + 1.0) / (std::pow(2 * M_PI, n) * (n - 1.0) * std::pow(K, n - 1.0));
      fourier_ok = fourier_ok && abs(f - d).to_double() <= tail;
    }
  }
  return {odd && zeta_ok && rates_ok && fourier_ok,
          std::string("odd B vanish ") + (odd ? "yes" : "no") + ", B-zeta rel err 2^" + sci(zeta_worst) +
              ", rates " + rates + ", Fourier " + (fourier_ok ? "within tail" : "outside tail")};
}

Outcome stirling_suite() {
  const Precision p(128);
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> th(-0.75 * M_PI, 0.75 * M_PI), lr(std::log(0.5), std::log(80.0));
  std::uniform_int_distribution<unsigned> nd(0, 10);
  int inside = 0;
  for (int i = 0; i < 200; ++i) {
    const double r = std::exp(lr(rng)), t = th(rng);
    const Complex x(r * std::cos(t), r * std::sin(t), p);
    const StirlingEval f = stirling_fN(x, nd(rng), p);
    if (abs(f.value) <= f.tail_bound) ++inside;
  }
  const Precision q(96);
  std::uniform_real_distribution<double> ta(-M_PI / 2, M_PI / 2), ra(2.0, 50.0);
  double worst = 0;
  for (int i = 0; i < 20; ++i) {
    const double r = ra(rng), t = ta(rng);
    const Complex x(r * std::cos(t), r * std::sin(t), q);
    worst = std::max(worst, abs(artin_f1(x, 10000) - stirling_fN(x, 1, q).value).to_double());
  }
  return {inside == 200 && worst < 1e-12,
          std::to_string(inside) + "/200 within bound_fN, max |artin_f1 - f_1| " + sci(worst)};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> all = {
      {1, "identity closure", 30, identity_closure},
      {2, "modular checks", 10, modular_checks},
      {3, "uniform sweep optimal truncation", 600, uniform_sweep},
      {4, "regime coefficient tables", 1, coefficient_tables},
      {5, "convergent c=1 case", 120, convergent_c1},
      {6, "q-analogue limits", 10, q_limits},
      {7, "appendix identities", 60, appendix_a},
      {8, "Stirling suite", 60, stirling_suite},
  };
  int failed = 0;
  for (const auto& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = o.ok && dt <= c.budget_s;
    if (!ok) ++failed;
    std::printf("%s %d %s: %s (%.2f s of %.0f s)\n", ok ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), dt,
                c.budget_s);
  }
  return failed == 0 ? 0 : 1;
}
