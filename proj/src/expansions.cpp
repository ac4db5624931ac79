// SPDX-License-Identifier: Apache-2.0
#include "qpoch/expansions.hpp"

#include <cmath>
#include <map>
#include <optional>
#include <sstream>

#include "json.hpp"
#include "qpoch/bernoulli.hpp"
#include "qpoch/branch.hpp"
#include "qpoch/constants.hpp"
#include "qpoch/loggamma.hpp"
#include "qpoch/polylog.hpp"
#include "qpoch/zeta.hpp"

namespace qpoch {

namespace {

std::strong_ordering cmp(const Rational& a, const Rational& b) {
  const int c = ::cmp(a, b);
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

bool lex_less(const std::vector<SymbolAtom>& a, const std::vector<SymbolAtom>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const SymbolAtom& l, const SymbolAtom& r) { return l < r; });
}

// output order: beta exponent, then power of x, then the other atoms
bool term_less(const SymbolicTerm& a, const SymbolicTerm& b) {
  const int e = ::cmp(a.beta_exp(), b.beta_exp());
  if (e != 0) return e < 0;
  if (a.x_power() != b.x_power()) return a.x_power() < b.x_power();
  return lex_less(a.signature(), b.signature());
}

struct TermKey {
  Rational e;
  std::vector<SymbolAtom> sig;
  friend bool operator<(const TermKey& a, const TermKey& b) {
    const int c = ::cmp(a.e, b.e);
    if (c != 0) return c < 0;
    return lex_less(a.sig, b.sig);
  }
};

class TermCollector {
 public:
  explicit TermCollector(Rational cutoff) : cutoff_(std::move(cutoff)) {}

  void add(const Rational& coeff, std::vector<SymbolAtom> atoms) {
    if (coeff == 0) return;
    SymbolicTerm t = make_term(coeff, std::move(atoms));
    if (t.beta_exp() > cutoff_) return;
    TermKey key{t.beta_exp(), t.signature()};
    auto [it, fresh] = map_.try_emplace(std::move(key), t);
    if (!fresh) it->second.coeff += t.coeff;
  }

  std::vector<SymbolicTerm> take() {
    std::vector<SymbolicTerm> out;
    for (auto& [key, t] : map_) {
      if (t.coeff != 0) out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end(), term_less);
    return out;
  }

 private:
  Rational cutoff_;
  std::map<TermKey, SymbolicTerm> map_;
};

using A = AtomKind;

// -zeta(k)(-x)^k/k beta^{(c-1)k}; even zeta values become rational multiples of pi^k
void add_zeta_term(TermCollector& col, unsigned k, const Rational& e) {
  Rational sign = (k % 2 == 0) ? Rational(-1) : Rational(1);
  Rational coeff = sign / Rational(k);
  if (k % 2 == 0) {
    const unsigned m = k / 2;
    // zeta(2m) = (-1)^{m+1} B_{2m} 2^{2m} pi^{2m} / (2 (2m)!)
    Rational z = bernoulli_number(k) * Rational(Integer(1) << (k - 1)) / Rational(factorial(k));
    if (m % 2 == 0) z = -z;
    col.add(coeff * z, {SymbolAtom::beta(e), SymbolAtom::x(k), SymbolAtom::pi2(m)});
  } else {
    col.add(coeff, {SymbolAtom::beta(e), SymbolAtom::x(k), SymbolAtom::zeta(k)});
  }
}

// head terms of the c > 0 series, exponents -1, c-1 and 0
void add_heads(TermCollector& col, const Rational& c) {
  const Rational half(1, 2);
  col.add(Rational(-1, 6), {SymbolAtom::beta(-1), SymbolAtom::pi2(1)});
  const Rational ec = c - 1;
  if (c < 1) {
    col.add(1, {SymbolAtom::beta(ec), SymbolAtom::x(1)});
    col.add(-1, {SymbolAtom::beta(ec), SymbolAtom::x(1), SymbolAtom::plain(A::log_x)});
    col.add(-c, {SymbolAtom::beta(ec), SymbolAtom::x(1), SymbolAtom::plain(A::log_beta)});
    col.add(c / 2, {SymbolAtom::beta(0), SymbolAtom::plain(A::log_beta)});
    col.add(half, {SymbolAtom::beta(0), SymbolAtom::plain(A::log_x)});
  } else if (c == 1) {
    col.add(half, {SymbolAtom::beta(0), SymbolAtom::plain(A::log_beta)});
    col.add(-1, {SymbolAtom::beta(0), SymbolAtom::x(1), SymbolAtom::plain(A::log_beta)});
    col.add(-1, {SymbolAtom::beta(0), SymbolAtom::plain(A::log_gamma_x)});
    col.add(half, {SymbolAtom::beta(0), SymbolAtom::plain(A::log_2pi)});
  } else {
    col.add(c - half, {SymbolAtom::beta(0), SymbolAtom::plain(A::log_beta)});
    col.add(1, {SymbolAtom::beta(0), SymbolAtom::plain(A::log_x)});
    col.add(half, {SymbolAtom::beta(0), SymbolAtom::plain(A::log_2pi)});
    col.add(1, {SymbolAtom::beta(ec), SymbolAtom::x(1), SymbolAtom::plain(A::euler_gamma)});
    col.add(-1, {SymbolAtom::beta(ec), SymbolAtom::x(1), SymbolAtom::plain(A::log_beta)});
  }
}

// largest k with k - 1 <= cutoff
long k_limit(const Rational& cutoff) {
  Rational t = cutoff + 1;
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  return f.get_si();
}

// largest j with k - 1 + c j <= cutoff, or -1
long j_limit(long k, const Rational& c, const Rational& cutoff) {
  Rational t = (cutoff - (k - 1)) / c;
  if (t < 0) return -1;
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  return f.get_si();
}

// log x real on x > 0 and analytic off e^{dir} R_{<=0}
Complex log_off_ray_real(const Complex& x, const Complex& dir) {
  const Precision w = max(x.precision(), dir.precision());
  const Complex one(Real(1, w));
  const Real tp = ldexp(const_pi(w), 1);
  const long m = round(log_off_ray(one, dir).imag() / tp).to_long();
  Complex v = log_off_ray(x, dir);
  if (m != 0) v.imag() -= tp * m;
  return v;
}

class AtomValues {
 public:
  AtomValues(const Complex& x, const Complex& beta, const Rational& c, Precision w)
      : x_(x.rounded(w)), beta_(beta.rounded(w)), c_(c), w_(w), log_beta_(log(beta_)) {}

  Complex term(const SymbolicTerm& t) {
    Complex v(Real(t.coeff, w_), Real(w_));
    for (const auto& a : t.atoms) v *= atom(a);
    return v;
  }

 private:
  Complex atom(const SymbolAtom& a) {
    switch (a.kind) {
      case A::beta_exp: return a.q == 0 ? Complex(Real(1, w_)) : exp(log_beta_ * Real(a.q, w_));
      case A::x_pow: return pow(x_, a.n);
      case A::pi_squared: return Complex(pow(const_pi(w_), 2 * a.n));
      case A::zeta_odd: return Complex(zeta_int(static_cast<unsigned>(a.n), w_));
      case A::euler_gamma: return Complex(const_euler_gamma(w_));
      case A::log_2pi: return Complex(const_log_2pi(w_));
      case A::log_beta: return log_beta_;
      case A::log_x:
        if (!log_x_) log_x_ = log_off_ray_real(x_, log_beta_ * Real(1 - c_, w_));
        return *log_x_;
      case A::log_gamma_x:
        if (!log_gamma_x_) {
          if (x_.imag().is_zero() && x_.real().sign() <= 0) throw DomainError("log Gamma on its cut");
          log_gamma_x_ = log_gamma(x_, w_);
        }
        return *log_gamma_x_;
    }
    throw Error("unknown atom");
  }

  Complex x_, beta_;
  Rational c_;
  Precision w_;
  Complex log_beta_;
  std::optional<Complex> log_x_, log_gamma_x_;
};

void require_beta(const Complex& beta) {
  if (beta.is_zero() || beta.real().sign() <= 0) throw DomainError("beta must satisfy |arg beta| < pi/2");
}

// c = 0: (-1)^{k-1} B_k Li_{2-k}(e^{-x}) beta^{k-1} / k! for lo < k - 1 <= hi
void groups_c0(std::map<Rational, Complex>& out, const Complex& x, const Complex& beta, long lo, long hi,
               Precision w) {
  const BranchContext ctx(beta);
  const Complex xs = require_region(x, beta);
  const long kmax = hi + 1;
  const auto b = bernoulli_numbers(static_cast<unsigned>(std::max(kmax, 1L)));
  Complex bp = Complex(Real(1, w)) / beta;  // beta^{k-1}
  Integer kf = 1;
  for (long k = 0; k <= kmax; ++k) {
    if (k > 0) {
      bp *= beta;
      kf *= k;
    }
    if (k - 1 <= lo || b[k] == 0) continue;
    Complex li = k == 0 ? li12_strip_branch(2, xs, ctx).value
                        : (k == 1 ? li12_strip_branch(1, xs, ctx).value : li_neg_exp(static_cast<unsigned>(k - 2), xs));
    Rational coeff = b[k] / Rational(kf);
    if (k % 2 == 0) coeff = -coeff;
    out[Rational(k - 1)] += li * bp * Real(coeff, w);
  }
}

void groups_positive(std::map<Rational, Complex>& out, const Rational& c, const Complex& x, const Complex& beta,
                     const std::optional<Rational>& lo, const Rational& hi, Precision w) {
  auto keep = [&](const Rational& e) { return e <= hi && (!lo || e > *lo); };
  AtomValues values(x, beta, c, w);
  {
    TermCollector heads(hi);
    add_heads(heads, c);
    for (const auto& t : heads.take()) {
      if (keep(t.beta_exp())) out[t.beta_exp()] += values.term(t);
    }
  }
  const Complex bw = beta.rounded(w), xw = x.rounded(w);
  const Complex lb = log(bw);
  if (c < 1) {
    // -B_{2k} x^{1-2k} beta^{(1-c)(2k-1)} / (2k (2k-1))
    const Complex xinv2 = Complex(Real(1, w)) / (xw * xw);
    Complex xp = Complex(Real(1, w)) / xw;
    for (long k = 1;; ++k) {
      const Rational e = (1 - c) * (2 * k - 1);
      if (e > hi) break;
      if (keep(e)) {
        const Rational coeff = -bernoulli_number(static_cast<unsigned>(2 * k)) / Rational((2 * k) * (2 * k - 1));
        out[e] += xp * exp(lb * Real(e, w)) * Real(coeff, w);
      }
      xp *= xinv2;
    }
  } else if (c > 1) {
    // -zeta(k) (-x)^k beta^{(c-1)k} / k
    Complex mx = -xw;
    Complex xp = mx;
    for (unsigned k = 2;; ++k) {
      xp *= mx;
      const Rational e = (c - 1) * k;
      if (e > hi) break;
      if (keep(e)) out[e] -= xp * exp(lb * Real(e, w)) * zeta_int(k, w) / Real(k, w);
    }
  }
  // -B_k B_n x^j beta^{k-1+cj} / (k! n j!),  n = k + j - 1 >= 1
  const long kmax = k_limit(hi);
  if (kmax < 0) return;
  const long jmax = j_limit(0, c, hi);
  const auto b = bernoulli_numbers(static_cast<unsigned>(kmax + std::max(jmax, 0L) + 1));
  std::vector<Complex> xj;  // x^j / j!
  std::vector<Complex> bcj;  // beta^{cj}
  xj.emplace_back(Real(1, w));
  bcj.emplace_back(Real(1, w));
  for (long j = 1; j <= jmax; ++j) {
    xj.push_back(xj.back() * xw / Real(j, w));
    bcj.push_back(exp(lb * Real(c * j, w)));
  }
  Complex bk = Complex(Real(1, w)) / bw;  // beta^{k-1}
  Integer kf = 1;
  for (long k = 0; k <= kmax; ++k) {
    if (k > 0) {
      bk *= bw;
      kf *= k;
    }
    if (b[k] == 0) continue;
    const Real bkr(b[k] / Rational(kf), w);
    const long jm = j_limit(k, c, hi);
    for (long j = 0; j <= jm; ++j) {
      const long n = k + j - 1;
      if (n < 1 || b[n] == 0) continue;
      const Rational e = Rational(k - 1) + c * j;
      if (!keep(e)) continue;
      const Real coeff = bkr * Real(b[n] / Rational(n), w);
      out[e] -= xj[j] * bcj[j] * bk * coeff;
    }
  }
}

std::map<Rational, Complex> groups_between(const Rational& c, const Complex& x, const Complex& beta,
                                           const std::optional<Rational>& lo, const Rational& hi, Precision w) {
  std::map<Rational, Complex> out;
  if (c == 0) {
    long lo_k = -3;
    if (lo) {
      mpz_class f;
      mpz_fdiv_q(f.get_mpz_t(), lo->get_num_mpz_t(), lo->get_den_mpz_t());
      lo_k = f.get_si();
    }
    mpz_class h;
    mpz_fdiv_q(h.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
    groups_c0(out, x, beta, lo_k, h.get_si(), w);
  } else {
    groups_positive(out, c, x, beta, lo, hi, w);
  }
  return out;
}

// size of the first omitted exponent group with a nonzero value
Real first_omitted(const Rational& c, const Complex& x, const Complex& beta, const Rational& cutoff, Precision w) {
  Rational lo = cutoff;
  for (int round = 0; round < 8; ++round) {
    const Rational hi = lo + 1;
    const auto g = groups_between(c, x, beta, lo, hi, w);
    for (const auto& [e, v] : g) {
      if (!v.is_zero()) return abs(v);
    }
    lo = hi;
  }
  return Real(w);
}

void put_coeff(std::ostringstream& os, const Rational& q, bool first, bool bare) {
  const bool neg = q < 0;
  const Rational a = neg ? Rational(-q) : q;
  if (first) {
    if (neg) os << '-';
  } else {
    os << (neg ? " - " : " + ");
  }
  if (!bare || a != 1) os << to_string(a);
}

std::string atom_text(const SymbolAtom& a) {
  switch (a.kind) {
    case A::beta_exp: return "beta^" + to_string(a.q);
    case A::x_pow: return a.n == 1 ? "x" : "x^" + std::to_string(a.n);
    case A::pi_squared: return "pi^" + std::to_string(2 * a.n);
    case A::zeta_odd: return "zeta(" + std::to_string(a.n) + ")";
    case A::euler_gamma: return "gamma";
    case A::log_2pi: return "log(2*pi)";
    case A::log_beta: return "log(beta)";
    case A::log_x: return "log(x)";
    case A::log_gamma_x: return "log_gamma(x)";
  }
  return "?";
}

const char* kind_name(AtomKind k) {
  switch (k) {
    case A::beta_exp: return "beta_exp";
    case A::x_pow: return "x_pow";
    case A::pi_squared: return "pi_squared";
    case A::zeta_odd: return "zeta_odd";
    case A::euler_gamma: return "euler_gamma";
    case A::log_2pi: return "log_2pi";
    case A::log_beta: return "log_beta";
    case A::log_x: return "log_x";
    case A::log_gamma_x: return "log_gamma_x";
  }
  return "?";
}

}  // namespace

SymbolAtom SymbolAtom::zeta(long m) {
  if (m < 3 || m % 2 == 0) throw DomainError("zeta atoms take odd m >= 3");
  return {AtomKind::zeta_odd, m, 0};
}

std::strong_ordering operator<=>(const SymbolAtom& a, const SymbolAtom& b) {
  if (a.kind != b.kind) return a.kind <=> b.kind;
  if (a.n != b.n) return a.n <=> b.n;
  return cmp(a.q, b.q);
}

Rational SymbolicTerm::beta_exp() const {
  for (const auto& a : atoms) {
    if (a.kind == AtomKind::beta_exp) return a.q;
  }
  return 0;
}

long SymbolicTerm::x_power() const {
  for (const auto& a : atoms) {
    if (a.kind == AtomKind::x_pow) return a.n;
  }
  return 0;
}

std::vector<SymbolAtom> SymbolicTerm::signature() const {
  std::vector<SymbolAtom> s;
  for (const auto& a : atoms) {
    if (a.kind != AtomKind::beta_exp) s.push_back(a);
  }
  return s;
}

SymbolicTerm make_term(const Rational& coeff, std::vector<SymbolAtom> atoms) {
  Rational e = 0;
  long xp = 0, pp = 0;
  std::vector<SymbolAtom> rest;
  for (auto& a : atoms) {
    switch (a.kind) {
      case AtomKind::beta_exp: e += a.q; break;
      case AtomKind::x_pow: xp += a.n; break;
      case AtomKind::pi_squared: pp += a.n; break;
      default:
        for (const auto& r : rest) {
          if (r.kind == a.kind) throw DomainError("repeated atom in a symbolic term");
        }
        rest.push_back(a);
    }
  }
  std::vector<SymbolAtom> out{SymbolAtom::beta(e)};
  if (xp != 0) out.push_back(SymbolAtom::x(xp));
  if (pp != 0) out.push_back(SymbolAtom::pi2(pp));
  out.insert(out.end(), rest.begin(), rest.end());
  std::sort(out.begin(), out.end());
  return {coeff, std::move(out)};
}

Regime regime_for(const Rational& c_in) {
  Rational c = c_in;
  c.canonicalize();
  if (c < 0) throw DomainError("regime exponent c must be >= 0");
  if (c == 0) return {RegimeKind::c0, c};
  if (c < 1) return {RegimeKind::c_small, c};
  if (c == 1) return {RegimeKind::c1, c};
  return {RegimeKind::c_large, c};
}

std::string to_string(RegimeKind k) {
  switch (k) {
    case RegimeKind::uniform: return "uniform";
    case RegimeKind::c0: return "c0";
    case RegimeKind::c_small: return "c_small";
    case RegimeKind::c1: return "c1";
    case RegimeKind::c_large: return "c_large";
  }
  return "?";
}

Expansion regime_coefficients(const Rational& c_in, const Rational& cutoff_in) {
  Rational cutoff_exp = cutoff_in;
  cutoff_exp.canonicalize();
  if (cutoff_exp < -1) throw DomainError("cutoff exponent must be >= -1");
  Expansion ex;
  ex.regime = regime_for(c_in);
  const Rational c = ex.regime.c;
  ex.cutoff_exp = cutoff_exp;
  if (c == 0) {
    ex.numeric_only = true;
    ex.meta = "x fixed: coefficients are B_k Li_{2-k}(e^{-x}), evaluated numerically";
    return ex;
  }
  ex.meta = "y = x beta^c, |arg beta| < pi/2, x off beta^{1-c} R_{<=0}";
  TermCollector col(cutoff_exp);
  add_heads(col, c);
  if (c < 1) {
    for (long k = 1;; ++k) {
      const Rational e = (1 - c) * (2 * k - 1);
      if (e > cutoff_exp) break;
      const Rational coeff = -bernoulli_number(static_cast<unsigned>(2 * k)) / Rational((2 * k) * (2 * k - 1));
      col.add(coeff, {SymbolAtom::beta(e), SymbolAtom::x(1 - 2 * k)});
    }
  } else if (c > 1) {
    for (unsigned k = 2;; ++k) {
      const Rational e = (c - 1) * k;
      if (e > cutoff_exp) break;
      add_zeta_term(col, k, e);
    }
  }
  const long kmax = k_limit(cutoff_exp);
  const long jmax = j_limit(0, c, cutoff_exp);
  const auto b = bernoulli_numbers(static_cast<unsigned>(std::max(kmax, 0L) + std::max(jmax, 0L) + 1));
  for (long k = 0; k <= kmax; ++k) {
    if (b[k] == 0) continue;
    const long jm = j_limit(k, c, cutoff_exp);
    for (long j = 0; j <= jm; ++j) {
      const long n = k + j - 1;
      if (n < 1 || b[n] == 0) continue;
      const Rational coeff = -b[k] * b[n] / Rational(factorial(k) * n * factorial(j));
      col.add(coeff, {SymbolAtom::beta(Rational(k - 1) + c * j), SymbolAtom::x(j)});
    }
  }
  ex.terms = col.take();
  return ex;
}

std::vector<SeriesGroup> regime_groups(const Rational& c_in, const Complex& x, const Complex& beta,
                                       const Rational& cutoff_in, Precision prec) {
  require_beta(beta);
  const Rational c = regime_for(c_in).c;
  Rational cutoff = cutoff_in;
  cutoff.canonicalize();
  const Precision w = prec.guarded();
  std::vector<SeriesGroup> out;
  for (auto& [e, v] : groups_between(c, x, beta, std::nullopt, cutoff, w)) out.push_back({e, v.rounded(prec)});
  return out;
}

QPochEval regime_eval(const Expansion& e, const Complex& x, const Complex& beta) {
  require_beta(beta);
  const Precision p = max(x.precision(), beta.precision());
  const Precision w = p.guarded();
  const Rational& c = e.regime.c;
  Complex sum(w);
  long used = 0;
  if (e.numeric_only) {
    for (auto& [ex, v] : groups_between(c, x, beta, std::nullopt, e.cutoff_exp, w)) {
      sum += v;
      ++used;
    }
  } else {
    AtomValues values(x, beta, c, w);
    for (const auto& t : e.terms) {
      sum += values.term(t);
      ++used;
    }
  }
  const Real tail = first_omitted(c, x, beta, e.cutoff_exp, w);
  return {sum.rounded(p), tail.rounded(p), used};
}

Complex uniform_head(const Complex& y, const Complex& beta) {
  const Precision p = max(y.precision(), beta.precision());
  const Precision w = p.guarded();
  const Complex bw = beta.rounded(w);
  const Complex ys = require_region(y.rounded(w), bw);
  const BranchContext ctx(bw);
  const Complex r = ys / bw;
  const Real half = Real::parse("1/2", w);
  Complex v = -li12_strip_branch(2, ys, ctx).value / bw - li12_strip_branch(1, ys, ctx).value * half;
  v += const_log_2pi(w) * half;
  v -= r;
  v += (r - half) * log(r);
  v -= log_gamma(r, w);
  return v.rounded(p);
}

Complex uniform_term(unsigned k, const Complex& y, const Complex& beta) {
  if (k < 1) throw DomainError("uniform terms start at k = 1");
  const Precision p = max(y.precision(), beta.precision());
  const Precision w = p.guarded();
  const Complex bw = beta.rounded(w);
  const Complex ys = require_region(y.rounded(w), bw);
  const Rational coeff = bernoulli_number(2 * k) / Rational(factorial(2 * k));
  Complex t = li_neg_exp_regular(2 * k - 2, ys) * pow(bw, static_cast<long>(2 * k - 1)) * Real(coeff, w);
  return t.rounded(p);
}

QPochEval uniform_expansion(const Complex& y, const Complex& beta, unsigned N) {
  if (N < 1) throw DomainError("uniform_expansion needs N >= 1");
  const Precision p = max(y.precision(), beta.precision());
  const Precision w = p.guarded();
  const Complex yw = y.rounded(w), bw = beta.rounded(w);
  Complex v = uniform_head(yw, bw);
  for (unsigned k = 1; k <= N; ++k) v -= uniform_term(k, yw, bw);
  const Real tail = abs(uniform_term(N + 1, yw, bw));
  return {v.rounded(p), tail.rounded(p), static_cast<long>(N)};
}

Complex exact_remainder_c1(const Rational& x, const Complex& beta) {
  require_beta(beta);
  const bool integer = x.get_den() == 1 && x >= 1;
  const bool half = x.get_den() == 2 && x > 0;
  if (!integer && !half) throw DomainError("exact remainder needs integer x >= 1 or half-integer x >= 1/2");
  const Precision p = beta.precision();
  const Precision w = p.guarded();
  const Real pi = const_pi(w);
  const Complex qt = exp(-(pi * pi * 4) / beta.rounded(w));
  const Complex step = integer ? -qt : qt;
  // sum_{j>=1} log(1 + s q^j), s = -1 or +1
  Complex term = step;
  Complex sum(w);
  const double scale = abs(qt).log2_abs();
  for (long j = 1;; ++j) {
    sum += log1p(term);
    term *= qt;
    if (term.is_zero() || abs(term).log2_abs() < scale - static_cast<double>(w.bits)) break;
    if (j > 10000000) throw ConvergenceError("remainder product does not settle");
  }
  return sum.rounded(p);
}

IdentityReport conv_series_check(long x, const Real& beta, long K) {
  if (x < 2) throw DomainError("conv_series_check needs integer x >= 2");
  const Precision p = beta.precision();
  const Precision w = p.guarded();
  const Real bw = beta.rounded(w);
  const Real pi = const_pi(w);
  if (bw.sign() <= 0) throw ConvergenceError("conv_series_check needs beta > 0");
  const Real r = bw * (x - 1) / ldexp(pi, 1);
  if (!(r < 1)) throw ConvergenceError("series diverges for beta >= 2 pi / (x - 1)");
  if (K <= 0) {
    const double rate = -r.log2_abs();
    const double k = std::ceil((static_cast<double>(w.bits) + 16.0) / rate) + 4.0;
    if (k > 1e6) throw ConvergenceError("series converges too slowly at this beta");
    K = static_cast<long>(k);
  }
  const auto b = bernoulli_numbers(static_cast<unsigned>(K + 4));
  // B_{n+1}(x) = B_{n+1} + (n+1) sum_{k<x} k^n for integer x, n >= 1
  auto bpoly = [&](long n) {
    Integer s = 0;
    for (long k = 1; k < x; ++k) {
      Integer kp;
      mpz_ui_pow_ui(kp.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(n));
      s += kp;
    }
    s *= n + 1;
    return Rational(b[n + 1] + Rational(s));
  };
  auto term_coeff = [&](long n) {
    Integer den = factorial(static_cast<unsigned long>(n + 1));
    den *= n;
    Rational c = b[n] * bpoly(n);
    c /= Rational(den);
    return c;
  };
  Real sum(w);
  Real bp = bw;
  Real last(w);
  for (long n = 1; n <= K + 1; ++n) {
    if (b[n] != 0) {
      const Rational c = term_coeff(n);
      const Real t = bp * Real(c, w);
      if (n <= K) {
        sum += t;
      } else {
        last = abs(t);
      }
    }
    bp *= bw;
  }
  if (last.is_zero()) {
    // n = K+1 odd: the next nonzero term is K+2
    const long n = K + 2;
    const Rational c = term_coeff(n);
    last = abs(bp * bw * Real(c, w));
  }
  const Complex beta_c(bw);
  const Real tol = exp2i(-static_cast<long>(w.bits) + 8, w);
  const Complex lx = oracle_log_qpoch(beta_c * Real(x, w), beta_c, tol).log_value;
  const Complex l1 = oracle_log_qpoch(beta_c, beta_c, tol).log_value;
  Complex rhs = Complex(-bw / 24) - (Complex(log(bw) * (x - 1) + log(Real(factorial(static_cast<unsigned long>(x - 1)), w))) + lx - l1);
  const Complex lhs(sum);
  const Real tail = last / (1 - r);
  return {lhs.rounded(p), rhs.rounded(p), abs(lhs - rhs).rounded(p), tail.rounded(p)};
}

std::string format_table(const Expansion& e) {
  std::ostringstream os;
  if (e.numeric_only) {
    os << "# " << e.meta << "\n";
    return os.str();
  }
  std::size_t i = 0;
  while (i < e.terms.size()) {
    const Rational ex = e.terms[i].beta_exp();
    os << "beta^" << to_string(ex) << ":";
    bool first = true;
    for (; i < e.terms.size() && e.terms[i].beta_exp() == ex; ++i) {
      const auto& t = e.terms[i];
      const auto sig = t.signature();
      if (first) os << ' ';
      put_coeff(os, t.coeff, first, !sig.empty());
      bool lead = !(t.coeff == 1 || t.coeff == -1) || sig.empty();
      for (const auto& a : sig) {
        if (lead) os << '*';
        os << atom_text(a);
        lead = true;
      }
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

std::string to_json(const Expansion& e) {
  nlohmann::json j;
  j["regime"] = to_string(e.regime.kind);
  j["c"] = to_string(e.regime.c);
  j["cutoff"] = to_string(e.cutoff_exp);
  j["numeric_only"] = e.numeric_only;
  j["meta"] = e.meta;
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : e.terms) {
    nlohmann::json atoms = nlohmann::json::array();
    for (const auto& a : t.atoms) {
      nlohmann::json ja;
      ja["kind"] = kind_name(a.kind);
      if (a.kind == A::beta_exp) {
        ja["exp"] = to_string(a.q);
      } else if (a.kind == A::x_pow || a.kind == A::pi_squared) {
        ja["power"] = a.n;
      } else if (a.kind == A::zeta_odd) {
        ja["m"] = a.n;
      }
      atoms.push_back(ja);
    }
    terms.push_back({{"coeff", to_string(t.coeff)}, {"atoms", atoms}});
  }
  j["terms"] = terms;
  return j.dump(2) + "\n";
}

}  // namespace qpoch
