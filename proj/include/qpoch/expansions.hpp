// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <string>
#include <vector>

#include "qpoch/complex.hpp"
#include "qpoch/identity.hpp"
#include "qpoch/rational.hpp"

namespace qpoch {

enum class AtomKind {
  beta_exp,
  pi_squared,
  zeta_odd,
  euler_gamma,
  x_pow,
  log_2pi,
  log_beta,
  log_x,
  log_gamma_x,
};

/// One factor of a symbolic term. `n` is the power for x_pow and
/// pi_squared and the argument for zeta_odd; `q` is the exponent for
/// beta_exp. Unused fields stay zero.
struct SymbolAtom {
  AtomKind kind = AtomKind::beta_exp;
  long n = 0;
  Rational q = 0;

  static SymbolAtom beta(const Rational& e) { return {AtomKind::beta_exp, 0, e}; }
  static SymbolAtom x(long p) { return {AtomKind::x_pow, p, 0}; }
  static SymbolAtom pi2(long p) { return {AtomKind::pi_squared, p, 0}; }
  /// DomainError unless m is odd and at least 3.
  static SymbolAtom zeta(long m);
  static SymbolAtom plain(AtomKind k) { return {k, 0, 0}; }

  friend bool operator==(const SymbolAtom& a, const SymbolAtom& b) {
    return a.kind == b.kind && a.n == b.n && a.q == b.q;
  }
  friend std::strong_ordering operator<=>(const SymbolAtom& a, const SymbolAtom& b);
};

/// coeff times the product of `atoms`. Normalized: atoms sorted, exactly
/// one beta_exp, at most one of every other kind, no x^0 or (pi^2)^0.
struct SymbolicTerm {
  Rational coeff;
  std::vector<SymbolAtom> atoms;

  [[nodiscard]] Rational beta_exp() const;
  [[nodiscard]] long x_power() const;
  /// Atoms other than beta_exp; terms merge when these and beta_exp agree.
  [[nodiscard]] std::vector<SymbolAtom> signature() const;
};

/// Builds a normalized term; repeated x_pow / pi_squared atoms multiply.
SymbolicTerm make_term(const Rational& coeff, std::vector<SymbolAtom> atoms);

enum class RegimeKind { uniform, c0, c_small, c1, c_large };

/// y = x beta^c. `uniform` means the uniform expansion evaluated at that y.
struct Regime {
  RegimeKind kind = RegimeKind::c0;
  Rational c = 0;
};

/// c = 0 -> c0, 0 < c < 1 -> c_small, c = 1 -> c1, c > 1 -> c_large.
/// DomainError for c < 0.
Regime regime_for(const Rational& c);
std::string to_string(RegimeKind k);

struct Expansion {
  Regime regime;
  Rational cutoff_exp;
  /// Sorted by beta exponent, then by signature; empty for c0.
  std::vector<SymbolicTerm> terms;
  /// c0 has coefficients transcendental in x and is evaluated numerically.
  bool numeric_only = false;
  std::string meta;
};

/// All terms of the c-regime series with beta exponent <= cutoff, merged
/// exactly. DomainError for c < 0 or cutoff < -1.
Expansion regime_coefficients(const Rational& c, const Rational& cutoff_exp);

/// Value of a truncated expansion at (x, beta); tail_bound is the size of
/// the first nonzero omitted exponent group. log x and log Gamma(x) are
/// real for x > 0 and analytic off beta^{1-c} R_{<=0}.
QPochEval regime_eval(const Expansion& e, const Complex& x, const Complex& beta);

/// One exponent group of a series: its beta exponent and summed value.
struct SeriesGroup {
  Rational beta_exp;
  Complex value;
};

/// The c-regime series at (x, beta) summed term by term without symbolic
/// merging, grouped by beta exponent up to `cutoff` and sorted.
std::vector<SeriesGroup> regime_groups(const Rational& c, const Complex& x, const Complex& beta,
                                       const Rational& cutoff, Precision prec);

/// Head of the uniform expansion (everything but the k-sum) at y.
Complex uniform_head(const Complex& y, const Complex& beta);
/// The k-th term B_{2k} beta^{2k-1}/(2k)! (Li_{2-2k}(e^{-y}) - (2k-2)!/y^{2k-1}).
Complex uniform_term(unsigned k, const Complex& y, const Complex& beta);

/// Uniform expansion truncated at k = N; tail_bound = |term N+1|.
QPochEval uniform_expansion(const Complex& y, const Complex& beta, unsigned N);

/// log (e^{-4 pi^2/beta}; e^{-4 pi^2/beta}) for integer x >= 1 and
/// log (-e^{-4 pi^2/beta}; e^{-4 pi^2/beta}) for half-integer x >= 1/2.
/// Summed as logs so the tiny value keeps full relative accuracy.
Complex exact_remainder_c1(const Rational& x, const Complex& beta);

/// sum_{n<=K} B_n B_{n+1}(x) beta^n / (n (n+1)!) against
/// -beta/24 - log(beta^{x-1} (x-1)! (e^{-x beta}; e^{-beta}) / (e^{-beta}; e^{-beta})).
/// K = 0 picks K from the geometric rate. ConvergenceError unless
/// 0 < beta < 2 pi / (x - 1).
IdentityReport conv_series_check(long x, const Real& beta, long K = 0);

/// Exact coefficients as text, one line per beta exponent:
/// "beta^1/2: -1/12*x^-1 - 1/4*x - 1/72*x^3".
std::string format_table(const Expansion& e);
/// Stable JSON: {regime, c, cutoff, terms: [{coeff, atoms: [...]}]}.
std::string to_json(const Expansion& e);

}  // namespace qpoch
