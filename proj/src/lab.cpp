// SPDX-License-Identifier: Apache-2.0
#include "qpoch/lab.hpp"

#include "json.hpp"

#include <sstream>

#include "qpoch/constants.hpp"
#include "qpoch/identity.hpp"

namespace qpoch {

namespace {

void check_kind(const Regime& r) {
  const Rational& c = r.c;
  if (c < 0) throw DomainError("c must be >= 0");
  if (r.kind == RegimeKind::uniform) return;
  if (regime_for(c).kind != r.kind) throw DomainError("regime " + to_string(r.kind) + " does not match c = " + to_string(c));
}

Complex y_of(const Rational& c, const Complex& x, const Complex& beta) {
  if (c == 0) return x;
  if (c == 1) return x * beta;
  return x * exp(log(beta) * Real(c, beta.precision()));
}

}  // namespace

std::vector<SweepRow> sweep(const Regime& regime, const Complex& x_in, const Complex& beta_in, long max_order,
                            Precision prec) {
  check_kind(regime);
  Rational c = regime.c;
  c.canonicalize();
  const Complex x = x_in.rounded(prec.guarded());
  const Complex beta = beta_in.rounded(prec.guarded());
  const Complex y = y_of(c, x, beta);
  const Precision op = prec.guarded();
  const Complex truth = oracle_log_qpoch(y.rounded(op), beta.rounded(op), exp2i(-static_cast<long>(prec.bits) - 16, op))
                            .log_value.rounded(prec);
  std::vector<SweepRow> rows;
  if (regime.kind == RegimeKind::uniform) {
    Complex s = uniform_head(y, beta);
    for (long k = 1; 2 * k - 1 <= max_order; ++k) {
      s -= uniform_term(static_cast<unsigned>(k), y, beta);
      const Complex p = s.rounded(prec);
      rows.push_back({2 * k - 1, Rational(2 * k - 1), p, abs(p - truth)});
    }
    return rows;
  }
  const Integer den = c.get_den();
  Rational cutoff(Integer(max_order), den);
  cutoff.canonicalize();
  Complex s(prec.guarded());
  for (const auto& g : regime_groups(c, x, beta, cutoff, prec.guarded())) {
    s += g.value;
    const Rational ord = g.beta_exp * Rational(den);
    const Complex p = s.rounded(prec);
    rows.push_back({ord.get_num().get_si(), g.beta_exp, p, abs(p - truth)});
  }
  return rows;
}

TruncEstimate estimate_optimal(const Regime& regime, const Real& x, const Real& beta) {
  check_kind(regime);
  if (x.sign() <= 0 || beta.sign() <= 0) throw DomainError("estimates need real x > 0 and beta > 0");
  const Precision p = max(x.precision(), beta.precision());
  const Real pi = const_pi(p);
  const Real two_pi = ldexp(pi, 1);
  const Real four_pi2 = pi * pi * 4;
  const Real rb = sqrt(beta);
  const Real c(regime.c, p);
  TruncEstimate e;
  e.regime = regime.kind;
  switch (regime.kind) {
    case RegimeKind::uniform: {
      const Real y = regime.c == 0 ? x : x * pow(beta, c);
      const Real s = y * y + four_pi2;
      e.n_star = two_pi * sqrt(s) / beta;
      e.r_star = ldexp(rb, 1) * exp(-e.n_star) / (pi * sqrt(sqrt(s)));
      e.formula_id = "uniform";
      break;
    }
    case RegimeKind::c0:
      e.n_star = two_pi * x / beta;
      e.r_star = rb * exp(-e.n_star) / (pi * sqrt(x));
      e.formula_id = "fixed_y";
      break;
    case RegimeKind::c_small: {
      const Real one_minus = Real(1, p) - c;
      const Real lead = two_pi * x * pow(beta, c - 1);
      e.n_star = one_minus * lead;
      e.r_star = pow(beta, ldexp(one_minus, -1)) * exp(-lead) / (pi * sqrt(x));
      e.formula_id = "small_c";
      break;
    }
    case RegimeKind::c1: {
      const Real two_x = ldexp(x, 1);
      if (floor(two_x) == two_x) throw DomainError("c = 1 with 2x an integer converges; use exact_remainder_c1");
      const Real s = abs(sin(two_pi * x));
      e.n_star = four_pi2 / beta;
      e.r_star = sqrt(ldexp(beta, 1)) * s * exp(-e.n_star) / (pi * sqrt(pi));
      e.formula_id = "c_one";
      break;
    }
    case RegimeKind::c_large:
      e.n_star = four_pi2 / beta;
      e.r_star = sqrt(ldexp(beta, 1)) * exp(-e.n_star) / (pi * sqrt(pi));
      e.formula_id = "large_c";
      break;
  }
  return e;
}

Regime parse_regime(const std::string& name, const Rational& c_in) {
  Rational c = c_in;
  c.canonicalize();
  Regime r;
  r.c = c;
  if (name == "uniform") {
    r.kind = RegimeKind::uniform;
  } else if (name == "c0") {
    r = {RegimeKind::c0, Rational(0)};
  } else if (name == "c1") {
    r = {RegimeKind::c1, Rational(1)};
  } else if (name == "c_small") {
    r.kind = RegimeKind::c_small;
  } else if (name == "c_large") {
    r.kind = RegimeKind::c_large;
  } else {
    throw std::invalid_argument("unknown regime '" + name + "'");
  }
  check_kind(r);
  return r;
}

int digits_for(unsigned bits) { return Precision(bits).digits10(); }

std::string sweep_csv(const std::vector<SweepRow>& rows, int digits) {
  std::ostringstream os;
  os << "order,beta_exp,partial_re,partial_im,abs_error\n";
  for (const auto& r : rows) {
    os << r.order << ',' << to_string(r.beta_exp) << ',' << r.partial.real().to_string(digits) << ','
       << r.partial.imag().to_string(digits) << ',' << r.abs_error.to_string(digits) << '\n';
  }
  return os.str();
}

std::string sweep_json(const std::vector<SweepRow>& rows, const SweepMeta& meta, int digits) {
  nlohmann::ordered_json j;
  j["meta"] = {{"regime", to_string(meta.regime.kind)},
               {"c", to_string(meta.regime.c)},
               {"x", meta.x},
               {"beta", meta.beta},
               {"prec_bits", meta.prec_bits},
               {"max_order", meta.max_order}};
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    out.push_back({{"order", r.order},
                   {"beta_exp", to_string(r.beta_exp)},
                   {"partial_re", r.partial.real().to_string(digits)},
                   {"partial_im", r.partial.imag().to_string(digits)},
                   {"abs_error", r.abs_error.to_string(digits)}});
  }
  j["rows"] = out;
  return j.dump(2) + "\n";
}

}  // namespace qpoch
