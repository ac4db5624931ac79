// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "qpoch/complex.hpp"
#include "qpoch/expansions.hpp"
#include "qpoch/rational.hpp"

namespace qpoch {

/// One point of a truncation-error curve. `order` is beta_exp times the
/// denominator of c, so it indexes the exponent lattice by integers.
struct SweepRow {
  long order = 0;
  Rational beta_exp;
  Complex partial;
  Real abs_error;
};

struct TruncEstimate {
  Real n_star;
  Real r_star;
  RegimeKind regime = RegimeKind::uniform;
  std::string formula_id;
};

/// Partial sums of the regime series at y = x beta^c with their errors
/// against the oracle. kind must match c (uniform accepts any c >= 0).
/// Uniform rows are the k-sum truncations at order 2k - 1; regime rows are
/// the realized exponent groups in increasing order, up to max_order.
std::vector<SweepRow> sweep(const Regime& regime, const Complex& x, const Complex& beta, long max_order,
                            Precision prec);

/// Heuristic optimal truncation (N*, R*) for real x > 0, beta > 0. N* is
/// in units of the beta exponent. The uniform formula is applied at
/// y = x beta^c. DomainError for c1 with 2x an integer.
TruncEstimate estimate_optimal(const Regime& regime, const Real& x, const Real& beta);

/// Regime from its CLI name: uniform, c0, c_small, c1, c_large. For the
/// fixed-c kinds c is implied; c_small / c_large / uniform take it as given.
Regime parse_regime(const std::string& name, const Rational& c);

struct SweepMeta {
  Regime regime;
  std::string x;
  std::string beta;
  unsigned prec_bits = 0;
  long max_order = 0;
};

/// Decimal digits that represent `bits` of precision.
int digits_for(unsigned bits);

/// order,beta_exp,partial_re,partial_im,abs_error with a header line.
std::string sweep_csv(const std::vector<SweepRow>& rows, int digits);
/// {"meta": {...}, "rows": [...]} with the CSV fields as strings.
std::string sweep_json(const std::vector<SweepRow>& rows, const SweepMeta& meta, int digits);

}  // namespace qpoch
