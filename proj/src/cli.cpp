// SPDX-License-Identifier: Apache-2.0
#include "qpoch/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qpoch/expansions.hpp"
#include "qpoch/identity.hpp"
#include "qpoch/lab.hpp"

namespace qpoch {

namespace {

using Json = nlohmann::ordered_json;

struct Common {
  unsigned prec = 256;
  std::string format = "csv";
  std::string out;
};

struct Inputs {
  std::string y = "1";
  std::string beta = "1/2";
  std::string x = "3";
  std::string c;
  std::string method = "oracle";
  std::string check;
  std::string regime;
  std::string max_exp;
  long order = 4;
  long trunc = 200;
  long max_order = 100;
  bool symbolic = false;
  bool numeric = false;
};

unsigned default_prec() {
  const char* env = std::getenv("QPOCH_DEFAULT_PREC");
  if (env == nullptr || *env == '\0') return 256;
  std::size_t used = 0;
  const unsigned long v = std::stoul(env, &used);
  if (used != std::string(env).size()) throw std::invalid_argument("QPOCH_DEFAULT_PREC is not an integer");
  return static_cast<unsigned>(v);
}

// one header line and one data line, or a flat JSON object
std::string record(const Common& o, const std::vector<std::pair<std::string, std::string>>& fields) {
  if (o.format == "json") {
    Json j;
    for (const auto& [k, v] : fields) j[k] = v;
    return j.dump(2) + "\n";
  }
  std::string head, row;
  for (const auto& [k, v] : fields) {
    if (!head.empty()) {
      head += ',';
      row += ',';
    }
    head += k;
    row += v;
  }
  return head + "\n" + row + "\n";
}

std::string run_eval(const Common& o, const Inputs& in) {
  const Precision p(o.prec);
  const int d = digits_for(o.prec);
  const Complex y = Complex::parse(in.y, p);
  const Complex beta = Complex::parse(in.beta, p);
  QPochEval r;
  if (in.method == "oracle") {
    r = oracle_log_qpoch(y, beta, exp2i(-static_cast<long>(o.prec) + 8, p));
  } else if (in.method == "identity") {
    if (in.order < 1) throw std::invalid_argument("--order must be >= 1");
    r = identity_rhs(y, beta, static_cast<unsigned>(in.order), in.trunc);
  } else if (in.method == "pv") {
    r = identity_rhs_pv(y, beta, in.trunc);
  } else if (in.method == "uniform") {
    if (in.order < 1) throw std::invalid_argument("--order must be >= 1");
    r = uniform_expansion(y, beta, static_cast<unsigned>(in.order));
  } else {
    throw std::invalid_argument("unknown method '" + in.method + "'");
  }
  return record(o, {{"method", in.method},
                    {"log_re", r.log_value.real().to_string(d)},
                    {"log_im", r.log_value.imag().to_string(d)},
                    {"tail_bound", r.tail_bound.to_string(d)},
                    {"terms_used", std::to_string(r.terms_used)}});
}

std::string run_verify(const Common& o, const Inputs& in) {
  const Precision p(o.prec);
  const int d = digits_for(o.prec);
  const Complex beta = Complex::parse(in.beta, p);
  IdentityReport r;
  if (in.check == "dedekind") {
    r = dedekind_check(beta);
  } else if (in.check == "theta") {
    r = theta_modular_check(Complex::parse(in.x, p), beta);
  } else if (in.check == "artin") {
    r = artin_product_check(Complex::parse(in.x, p), in.trunc);
  } else if (in.check == "consequence") {
    r = consequence_check(Complex::parse(in.y, p), beta, in.trunc);
  } else if (in.check == "identity") {
    if (in.order < 1) throw std::invalid_argument("--order must be >= 1");
    const Complex y = Complex::parse(in.y, p);
    const QPochEval lhs = oracle_log_qpoch(y, beta, exp2i(-static_cast<long>(o.prec) + 8, p));
    const QPochEval rhs = identity_rhs(y, beta, static_cast<unsigned>(in.order), in.trunc);
    r = {lhs.log_value, rhs.log_value, abs(lhs.log_value - rhs.log_value), lhs.tail_bound + rhs.tail_bound};
  } else if (in.check == "conv-series") {
    const Rational x = parse_rational(in.x);
    if (x.get_den() != 1 || !x.get_num().fits_slong_p()) throw DomainError("conv-series needs integer x");
    if (!beta.is_real()) throw DomainError("conv-series needs real beta");
    r = conv_series_check(x.get_num().get_si(), beta.real(), in.order > 4 ? in.order : 0);
  } else {
    throw std::invalid_argument("unknown check '" + in.check + "'");
  }
  return record(o, {{"check", in.check},
                    {"lhs_re", r.lhs.real().to_string(d)},
                    {"lhs_im", r.lhs.imag().to_string(d)},
                    {"rhs_re", r.rhs.real().to_string(d)},
                    {"rhs_im", r.rhs.imag().to_string(d)},
                    {"residual", r.residual.to_string(d)},
                    {"certified_tail", r.certified_tail.to_string(d)}});
}

std::string run_expand(const Common& o, const Inputs& in) {
  const Rational c = parse_rational(in.c);
  const Rational cut = parse_rational(in.max_exp);
  if (!in.numeric) {
    const Expansion e = regime_coefficients(c, cut);
    return o.format == "json" ? to_json(e) : format_table(e);
  }
  const Precision p(o.prec);
  const int d = digits_for(o.prec);
  const auto groups = regime_groups(c, Complex::parse(in.x, p), Complex::parse(in.beta, p), cut, p);
  if (o.format == "json") {
    Json rows = Json::array();
    for (const auto& g : groups) {
      rows.push_back({{"beta_exp", to_string(g.beta_exp)},
                      {"value_re", g.value.real().to_string(d)},
                      {"value_im", g.value.imag().to_string(d)}});
    }
    Json j;
    j["meta"] = {{"regime", to_string(regime_for(c).kind)}, {"c", to_string(c)}, {"x", in.x}, {"beta", in.beta},
                 {"prec_bits", o.prec}, {"cutoff", to_string(cut)}};
    j["groups"] = rows;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "beta_exp,value_re,value_im\n";
  for (const auto& g : groups) {
    os << to_string(g.beta_exp) << ',' << g.value.real().to_string(d) << ',' << g.value.imag().to_string(d) << '\n';
  }
  return os.str();
}

Regime regime_arg(const Inputs& in) {
  if (in.regime.empty()) throw std::invalid_argument("--regime is required");
  const bool needs_c = in.regime == "uniform" || in.regime == "c_small" || in.regime == "c_large";
  if (needs_c && in.c.empty()) throw std::invalid_argument("--c is required for regime " + in.regime);
  return parse_regime(in.regime, in.c.empty() ? Rational(0) : parse_rational(in.c));
}

std::string run_sweep(const Common& o, const Inputs& in) {
  const Precision p(o.prec);
  const Regime r = regime_arg(in);
  const auto rows = sweep(r, Complex::parse(in.x, p), Complex::parse(in.beta, p), in.max_order, p);
  const int d = digits_for(o.prec);
  if (o.format == "json") return sweep_json(rows, {r, in.x, in.beta, o.prec, in.max_order}, d);
  return sweep_csv(rows, d);
}

std::string run_estimate(const Common& o, const Inputs& in) {
  const Precision p(o.prec);
  const Regime r = regime_arg(in);
  const Complex x = Complex::parse(in.x, p);
  const Complex beta = Complex::parse(in.beta, p);
  if (!x.is_real() || !beta.is_real()) throw DomainError("estimates need real x and beta");
  const TruncEstimate e = estimate_optimal(r, x.real(), beta.real());
  const int d = digits_for(o.prec);
  return record(o, {{"regime", to_string(e.regime)},
                    {"c", to_string(r.c)},
                    {"formula_id", e.formula_id},
                    {"n_star", e.n_star.to_string(d)},
                    {"r_star", e.r_star.to_string(d)}});
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Common o;
  Inputs in;
  CLI::App app{"q-Pochhammer evaluation and truncation-error lab", "qpoch"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* s) {
    s->add_option("--prec", o.prec, "working precision in bits");
    s->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    s->add_option("--out", o.out, "output path, stdout when absent");
  };

  CLI::App* ev = app.add_subcommand("eval", "log (e^{-y}; e^{-beta})_inf");
  common(ev);
  ev->add_option("--y", in.y, "complex y");
  ev->add_option("--beta", in.beta, "complex beta");
  ev->add_option("--method", in.method, "oracle, identity, pv or uniform");
  ev->add_option("--order", in.order, "Stirling order N (identity) or k-cutoff (uniform)");
  ev->add_option("--trunc", in.trunc, "sum truncation M");

  CLI::App* ver = app.add_subcommand("verify", "residual of an identity");
  common(ver);
  ver->add_option("--check", in.check, "dedekind, theta, artin, consequence, identity or conv-series")->required();
  ver->add_option("--y", in.y, "complex y");
  ver->add_option("--beta", in.beta, "complex beta");
  ver->add_option("--x", in.x, "x for theta, artin and conv-series");
  ver->add_option("--order", in.order, "Stirling order N, or series length K for conv-series");
  ver->add_option("--trunc", in.trunc, "sum or product truncation M");

  CLI::App* ex = app.add_subcommand("expand", "regime series coefficients");
  common(ex);
  ex->add_option("--c", in.c, "scaling exponent p/q")->required();
  ex->add_option("--max-exp", in.max_exp, "largest beta exponent p/q")->required();
  ex->add_flag("--symbolic", in.symbolic, "exact coefficient table (default)");
  ex->add_flag("--numeric", in.numeric, "group values at --x, --beta");
  ex->add_option("--x", in.x, "x for --numeric");
  ex->add_option("--beta", in.beta, "beta for --numeric");

  CLI::App* sw = app.add_subcommand("sweep", "truncation-error curve");
  common(sw);
  sw->add_option("--regime", in.regime, "uniform, c0, c_small, c1 or c_large")->required();
  sw->add_option("--c", in.c, "scaling exponent p/q");
  sw->add_option("--x", in.x, "x with y = x beta^c");
  sw->add_option("--beta", in.beta, "beta");
  sw->add_option("--max-order", in.max_order, "largest order on the exponent lattice");

  CLI::App* es = app.add_subcommand("estimate", "optimal truncation N*, R*");
  common(es);
  es->add_option("--regime", in.regime, "uniform, c0, c_small, c1 or c_large")->required();
  es->add_option("--c", in.c, "scaling exponent p/q");
  es->add_option("--x", in.x, "real x > 0");
  es->add_option("--beta", in.beta, "real beta > 0");

  try {
    o.prec = default_prec();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }
  if (in.symbolic && in.numeric) {
    err << "error: --symbolic and --numeric are exclusive\n";
    return 1;
  }

  std::string text;
  try {
    if (ev->parsed()) text = run_eval(o, in);
    if (ver->parsed()) text = run_verify(o, in);
    if (ex->parsed()) text = run_expand(o, in);
    if (sw->parsed()) text = run_sweep(o, in);
    if (es->parsed()) text = run_estimate(o, in);
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const PrecisionError& e) {
    err << "precision error: " << e.what() << "\n";
    return 3;
  } catch (const ConvergenceError& e) {
    err << "convergence error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  if (o.out.empty()) {
    out << text;
    return 0;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) {
    err << "error: cannot open " << o.out << "\n";
    return 1;
  }
  f << text;
  return f.good() ? 0 : 1;
}

}  // namespace qpoch
