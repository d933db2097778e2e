// Copyright 2026 The ahmclass Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "ahm/ahm_eval.hpp"
#include "ahm/analysis.hpp"
#include "ahm/classpoly.hpp"
#include "ahm/errors.hpp"
#include "ahm/qform.hpp"
#include "ahm/report_io.hpp"

namespace ahm::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Tau {
  BigComplex value;
  std::optional<QuadForm> form;
};

// "a+bi", "bi", "i", or a form triple "A,B,C".
Tau parse_tau(std::string text, const PrecisionContext& ctx) {
  text.erase(std::remove_if(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); }), text.end());
  if (text.empty()) throw UsageError("--tau is empty");
  const mpfr_prec_t w = ctx.working_bits();
  if (text.find(',') != std::string::npos) {
    std::stringstream ss(text);
    std::string part;
    std::vector<std::int64_t> v;
    while (std::getline(ss, part, ',')) {
      try {
        std::size_t used = 0;
        v.push_back(std::stoll(part, &used));
        if (used != part.size()) throw UsageError("bad integer");
      } catch (const std::exception&) {
        throw UsageError("--tau form must be three integers A,B,C: '" + text + "'");
      }
    }
    if (v.size() != 3) throw UsageError("--tau form must be three integers A,B,C: '" + text + "'");
    QuadForm q{v[0], v[1], v[2]};
    if (!is_positive_definite(q)) throw UsageError("--tau form " + q.to_string() + " is not positive definite");
    return {heegner_point(q, ctx), q};
  }
  if (text.back() != 'i') throw UsageError("--tau must have positive imaginary part, e.g. 0.5+1.2i");
  const std::string body = text.substr(0, text.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  std::string re = split == std::string::npos ? "0" : body.substr(0, split);
  std::string im = split == std::string::npos ? body : body.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  try {
    BigComplex tau(BigFloat::parse(re, w), BigFloat::parse(im, w));
    if (tau.im().sign() <= 0) throw UsageError("--tau must lie in the upper half plane");
    return {std::move(tau), std::nullopt};
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument&) {
    throw UsageError("cannot parse --tau '" + text + "'");
  }
}

int decimals_for(const BigFloat& x, int prec_bits) {
  const int digits = static_cast<int>(prec_bits * 0.30102999566398120);
  const double l = x.log2_abs();
  const int int_digits = std::isfinite(l) && l > 0 ? static_cast<int>(l * 0.30102999566398120) + 1 : 1;
  return std::max(1, digits - int_digits);
}

std::string fixed(const BigFloat& x, int prec_bits) {
  std::string s = x.to_fixed(decimals_for(x, prec_bits));
  // A negative value that prints as zero loses its sign.
  if (!s.empty() && s[0] == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::string complex_text(const BigComplex& z, int prec_bits) {
  std::string re = fixed(z.re(), prec_bits);
  std::string im = fixed(abs(z.im()), prec_bits);
  return re + (z.im().sign() < 0 ? " - " : " + ") + im + "i";
}

json log2_json(const BigFloat& b) {
  const double l = residual_log2(b);
  if (!std::isfinite(l)) return nullptr;
  return l;
}

std::string log2_text(const BigFloat& b) {
  const double l = residual_log2(b);
  if (!std::isfinite(l)) return "0";
  std::ostringstream os;
  os << "2^" << std::fixed << std::setprecision(2) << l;
  return os.str();
}

// CSV log2 column: two decimals, empty for an exact zero.
std::string csv_log2(const BigFloat& b) {
  const double l = residual_log2(b);
  if (!std::isfinite(l)) return "";
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << l;
  return os.str();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

RationalFunction2 parse_f(const CliConfig& cfg) { return parse_rational_function(*cfg.f_expr, cfg.degree_bound); }

std::string cmd_forms(const CliConfig& cfg, const PrecisionContext& ctx) {
  const Discriminant delta(cfg.delta);
  const auto forms = enumerate_reduced(delta, cfg.level);
  std::ostringstream os;
  const int digits = 30;
  switch (cfg.output_format) {
    case Format::json: {
      json out;
      out["delta"] = delta.value();
      out["level"] = cfg.level;
      out["count"] = forms.size();
      json rows = json::array();
      for (const auto& q : forms) {
        BigComplex t = heegner_point(q, ctx);
        rows.push_back({{"a", q.a}, {"b", q.b}, {"c", q.c}, {"tau_re", t.re().to_fixed(digits)},
                        {"tau_im", t.im().to_fixed(digits)}});
      }
      out["forms"] = std::move(rows);
      os << out.dump(2) << "\n";
      break;
    }
    case Format::csv:
      os << "a,b,c,tau_re,tau_im\n";
      for (const auto& q : forms) {
        BigComplex t = heegner_point(q, ctx);
        os << q.a << ',' << q.b << ',' << q.c << ',' << t.re().to_fixed(digits) << ',' << t.im().to_fixed(digits)
           << '\n';
      }
      break;
    case Format::pretty:
      os << "delta = " << delta.value() << ", level = " << cfg.level << ", " << forms.size() << " reduced forms\n";
      for (const auto& q : forms) {
        BigComplex t = heegner_point(q, ctx);
        os << "  " << std::left << std::setw(18) << q.to_string() << " tau = " << complex_text(t, 100) << "\n";
      }
      break;
  }
  return os.str();
}

std::string cmd_eval(const CliConfig& cfg, const PrecisionContext& ctx) {
  const RationalFunction2 f = parse_f(cfg);
  const Tau tau = parse_tau(cfg.tau, ctx);
  const ModularValue v = eval_f(f, tau.value, ctx);
  const int p = ctx.prec_bits;
  std::ostringstream os;
  switch (cfg.output_format) {
    case Format::json: {
      json out;
      out["f"] = f.to_string();
      out["tau"] = {{"re", fixed(tau.value.re(), p)}, {"im", fixed(tau.value.im(), p)}};
      if (tau.form) out["form"] = {tau.form->a, tau.form->b, tau.form->c};
      out["value"] = {{"re", fixed(v.value.re(), p)}, {"im", fixed(v.value.im(), p)}};
      out["certified_abs_error_log2"] = log2_json(v.certified_abs_error);
      out["prec_bits"] = p;
      os << out.dump(2) << "\n";
      break;
    }
    case Format::csv:
      os << "f,tau_re,tau_im,re,im,error_log2\n";
      os << csv_escape(f.to_string()) << ',' << fixed(tau.value.re(), p) << ',' << fixed(tau.value.im(), p) << ','
         << fixed(v.value.re(), p) << ',' << fixed(v.value.im(), p) << ',' << csv_log2(v.certified_abs_error) << '\n';
      break;
    case Format::pretty:
      os << "f = " << f.to_string() << "\n";
      os << "tau = " << complex_text(tau.value, std::min(p, 100)) << "\n";
      os << "f(tau) = " << complex_text(v.value, p) << "\n";
      os << "certified |error| <= " << log2_text(v.certified_abs_error) << "\n";
      break;
  }
  return os.str();
}

std::string pretty_report(const ClassPolyReport& r, bool timing) {
  std::ostringstream os;
  os << "f = " << r.f << ", delta = " << r.delta << (r.fundamental ? " (fundamental" : " (non-fundamental")
     << ", delta mod 24 = " << r.delta_mod_24 << "), h = " << r.class_number << "\n";
  os << "H = " << poly_to_string(r.h.coeffs) << "\n";
  if (r.k > 0) {
    os << "H = p^" << r.k << ", p = " << poly_to_string(r.p) << "\n";
    os << "irreducible: " << (r.irreducible ? "yes" : "no") << " (p " << to_string(r.certificate.verdict) << " by "
       << to_string(r.certificate.method) << ")\n";
  }
  os << "residual " << log2_text(r.h.residual) << " at " << r.prec_used << " bits";
  if (timing) os << ", " << r.wall_time_ms << " ms";
  os << "\n";
  if (r.anomaly) os << "ANOMALY: " << *r.anomaly << "\n";
  return os.str();
}

void report_anomaly(const ClassPolyReport& r, const CliConfig& cfg, const PrecisionContext& ctx, std::ostream& err) {
  err << "anomaly at delta = " << r.delta << ": " << r.anomaly.value_or("k > 1") << "\n";
  if (cfg.anomaly_dir) {
    const auto path = write_anomaly_artifact(*cfg.anomaly_dir, r, ctx);
    err << "anomaly artifact written to " << path.string() << "\n";
  }
}

std::string cmd_classpoly(const CliConfig& cfg, const PrecisionContext& ctx, std::ostream& err, int& code) {
  const RationalFunction2 f = parse_f(cfg);
  const ClassPolyReport r =
      class_poly_report(f, Discriminant(cfg.delta), ctx, ReportOptions{true, cfg.expect_irreducible});
  if (r.anomaly) {
    report_anomaly(r, cfg, ctx, err);
    code = kAnomaly;
  }
  switch (cfg.output_format) {
    case Format::json:
      return to_json(r, JsonOptions{cfg.timing});
    case Format::csv:
      return to_csv(r, cfg.timing);
    case Format::pretty:
      break;
  }
  return pretty_report(r, cfg.timing);
}

std::string cmd_galois(const CliConfig& cfg, const PrecisionContext& ctx, int& code) {
  const GaloisCheckReport r = galois_interpolation_check(Discriminant(cfg.delta), ctx, GaloisOptions{cfg.adversarial});
  if (r.pass == cfg.adversarial) code = kAnomaly;
  std::ostringstream os;
  switch (cfg.output_format) {
    case Format::json:
      return to_json(r);
    case Format::csv:
      os << "delta,h,adversarial,verdict,deg_r,residual_log2,prec_bits\n";
      os << r.delta << ',' << r.class_number << ',' << (r.adversarial ? "true" : "false") << ','
         << (r.pass ? "PASS" : "FAIL") << ',' << (r.interpolant.empty() ? -1 : static_cast<int>(r.interpolant.size()) - 1)
         << ',' << csv_log2(r.residual) << ','
         << r.prec_used << '\n';
      return os.str();
    case Format::pretty:
      break;
  }
  os << "delta = " << r.delta << ", h = " << r.class_number << (r.adversarial ? ", adversarial permutation" : "")
     << "\n";
  os << (r.pass ? "PASS" : "FAIL") << ": " << r.detail << " (" << r.prec_used << " bits)\n";
  if (r.pass) os << "chi* = r(j), r = " << poly_to_string(r.interpolant, "j") << "\n";
  return os.str();
}

std::string cmd_sweep(const CliConfig& cfg, const PrecisionContext& ctx, std::ostream& err, int& code) {
  const RationalFunction2 f = parse_f(cfg);
  const std::int64_t lo = std::min(cfg.from, cfg.to);
  const std::int64_t hi = std::max(cfg.from, cfg.to);
  err << "sweep " << f.to_string() << " over [" << lo << ", " << hi << "]"
      << (cfg.fundamental ? " (fundamental)" : "") << "\n";
  const SweepSummary s =
      sweep(f, lo, hi, SweepFilters{cfg.fundamental}, ctx, SweepOptions{ReportOptions{true, cfg.expect_irreducible}, cfg.jobs});
  for (const auto& fail : s.failures) err << "failure at delta = " << fail.delta << ": " << fail.error << "\n";
  for (const auto& r : s.reports)
    if (r.anomaly) report_anomaly(r, cfg, ctx, err);
  if (!s.anomalies.empty()) code = kAnomaly;
  switch (cfg.output_format) {
    case Format::json:
      return to_json(s, JsonOptions{cfg.timing});
    case Format::csv:
      return to_csv(s, cfg.timing);
    case Format::pretty:
      break;
  }
  std::ostringstream os;
  os << std::right << std::setw(7) << "delta" << std::setw(5) << "h" << std::setw(4) << "k" << std::setw(13)
     << "irreducible" << std::setw(7) << "deg_p" << std::setw(10) << "residual" << std::setw(7) << "bits";
  if (cfg.timing) os << std::setw(8) << "ms";
  os << "\n";
  for (const auto& r : s.reports) {
    const double l = residual_log2(r.h.residual);
    os << std::setw(7) << r.delta << std::setw(5) << r.class_number << std::setw(4) << r.k << std::setw(13)
       << (r.irreducible ? "yes" : "no") << std::setw(7) << (r.p.empty() ? 0 : r.p.size() - 1) << std::setw(10)
       << (std::isfinite(l) ? (std::ostringstream() << std::fixed << std::setprecision(1) << l).str() : "-inf")
       << std::setw(7) << r.prec_used;
    if (cfg.timing) os << std::setw(8) << r.wall_time_ms;
    os << (r.anomaly ? "  ANOMALY" : "") << "\n";
  }
  os << s.reports.size() << " discriminants, max k = " << s.max_k << ", " << s.failures.size() << " failures, "
     << s.anomalies.size() << " anomalies\n";
  return os.str();
}

std::string cmd_jacobian(const CliConfig& cfg, const PrecisionContext& ctx) {
  const RationalFunction2 f = parse_f(cfg);
  const mpfr_prec_t w = ctx.working_bits();
  BigFloat y_min(w), y_max(w);
  try {
    y_min = BigFloat::parse(cfg.y_min, w);
    y_max = BigFloat::parse(cfg.y_max, w);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  JacobianScan scan;
  try {
    scan = jacobian_scan(f, y_min, y_max, cfg.samples, ctx);
  } catch (const NonconstantRequired&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  switch (cfg.output_format) {
    case Format::json:
      return to_json(scan, f);
    case Format::csv: {
      std::ostringstream os;
      os << "y,jacobian,pole,nonzero\n";
      for (const auto& e : scan.entries)
        os << e.y.to_fixed(12) << ',' << (e.sample ? e.sample->jacobian_value.to_string(20) : "") << ','
           << (e.pole ? "true" : "false") << ',' << (e.nonzero ? "true" : "false") << '\n';
      return os.str();
    }
    case Format::pretty:
      break;
  }
  std::ostringstream os;
  os << "f = " << f.to_string() << ", tau = iy\n";
  for (const auto& e : scan.entries) {
    os << "  y = " << e.y.to_fixed(6) << "  J = ";
    if (e.sample)
      os << e.sample->jacobian_value.to_string(12) << (e.nonzero ? "" : "  (numerically zero)");
    else
      os << "pole";
    os << "\n";
  }
  os << "nonzero samples: " << (scan.all_nonzero ? "all" : scan.any_nonzero ? "some" : "none") << "\n";
  return os.str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Class polynomials of rational functions of j and chi* at CM points", "ahm"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}, {"pretty", Format::pretty}};
  auto common = [&](CLI::App* sub) {
    sub->add_option("--prec", cfg.precision, "Working precision in bits")->check(CLI::Range(64, 1 << 20));
    sub->add_option("--max-prec", cfg.max_precision, "Precision cap for escalation")->check(CLI::Range(64, 1 << 20));
    sub->add_option("--format", cfg.output_format, "json | csv | pretty")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--output", cfg.output_path, "Write results to this file instead of stdout");
  };
  auto f_option = [&](CLI::App* sub) {
    sub->add_option("--f", cfg.f_expr, "Rational function of j and chi, e.g. \"j + chi\"")->required();
    sub->add_option("--degree-bound", cfg.degree_bound, "Reject f above this degree");
  };

  auto* forms = app.add_subcommand("forms", "List reduced forms and Heegner points of a discriminant");
  common(forms);
  forms->add_option("--delta", cfg.delta, "Negative discriminant")->required();
  forms->add_option("--level", cfg.level, "Keep forms with level | A")->check(CLI::PositiveNumber);

  auto* eval = app.add_subcommand("eval", "Evaluate f at a point of the upper half plane");
  common(eval);
  f_option(eval);
  eval->add_option("--tau", cfg.tau, "Point as a+bi, or a form A,B,C")->required();

  auto* classpoly = app.add_subcommand("classpoly", "Exact class polynomial, its power decomposition and irreducibility");
  common(classpoly);
  f_option(classpoly);
  classpoly->add_option("--delta", cfg.delta, "Negative discriminant")->required();
  classpoly->add_flag("--expect-irreducible", cfg.expect_irreducible, "Treat k > 1 as an anomaly");
  classpoly->add_option("--anomaly-dir", cfg.anomaly_dir, "Directory for anomaly artifacts");
  classpoly->add_flag("--timing", cfg.timing, "Include wall-clock times");

  auto* galois = app.add_subcommand("galois-check", "Test that chi*(tau_Q) = r(j(tau_Q)) with r over Q");
  common(galois);
  galois->add_option("--delta", cfg.delta, "Negative discriminant")->required();
  galois->add_flag("--adversarial", cfg.adversarial, "Swap two chi* values first; FAIL is then expected");

  auto* sweep_cmd = app.add_subcommand("sweep", "Class polynomial reports over a discriminant range");
  common(sweep_cmd);
  f_option(sweep_cmd);
  sweep_cmd->add_option("--from", cfg.from, "One end of the range")->required();
  sweep_cmd->add_option("--to", cfg.to, "Other end of the range")->required();
  sweep_cmd->add_flag("--fundamental", cfg.fundamental, "Fundamental discriminants only");
  sweep_cmd->add_option("--jobs", cfg.jobs, "Worker threads (default: all cores)")->check(CLI::NonNegativeNumber);
  sweep_cmd->add_flag("--timing", cfg.timing, "Include wall-clock times");
  sweep_cmd->add_flag("--expect-irreducible", cfg.expect_irreducible, "Treat k > 1 as an anomaly");
  sweep_cmd->add_option("--anomaly-dir", cfg.anomaly_dir, "Directory for anomaly artifacts");

  auto* jac = app.add_subcommand("jacobian-scan", "Jacobian of f along tau = iy");
  common(jac);
  f_option(jac);
  jac->add_option("--y-min", cfg.y_min, "Lower end, above sqrt(3)/2");
  jac->add_option("--y-max", cfg.y_max, "Upper end");
  jac->add_option("--samples", cfg.samples, "Number of sample points")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (*forms) cfg.command = Command::forms;
  if (*eval) cfg.command = Command::eval;
  if (*classpoly) cfg.command = Command::classpoly;
  if (*galois) cfg.command = Command::galois_check;
  if (*sweep_cmd) cfg.command = Command::sweep;
  if (*jac) cfg.command = Command::jacobian_scan;

  int code = kOk;
  try {
    PrecisionContext ctx{cfg.precision, 32, cfg.max_precision};
    if (!ctx.valid()) throw UsageError("--prec must be at least 64 and --prec + 32 at most --max-prec");
    std::string text;
    switch (cfg.command) {
      case Command::forms:
        text = cmd_forms(cfg, ctx);
        break;
      case Command::eval:
        text = cmd_eval(cfg, ctx);
        break;
      case Command::classpoly:
        text = cmd_classpoly(cfg, ctx, err, code);
        break;
      case Command::galois_check:
        text = cmd_galois(cfg, ctx, code);
        break;
      case Command::sweep:
        text = cmd_sweep(cfg, ctx, err, code);
        break;
      case Command::jacobian_scan:
        text = cmd_jacobian(cfg, ctx);
        break;
    }
    if (cfg.output_path) {
      std::ofstream file(*cfg.output_path, std::ios::binary);
      file << text;
      if (!file) throw std::runtime_error("cannot write " + *cfg.output_path);
    } else {
      out << text;
    }
    return code;
  } catch (const InvalidDiscriminant& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidDiscriminant;
  } catch (const ahm::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const DegreeBoundExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const PoleAtPoint& e) {
    err << "error: " << e.what() << "\n";
    return kPole;
  } catch (const PrecisionExhausted& e) {
    err << "error: " << e.what() << "\n";
    return kPrecisionExhausted;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace ahm::cli
