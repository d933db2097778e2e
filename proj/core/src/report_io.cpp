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

#include "ahm/report_io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace ahm {

namespace {

using json = nlohmann::ordered_json;

json rationals(const std::vector<mpq_class>& coeffs) {
  json arr = json::array();
  for (const auto& c : coeffs) arr.push_back(c.get_str());
  return arr;
}

json residual_value(const BigFloat& r) {
  const double l = residual_log2(r);
  if (!std::isfinite(l)) return nullptr;
  return l;
}

json certificate_json(const IrreducibilityCertificate& c) {
  json out;
  out["verdict"] = to_string(c.verdict);
  out["method"] = to_string(c.method);
  json sieve = json::array();
  for (const auto& w : c.sieve) sieve.push_back({{"prime", w.prime}, {"degrees", w.factor_degrees}});
  out["sieve"] = std::move(sieve);
  if (c.factor) {
    std::vector<mpq_class> q(c.factor->coeffs().begin(), c.factor->coeffs().end());
    out["factor"] = rationals(q);
  } else {
    out["factor"] = nullptr;
  }
  return out;
}

json report_json(const ClassPolyReport& r, const JsonOptions& o) {
  json out;
  out["delta"] = r.delta;
  out["class_number"] = r.class_number;
  out["fundamental"] = r.fundamental;
  out["delta_mod_24"] = r.delta_mod_24;
  out["f"] = r.f;
  out["H"] = rationals(r.h.coeffs);
  out["p"] = rationals(r.p);
  out["k"] = r.k;
  out["deg_p"] = r.p.empty() ? 0 : static_cast<int>(r.p.size()) - 1;
  out["irreducible"] = r.irreducible;
  out["certificate"] = certificate_json(r.certificate);
  out["anomaly"] = r.anomaly ? json(*r.anomaly) : json(nullptr);
  out["numerics"] = {{"prec_bits", r.prec_used}, {"residual_log2", residual_value(r.h.residual)}};
  if (o.timing) out["wall_time_ms"] = r.wall_time_ms;
  return out;
}

json summary_json(const SweepSummary& s, const JsonOptions& o) {
  json out;
  out["f"] = s.f;
  out["delta_min"] = s.delta_min;
  out["delta_max"] = s.delta_max;
  out["fundamental_only"] = s.fundamental_only;
  out["count"] = s.reports.size();
  out["max_k"] = s.max_k;
  json reports = json::array();
  for (const auto& r : s.reports) reports.push_back(report_json(r, o));
  out["reports"] = std::move(reports);
  json failures = json::array();
  for (const auto& f : s.failures) failures.push_back({{"delta", f.delta}, {"error", f.error}});
  out["failures"] = std::move(failures);
  out["anomalies"] = s.anomalies;
  return out;
}

std::string dump(const json& j, const JsonOptions& o) { return j.dump(o.indent) + "\n"; }

std::string fmt_log2(const BigFloat& r) {
  const double l = residual_log2(r);
  if (!std::isfinite(l)) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", l);
  return buf;
}

std::string csv_row(const ClassPolyReport& r, bool timing) {
  std::ostringstream os;
  os << r.delta << ',' << r.class_number << ',' << r.k << ',' << (r.irreducible ? "true" : "false") << ','
     << (r.p.empty() ? 0 : r.p.size() - 1) << ',' << fmt_log2(r.h.residual) << ',' << r.prec_used << ','
     << (timing ? r.wall_time_ms : 0) << '\n';
  return os.str();
}

}  // namespace

std::string poly_to_string(const std::vector<mpq_class>& coeffs, const std::string& var) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    const mpq_class& c = coeffs[i];
    if (c == 0) continue;
    const mpq_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return first ? "0" : os.str();
}

double residual_log2(const BigFloat& residual) {
  const double l = residual.log2_abs();
  if (!std::isfinite(l)) return -std::numeric_limits<double>::infinity();
  return std::round(l * 100.0) / 100.0;
}

std::string to_json(const ClassPolyReport& report, const JsonOptions& options) {
  return dump(report_json(report, options), options);
}

std::string to_json(const SweepSummary& summary, const JsonOptions& options) {
  return dump(summary_json(summary, options), options);
}

std::string to_json(const FamilySweep& family, const JsonOptions& options) {
  json out;
  out["degree_bound"] = family.degree_bound;
  out["max_k"] = family.max_k;
  json sweeps = json::array();
  for (const auto& s : family.sweeps) sweeps.push_back(summary_json(s, options));
  out["sweeps"] = std::move(sweeps);
  return dump(out, options);
}

std::string to_json(const GaloisCheckReport& r, const JsonOptions& options) {
  json out;
  out["delta"] = r.delta;
  out["class_number"] = r.class_number;
  out["adversarial"] = r.adversarial;
  out["verdict"] = r.pass ? "PASS" : "FAIL";
  out["interpolant"] = rationals(r.interpolant);
  out["detail"] = r.detail;
  out["numerics"] = {{"prec_bits", r.prec_used}, {"residual_log2", residual_value(r.residual)}};
  return dump(out, options);
}

std::string to_json(const JacobianScan& scan, const RationalFunction2& f, const JsonOptions& options) {
  json out;
  out["f"] = f.to_string();
  out["any_nonzero"] = scan.any_nonzero;
  out["all_nonzero"] = scan.all_nonzero;
  json entries = json::array();
  for (const auto& e : scan.entries) {
    json row;
    row["y"] = e.y.to_fixed(12);
    row["pole"] = e.pole;
    row["nonzero"] = e.nonzero;
    if (e.sample) {
      row["jacobian"] = e.sample->jacobian_value.to_string(20);
      row["step_log2"] = static_cast<long>(std::lround(e.sample->step_used.log2_abs()));
    } else {
      row["jacobian"] = nullptr;
      row["step_log2"] = nullptr;
    }
    entries.push_back(std::move(row));
  }
  out["entries"] = std::move(entries);
  return dump(out, options);
}

std::string to_csv(const SweepSummary& summary, bool timing) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const auto& r : summary.reports) out += csv_row(r, timing);
  return out;
}

std::string to_csv(const ClassPolyReport& report, bool timing) {
  return std::string(kCsvHeader) + "\n" + csv_row(report, timing);
}

std::filesystem::path write_anomaly_artifact(const std::filesystem::path& dir, const ClassPolyReport& report,
                                             const PrecisionContext& ctx) {
  std::filesystem::create_directories(dir);
  std::string tag;
  for (char c : report.f) {
    if (std::isalnum(static_cast<unsigned char>(c))) tag += c;
    else if (!tag.empty() && tag.back() != '_') tag += '_';
  }
  while (!tag.empty() && tag.back() == '_') tag.pop_back();
  const auto path = dir / ("anomaly_" + tag + "_d" + std::to_string(-report.delta) + ".json");

  json out;
  out["kind"] = "class-polynomial-anomaly";
  out["reason"] = report.anomaly ? *report.anomaly : std::string("k > 1");
  out["f"] = report.f;
  out["delta"] = report.delta;
  out["precision"] = {{"prec_bits", ctx.prec_bits}, {"guard_bits", ctx.guard_bits}, {"max_prec_bits", ctx.max_prec_bits}};
  out["reproduce"] = "ahm classpoly --f '" + report.f + "' --delta " + std::to_string(report.delta) + " --prec " +
                     std::to_string(ctx.prec_bits) + " --max-prec " + std::to_string(ctx.max_prec_bits) +
                     " --format json";
  out["report"] = report_json(report, JsonOptions{});
  std::ofstream os(path, std::ios::binary);
  os << out.dump(2) << "\n";
  if (!os) throw std::runtime_error("cannot write anomaly artifact " + path.string());
  return path;
}

}  // namespace ahm
