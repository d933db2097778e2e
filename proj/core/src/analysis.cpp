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

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "ahm/analysis.hpp"
#include "ahm/errors.hpp"

namespace ahm {

ClassPolyReport class_poly_report(const RationalFunction2& f, const Discriminant& delta,
                                  const PrecisionContext& ctx, const ReportOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  ClassPolyReport rep;
  rep.delta = delta.value();
  rep.class_number = class_number(delta);
  rep.fundamental = delta.is_fundamental();
  rep.delta_mod_24 = static_cast<int>(((delta.value() % 24) + 24) % 24);
  rep.f = f.to_string();

  ExactClassPoly ex = exact_class_poly(f, delta, ctx, options.use_heuristic);
  rep.h = std::move(ex.h);
  rep.prec_used = ex.prec_used;
  if (rep.h.degree() != rep.class_number)
    throw std::logic_error("class polynomial degree differs from the class number");

  const bool expect = options.expect_irreducible || f == RationalFunction2::chi();
  const IntegerPoly hz = clear_denominators(rep.h.coeffs);
  try {
    PowerDecomposition dec = perfect_power_decompose(hz);
    if (dec.exponent * dec.base.degree() != rep.h.degree())
      throw std::logic_error("deg H != k deg p after decomposition");
    rep.p = to_monic_rational(dec.base);
    rep.k = dec.exponent;
    rep.certificate = is_irreducible(dec.base);
    const bool base_irreducible = rep.certificate.verdict == Verdict::irreducible;
    rep.irreducible = base_irreducible && rep.k == 1;
    if (!base_irreducible) {
      rep.anomaly = "the base of H = p^k is reducible";
    } else if (expect && rep.k > 1) {
      rep.anomaly = "H = p^" + std::to_string(rep.k) + " is not irreducible";
    }
  } catch (const NotAPerfectPower& e) {
    rep.p.clear();
    rep.k = 0;
    rep.anomaly = std::string("H is not a power of an irreducible polynomial: ") + e.what();
  }
  rep.wall_time_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::vector<Discriminant> discriminants_in_range(std::int64_t delta_min, std::int64_t delta_max,
                                                 bool fundamental_only) {
  std::vector<Discriminant> out;
  if (delta_min > delta_max) return out;
  if (delta_max >= 0) throw std::invalid_argument("sweep range must consist of negative integers");
  for (std::int64_t d = delta_max; d >= delta_min; --d) {
    if (!Discriminant::is_valid(d)) continue;
    Discriminant disc(d);
    if (fundamental_only && !disc.is_fundamental()) continue;
    out.push_back(disc);
  }
  return out;
}

SweepSummary sweep(const RationalFunction2& f, std::int64_t delta_min, std::int64_t delta_max,
                   const SweepFilters& filters, const PrecisionContext& ctx, const SweepOptions& options) {
  ctx.validate();
  if (is_constant(f)) throw NonconstantRequired("sweep: f must be nonconstant");
  SweepSummary summary;
  summary.f = f.to_string();
  summary.delta_min = delta_min;
  summary.delta_max = delta_max;
  summary.fundamental_only = filters.fundamental_only;

  const std::vector<Discriminant> discs = discriminants_in_range(delta_min, delta_max, filters.fundamental_only);
  std::vector<std::optional<ClassPolyReport>> reports(discs.size());
  std::vector<std::string> errors(discs.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    const PrecisionContext local = ctx;
    for (std::size_t i = next++; i < discs.size(); i = next++) {
      try {
        reports[i] = class_poly_report(f, discs[i], local, options.report);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  unsigned jobs = options.jobs > 0 ? static_cast<unsigned>(options.jobs) : std::thread::hardware_concurrency();
  jobs = std::clamp<unsigned>(jobs, 1u, static_cast<unsigned>(std::max<std::size_t>(discs.size(), 1)));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }

  for (std::size_t i = 0; i < discs.size(); ++i) {
    if (reports[i]) {
      summary.max_k = std::max(summary.max_k, reports[i]->k);
      if (reports[i]->anomaly) summary.anomalies.push_back(reports[i]->delta);
      summary.reports.push_back(*std::move(reports[i]));
    } else {
      summary.failures.push_back({discs[i].value(), errors[i]});
    }
  }
  return summary;
}

FamilySweep family_sweep(const std::vector<RationalFunction2>& family, int degree_bound,
                         std::int64_t delta_min, std::int64_t delta_max, const SweepFilters& filters,
                         const PrecisionContext& ctx, const SweepOptions& options) {
  for (const auto& f : family) {
    if (is_constant(f)) throw NonconstantRequired("family member " + f.to_string() + " is constant");
    if (f.degree() > degree_bound)
      throw DegreeBoundExceeded("family member " + f.to_string() + " exceeds degree " +
                                std::to_string(degree_bound));
  }
  FamilySweep out;
  out.degree_bound = degree_bound;
  for (const auto& f : family) {
    out.sweeps.push_back(sweep(f, delta_min, delta_max, filters, ctx, options));
    out.max_k = std::max(out.max_k, out.sweeps.back().max_k);
  }
  return out;
}

}  // namespace ahm
