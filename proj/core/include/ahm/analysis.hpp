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

#ifndef AHM_ANALYSIS_HPP
#define AHM_ANALYSIS_HPP

// Per-discriminant verification (H = p^k, irreducibility of p), discriminant
// sweeps with k tables, and the interpolation test that the map
// j(tau_Q) -> chi*(tau_Q) is given by a polynomial over Q.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ahm/ahm_eval.hpp"
#include "ahm/classpoly.hpp"
#include "ahm/numerics.hpp"
#include "ahm/polyfactor.hpp"
#include "ahm/qform.hpp"

namespace ahm {

struct ReportOptions {
  bool use_heuristic = true;
  // Treat k > 1 or a reducible base as an anomaly. Always on for f = chi*.
  bool expect_irreducible = false;
};

struct ClassPolyReport {
  std::int64_t delta = 0;
  int class_number = 0;
  bool fundamental = false;
  int delta_mod_24 = 0;
  std::string f;
  RationalPoly h;
  std::vector<mpq_class> p;  // monic base, empty if H is not a perfect power
  int k = 0;
  // H itself is irreducible over Q: k = 1 and p certified irreducible.
  bool irreducible = false;
  IrreducibilityCertificate certificate;  // for p
  int prec_used = 0;
  std::int64_t wall_time_ms = 0;
  std::optional<std::string> anomaly;
};

// Full pipeline for one discriminant. Throws PoleAtHeegnerPoint,
// PrecisionExhausted, NonconstantRequired. A failed perfect-power
// decomposition is recorded in `anomaly`, never thrown.
ClassPolyReport class_poly_report(const RationalFunction2& f, const Discriminant& delta,
                                  const PrecisionContext& ctx, const ReportOptions& options = {});

struct SweepFilters {
  bool fundamental_only = false;
};

struct SweepOptions {
  ReportOptions report;
  int jobs = 0;  // 0: hardware concurrency
};

struct SweepFailure {
  std::int64_t delta;
  std::string error;
};

struct SweepSummary {
  std::string f;
  std::int64_t delta_min = 0;
  std::int64_t delta_max = 0;
  bool fundamental_only = false;
  std::vector<ClassPolyReport> reports;  // ordered by |delta|
  int max_k = 0;                         // 0 when there are no reports
  std::vector<SweepFailure> failures;
  std::vector<std::int64_t> anomalies;

  bool ok() const noexcept { return failures.empty() && anomalies.empty(); }
};

// Every discriminant in [delta_min, delta_max]; an empty range when
// delta_min > delta_max. Requires delta_max < 0 otherwise.
std::vector<Discriminant> discriminants_in_range(std::int64_t delta_min, std::int64_t delta_max,
                                                 bool fundamental_only);

// Per-discriminant errors land in `failures`; the sweep itself only throws
// for invalid arguments.
SweepSummary sweep(const RationalFunction2& f, std::int64_t delta_min, std::int64_t delta_max,
                   const SweepFilters& filters, const PrecisionContext& ctx, const SweepOptions& options = {});

struct FamilySweep {
  int degree_bound = 0;
  std::vector<SweepSummary> sweeps;
  int max_k = 0;  // empirical lower evidence for the family bound
};

// Throws NonconstantRequired for a constant member and DegreeBoundExceeded
// for a member above `degree_bound`.
FamilySweep family_sweep(const std::vector<RationalFunction2>& family, int degree_bound,
                         std::int64_t delta_min, std::int64_t delta_max, const SweepFilters& filters,
                         const PrecisionContext& ctx, const SweepOptions& options = {});

struct GaloisOptions {
  // Swap the chi* values of the first two forms (requires h >= 3).
  bool adversarial = false;
  bool use_heuristic = true;
};

struct GaloisCheckReport {
  std::int64_t delta = 0;
  int class_number = 0;
  bool adversarial = false;
  bool pass = false;
  std::vector<mpq_class> interpolant;  // ascending, when pass
  BigFloat residual = bound::zero();
  int prec_used = 0;
  std::string detail;
};

// Interpolates r with deg r < h and r(j(tau_Q)) = chi*(tau_Q) in the Newton
// basis, escalating precision until the coefficients rationalize (PASS) or
// the cap is reached (FAIL). Throws DuplicateNodes when two j values
// coincide numerically.
GaloisCheckReport galois_interpolation_check(const Discriminant& delta, const PrecisionContext& ctx,
                                             const GaloisOptions& options = {});

}  // namespace ahm

#endif  // AHM_ANALYSIS_HPP
