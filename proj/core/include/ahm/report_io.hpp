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

#ifndef AHM_REPORT_IO_HPP
#define AHM_REPORT_IO_HPP

// JSON and CSV serialization of reports. Rationals are written as decimal
// strings ("p" or "p/q"), polynomials as ascending coefficient arrays. Field
// order is fixed, so identical inputs give identical bytes.

#include <filesystem>
#include <string>

#include "ahm/ahm_eval.hpp"
#include "ahm/analysis.hpp"
#include "ahm/numerics.hpp"

namespace ahm {

struct JsonOptions {
  // Include wall-clock fields; off by default to keep output reproducible.
  bool timing = false;
  int indent = 2;
};

std::string to_json(const ClassPolyReport& report, const JsonOptions& options = {});
std::string to_json(const SweepSummary& summary, const JsonOptions& options = {});
std::string to_json(const FamilySweep& family, const JsonOptions& options = {});
std::string to_json(const GaloisCheckReport& report, const JsonOptions& options = {});
std::string to_json(const JacobianScan& scan, const RationalFunction2& f, const JsonOptions& options = {});

inline constexpr const char* kCsvHeader = "delta,h,k,irreducible,deg_p,residual_log2,prec_bits,ms";

// One row per report, header first. `ms` is 0 unless timing is enabled.
std::string to_csv(const SweepSummary& summary, bool timing = false);
std::string to_csv(const ClassPolyReport& report, bool timing = false);

// Writes <dir>/anomaly_<f>_d<|delta|>.json with everything needed to rerun
// the computation; creates `dir` if needed. Returns the file path.
std::filesystem::path write_anomaly_artifact(const std::filesystem::path& dir, const ClassPolyReport& report,
                                             const PrecisionContext& ctx);

// "x^3 + 3491750*x^2 - 5151296875*x + 12771880859375" from ascending
// rational coefficients.
std::string poly_to_string(const std::vector<mpq_class>& coeffs, const std::string& var = "x");

// log2 of a nonnegative bound as printed in reports; -inf prints as null.
double residual_log2(const BigFloat& residual);

}  // namespace ahm

#endif  // AHM_REPORT_IO_HPP
