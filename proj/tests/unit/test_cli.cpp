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

#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "ahm");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = ahm::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("forms") {
  Result r = run({"forms", "--delta", "-23", "--format", "csv"});
  CHECK(r.code == ahm::cli::kOk);
  CHECK(count_lines(r.out) == 4);  // header and three forms
  Result one = run({"forms", "--delta", "-4", "--format", "json"});
  CHECK(one.code == 0);
  json j = json::parse(one.out);
  REQUIRE(j["forms"].size() == 1);
  Result bad = run({"forms", "--delta", "5"});
  CHECK(bad.code == ahm::cli::kInvalidDiscriminant);
  CHECK(bad.err.find("InvalidDiscriminant") != std::string::npos);
}

TEST_CASE("eval") {
  Result chi = run({"eval", "--f", "chi", "--tau", "i"});
  CHECK(chi.code == 0);
  CHECK(chi.out.find("0.000") != std::string::npos);
  CHECK(chi.out.find("-0.000") == std::string::npos);
  Result j = run({"eval", "--f", "j", "--tau", "0+1i"});
  CHECK(j.code == 0);
  CHECK(j.out.find("1728.000") != std::string::npos);
  Result form = run({"eval", "--f", "j", "--tau", "1,0,1", "--format", "json"});
  CHECK(form.code == 0);
  CHECK(json::parse(form.out).contains("value"));
  CHECK(run({"eval", "--f", "1/(j-1728)", "--tau", "i"}).code == ahm::cli::kPole);
  CHECK(run({"eval", "--f", "j+", "--tau", "i"}).code == ahm::cli::kParseError);
  CHECK(run({"eval", "--f", "j^3", "--degree-bound", "2", "--tau", "i"}).code == ahm::cli::kParseError);
  CHECK(run({"eval", "--f", "j", "--tau", "nonsense"}).code == ahm::cli::kUsage);
}

TEST_CASE("classpoly") {
  Result r = run({"classpoly", "--f", "j", "--delta", "-23", "--format", "json"});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["H"] == json::array({"12771880859375", "-5151296875", "3491750", "1"}));
  CHECK(j["k"] == 1);
  CHECK(run({"classpoly", "--f", "j", "--delta", "-399", "--prec", "64", "--max-prec", "96"}).code ==
        ahm::cli::kPrecisionExhausted);
  CHECK(run({"classpoly", "--f", "1/chi", "--delta", "-3"}).code == ahm::cli::kPole);
  CHECK(run({"classpoly", "--f", "j", "--delta", "-5"}).code == ahm::cli::kInvalidDiscriminant);
}

TEST_CASE("anomaly exit and artifact") {
  const auto dir = std::filesystem::temp_directory_path() / "ahm_cli_anomaly";
  std::filesystem::remove_all(dir);
  Result r = run({"classpoly", "--f", "j^2 + 191025*j - 121287375", "--delta", "-15", "--expect-irreducible",
                  "--anomaly-dir", dir.string(), "--format", "json"});
  CHECK(r.code == ahm::cli::kAnomaly);
  CHECK(json::parse(r.out)["k"] == 2);
  int files = 0;
  if (std::filesystem::exists(dir))
    for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir)) ++files;
  CHECK(files == 1);
  std::filesystem::remove_all(dir);
}

TEST_CASE("galois-check") {
  Result pass = run({"galois-check", "--delta", "-31"});
  CHECK(pass.code == 0);
  CHECK(pass.out.find("PASS") != std::string::npos);
  Result adv = run({"galois-check", "--delta", "-23", "--adversarial", "--max-prec", "2048"});
  CHECK(adv.code == 0);
  CHECK(adv.out.find("FAIL") != std::string::npos);
}

TEST_CASE("sweep") {
  Result r = run({"sweep", "--f", "chi", "--from", "-3", "--to", "-100", "--fundamental", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("delta,h,k,irreducible,deg_p,residual_log2,prec_bits,ms\n", 0) == 0);
  // Byte-identical output across runs and worker counts.
  Result again = run({"sweep", "--f", "chi", "--from", "-100", "--to", "-3", "--fundamental", "--format", "csv",
                      "--jobs", "1"});
  CHECK(again.out == r.out);
  Result pole = run({"sweep", "--f", "1/(j-1728)", "--from", "-3", "--to", "-12", "--format", "json"});
  CHECK(pole.code == 0);
  CHECK(json::parse(pole.out)["failures"].size() == 1);
  CHECK(run({"sweep", "--f", "j^2 + 191025*j - 121287375", "--from", "-15", "--to", "-15",
             "--expect-irreducible"}).code == ahm::cli::kAnomaly);
  CHECK(run({"sweep", "--f", "chi", "--from", "-3", "--to", "4"}).code == ahm::cli::kUsage);
}

TEST_CASE("jacobian-scan") {
  Result r = run({"jacobian-scan", "--f", "chi", "--samples", "4", "--format", "json"});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["entries"].size() == 4);
  CHECK(j["any_nonzero"] == true);
}

TEST_CASE("usage errors and help") {
  CHECK(run({}).code == ahm::cli::kUsage);
  CHECK(run({"frobnicate"}).code == ahm::cli::kUsage);
  CHECK(run({"classpoly", "--delta", "-23"}).code == ahm::cli::kUsage);
  CHECK(run({"forms", "--delta", "-23", "--prec", "12"}).code == ahm::cli::kUsage);
  CHECK(run({"--help"}).code == ahm::cli::kOk);
}

TEST_CASE("output file") {
  const auto path = std::filesystem::temp_directory_path() / "ahm_cli_output.json";
  std::filesystem::remove(path);
  Result r = run({"classpoly", "--f", "chi", "--delta", "-7", "--format", "json", "--output", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  json j = json::parse(in);
  CHECK(j["H"] == json::array({"1215", "1"}));
  std::filesystem::remove(path);
}

}  // TEST_SUITE
