// Copyright 2026 The moddata Authors
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

// Runs the moddata binary and compares its output with direct library calls.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "moddata/analysis.h"
#include "moddata/constructors.h"
#include "moddata/datum.h"
#include "moddata/serialize.h"

namespace moddata {
namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult RunCli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + MODDATA_CLI_PATH + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string Dumped(const Json& j) { return j.dump(2) + "\n"; }

std::string TempFile(const std::string& name, const std::string& contents) {
  const std::filesystem::path p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << contents;
  return p.string();
}

TEST(CliTest, GenMatchesSerializer) {
  EXPECT_EQ(RunCli("gen semion").out, serialize_datum(semion_datum()));
  EXPECT_EQ(RunCli("gen trivial").out, serialize_datum(trivial_datum()));
  EXPECT_EQ(RunCli("gen radford --n 5 --zeta 2").out, serialize_datum(radford_datum(5, 2)));
  const std::string a = TempFile("moddata_cli_a.json", serialize_datum(semion_datum()));
  const std::string b = TempFile("moddata_cli_b.json", serialize_datum(radford_datum(3)));
  const RunResult r = RunCli("gen product " + a + " " + b);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, serialize_datum(kronecker_product(semion_datum(), radford_datum(3))));
}

TEST(CliTest, AnalyzeSemionWithExtensions) {
  AnalysisOptions options;
  options.extensions = true;
  const Json expected = bundle_to_json(analyze(semion_datum(), options));
  const RunResult r = RunCli("--json analyze gen:semion --extensions");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, Dumped(expected));
  const RunResult text = RunCli("analyze gen:semion --extensions");
  EXPECT_EQ(text.exit_code, 0);
  EXPECT_NE(text.out.find("[note] g-fourth-equals-reciprocal-fourth: true"), std::string::npos)
      << text.out;
  EXPECT_NE(text.out.find("[note] g-squared-equals-reciprocal-squared: false"), std::string::npos);
}

TEST(CliTest, AnalyzeRadfordFiveSign) {
  const RunResult r = RunCli("--json analyze gen:radford:5");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, Dumped(bundle_to_json(analyze(radford_datum(5)))));
  const Json j = Json::parse(r.out);
  bool found = false;
  for (const auto& s : j["sections"]) {
    if (s["title"] == "odd-exponent-sign") {
      EXPECT_EQ(s["values"]["sign"], "1");
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST(CliTest, SubcommandsMatchLibrary) {
  const ModularDatum semion = semion_datum();
  EXPECT_EQ(RunCli("--json validate gen:semion").out, Dumped(validate_json(semion)));
  EXPECT_EQ(RunCli("--json fusion-table gen:radford:3").out, Dumped(fusion_table_json(radford_datum(3))));
  EXPECT_EQ(RunCli("--json galois-check gen:radford:7").out, Dumped(galois_check_json(radford_datum(7))));
  EXPECT_EQ(RunCli("--json symbols gen:semion").out, Dumped(symbols_json(semion)));
  EXPECT_EQ(RunCli("--json extensions gen:semion").out, Dumped(extensions_json(semion)));
  EXPECT_EQ(RunCli("--json lift-search gen:semion --level 8").out, Dumped(lift_search_json(semion, 8)));
  EXPECT_EQ(RunCli("--json gauss-sum --n 7 --q 3").out, Dumped(gauss_sum_json(7, 3)));
  EXPECT_EQ(RunCli("--json gauss-sum --n 8").out, Dumped(gauss_sum_json(8, std::nullopt)));
  EXPECT_EQ(RunCli("--json cocycle --n 3 --check").out, Dumped(cocycle_json(3, 1, true)));
}

TEST(CliTest, SemionCongruenceAtFour) {
  const RunResult r = RunCli("--json congruence gen:semion --level 4");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, Dumped(congruence_json(semion_datum(), 4, false)));
  const Json j = Json::parse(r.out);
  EXPECT_TRUE(j["projective"]["projective_factors"].get<bool>());
  EXPECT_TRUE(j["lifts"].empty());
  EXPECT_EQ(RunCli("congruence gen:semion --level 4 --projective").exit_code, 0);
}

TEST(CliTest, WitnessWordsUseGeneratorAlphabet) {
  const RunResult r = RunCli("--json lift-search gen:semion --level 8");
  ASSERT_EQ(r.exit_code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["count"].get<int>(), static_cast<int>(j["lifts"].size()));
  const RunResult c = RunCli("--json congruence gen:radford:5 --level 4");
  const Json cj = Json::parse(c.out);
  EXPECT_EQ(c.exit_code, cj["passed"].get<bool>() ? 0 : 1);
  const Json& w = cj["projective"]["witness"];
  if (!w.is_null()) {
    for (const char* key : {"tree_word", "edge_word"}) {
      EXPECT_EQ(w[key].get<std::string>().find_first_not_of("stST"), std::string::npos);
    }
  }
}

TEST(CliTest, ExitCodes) {
  // Check failure: the semion S with a trivial T breaks the modular relation.
  const std::string bad = TempFile("moddata_cli_bad.json", R"({"labels": ["0", "1"], "unit": "0",
      "star": {"0": "0", "1": "1"}, "S": [[1, 1], [1, -1]], "T": [1, 1]})");
  EXPECT_EQ(RunCli("validate " + bad).exit_code, 1);
  EXPECT_EQ(RunCli("analyze " + bad).exit_code, 1);
  // Usage errors.
  EXPECT_EQ(RunCli("").exit_code, 2);
  EXPECT_EQ(RunCli("no-such-command").exit_code, 2);
  EXPECT_EQ(RunCli("congruence gen:semion").exit_code, 2);
  EXPECT_EQ(RunCli("validate gen:unknown").exit_code, 2);
  const std::string broken = TempFile("moddata_cli_broken.json", "{\"labels\": [");
  EXPECT_EQ(RunCli("validate " + broken).exit_code, 2);
  // Resource bounds.
  EXPECT_EQ(RunCli("--max-group-order 100 congruence gen:semion --level 24").exit_code, 3);
  EXPECT_EQ(RunCli("congruence gen:semion --level 24", "MODDATA_MAX_GROUP_ORDER=100").exit_code, 3);
  EXPECT_EQ(RunCli("--conductor-limit 2 validate gen:semion").exit_code, 0);
  const std::string big = TempFile("moddata_cli_big.json", serialize_datum(radford_datum(5)));
  EXPECT_EQ(RunCli("--conductor-limit 4 validate " + big).exit_code, 3);
  EXPECT_EQ(RunCli("validate " + big, "MODDATA_CONDUCTOR_LIMIT=4").exit_code, 3);
}

TEST(CliTest, NonIntegralDatumSkipsGaloisStages) {
  const std::string path = std::string(MODDATA_TEST_DATA_DIR) + "/fibonacci.json";
  const RunResult r = RunCli("analyze " + path);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("[note] integral: false"), std::string::npos) << r.out;
  EXPECT_EQ(r.out.find("galois-action"), std::string::npos);
  EXPECT_EQ(RunCli("galois-check " + path).exit_code, 1);
}

TEST(CliTest, OutputIsDeterministic) {
  EXPECT_EQ(RunCli("--json symbols gen:radford:9").out, RunCli("--json symbols gen:radford:9").out);
  EXPECT_EQ(RunCli("fusion-table gen:semion").out, RunCli("fusion-table gen:semion").out);
}

}  // namespace
}  // namespace moddata
