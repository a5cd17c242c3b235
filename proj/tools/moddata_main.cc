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

// moddata: command-line front end for the modular data library.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "moddata/analysis.h"
#include "moddata/constructors.h"
#include "moddata/datum.h"
#include "moddata/error.h"
#include "moddata/fusion.h"
#include "moddata/serialize.h"

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct Options {
  bool json = false;
  bool extensions = false;
  bool projective = false;
  bool check = false;
  int64_t max_group_order = moddata::default_max_group_order();
  int conductor_limit = moddata::default_conductor_limit();
  int64_t level = 0;
  int64_t n = 0;
  int64_t zeta = 1;
  std::optional<int64_t> q;
  std::string source;
  std::vector<std::string> factors;
};

int emit(const moddata::Json& j, bool json) {
  if (json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << moddata::render_text(j);
  }
  return j.value("passed", false) ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace moddata;
  Options opt;
  CLI::App app{"Exact verification and analysis of modular data."};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", opt.json, "Machine-readable output");
  app.add_option("--max-group-order", opt.max_group_order,
                 "Largest |SL(2,Z_M)| to enumerate (env MODDATA_MAX_GROUP_ORDER)")
      ->check(CLI::PositiveNumber);
  app.add_option("--conductor-limit", opt.conductor_limit,
                 "Largest conductor accepted in input (env MODDATA_CONDUCTOR_LIMIT)")
      ->check(CLI::PositiveNumber);

  auto with_source = [&](CLI::App* cmd) {
    cmd->add_option("datum", opt.source, "Datum JSON file or gen:semion, gen:trivial, gen:radford:N[:E]")
        ->required();
    return cmd;
  };
  CLI::App* analyze_cmd = with_source(app.add_subcommand("analyze", "Run the full analysis chain"));
  analyze_cmd->add_flag("--extensions", opt.extensions, "Include extensions and congruence");
  CLI::App* validate_cmd = with_source(app.add_subcommand("validate", "Check the axioms"));
  CLI::App* fusion_cmd = with_source(app.add_subcommand("fusion-table", "Verlinde fusion coefficients"));
  CLI::App* galois_cmd = with_source(app.add_subcommand("galois-check", "Galois action on the index set"));
  CLI::App* symbols_cmd = with_source(app.add_subcommand("symbols", "Fusion symbol table and sign theorems"));
  CLI::App* ext_cmd = with_source(app.add_subcommand("extensions", "The twelve extensions"));
  CLI::App* cong_cmd = with_source(app.add_subcommand("congruence", "Factoring through SL(2,Z_M)"));
  cong_cmd->add_option("--level", opt.level, "Level M")->required()->check(CLI::PositiveNumber);
  cong_cmd->add_flag("--projective", opt.projective, "Only the projective check");
  CLI::App* lift_cmd = with_source(app.add_subcommand("lift-search", "Extensions factoring at level M"));
  lift_cmd->add_option("--level", opt.level, "Level M")->required()->check(CLI::PositiveNumber);

  CLI::App* gen_cmd = app.add_subcommand("gen", "Print a built-in datum as JSON");
  gen_cmd->require_subcommand(1);
  CLI::App* gen_radford = gen_cmd->add_subcommand("radford", "Radford datum of Z_n, n odd");
  gen_radford->add_option("--n", opt.n, "Group order")->required();
  gen_radford->add_option("--zeta", opt.zeta, "Exponent of the chosen primitive root");
  CLI::App* gen_semion = gen_cmd->add_subcommand("semion", "Semion datum");
  CLI::App* gen_trivial = gen_cmd->add_subcommand("trivial", "Trivial datum");
  CLI::App* gen_product = gen_cmd->add_subcommand("product", "Kronecker product of two data");
  gen_product->add_option("factors", opt.factors, "Two datum sources")->required()->expected(2);

  CLI::App* gauss_cmd = app.add_subcommand("gauss-sum", "Classical Gauss sum and its lemma table");
  gauss_cmd->add_option("--n", opt.n, "Modulus")->required()->check(CLI::PositiveNumber);
  gauss_cmd->add_option("--q", opt.q, "Multiplier");
  CLI::App* cocycle_cmd = app.add_subcommand("cocycle", "Cyclic 3-cocycle omega(i,j,k)");
  cocycle_cmd->add_option("--n", opt.n, "Group order")->required()->check(CLI::PositiveNumber);
  cocycle_cmd->add_option("--zeta", opt.zeta, "Exponent of the chosen root of unity");
  cocycle_cmd->add_flag("--check", opt.check, "Verify normalization and the cocycle identity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    auto datum = [&] { return resolve_datum(opt.source, opt.conductor_limit); };
    if (analyze_cmd->parsed()) {
      AnalysisOptions a;
      a.extensions = opt.extensions;
      a.max_group_order = opt.max_group_order;
      const AnalysisBundle b = analyze(datum(), a);
      return emit(bundle_to_json(b), opt.json);
    }
    if (validate_cmd->parsed()) return emit(validate_json(datum()), opt.json);
    if (fusion_cmd->parsed()) {
      const ModularDatum d = datum();
      const Json j = fusion_table_json(d);
      if (opt.json) return emit(j, true);
      std::cout << fusion_table_text(fusion_coefficients(d), d);
      Json rest = j;
      rest.erase("table");
      return emit(rest, false);
    }
    if (galois_cmd->parsed()) return emit(galois_check_json(datum()), opt.json);
    if (symbols_cmd->parsed()) return emit(symbols_json(datum()), opt.json);
    if (ext_cmd->parsed()) return emit(extensions_json(datum()), opt.json);
    if (cong_cmd->parsed()) {
      return emit(congruence_json(datum(), opt.level, opt.projective, opt.max_group_order), opt.json);
    }
    if (lift_cmd->parsed()) return emit(lift_search_json(datum(), opt.level, opt.max_group_order), opt.json);
    if (gen_cmd->parsed()) {
      std::optional<ModularDatum> d;
      if (gen_radford->parsed()) d = radford_datum(opt.n, opt.zeta);
      if (gen_semion->parsed()) d = semion_datum();
      if (gen_trivial->parsed()) d = trivial_datum();
      if (gen_product->parsed()) {
        d = kronecker_product(resolve_datum(opt.factors[0], opt.conductor_limit),
                              resolve_datum(opt.factors[1], opt.conductor_limit));
      }
      std::cout << serialize_datum(*d);
      return 0;
    }
    if (gauss_cmd->parsed()) return emit(gauss_sum_json(opt.n, opt.q), opt.json);
    if (cocycle_cmd->parsed()) {
      return emit(cocycle_json(static_cast<int>(opt.n), opt.zeta, opt.check), opt.json);
    }
  } catch (const Error& e) {
    std::cerr << "moddata: " << e.what() << "\n";
    if (e.code() == ErrorCode::kTooLarge) return kExitResource;
    if (e.code() == ErrorCode::kSchemaError) return kExitUsage;
    return kExitCheckFailed;
  }
  return kExitUsage;
}
