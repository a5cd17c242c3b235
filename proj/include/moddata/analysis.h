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

// The analysis pipeline behind the command-line tool. Every command is a
// function from parsed arguments to a JSON document with a top-level
// "passed" flag; the tool only parses arguments and prints.

#ifndef MODDATA_ANALYSIS_H_
#define MODDATA_ANALYSIS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "moddata/datum.h"
#include "moddata/fusion.h"
#include "moddata/report.h"
#include "moddata/serialize.h"
#include "moddata/sl2.h"

namespace moddata {

struct AnalysisOptions {
  bool extensions = false;
  int64_t max_group_order = default_max_group_order();
};

struct AnalysisBundle {
  ModularDatum datum;
  std::optional<DatumReport> report;  // absent if validation failed
  // One report per library operation, in pipeline order.
  std::vector<Report> sections;

  bool passed() const;
};

// validate -> derived quantities -> structural identities -> fusion ->
// Galois -> fusion symbols -> sign theorems -> divisibility, then with
// options.extensions the extension family and congruence classification.
// Stops after validation if the axioms fail.
AnalysisBundle analyze(const ModularDatum& d, const AnalysisOptions& options = {});

Json bundle_to_json(const AnalysisBundle& b);

// "gen:semion", "gen:trivial", "gen:radford:N" or "gen:radford:N:E", else a
// path to a datum JSON file. Throws SchemaError for unreadable files.
ModularDatum resolve_datum(std::string_view source, int conductor_limit = default_conductor_limit());

Json validate_json(const ModularDatum& d);
Json fusion_table_json(const ModularDatum& d);
Json galois_check_json(const ModularDatum& d);
Json symbols_json(const ModularDatum& d);
Json extensions_json(const ModularDatum& d);
// Projective factoring of (S, T) at level m is the asserted check; unless
// projective_only, the lifts at level m are listed as data.
Json congruence_json(const ModularDatum& d, int64_t m, bool projective_only,
                     int64_t max_order = default_max_group_order());
Json lift_search_json(const ModularDatum& d, int64_t m,
                      int64_t max_order = default_max_group_order());
Json gauss_sum_json(int64_t n, std::optional<int64_t> multiplier);
Json cocycle_json(int n, int64_t zeta_exponent, bool check);

// Human-readable rendering of any of the documents above. Reports become
// sections with one line per check; cyclotomic numbers are printed as sums
// of roots of unity.
std::string render_text(const Json& j);
// Aligned table of products b_i b_j = sum_k N_ij^k b_k.
std::string fusion_table_text(const FusionTable& t, const ModularDatum& d);

}  // namespace moddata

#endif  // MODDATA_ANALYSIS_H_
