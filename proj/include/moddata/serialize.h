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

// JSON interchange: cyclotomic numbers, modular data, reports and the
// results of the analysis routines.
//
// CycloNum: {"conductor": M, "coeffs": ["p/q", ...]} in the power basis. The
// parser also accepts a bare integer or a rational string.
// Datum: {"labels": [...], "unit": "o", "star": {"a": "a*", ...},
//         "S": [[CycloNum, ...], ...], "T": [CycloNum, ...]}.

#ifndef MODDATA_SERIALIZE_H_
#define MODDATA_SERIALIZE_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "moddata/constructors.h"
#include "moddata/cyclotomic.h"
#include "moddata/datum.h"
#include "moddata/extension.h"
#include "moddata/fusion.h"
#include "moddata/galois.h"
#include "moddata/matrix.h"
#include "moddata/report.h"

namespace moddata {

using Json = nlohmann::ordered_json;

// Largest conductor accepted by the parsers: MODDATA_CONDUCTOR_LIMIT if set,
// else 65536.
int default_conductor_limit();

Json cyclo_to_json(const CycloNum& x);
// `path` prefixes SchemaError messages. Conductors above `conductor_limit`
// raise TooLarge.
CycloNum cyclo_from_json(const Json& j, const std::string& path = "$",
                         int conductor_limit = default_conductor_limit());

Json matrix_to_json(const CycloMatrix& m);

Json datum_to_json(const ModularDatum& d);
ModularDatum datum_from_json(const Json& j, int conductor_limit = default_conductor_limit());

// Pretty-printed with two-space indentation and a trailing newline.
std::string serialize_datum(const ModularDatum& d);
// Throws SchemaError with a JSON path for malformed input, including a star
// map that is not an involution on the labels.
ModularDatum parse_datum(std::string_view text, int conductor_limit = default_conductor_limit());

Json report_to_json(const Report& r);
Json datum_report_to_json(const DatumReport& r);
Json fusion_table_to_json(const FusionTable& t, const ModularDatum& d);
Json permutation_to_json(const GaloisPermutation& p, const ModularDatum& d);
Json fusion_symbols_to_json(const FusionSymbolTable& t);
Json extension_to_json(const ExtendedDatum& e);
Json congruence_report_to_json(const CongruenceReport& r);
Json mat2_to_json(const Mat2& m);
Json cocycle_verdict_to_json(const CocycleVerdict& v);

}  // namespace moddata

#endif  // MODDATA_SERIALIZE_H_
