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

#include "moddata/serialize.h"

#include <cstdlib>
#include <map>

#include "moddata/error.h"

namespace moddata {

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::kSchemaError, path + ": " + what);
}

const Json& require(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(path, std::string("missing \"") + key + "\"");
  return *it;
}

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      schema_error(path, e.what());
    }
  }
  schema_error(path, "expected an integer or a rational string");
}

std::string index_path(const std::string& path, size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

}  // namespace

int default_conductor_limit() {
  if (const char* env = std::getenv("MODDATA_CONDUCTOR_LIMIT")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return 65536;
}

Json cyclo_to_json(const CycloNum& x) {
  Json coeffs = Json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(rational_to_string(c));
  return Json{{"conductor", x.conductor()}, {"coeffs", std::move(coeffs)}};
}

CycloNum cyclo_from_json(const Json& j, const std::string& path, int conductor_limit) {
  if (j.is_number_integer() || j.is_string()) return CycloNum(rational_from_json(j, path));
  const Json& conductor = require(j, "conductor", path);
  const Json& coeffs = require(j, "coeffs", path);
  if (!conductor.is_number_integer() || conductor.get<int64_t>() < 1) {
    schema_error(path + ".conductor", "expected a positive integer");
  }
  const int64_t m = conductor.get<int64_t>();
  if (m > conductor_limit) {
    throw Error(ErrorCode::kTooLarge, path + ".conductor: " + std::to_string(m) +
                                          " exceeds conductor limit " +
                                          std::to_string(conductor_limit));
  }
  if (!coeffs.is_array()) schema_error(path + ".coeffs", "expected an array");
  if (static_cast<int64_t>(coeffs.size()) != euler_phi(m)) {
    schema_error(path + ".coeffs", "expected " + std::to_string(euler_phi(m)) + " coefficients");
  }
  std::vector<Rational> values;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    values.push_back(rational_from_json(coeffs[i], index_path(path + ".coeffs", i)));
  }
  try {
    return CycloNum(static_cast<int>(m), std::move(values));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kTooLarge) throw;
    schema_error(path, e.what());
  }
}

Json matrix_to_json(const CycloMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(cyclo_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json datum_to_json(const ModularDatum& d) {
  Json star = Json::object();
  for (int i = 0; i < d.size(); ++i) star[d.label(i)] = d.label(d.star(i));
  Json t = Json::array();
  for (const auto& x : d.t()) t.push_back(cyclo_to_json(x));
  return Json{{"labels", d.labels()},
              {"unit", d.label(d.unit())},
              {"star", std::move(star)},
              {"S", matrix_to_json(d.s())},
              {"T", std::move(t)}};
}

ModularDatum datum_from_json(const Json& j, int conductor_limit) {
  const Json& labels_j = require(j, "labels", "$");
  if (!labels_j.is_array() || labels_j.empty()) schema_error("$.labels", "expected a nonempty array");
  std::vector<std::string> labels;
  std::map<std::string, int> index;
  for (size_t i = 0; i < labels_j.size(); ++i) {
    if (!labels_j[i].is_string()) schema_error(index_path("$.labels", i), "expected a string");
    labels.push_back(labels_j[i].get<std::string>());
    if (!index.emplace(labels.back(), static_cast<int>(i)).second) {
      schema_error(index_path("$.labels", i), "duplicate label \"" + labels.back() + "\"");
    }
  }
  const int m = static_cast<int>(labels.size());
  auto lookup = [&](const Json& v, const std::string& path) {
    if (!v.is_string()) schema_error(path, "expected a label");
    auto it = index.find(v.get<std::string>());
    if (it == index.end()) schema_error(path, "unknown label \"" + v.get<std::string>() + "\"");
    return it->second;
  };
  const int unit = lookup(require(j, "unit", "$"), "$.unit");

  const Json& star_j = require(j, "star", "$");
  if (!star_j.is_object()) schema_error("$.star", "expected an object");
  std::vector<int> star(m, -1);
  for (auto it = star_j.begin(); it != star_j.end(); ++it) {
    const std::string path = "$.star." + it.key();
    auto from = index.find(it.key());
    if (from == index.end()) schema_error(path, "unknown label \"" + it.key() + "\"");
    star[from->second] = lookup(it.value(), path);
  }
  for (int i = 0; i < m; ++i) {
    if (star[i] < 0) schema_error("$.star", "no image for \"" + labels[i] + "\"");
  }
  for (int i = 0; i < m; ++i) {
    if (star[star[i]] != i) {
      schema_error("$.star." + labels[i], "star is not an involution");
    }
  }

  const Json& s_j = require(j, "S", "$");
  if (!s_j.is_array() || static_cast<int>(s_j.size()) != m) {
    schema_error("$.S", "expected " + std::to_string(m) + " rows");
  }
  CycloMatrix s(m, m);
  for (int r = 0; r < m; ++r) {
    const std::string row_path = index_path("$.S", r);
    if (!s_j[r].is_array() || static_cast<int>(s_j[r].size()) != m) {
      schema_error(row_path, "expected " + std::to_string(m) + " entries");
    }
    for (int c = 0; c < m; ++c) s(r, c) = cyclo_from_json(s_j[r][c], index_path(row_path, c), conductor_limit);
  }
  const Json& t_j = require(j, "T", "$");
  if (!t_j.is_array() || static_cast<int>(t_j.size()) != m) {
    schema_error("$.T", "expected " + std::to_string(m) + " entries");
  }
  std::vector<CycloNum> t;
  for (int i = 0; i < m; ++i) t.push_back(cyclo_from_json(t_j[i], index_path("$.T", i), conductor_limit));
  try {
    return ModularDatum(std::move(labels), unit, std::move(star), std::move(s), std::move(t));
  } catch (const Error& e) {
    schema_error("$", e.what());
  }
}

std::string serialize_datum(const ModularDatum& d) { return datum_to_json(d).dump(2) + "\n"; }

ModularDatum parse_datum(std::string_view text, int conductor_limit) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    schema_error("$", e.what());
  }
  return datum_from_json(j, conductor_limit);
}

Json report_to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks()) {
    checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"asserted", c.asserted},
                          {"detail", c.detail}});
  }
  Json values = Json::object();
  for (const auto& [k, v] : r.values()) values[k] = v;
  return Json{{"title", r.title()}, {"passed", r.passed()}, {"checks", std::move(checks)},
              {"values", std::move(values)}};
}

Json datum_report_to_json(const DatumReport& r) {
  Json dims = Json::array();
  for (const auto& x : r.dims) dims.push_back(cyclo_to_json(x));
  return Json{{"n", cyclo_to_json(r.n)},       {"N", r.N},
              {"N_o", r.N_o},                  {"dims", std::move(dims)},
              {"g", cyclo_to_json(r.g)},       {"g_rec", cyclo_to_json(r.g_rec)},
              {"normalized", r.normalized},    {"integral", r.integral}};
}

Json fusion_table_to_json(const FusionTable& t, const ModularDatum& d) {
  Json n = Json::array();
  for (int i = 0; i < t.size(); ++i) {
    Json plane = Json::array();
    for (int j = 0; j < t.size(); ++j) {
      Json row = Json::array();
      for (int k = 0; k < t.size(); ++k) row.push_back(t(i, j, k));
      plane.push_back(std::move(row));
    }
    n.push_back(std::move(plane));
  }
  return Json{{"labels", d.labels()}, {"N", std::move(n)}, {"violations", t.violations()}};
}

Json permutation_to_json(const GaloisPermutation& p, const ModularDatum& d) {
  Json image = Json::array();
  for (int i : p.perm) image.push_back(d.label(i));
  return Json{{"q", p.q}, {"modulus", p.modulus}, {"image", std::move(image)}};
}

Json fusion_symbols_to_json(const FusionSymbolTable& t) {
  Json values = Json::array();
  for (const auto& v : t.values) values.push_back(cyclo_to_json(v));
  return Json{{"modulus", t.modulus}, {"values", std::move(values)}};
}

Json extension_to_json(const ExtendedDatum& e) {
  Json c = nullptr;
  try {
    c = additive_charge(e);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::kChargeOrderTooLarge) throw;
  }
  return Json{{"D", cyclo_to_json(e.D)},
              {"ell", cyclo_to_json(e.ell)},
              {"is_rank", e.is_rank},
              {"c", std::move(c)}};
}

Json mat2_to_json(const Mat2& m) { return Json::array({Json::array({m.a, m.b}), Json::array({m.c, m.d})}); }

Json congruence_report_to_json(const CongruenceReport& r) {
  Json out{{"modulus", r.modulus},
           {"group_order", r.group_order},
           {"linear_factors", r.linear_factors},
           {"projective_factors", r.projective_factors}};
  if (r.witness) {
    out["witness"] = Json{{"element", mat2_to_json(r.witness->element)},
                          {"tree_word", r.witness->tree_word},
                          {"edge_word", r.witness->edge_word},
                          {"tree_matrix", matrix_to_json(r.witness->tree_matrix)},
                          {"edge_matrix", matrix_to_json(r.witness->edge_matrix)}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

Json cocycle_verdict_to_json(const CocycleVerdict& v) {
  Json witness = nullptr;
  if (v.witness) witness = Json::array({(*v.witness)[0], (*v.witness)[1], (*v.witness)[2], (*v.witness)[3]});
  return Json{{"normalized", v.normalized}, {"cocycle", v.cocycle}, {"witness", std::move(witness)}};
}

}  // namespace moddata
