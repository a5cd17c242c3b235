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

#include "moddata/analysis.h"

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "moddata/constructors.h"
#include "moddata/error.h"
#include "moddata/extension.h"
#include "moddata/galois.h"

namespace moddata {

namespace {

// Runs one pipeline stage; a library error other than a resource bound
// becomes a failed check named after the stage.
void run_section(std::vector<Report>& out, const std::string& title,
                 const std::function<Report()>& stage) {
  try {
    out.push_back(stage());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kTooLarge) throw;
    Report r(title);
    r.add(title, false, e.what());
    out.push_back(std::move(r));
  }
}

int64_t parse_int(std::string_view text, std::string_view source) {
  const std::string s(text);
  size_t used = 0;
  int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) {
    throw Error(ErrorCode::kSchemaError, "bad integer in " + std::string(source));
  }
  return v;
}

bool projective_congruence_at_n_o(const ModularDatum& d, const DatumReport& rep,
                                  int64_t max_order) {
  return factor_check(d.s(), d.t_matrix(), rep.N_o, FactorMode::kProjective, max_order)
      .projective_factors;
}

Json extension_list(const std::vector<ExtendedDatum>& family) {
  Json list = Json::array();
  for (const auto& e : family) list.push_back(extension_to_json(e));
  return list;
}

bool is_cyclo(const Json& j) {
  return j.is_object() && j.size() == 2 && j.contains("conductor") && j.contains("coeffs");
}

bool is_report(const Json& j) {
  return j.is_object() && j.contains("title") && j.contains("checks") && j.contains("values");
}

bool is_inline(const Json& j) {
  if (is_cyclo(j) || j.is_primitive()) return true;
  if (!j.is_array()) return false;
  for (const auto& x : j) {
    if (!is_cyclo(x) && !x.is_primitive()) return false;
  }
  return true;
}

std::string inline_text(const Json& j) {
  if (is_cyclo(j)) return cyclo_from_json(j).to_string();
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    std::string s = "[";
    for (size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + inline_text(j[i]);
    return s + "]";
  }
  return j.dump();
}

void render(const Json& j, int indent, std::ostringstream& out) {
  const std::string pad(indent, ' ');
  if (is_report(j)) {
    out << pad << "== " << j["title"].get<std::string>() << " ==\n";
    for (const auto& c : j["checks"]) {
      const bool asserted = c["asserted"].get<bool>();
      const bool passed = c["passed"].get<bool>();
      out << pad << "  ";
      if (asserted) {
        out << (passed ? "[PASS] " : "[FAIL] ") << c["name"].get<std::string>();
      } else {
        out << "[note] " << c["name"].get<std::string>() << ": " << (passed ? "true" : "false");
      }
      const std::string detail = c["detail"].get<std::string>();
      if (!detail.empty()) out << "  (" << detail << ")";
      out << "\n";
    }
    for (auto it = j["values"].begin(); it != j["values"].end(); ++it) {
      out << pad << "  " << it.key() << " = " << it.value().get<std::string>() << "\n";
    }
    return;
  }
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (is_inline(it.value())) {
        out << pad << it.key() << ": " << inline_text(it.value()) << "\n";
      } else if (it.value().is_array() && !it.value().empty() && is_report(it.value()[0])) {
        render(it.value(), indent, out);
      } else {
        out << pad << it.key() << ":\n";
        render(it.value(), indent + 2, out);
      }
    }
    return;
  }
  if (j.is_array()) {
    for (const auto& x : j) {
      if (is_report(x)) {
        render(x, indent, out);
      } else if (is_inline(x)) {
        out << pad << "- " << inline_text(x) << "\n";
      } else {
        out << pad << "-\n";
        render(x, indent + 2, out);
      }
    }
    return;
  }
  out << pad << inline_text(j) << "\n";
}

}  // namespace

bool AnalysisBundle::passed() const {
  for (const auto& s : sections) {
    if (!s.passed()) return false;
  }
  return true;
}

AnalysisBundle analyze(const ModularDatum& d, const AnalysisOptions& options) {
  AnalysisBundle b{d, std::nullopt, {}};
  auto& out = b.sections;
  out.push_back(validate_axioms(d));
  if (!out.back().passed()) return b;
  b.report = derive_report(d);
  const DatumReport& rep = *b.report;

  run_section(out, "structural-identities", [&] { return verify_structural_identities(d); });
  run_section(out, "power-identities", [&] { return power_identity_check(d); });
  FusionTable table;
  run_section(out, "fusion-table", [&] {
    table = fusion_coefficients(d);
    return verify_table_laws(table, d);
  });
  run_section(out, "fusion-ring", [&] { return verify_ring_homomorphisms(d, table); });
  run_section(out, "idempotents", [&] { return verify_idempotent_laws(d, table); });

  if (!rep.integral) {
    Report r("integrality");
    r.note("integral", false, "Galois and arithmetic stages skipped");
    out.push_back(std::move(r));
    return b;
  }

  run_section(out, "galois-action", [&] { return verify_action_laws(d); });
  bool galois = false;
  run_section(out, "galois-datum", [&] {
    const GaloisVerdict v = is_galois_datum(d);
    galois = v.is_galois;
    Report r("galois-datum");
    std::string detail;
    if (v.witness) detail = "q=" + std::to_string(v.witness->first) + " at " + d.label(v.witness->second);
    r.note("galois", v.is_galois, detail);
    r.set_value("verlinde-field-index", std::to_string(verlinde_field_index(d)));
    return r;
  });
  run_section(out, "fusion-symbol", [&] { return fusion_symbol_analysis(d); });
  run_section(out, "reciprocal-gauss-identity", [&] { return reciprocal_gauss_identity(d); });
  if (galois) {
    run_section(out, "permutation-from-s-and-t", [&] {
      Report r("permutation-from-s-and-t");
      for (int64_t q : units_mod(rep.N)) {
        const int64_t q_prime = rep.N == 1 ? 0 : inverse_mod(q, rep.N);
        const Report one = relact_check(d, q, q_prime);
        const Check* c = one.find("permutation-from-s-and-t");
        r.add("permutation-from-s-and-t[q=" + std::to_string(q) + "]", c && c->passed);
      }
      return r;
    });
  }
  if (rep.N % 2 == 1) run_section(out, "odd-exponent-sign", [&] { return odd_sign_analysis(d); });

  // The flag only changes the divisibility checks when n = 2 mod 4.
  const int64_t n = is_rational(rep.n)->get_num().get_si();
  const bool want_congruence = options.extensions || n % 4 == 2;
  const bool feasible = sl2_order(rep.N_o) <= options.max_group_order;
  const bool projective =
      want_congruence && feasible && projective_congruence_at_n_o(d, rep, options.max_group_order);
  {
    Report r("projective-congruence");
    const std::string level = "level " + std::to_string(rep.N_o);
    if (!want_congruence) {
      r.note("projective-congruence", false, level + " not computed");
    } else if (!feasible) {
      r.note("projective-congruence", false, level + " over bound");
    } else {
      r.note("projective-congruence", projective, level);
    }
    out.push_back(std::move(r));
  }
  run_section(out, "divisibility",
              [&] { return arithmetic_divisibility_checks(d, galois && projective); });

  if (!options.extensions) return b;
  run_section(out, "extension-family", [&] { return extension_family_check(d); });
  std::vector<ExtendedDatum> family;
  run_section(out, "extensions", [&] {
    family = extension_family(d);
    Report r("extensions");
    r.set_value("count", std::to_string(family.size()));
    return r;
  });
  std::optional<std::vector<CongruenceClassification>> classes;
  auto classification = [&](size_t i) {
    if (!classes) classes = congruence_classify_family(family, std::nullopt, options.max_group_order);
    return (*classes)[i];
  };
  for (size_t i = 0; i < family.size(); ++i) {
    const ExtendedDatum& e = family[i];
    const std::string title = "extension[" + std::to_string(i) + "]";
    run_section(out, title, [&] {
      Report r(title);
      r.set_value("D", e.D.to_string());
      r.set_value("ell", e.ell.to_string());
      r.set_value("is_rank", e.is_rank ? "true" : "false");
      if (e.ell.pow(24) == CycloNum(1)) r.set_value("c", std::to_string(additive_charge(e)));
      homogeneous_matrices(e);
      r.add("homogeneous-relations", true);
      if (galois && projective) r.merge(central_charge_checks(e));
      if (sl2_order(rep.N_o) <= options.max_group_order) {
        r.merge(classification(i).report());
      }
      return r;
    });
  }
  return b;
}

Json bundle_to_json(const AnalysisBundle& b) {
  Json sections = Json::array();
  for (const auto& s : b.sections) sections.push_back(report_to_json(s));
  return Json{{"datum", datum_to_json(b.datum)},
              {"report", b.report ? datum_report_to_json(*b.report) : Json(nullptr)},
              {"sections", std::move(sections)},
              {"passed", b.passed()}};
}

ModularDatum resolve_datum(std::string_view source, int conductor_limit) {
  constexpr std::string_view kPrefix = "gen:";
  if (source.substr(0, kPrefix.size()) == kPrefix) {
    const std::string_view rest = source.substr(kPrefix.size());
    if (rest == "semion") return semion_datum();
    if (rest == "trivial") return trivial_datum();
    constexpr std::string_view kRadford = "radford:";
    if (rest.substr(0, kRadford.size()) == kRadford) {
      const std::string_view args = rest.substr(kRadford.size());
      const size_t colon = args.find(':');
      const int64_t n = parse_int(args.substr(0, colon), source);
      const int64_t e = colon == std::string_view::npos ? 1 : parse_int(args.substr(colon + 1), source);
      return radford_datum(n, e);
    }
    throw Error(ErrorCode::kSchemaError, "unknown generator " + std::string(source));
  }
  std::ifstream in{std::string(source)};
  if (!in) throw Error(ErrorCode::kSchemaError, "cannot read " + std::string(source));
  std::ostringstream text;
  text << in.rdbuf();
  return parse_datum(text.str(), conductor_limit);
}

Json validate_json(const ModularDatum& d) {
  const Report axioms = validate_axioms(d);
  Json out{{"axioms", report_to_json(axioms)}};
  bool passed = axioms.passed();
  if (passed) {
    const Report structural = verify_structural_identities(d);
    out["report"] = datum_report_to_json(derive_report(d));
    out["structural"] = report_to_json(structural);
    passed = structural.passed();
  }
  out["passed"] = passed;
  return out;
}

Json fusion_table_json(const ModularDatum& d) {
  const FusionTable t = fusion_coefficients(d);
  const Report laws = verify_table_laws(t, d);
  const Report ring = verify_ring_homomorphisms(d, t);
  const Report idem = verify_idempotent_laws(d, t);
  return Json{{"table", fusion_table_to_json(t, d)},
              {"laws", report_to_json(laws)},
              {"ring", report_to_json(ring)},
              {"idempotents", report_to_json(idem)},
              {"passed", laws.passed() && ring.passed() && idem.passed()}};
}

Json galois_check_json(const ModularDatum& d) {
  const DatumReport rep = derive_report(d);
  Json perms = Json::array();
  for (int64_t q : units_mod(rep.N_o)) perms.push_back(permutation_to_json(index_action(d, q), d));
  const Report laws = verify_action_laws(d);
  const GaloisVerdict v = is_galois_datum(d);
  Json witness = nullptr;
  if (v.witness) witness = Json{{"q", v.witness->first}, {"label", d.label(v.witness->second)}};
  return Json{{"N", rep.N},
              {"N_o", rep.N_o},
              {"permutations", std::move(perms)},
              {"action_laws", report_to_json(laws)},
              {"galois", v.is_galois},
              {"witness", std::move(witness)},
              {"verlinde_field_index", verlinde_field_index(d)},
              {"passed", laws.passed()}};
}

Json symbols_json(const ModularDatum& d) {
  const DatumReport rep = derive_report(d);
  const Report analysis = fusion_symbol_analysis(d);
  Json out{{"symbols", fusion_symbols_to_json(fusion_symbol_table(d))},
           {"analysis", report_to_json(analysis)}};
  bool passed = analysis.passed();
  if (rep.N % 2 == 1) {
    const Report sign = odd_sign_analysis(d);
    out["odd_sign"] = report_to_json(sign);
    passed = passed && sign.passed();
  }
  out["passed"] = passed;
  return out;
}

Json extensions_json(const ModularDatum& d) {
  const Report check = extension_family_check(d);
  return Json{{"extensions", extension_list(extension_family(d))},
              {"family_check", report_to_json(check)},
              {"passed", check.passed()}};
}

Json congruence_json(const ModularDatum& d, int64_t m, bool projective_only, int64_t max_order) {
  require_valid(d);
  const CongruenceReport pr = factor_check(d.s(), d.t_matrix(), m, FactorMode::kProjective, max_order);
  Json out{{"level", m}, {"projective", congruence_report_to_json(pr)}};
  if (!projective_only) out["lifts"] = extension_list(lift_search(d, m, max_order));
  out["passed"] = pr.projective_factors;
  return out;
}

Json lift_search_json(const ModularDatum& d, int64_t m, int64_t max_order) {
  const std::vector<ExtendedDatum> lifts = lift_search(d, m, max_order);
  return Json{{"level", m},
              {"group_order", sl2_order(m)},
              {"count", lifts.size()},
              {"lifts", extension_list(lifts)},
              {"passed", true}};
}

Json gauss_sum_json(int64_t n, std::optional<int64_t> multiplier) {
  const int64_t q = multiplier.value_or(1);
  const CycloNum g = classical_gauss_sum(n, q);
  const Report lemma = verify_gauss_lemma(n);
  Json out{{"n", n}, {"multiplier", q}, {"G", cyclo_to_json(g)}, {"G_squared", cyclo_to_json(g * g)}};
  if (n % 2 == 1) out["jacobi"] = jacobi_symbol(q, n);
  out["lemma"] = report_to_json(lemma);
  out["passed"] = lemma.passed();
  return out;
}

Json cocycle_json(int n, int64_t zeta_exponent, bool check) {
  const CocycleFn c = cocycle_omega(n, zeta_exponent);
  Json omega = Json::array();
  for (int i = 0; i < n; ++i) {
    Json plane = Json::array();
    for (int j = 0; j < n; ++j) {
      Json row = Json::array();
      for (int k = 0; k < n; ++k) row.push_back(cyclo_to_json(c(i, j, k)));
      plane.push_back(std::move(row));
    }
    omega.push_back(std::move(plane));
  }
  Json out{{"n", n}, {"zeta_exponent", zeta_exponent}, {"omega", std::move(omega)}};
  bool passed = true;
  if (check) {
    const CocycleVerdict v = verify_3cocycle(c);
    out["verdict"] = cocycle_verdict_to_json(v);
    passed = v.ok();
  }
  out["passed"] = passed;
  return out;
}

std::string render_text(const Json& j) {
  std::ostringstream out;
  render(j, 0, out);
  return out.str();
}

std::string fusion_table_text(const FusionTable& t, const ModularDatum& d) {
  const int m = t.size();
  size_t width = 0;
  for (const auto& l : d.labels()) width = std::max(width, l.size());
  std::ostringstream out;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      std::string lhs = d.label(i);
      lhs.resize(width, ' ');
      std::string rhs_label = d.label(j);
      rhs_label.resize(width, ' ');
      out << lhs << " x " << rhs_label << " = ";
      bool first = true;
      for (int k = 0; k < m; ++k) {
        const int64_t c = t(i, j, k);
        if (c == 0) continue;
        if (!first) out << " + ";
        if (c != 1) out << c << "*";
        out << d.label(k);
        first = false;
      }
      if (first) out << "0";
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace moddata
