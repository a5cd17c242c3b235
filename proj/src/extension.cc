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

#include "moddata/extension.h"

#include <map>
#include <string>

#include "moddata/error.h"

namespace moddata {

namespace {

std::string level_string(int64_t m) { return std::to_string(m); }

// Raw BFS over SL(2,Z_M) with s -> S, t -> T. Every non-tree Cayley edge
// u --x--> v is stored with the scalar lambda, A(u) X = lambda A(v), and the
// exponent-sum differences of s and t along it. Rescaling s by 1/D and t by
// 1/mu is then consistent iff lambda = D^da mu^db on every edge.
struct CayleyEdge {
  int64_t from;
  Generator gen;
  int64_t to;
  std::optional<CycloNum> lambda;
  int64_t da;
  int64_t db;
};

struct RawCayley {
  SL2Mod group;
  std::vector<CycloMatrix> gens;  // indexed by Generator
  std::vector<CycloMatrix> mats;
  std::vector<int64_t> a_exp, b_exp;
  std::vector<CayleyEdge> edges;
};

int64_t s_weight(Generator g) {
  return g == Generator::kS ? 1 : g == Generator::kSInv ? -1 : 0;
}
int64_t t_weight(Generator g) {
  return g == Generator::kT ? 1 : g == Generator::kTInv ? -1 : 0;
}

RawCayley run_raw_cayley(const CycloMatrix& s, const CycloMatrix& t, int64_t m, int64_t max_order) {
  if (!s.is_square() || !t.is_square() || s.rows() != t.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "S and T must be square of equal size");
  }
  RawCayley rc;
  rc.gens = {s, t, s.inverse(), t.inverse()};
  rc.group = sl2_enumerate(m, max_order);
  const SL2Mod& g = rc.group;
  const int64_t size = g.size();
  rc.mats.resize(size);
  rc.a_exp.assign(size, 0);
  rc.b_exp.assign(size, 0);
  rc.mats[0] = CycloMatrix::identity(s.rows());
  for (int64_t i = 0; i < size; ++i) {
    for (Generator gen : kGenerators) {
      const int64_t j = g.next(i, gen);
      const CycloMatrix prod = rc.mats[i] * rc.gens[static_cast<int>(gen)];
      const int64_t a = rc.a_exp[i] + s_weight(gen);
      const int64_t b = rc.b_exp[i] + t_weight(gen);
      if (j != 0 && g.parent(j) == i && g.parent_generator(j) == gen) {
        rc.mats[j] = prod;
        rc.a_exp[j] = a;
        rc.b_exp[j] = b;
        continue;
      }
      // Resolved below, once every vertex has its matrix.
      rc.edges.push_back({i, gen, j, std::nullopt, a, b});
    }
  }
  for (auto& e : rc.edges) {
    const CycloMatrix prod = rc.mats[e.from] * rc.gens[static_cast<int>(e.gen)];
    e.lambda = proportionality_factor(prod, rc.mats[e.to]);
    e.da -= rc.a_exp[e.to];
    e.db -= rc.b_exp[e.to];
  }
  return rc;
}

class PowerCache {
 public:
  explicit PowerCache(CycloNum base) : base_(std::move(base)) {}
  const CycloNum& operator()(int64_t k) {
    auto it = cache_.find(k);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(k, base_.pow(k)).first->second;
  }

 private:
  CycloNum base_;
  std::map<int64_t, CycloNum> cache_;
};

// Index of the first edge inconsistent with rescaling by (D, mu), or -1.
int64_t first_linear_failure(const RawCayley& rc, const CycloNum& D, const CycloNum& mu) {
  PowerCache d_pow(D), mu_pow(mu);
  std::map<std::pair<int64_t, int64_t>, CycloNum> scale;
  for (size_t k = 0; k < rc.edges.size(); ++k) {
    const CayleyEdge& e = rc.edges[k];
    if (!e.lambda) return static_cast<int64_t>(k);
    auto it = scale.find({e.da, e.db});
    if (it == scale.end()) it = scale.emplace(std::make_pair(e.da, e.db), d_pow(e.da) * mu_pow(e.db)).first;
    if (!(*e.lambda == it->second)) return static_cast<int64_t>(k);
  }
  return -1;
}

int64_t first_projective_failure(const RawCayley& rc) {
  for (size_t k = 0; k < rc.edges.size(); ++k) {
    if (!rc.edges[k].lambda) return static_cast<int64_t>(k);
  }
  return -1;
}

CongruenceWitness make_witness(const RawCayley& rc, int64_t edge, const CycloNum& D,
                               const CycloNum& mu) {
  const CayleyEdge& e = rc.edges[edge];
  const SL2Mod& g = rc.group;
  CongruenceWitness w;
  w.element = g.element(e.to);
  w.tree_word = g.word(e.to);
  w.edge_word = g.word(e.from) + generator_symbol(e.gen);
  const int64_t a = rc.a_exp[e.from] + s_weight(e.gen);
  const int64_t b = rc.b_exp[e.from] + t_weight(e.gen);
  w.tree_matrix = rc.mats[e.to] * (D.pow(-rc.a_exp[e.to]) * mu.pow(-rc.b_exp[e.to]));
  w.edge_matrix =
      rc.mats[e.from] * rc.gens[static_cast<int>(e.gen)] * (D.pow(-a) * mu.pow(-b));
  return w;
}

CongruenceReport report_for(const RawCayley& rc, const CycloNum& D, const CycloNum& mu,
                            FactorMode mode) {
  CongruenceReport r;
  r.modulus = rc.group.modulus();
  r.group_order = rc.group.size();
  const int64_t lin = first_linear_failure(rc, D, mu);
  const int64_t proj = first_projective_failure(rc);
  r.linear_factors = lin < 0;
  r.projective_factors = proj < 0;
  const int64_t fail = mode == FactorMode::kLinear ? lin : proj;
  if (fail >= 0) r.witness = make_witness(rc, fail, D, mu);
  return r;
}

struct Basics {
  DatumReport rep;
  CycloNum t_o;
  CycloNum n_o;
};

Basics integral_basics(const ModularDatum& d) {
  Basics b{derive_report(d), d.t(d.unit()), CycloNum()};
  if (!b.rep.integral) throw Error(ErrorCode::kNotIntegral, "datum is not integral");
  b.n_o = b.rep.dims[d.unit()];
  return b;
}

}  // namespace

std::vector<CycloNum> enumerate_ranks(const ModularDatum& d) {
  const Basics b = integral_basics(d);
  const int64_t n = is_rational(b.rep.n)->get_num().get_si();
  const CycloNum r = sqrt_integer(n);
  const CycloNum i4 = root_of_unity(4, 1);
  std::vector<CycloNum> ranks = {r, -r, i4 * r, -(i4 * r)};
  const CycloNum n_sq = b.rep.n * b.rep.n;
  for (const auto& D : ranks) {
    if (!(D.pow(4) == n_sq)) throw Error(ErrorCode::kInternal, "rank candidate fails D^4 = n^2");
  }
  return ranks;
}

std::vector<CycloNum> enumerate_charges(const ModularDatum& d, const CycloNum& D) {
  const DatumReport rep = derive_report(d);
  if (!(D.pow(4) == rep.n * rep.n)) {
    throw Error(ErrorCode::kInvalidExtension, "D^4 != n^2 for D = " + D.to_string());
  }
  const CycloNum w = rep.g / (rep.dims[d.unit()] * d.t(d.unit()) * D);
  const auto order = root_of_unity_order(w);
  if (!order) {
    throw Error(ErrorCode::kChargeNotRootOfUnity,
                "g / (n_o t_o D) = " + w.to_string() + " is not a root of unity");
  }
  int64_t level = 3 * *order;
  if (level % 2 == 1) level *= 2;
  std::vector<CycloNum> charges;
  for (int64_t k = 0; k < level; ++k) {
    CycloNum ell = root_of_unity(static_cast<int>(level), k);
    if (ell * ell * ell == w) charges.push_back(std::move(ell));
  }
  if (charges.size() != 3) {
    throw Error(ErrorCode::kInternal, "found " + std::to_string(charges.size()) + " cube roots");
  }
  return charges;
}

ExtendedDatum make_extension(const ModularDatum& d, const CycloNum& D, const CycloNum& ell) {
  const DatumReport rep = derive_report(d);
  const CycloNum& n_o = rep.dims[d.unit()];
  if (!(D.pow(4) == rep.n * rep.n)) {
    throw Error(ErrorCode::kInvalidExtension, "D^4 != n^2 for D = " + D.to_string());
  }
  if (!(ell * ell * ell * n_o * d.t(d.unit()) * D == rep.g)) {
    throw Error(ErrorCode::kInvalidExtension, "ell^3 != g / (n_o t_o D) for ell = " + ell.to_string());
  }
  if (!root_of_unity_order(ell)) {
    throw Error(ErrorCode::kInvalidExtension, "ell = " + ell.to_string() + " is not a root of unity");
  }
  return ExtendedDatum{d, D, ell, D * D == rep.n};
}

HomogeneousPair homogeneous_matrices(const ExtendedDatum& e) {
  const ModularDatum& d = e.datum;
  HomogeneousPair p{d.s() * e.D.inverse(), d.t_matrix() * (d.t(d.unit()) * e.ell).inverse()};
  const CycloMatrix s2 = p.s * p.s;
  if (!(s2 * s2 == CycloMatrix::identity(d.size()))) {
    throw Error(ErrorCode::kInvalidExtension, "(S/D)^4 != E");
  }
  const CycloMatrix ts = p.t * p.s;
  if (!(ts * ts * ts == s2)) throw Error(ErrorCode::kInvalidExtension, "(T'S')^3 != S'^2");
  return p;
}

std::vector<ExtendedDatum> extension_family(const ModularDatum& d) {
  std::vector<ExtendedDatum> family;
  for (const CycloNum& D : enumerate_ranks(d)) {
    for (const CycloNum& ell : enumerate_charges(d, D)) family.push_back(make_extension(d, D, ell));
  }
  return family;
}

Report extension_family_check(const ModularDatum& d) {
  const std::vector<ExtendedDatum> family = extension_family(d);
  Report r("extension-family");
  bool distinct = true;
  std::string related;
  for (size_t i = 0; i < family.size(); ++i) {
    for (size_t j = 0; j < family.size(); ++j) {
      const auto& a = family[i];
      const auto& b = family[j];
      if (i < j && a.D == b.D && a.ell == b.ell) distinct = false;
      const CycloNum z = b.ell / a.ell;
      if ((!(z.pow(12) == CycloNum(1)) || !(b.D == a.D / z.pow(3))) && related.empty()) {
        related = std::to_string(i) + " vs " + std::to_string(j);
      }
    }
  }
  r.add("twelve-extensions", family.size() == 12 && distinct, std::to_string(family.size()));
  r.add("related-by-twelfth-root", related.empty(), related);
  std::string closed;
  for (int k = 0; k < 12 && closed.empty(); ++k) {
    const CycloNum z = root_of_unity(12, k);
    for (size_t i = 0; i < family.size(); ++i) {
      const CycloNum D = family[i].D / z.pow(3);
      const CycloNum ell = z * family[i].ell;
      bool found = false;
      for (const auto& b : family) found = found || (b.D == D && b.ell == ell);
      if (!found) {
        closed = "z12^" + std::to_string(k) + " on " + std::to_string(i);
        break;
      }
    }
  }
  r.add("closed-under-twelfth-roots", closed.empty(), closed);
  int ranks = 0;
  for (const auto& e : family) ranks += e.is_rank ? 1 : 0;
  r.set_value("extensions", std::to_string(family.size()));
  r.set_value("ranks", std::to_string(ranks));
  return r;
}

int additive_charge(const ExtendedDatum& e) {
  if (!(e.ell.pow(24) == CycloNum(1))) {
    throw Error(ErrorCode::kChargeOrderTooLarge, "ell^24 != 1 for ell = " + e.ell.to_string());
  }
  int c = -1;
  for (int k = 0; k < 24; ++k) {
    if (root_of_unity(24, k) == e.ell) {
      c = k;
      break;
    }
  }
  if (c < 0) throw Error(ErrorCode::kInternal, "no 24th root of unity matches ell");
  const DatumReport rep = derive_report(e.datum);
  if (rep.integral && rep.N % 2 == 1 && e.is_rank && c % 2 != 0) {
    throw Error(ErrorCode::kInternal, "odd additive charge " + std::to_string(c) +
                                          " for a rank of odd exponent");
  }
  return c;
}

Report central_charge_checks(const ExtendedDatum& e) {
  const DatumReport rep = derive_report(e.datum);
  const CycloNum t_o = e.datum.t(e.datum.unit());
  Report r("central-charge");
  r.add("ell-power-24", e.ell.pow(24) == CycloNum(1));
  r.add("gauss-fourth-power", rep.g.pow(4) == t_o.pow(8) * rep.g_rec.pow(4));
  r.note("gauss-square", rep.g * rep.g == t_o.pow(4) * rep.g_rec * rep.g_rec);
  return r;
}

CongruenceReport factor_check(const CycloMatrix& s_mat, const CycloMatrix& t_mat, int64_t m,
                              FactorMode mode, int64_t max_order) {
  const RawCayley rc = run_raw_cayley(s_mat, t_mat, m, max_order);
  return report_for(rc, CycloNum(1), CycloNum(1), mode);
}

Report CongruenceClassification::report() const {
  Report r("congruence");
  r.note("projective-congruence", is_projective_congruence(),
         "level " + level_string(projective.modulus));
  r.note("congruence", is_congruence(), "level " + level_string(linear.modulus));
  r.add("linear-implies-projective",
        !linear.linear_factors || (linear.projective_factors && projective.projective_factors));
  if (minimal_level) r.set_value("minimal-level", level_string(*minimal_level));
  if (exhausted) r.note("level-search-exhausted", true);
  std::string skipped;
  for (int64_t m : skipped_levels) skipped += (skipped.empty() ? "" : ",") + level_string(m);
  if (!skipped.empty()) r.set_value("skipped-levels", skipped);
  return r;
}

namespace {

// Raw Cayley data per level for one datum, built on first use.
class LevelCache {
 public:
  LevelCache(const ModularDatum& d, int64_t max_order) : d_(d), max_order_(max_order) {}

  const RawCayley& at(int64_t m) {
    auto it = levels_.find(m);
    if (it == levels_.end()) {
      it = levels_.emplace(m, run_raw_cayley(d_.s(), d_.t_matrix(), m, max_order_)).first;
    }
    return it->second;
  }

 private:
  const ModularDatum& d_;
  int64_t max_order_;
  std::map<int64_t, RawCayley> levels_;
};

CongruenceClassification classify_with(const ExtendedDatum& e, const DatumReport& rep,
                                       const std::vector<int64_t>& candidates,
                                       int64_t max_order, LevelCache& cache) {
  const ModularDatum& d = e.datum;
  const CycloNum mu = d.t(d.unit()) * e.ell;
  CongruenceClassification out;
  const RawCayley& at_n_o = cache.at(rep.N_o);
  out.projective = report_for(at_n_o, CycloNum(1), CycloNum(1), FactorMode::kProjective);
  out.linear = report_for(at_n_o, e.D, mu, FactorMode::kLinear);
  for (int64_t m : candidates) {
    if (sl2_order(m) > max_order) {
      out.skipped_levels.push_back(m);
      continue;
    }
    const bool factors = m == rep.N_o ? out.linear.linear_factors
                                      : first_linear_failure(cache.at(m), e.D, mu) < 0;
    if (factors) {
      out.minimal_level = m;
      break;
    }
  }
  out.exhausted = !out.minimal_level;
  return out;
}

}  // namespace

CongruenceClassification congruence_classify(const ExtendedDatum& e,
                                             const std::optional<std::vector<int64_t>>& level_candidates,
                                             int64_t max_order) {
  return congruence_classify_family({e}, level_candidates, max_order).front();
}

std::vector<CongruenceClassification> congruence_classify_family(
    const std::vector<ExtendedDatum>& family,
    const std::optional<std::vector<int64_t>>& level_candidates, int64_t max_order) {
  std::vector<CongruenceClassification> out;
  if (family.empty()) return out;
  const ModularDatum& d = family.front().datum;
  for (const auto& e : family) {
    if (!(e.datum == d)) {
      throw Error(ErrorCode::kInvalidExtension, "family members extend different data");
    }
  }
  const DatumReport rep = derive_report(d);
  const std::vector<int64_t> candidates =
      level_candidates ? *level_candidates : divisors(24 * rep.N_o);
  LevelCache cache(d, max_order);
  for (const auto& e : family) out.push_back(classify_with(e, rep, candidates, max_order, cache));
  return out;
}

std::vector<ExtendedDatum> lift_search(const ModularDatum& d, int64_t m, int64_t max_order) {
  const std::vector<ExtendedDatum> family = extension_family(d);
  const RawCayley rc = run_raw_cayley(d.s(), d.t_matrix(), m, max_order);
  std::vector<ExtendedDatum> lifts;
  for (const auto& e : family) {
    if (first_linear_failure(rc, e.D, d.t(d.unit()) * e.ell) < 0) lifts.push_back(e);
  }
  return lifts;
}

}  // namespace moddata
