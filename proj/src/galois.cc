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

#include "moddata/galois.h"

#include <map>
#include <string>

#include "moddata/constructors.h"
#include "moddata/error.h"

namespace moddata {

namespace {

// Validated datum with the normalized rows s_ik / n_i and memoized actions.
class Context {
 public:
  explicit Context(const ModularDatum& d) : d_(d), rep_(derive_report(d)) {
    if (!rep_.integral) throw Error(ErrorCode::kNotIntegral, "datum is not integral");
    const int m = d.size();
    rows_.assign(m, std::vector<CycloNum>(m));
    for (int i = 0; i < m; ++i) {
      const CycloNum inv = rep_.dims[i].inverse();
      for (int k = 0; k < m; ++k) rows_[i][k] = d.s(i, k) * inv;
    }
  }

  const ModularDatum& datum() const { return d_; }
  const DatumReport& report() const { return rep_; }
  int64_t N() const { return rep_.N; }
  int64_t N_o() const { return rep_.N_o; }

  // sigma_q acting on the index set, q a unit mod N_o.
  const std::vector<int>& action(int64_t q) {
    const int64_t key = mod_floor(q, N_o());
    if (gcd64(key, N_o()) != 1) {
      throw Error(ErrorCode::kNotAUnit,
                  std::to_string(q) + " is not a unit modulo " + std::to_string(N_o()));
    }
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    const int m = d_.size();
    std::vector<int> perm(m);
    for (int i = 0; i < m; ++i) {
      std::vector<CycloNum> image(m);
      for (int k = 0; k < m; ++k) image[k] = galois_apply_lifted(rows_[i][k], key, N_o());
      int match = -1;
      int count = 0;
      for (int j = 0; j < m; ++j) {
        if (rows_[j] == image) {
          match = j;
          ++count;
        }
      }
      if (count != 1) {
        throw Error(ErrorCode::kNoUniqueMatch,
                    std::to_string(count) + " rows match sigma_" + std::to_string(key) +
                        " of row " + d_.label(i));
      }
      perm[i] = match;
    }
    return cache_.emplace(key, std::move(perm)).first->second;
  }

  // sigma_q for q a unit mod N, on elements of Q_N.
  CycloNum sigma(const CycloNum& x, int64_t q) const { return galois_apply_lifted(x, q, N()); }

  std::vector<int64_t> units_N() const { return units_mod(N()); }
  std::vector<int64_t> units_N_o() const { return units_mod(N_o()); }

  GaloisVerdict galois_verdict() {
    GaloisVerdict v;
    for (int64_t q : units_N()) {
      const std::vector<int>& perm = action(q);
      for (int i = 0; i < d_.size(); ++i) {
        if (!(d_.t(perm[i]) == sigma(sigma(d_.t(i), q), q))) {
          v.is_galois = false;
          v.witness = std::make_pair(q, i);
          return v;
        }
      }
    }
    return v;
  }

  CycloNum symbol(int64_t q) const {
    if (gcd64(mod_floor(q, N()), N()) != 1) return CycloNum(0);
    return sigma(rep_.g, q) / rep_.g;
  }

 private:
  const ModularDatum& d_;
  DatumReport rep_;
  std::vector<std::vector<CycloNum>> rows_;
  std::map<int64_t, std::vector<int>> cache_;
};

CycloNum diag_power(const CycloNum& t, int64_t k) { return t.pow(k); }

CycloMatrix t_power(const ModularDatum& d, int64_t k) {
  std::vector<CycloNum> diag(d.size());
  for (int i = 0; i < d.size(); ++i) diag[i] = diag_power(d.t(i), k);
  return CycloMatrix::diagonal(diag);
}

bool is_power_of_two(int64_t x) { return x > 0 && (x & (x - 1)) == 0; }

}  // namespace

GaloisPermutation index_action(const ModularDatum& d, int64_t q) {
  Context ctx(d);
  GaloisPermutation p;
  p.q = q;
  p.modulus = ctx.N_o();
  p.perm = ctx.action(q);
  return p;
}

Report verify_action_laws(const ModularDatum& d) {
  Context ctx(d);
  const int m = d.size();
  const int o = d.unit();
  const CycloMatrix c = d.c_matrix();
  Report r("galois-action");
  std::string moves_s, dims, unit, star, perm_s, perm_c, chars;
  for (int64_t q : ctx.units_N_o()) {
    const std::vector<int>& perm = ctx.action(q);
    const std::string tag = "q=" + std::to_string(q);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        const CycloNum image = galois_apply_lifted(d.s(i, j), q, ctx.N_o());
        if ((!(image == d.s(perm[i], j)) || !(image == d.s(i, perm[j]))) && moves_s.empty()) {
          moves_s = tag + " at (" + d.label(i) + "," + d.label(j) + ")";
        }
        // xi_j(b_{sigma.i}) = sigma(xi_j(b_i)).
        const CycloNum xi = d.s(i, j) / ctx.report().dims[j];
        if (!(galois_apply_lifted(xi, q, ctx.N_o()) == d.s(perm[i], j) / ctx.report().dims[j]) &&
            chars.empty()) {
          chars = tag + " at (" + d.label(j) + "," + d.label(i) + ")";
        }
      }
      if (!(ctx.report().dims[perm[i]] == ctx.report().dims[i]) && dims.empty()) {
        dims = tag + " at " + d.label(i);
      }
      if (perm[d.star(i)] != d.star(perm[i]) && star.empty()) star = tag + " at " + d.label(i);
    }
    if (perm[o] != o && unit.empty()) unit = tag;
    const CycloMatrix p = permutation_matrix(perm);
    if (!(d.s() * p == p.transpose() * d.s()) && perm_s.empty()) perm_s = tag;
    if (!(p * c == c * p) && perm_c.empty()) perm_c = tag;
  }
  r.add("galois-moves-s-entries", moves_s.empty(), moves_s);
  r.add("galois-permutes-characters", chars.empty(), chars);
  r.add("dimensions-invariant", dims.empty(), dims);
  r.add("unit-fixed", unit.empty(), unit);
  r.add("star-compatible", star.empty(), star);
  r.add("s-permutation-relation", perm_s.empty(), perm_s);
  r.add("permutation-commutes-with-c", perm_c.empty(), perm_c);

  std::string comp;
  const auto units = ctx.units_N_o();
  for (int64_t q : units) {
    for (int64_t q2 : units) {
      const std::vector<int>& a = ctx.action(q);
      const std::vector<int>& b = ctx.action(q2);
      const std::vector<int>& ab = ctx.action(q * q2);
      for (int i = 0; i < m; ++i) {
        if (a[b[i]] != ab[i] && comp.empty()) {
          comp = "q=" + std::to_string(q) + ", q'=" + std::to_string(q2);
        }
      }
    }
  }
  r.add("action-composition", comp.empty(), comp);
  r.add("complex-conjugation-is-star", ctx.action(-1) == d.star());
  return r;
}

GaloisVerdict is_galois_datum(const ModularDatum& d) {
  Context ctx(d);
  return ctx.galois_verdict();
}

CycloNum fusion_symbol(const ModularDatum& d, int64_t q) {
  Context ctx(d);
  return ctx.symbol(q);
}

FusionSymbolTable fusion_symbol_table(const ModularDatum& d) {
  Context ctx(d);
  FusionSymbolTable table;
  table.modulus = ctx.N();
  table.values.resize(ctx.N());
  for (int64_t q = 0; q < ctx.N(); ++q) table.values[q] = ctx.symbol(q);
  return table;
}

Report fusion_symbol_analysis(const ModularDatum& d) {
  Context ctx(d);
  const int64_t N = ctx.N();
  const DatumReport& rep = ctx.report();
  std::vector<CycloNum> f(N);
  for (int64_t q = 0; q < N; ++q) f[q] = ctx.symbol(q);
  auto at = [&](int64_t q) -> const CycloNum& { return f[mod_floor(q, N)]; };
  const auto units = ctx.units_N();
  const CycloNum one(1);
  Report r("fusion-symbol");

  r.add("symbol-at-one", at(1) == one);
  r.add("symbol-at-minus-one", at(-1) == rep.g_rec / rep.g);
  std::string cocycle, character;
  for (int64_t q : units) {
    for (int64_t q2 : units) {
      if (!(at(q * q2) == at(q) * ctx.sigma(at(q2), q)) && cocycle.empty()) {
        cocycle = "q=" + std::to_string(q) + ", q'=" + std::to_string(q2);
      }
      if (!(at(q * q2) == at(q) * at(q2)) && character.empty()) {
        character = "q=" + std::to_string(q) + ", q'=" + std::to_string(q2);
      }
    }
  }
  r.add("cocycle-law", cocycle.empty(), cocycle);
  bool pow_2n = true, pow_n = true;
  for (int64_t q : units) {
    pow_2n = pow_2n && at(q).pow(2 * N) == one;
    pow_n = pow_n && at(q).pow(N) == one;
  }
  r.add("symbol-power-2N", pow_2n);
  if (N % 2 == 0) r.add("symbol-power-N", pow_n);

  const bool is_character = character.empty();
  const bool sign = rep.g_rec == rep.g || rep.g_rec == -rep.g;
  r.note("dirichlet-character", is_character, character);
  r.add("character-iff-reciprocal-sign", is_character == sign);
  if (is_character) {
    bool signs = true;
    for (const auto& v : f) signs = signs && (v.is_zero() || v == one || v == -one);
    r.add("character-values-are-signs", signs);
  }

  const GaloisVerdict galois = ctx.galois_verdict();
  r.note("galois", galois.is_galois);
  if (galois.is_galois) {
    bool pow12 = true, fixes = true;
    for (int64_t q : units) {
      pow12 = pow12 && at(q).pow(12) == one;
      fixes = fixes && ctx.sigma(ctx.sigma(rep.g, q), q) == rep.g;
    }
    r.add("symbol-power-12", pow12);
    r.add("t_o-power-24", d.t(d.unit()).pow(24) == one);
    r.add("galois-squares-fix-g", fixes);
  }
  for (int64_t q = 0; q < N; ++q) {
    if (!f[q].is_zero()) r.set_value("f(" + std::to_string(q) + ")", f[q].to_string());
  }
  return r;
}

bool definition_of_24_check(const CycloNum& x) {
  const auto order = root_of_unity_order(x);
  if (!order) throw Error(ErrorCode::kNotRootOfUnity, x.to_string() + " is not a root of unity");
  for (int64_t q : units_mod(*order)) {
    if (*order == 1) break;
    if (!(x.pow(q * q) == x)) return false;
  }
  if (!(x.pow(24) == CycloNum(1))) {
    throw Error(ErrorCode::kInternal, "root of unity fixed by all squares has order not dividing 24");
  }
  return true;
}

int64_t verlinde_field_index(const ModularDatum& d) {
  Context ctx(d);
  const int m = d.size();
  int64_t count = 0;
  for (int64_t q : ctx.units_N()) {
    bool fixes = true;
    for (int i = 0; i < m && fixes; ++i) {
      for (int j = 0; j < m && fixes; ++j) fixes = ctx.sigma(d.s(i, j), q) == d.s(i, j);
    }
    const std::vector<int>& perm = ctx.action(q);
    bool trivial = true;
    for (int i = 0; i < m; ++i) trivial = trivial && perm[i] == i;
    if (fixes != trivial) {
      throw Error(ErrorCode::kInternal,
                  "q=" + std::to_string(q) + " fixes S but moves the index set or vice versa");
    }
    if (fixes) ++count;
  }
  if (ctx.galois_verdict().is_galois) {
    if (!is_power_of_two(count)) {
      throw Error(ErrorCode::kInternal, "field index " + std::to_string(count) + " of a Galois datum");
    }
    if (count == euler_phi(ctx.N()) && 24 % ctx.N() != 0) {
      throw Error(ErrorCode::kInternal, "rational S but N does not divide 24");
    }
  }
  return count;
}

Report reciprocal_gauss_identity(const ModularDatum& d) {
  const DatumReport rep = derive_report(d);
  const int m = d.size();
  const CycloNum t_o4 = d.t(d.unit()).pow(4);
  std::vector<CycloNum> t_sq(m), t_inv_sq(m);
  for (int k = 0; k < m; ++k) {
    t_sq[k] = d.t(k) * d.t(k);
    t_inv_sq[k] = t_sq[k].inverse();
  }
  std::string bad;
  for (int i = 0; i < m && bad.empty(); ++i) {
    for (int j = 0; j < m; ++j) {
      CycloNum lhs, rhs;
      for (int k = 0; k < m; ++k) {
        lhs += d.s(d.star(i), k) * d.s(j, k) * t_inv_sq[k];
        rhs += d.s(i, k) * d.s(j, k) * t_sq[k];
      }
      if (!(rep.g * lhs == rep.g_rec * d.t(i) * d.t(j) / t_o4 * rhs)) {
        bad = "(" + d.label(i) + "," + d.label(j) + ")";
        break;
      }
    }
  }
  Report r("reciprocal-gauss-identity");
  r.add("reciprocal-gauss-identity", bad.empty(), bad);
  return r;
}

Report relact_check(const ModularDatum& d, int64_t q, int64_t q_prime) {
  Context ctx(d);
  const int64_t N = ctx.N();
  if (mod_floor(q * q_prime, N) != mod_floor(1, N)) {
    throw Error(ErrorCode::kBadInversePair, std::to_string(q) + " * " + std::to_string(q_prime) +
                                                " is not 1 modulo " + std::to_string(N));
  }
  const GaloisVerdict galois = ctx.galois_verdict();
  if (!galois.is_galois) throw Error(ErrorCode::kNotGalois, "datum is not Galois");
  const CycloMatrix tq = t_power(d, q);
  const CycloMatrix tq2 = t_power(d, q_prime);
  const CycloMatrix lhs = d.s() * tq2 * d.s().inverse() * tq * d.s() * tq2;
  const int o = d.unit();
  const CycloNum scalar =
      d.t(o).pow(2 * q) / ctx.report().dims[o] * ctx.sigma(ctx.report().g, q);
  const CycloMatrix rhs = scalar * permutation_matrix(ctx.action(q_prime));
  Report r("permutation-from-s-and-t");
  r.add("permutation-from-s-and-t", lhs == rhs,
        "q=" + std::to_string(q) + ", q'=" + std::to_string(q_prime));
  r.merge(reciprocal_gauss_identity(d));
  return r;
}

Report odd_sign_analysis(const ModularDatum& d) {
  Context ctx(d);
  const int64_t N = ctx.N();
  if (N % 2 == 0) throw Error(ErrorCode::kEvenExponent, "exponent " + std::to_string(N) + " is even");
  const DatumReport& rep = ctx.report();
  const int o = d.unit();
  const CycloNum t_o = d.t(o);
  const CycloNum scaled = t_o * t_o * rep.g_rec;
  int v = 0;
  if (rep.g == scaled) {
    v = 1;
  } else if (rep.g == -scaled) {
    v = -1;
  } else {
    throw Error(ErrorCode::kSignMismatch, "g is not +-t_o^2 g'");
  }
  Report r("odd-exponent-sign");
  r.set_value("sign", std::to_string(v));
  r.add("symbol-sign-consistency", ctx.symbol(-1) * t_o * t_o == CycloNum(v));

  const Rational n_rat = *is_rational(rep.n);
  const int64_t n = n_rat.get_num().get_si();
  if (n % 2 == 1) {
    const int expected = (n % 4 == 1) ? 1 : -1;
    r.add("sign-from-global-dimension", v == expected,
          "v=" + std::to_string(v) + ", (-1)^((n-1)/2)=" + std::to_string(expected));
    const CycloNum classical = classical_gauss_sum(n);
    const CycloNum ratio = rep.g / (t_o * rep.dims[o]);
    r.add("classical-gauss-sum-comparison", ratio == classical || ratio == -classical);
    if (rep.normalized) {
      std::string bad;
      const int64_t modulus = N * n;
      for (int64_t q = 1; q < modulus; ++q) {
        if (gcd64(q, modulus) != 1) continue;
        if (!(ctx.symbol(q) == CycloNum(jacobi_symbol(q, n)))) {
          bad = "q=" + std::to_string(q);
          break;
        }
      }
      r.add("symbol-is-jacobi", bad.empty(), bad);
    }
  }
  return r;
}

Report arithmetic_divisibility_checks(const ModularDatum& d, bool galois_projective_congruence) {
  Context ctx(d);
  const DatumReport& rep = ctx.report();
  const int64_t N = ctx.N();
  const int64_t n = is_rational(rep.n)->get_num().get_si();
  Report r("divisibility");
  std::string bad;
  for (auto [p, e] : factorize(n)) {
    if (p != 2 && e % 2 == 1 && N % p != 0) bad += (bad.empty() ? "" : ",") + std::to_string(p);
  }
  r.add("odd-primes-divide-exponent", bad.empty(), bad);
  const bool hypotheses = galois_projective_congruence && n % 4 == 2;
  if (hypotheses) r.add("exponent-divisible-by-4", N % 4 == 0);
  const std::string context = hypotheses ? "hypotheses hold" : "hypotheses not met";
  const CycloNum t_o4 = d.t(d.unit()).pow(4);
  r.note("open-exponent-4-mod-8", N % 8 == 4, context);
  r.note("open-gauss-square-sign", rep.g * rep.g == -(t_o4 * rep.g_rec * rep.g_rec), context);
  return r;
}

}  // namespace moddata
