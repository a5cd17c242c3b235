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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit status if
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "moddata/constructors.h"
#include "moddata/cyclotomic.h"
#include "moddata/datum.h"
#include "moddata/error.h"
#include "moddata/extension.h"
#include "moddata/fusion.h"
#include "moddata/galois.h"
#include "moddata/sl2.h"
#include "oracles.h"
#include "test_util.h"

namespace moddata {
namespace {

class Context {
 public:
  void expect(bool condition, const std::string& what) {
    if (!condition && failures_.size() < 8) failures_.push_back(what);
    if (!condition) ++failure_count_;
  }
  void expect_report(const Report& r, const std::string& what) {
    expect(r.passed(), what + ": " + test::FailedChecks(r));
  }
  // Records a failure if fn took longer than `limit_seconds`.
  void within(double limit_seconds, const std::string& what, const std::function<void()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    expect(elapsed <= limit_seconds,
           what + " took " + std::to_string(elapsed) + "s (limit " +
               std::to_string(limit_seconds) + "s)");
  }
  int failure_count() const { return failure_count_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  int failure_count_ = 0;
  std::vector<std::string> failures_;
};

CycloNum I() { return root_of_unity(4, 1); }

void SemionGaussValues(Context& ctx) {
  const ModularDatum d = semion_datum();
  const DatumReport r = derive_report(d);
  const CycloNum& g = r.g;
  const CycloNum& gr = r.g_rec;
  ctx.expect(g == 1 + I(), "g = 1 + i, got " + g.to_string());
  ctx.expect(gr == 1 - I(), "g' = 1 - i, got " + gr.to_string());
  ctx.expect(g * g == 2 * I(), "g^2 = 2i");
  ctx.expect(g * g == -(gr * gr), "g^2 = -g'^2");
  ctx.expect(g.pow(4) == gr.pow(4), "g^4 = g'^4");
  ctx.expect(g * gr == CycloNum(2), "g g' = 2");
  ctx.expect(g * gr == r.n * r.dims[d.unit()] * r.dims[d.unit()], "g g' = n n_o^2");
  ctx.expect_report(power_identity_check(d), "power identities");
}

void OddSignTheorem(Context& ctx) {
  for (int n : {3, 5, 7, 9, 11, 13, 15}) {
    const std::string tag = "n=" + std::to_string(n);
    ctx.within(1.0, tag, [&] {
      const ModularDatum d = radford_datum(n);
      const DatumReport r = derive_report(d);
      const int sign = (n % 4 == 1) ? 1 : -1;
      ctx.expect(r.g_rec == sign * r.g, tag + ": g' = (-1)^((n-1)/2) g");
      const FusionSymbolTable f = fusion_symbol_table(d);
      for (int64_t q = 1; q < n; ++q) {
        if (gcd64(q, n) != 1) continue;
        ctx.expect(f(q) == CycloNum(test::JacobiByFactoring(q, n)),
                   tag + ": f(" + std::to_string(q) + ") = (q|n)");
        ctx.expect(jacobi_symbol(q, n) == test::JacobiByFactoring(q, n),
                   tag + ": jacobi_symbol(" + std::to_string(q) + ")");
      }
      ctx.expect_report(odd_sign_analysis(d), tag + " odd sign analysis");
    });
  }
}

void GaussLemmaTable(Context& ctx) {
  for (int n : {3, 4, 5, 7, 8, 11, 12, 13}) {
    const std::string tag = "n=" + std::to_string(n);
    const CycloNum g = classical_gauss_sum(n);
    const CycloNum g2 = g * g;
    switch (n % 4) {
      case 1: ctx.expect(g2 == CycloNum(n), tag + ": G^2 = n"); break;
      case 3: ctx.expect(g2 == CycloNum(-n), tag + ": G^2 = -n"); break;
      case 2: ctx.expect(g2.is_zero(), tag + ": G^2 = 0"); break;
      default:
        ctx.expect(g2 == 2 * n * I() || g2 == -2 * n * I(), tag + ": G^2 = +-2in");
    }
    if (n % 2 == 1) {
      for (int64_t q : units_mod(n)) {
        ctx.expect(galois_apply(g, q) == test::JacobiByFactoring(q, n) * g,
                   tag + ": sigma_" + std::to_string(q) + "(G) = (q|n) G");
      }
    }
    ctx.expect_report(verify_gauss_lemma(n), tag + " gauss lemma report");
  }
  ctx.expect(classical_gauss_sum(6).is_zero(), "G_6 = 0");
}

void SemionCongruence(Context& ctx) {
  const ModularDatum d = semion_datum();
  ctx.within(30.0, "semion congruence suite", [&] {
    const CongruenceReport r4 = factor_check(d.s(), d.t_matrix(), 4, FactorMode::kProjective);
    ctx.expect(r4.projective_factors, "projective factoring at 4");
    ctx.expect(r4.group_order == 48, "|SL(2,Z_4)| = 48");
    ctx.expect(lift_search(d, 4).empty(), "lift_search(4) empty");
    const std::vector<ExtendedDatum> at8 = lift_search(d, 8);
    bool found = false;
    for (const auto& e : at8) {
      if (e.D * e.D == CycloNum(-2) && e.ell == (1 - I()) / e.D) found = true;
    }
    ctx.expect(found, "lift_search(8) contains (D, (1-i)/D) with D^2 = -2");
    ctx.expect(lift_search(d, 24).size() == 12, "lift_search(24) has 12 extensions");
    ctx.expect(sl2_enumerate(8).size() == 384, "|SL(2,Z_8)| = 384");
    ctx.expect(sl2_enumerate(24).size() == 9216, "|SL(2,Z_24)| = 9216");
    ctx.expect(test::BruteForceSL2Count(8) == 384, "brute force count at 8");
  });
}

void RadfordProjectiveCongruence(Context& ctx) {
  ctx.within(5.0, "radford projective congruence", [&] {
    for (int n : {3, 5, 7}) {
      const ModularDatum d = radford_datum(n);
      const CongruenceReport r = factor_check(d.s(), d.t_matrix(), n, FactorMode::kProjective);
      ctx.expect(r.projective_factors, "n=" + std::to_string(n) + " projective factoring");
      ctx.expect(r.group_order == test::BruteForceSL2Count(n),
                 "n=" + std::to_string(n) + " group order");
    }
  });
  ctx.expect(sl2_order(7) == 336, "|SL(2,Z_7)| = 336");
}

std::vector<std::pair<std::string, ModularDatum>> ExampleData() {
  std::vector<std::pair<std::string, ModularDatum>> out = {
      {"trivial", trivial_datum()}, {"semion", semion_datum()}};
  for (int n : {3, 5, 7, 9, 11, 13, 15}) out.push_back({"radford" + std::to_string(n), radford_datum(n)});
  out.push_back({"semion*semion", kronecker_product(semion_datum(), semion_datum())});
  return out;
}

void FusionLaws(Context& ctx) {
  for (const auto& [name, d] : ExampleData()) {
    const FusionTable t = fusion_coefficients(d);
    ctx.expect(t.violations().empty(), name + ": nonnegative integer coefficients");
    ctx.expect_report(verify_table_laws(t, d), name + " table laws");
    ctx.expect_report(verify_ring_homomorphisms(d, t), name + " characters");
    ctx.expect_report(verify_idempotent_laws(d, t), name + " idempotents");
    // xi_j(p_i) = delta_ij evaluated directly.
    const std::vector<FusionElement> p = idempotents(d, t);
    for (int i = 0; i < d.size(); ++i) {
      for (int j = 0; j < d.size(); ++j) {
        ctx.expect(xi_evaluate(d, j, p[i]) == CycloNum(i == j ? 1 : 0),
                   name + ": xi_j(p_i) = delta_ij");
      }
    }
  }
}

void GaloisSuite(Context& ctx) {
  for (const auto& [name, d] : ExampleData()) {
    if (name == "trivial" || name == "semion*semion") continue;
    ctx.expect_report(verify_action_laws(d), name + " action laws");
    ctx.expect(index_action(d, -1).perm == d.star(), name + ": gamma.i = i*");
    ctx.expect(is_galois_datum(d).is_galois, name + ": Galois datum");
  }
  const ModularDatum r5 = radford_datum(5);
  const ModularDatum semion = semion_datum();
  ctx.expect(derive_report(r5).N == 5 && derive_report(semion).N == 4, "exponents 5 and 4");
  ctx.expect_report(relact_check(r5, 2, 3), "relation (2,3) mod 5");
  ctx.expect_report(relact_check(semion, 3, 3), "relation (3,3) mod 4");
  ctx.expect_report(reciprocal_gauss_identity(r5), "reciprocal identity radford5");
  ctx.expect_report(reciprocal_gauss_identity(semion), "reciprocal identity semion");
}

void CentralCharge(Context& ctx) {
  for (const ModularDatum& d : {semion_datum(), radford_datum(3), radford_datum(5), radford_datum(7)}) {
    const DatumReport r = derive_report(d);
    if (!is_galois_datum(d).is_galois) continue;
    const CongruenceReport c =
        factor_check(d.s(), d.t_matrix(), r.N_o, FactorMode::kProjective);
    ctx.expect(c.projective_factors, "example is projective congruence");
    const CycloNum t_o = d.t()[d.unit()];
    ctx.expect(r.g.pow(4) == t_o.pow(8) * r.g_rec.pow(4), "g^4 = t_o^8 g'^4");
    for (const ExtendedDatum& e : extension_family(d)) {
      ctx.expect(e.ell.pow(24) == CycloNum(1), "ell^24 = 1");
      ctx.expect_report(central_charge_checks(e), "central charge checks");
    }
  }
  for (int n : {3, 5, 7, 9, 11, 13}) {
    for (const ExtendedDatum& e : extension_family(radford_datum(n))) {
      if (!e.is_rank) continue;
      const int c = additive_charge(e);
      ctx.expect(c % 4 == (n % 4 == 1 ? 0 : 2),
                 "n=" + std::to_string(n) + " rank charge c=" + std::to_string(c));
    }
  }
}

void Divisibility(Context& ctx) {
  const Report r15 = arithmetic_divisibility_checks(radford_datum(15), false);
  ctx.expect_report(r15, "radford15 divisibility");
  ctx.expect(r15.holds("odd-primes-divide-exponent"), "3 and 5 divide N");
  ctx.expect(derive_report(radford_datum(15)).N % 15 == 0, "N = 0 mod 15");
  const Report s = arithmetic_divisibility_checks(semion_datum(), true);
  ctx.expect_report(s, "semion divisibility");
  ctx.expect(s.holds("exponent-divisible-by-4"), "semion N = 0 mod 4");
  for (const char* open : {"open-exponent-4-mod-8", "open-gauss-square-sign"}) {
    const Check* c = s.find(open);
    ctx.expect(c != nullptr && c->passed && !c->asserted,
               std::string(open) + " reported true without assertion");
  }
}

void PropertySubstrate(Context& ctx) {
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 500; ++trial) {
    const int m1 = test::RandomConductor(rng, 24);
    const int m2 = test::RandomConductor(rng, 24);
    const CycloNum a = test::RandomCyclo(rng, m1);
    const CycloNum b = test::RandomCyclo(rng, m2);
    const CycloNum c = test::RandomCyclo(rng, test::RandomConductor(rng, 24));
    const std::string tag = "case " + std::to_string(trial);
    ctx.expect(a + b == b + a && a * b == b * a, tag + ": commutativity");
    ctx.expect((a + b) + c == a + (b + c) && (a * b) * c == a * (b * c), tag + ": associativity");
    ctx.expect(a * (b + c) == a * b + a * c, tag + ": distributivity");
    ctx.expect(a - a == CycloNum(0) && a + CycloNum(0) == a && a * CycloNum(1) == a,
               tag + ": identities");
    if (!b.is_zero()) ctx.expect((a / b) * b == a && b * b.inverse() == CycloNum(1), tag + ": division");
    const int big = static_cast<int>(lcm64(m1, m2));
    const CycloNum a_big = lift_conductor(a, big);
    const CycloNum b_big = lift_conductor(b, big);
    ctx.expect(a_big.conductor() == big && a_big == a, tag + ": lifting preserves value");
    ctx.expect((a_big == b_big) == (a == b) && a_big + b_big == a + b,
               tag + ": lifting commutes with comparison and sum");
    const CycloNum lifted = lift_conductor(a, m1 * 2);
    ctx.expect(lifted == a && lifted.conductor() == m1 * 2, tag + ": lift round trip");
    ctx.expect(lifted - a == CycloNum(0), tag + ": lifted difference vanishes");
    // Galois composition at a common modulus.
    const int64_t m = lcm64(a.conductor(), c.conductor());
    const std::vector<int64_t> units = units_mod(m);
    const int64_t q = units[rng() % units.size()];
    const int64_t r = units[rng() % units.size()];
    const CycloNum ac = lift_conductor(a, static_cast<int>(m));
    const CycloNum cc = lift_conductor(c, static_cast<int>(m));
    ctx.expect(galois_apply(galois_apply(ac, q), r) == galois_apply(ac, mod_floor(q * r, m)),
               tag + ": sigma_r sigma_q = sigma_qr");
    ctx.expect(galois_apply(ac * cc, q) == galois_apply(ac, q) * galois_apply(cc, q),
               tag + ": sigma multiplicative");
    ctx.expect(galois_apply(ac + cc, q) == galois_apply(ac, q) + galois_apply(cc, q),
               tag + ": sigma additive");
    ctx.expect(galois_apply_lifted(a, q, m) == galois_apply(ac, q), tag + ": lifted action");
  }
  for (int n : {3, 5, 7}) {
    const test::RadfordOracleResult o = test::RadfordOracle(n);
    const ModularDatum d = radford_datum(n);
    ctx.expect(o.s == d.s(), "radford " + std::to_string(n) + " S matches oracle");
    ctx.expect(o.t == d.t(), "radford " + std::to_string(n) + " T matches oracle");
  }
}

struct Criterion {
  int id;
  const char* name;
  void (*body)(Context&);
};

constexpr Criterion kCriteria[] = {
    {1, "semion-gauss-values", SemionGaussValues},
    {2, "odd-dimension-sign", OddSignTheorem},
    {3, "classical-gauss-lemma", GaussLemmaTable},
    {4, "semion-congruence", SemionCongruence},
    {5, "radford-projective-congruence", RadfordProjectiveCongruence},
    {6, "fusion-ring-laws", FusionLaws},
    {7, "galois-suite", GaloisSuite},
    {8, "central-charge", CentralCharge},
    {9, "divisibility", Divisibility},
    {10, "property-substrate", PropertySubstrate},
};

}  // namespace
}  // namespace moddata

int main() {
  using moddata::Context;
  int failed = 0;
  for (const auto& c : moddata::kCriteria) {
    Context ctx;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(ctx);
    } catch (const std::exception& e) {
      ctx.expect(false, std::string("exception: ") + e.what());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = ctx.failure_count() == 0;
    std::printf("%s %2d %s (%.2fs)\n", ok ? "PASS" : "FAIL", c.id, c.name, elapsed);
    for (const auto& f : ctx.failures()) std::printf("       %s\n", f.c_str());
    if (!ok) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(moddata::kCriteria)) - failed,
              std::size(moddata::kCriteria));
  return failed == 0 ? 0 : 1;
}
