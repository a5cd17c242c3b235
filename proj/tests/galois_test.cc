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

#include <gtest/gtest.h>

#include <random>

#include "moddata/constructors.h"
#include "moddata/datum.h"
#include "moddata/error.h"
#include "oracles.h"
#include "test_util.h"

namespace moddata {
namespace {

using test::FailedChecks;
using test::ThrowsCode;

CycloNum Z(int m, int64_t k) { return root_of_unity(m, k); }

// Fibonacci datum: dimensions 1 and the golden ratio, so not integral.
ModularDatum Fibonacci() {
  const CycloNum golden = 1 + Z(5, 1) + Z(5, 4);
  return ModularDatum({"1", "tau"}, 0, {0, 1}, CycloMatrix::from_rows({{1, golden}, {golden, -1}}),
                      {1, Z(5, 2)});
}

TEST(GaloisTest, FibonacciIsValidButNotIntegral) {
  const ModularDatum d = Fibonacci();
  const Report r = validate_axioms(d);
  ASSERT_TRUE(r.passed()) << FailedChecks(r);
  EXPECT_FALSE(derive_report(d).integral);
  EXPECT_TRUE(ThrowsCode([&] { index_action(d, 2); }, ErrorCode::kNotIntegral));
  EXPECT_TRUE(ThrowsCode([&] { is_galois_datum(d); }, ErrorCode::kNotIntegral));
  EXPECT_TRUE(ThrowsCode([&] { fusion_symbol(d, 2); }, ErrorCode::kNotIntegral));
  // The reciprocal identity needs no integrality.
  EXPECT_TRUE(reciprocal_gauss_identity(d).passed());
}

// sigma_q(z^(-2ab)) = z^(-2(qa)b), so sigma_q . a = q a.
TEST(GaloisTest, RadfordActionIsMultiplication) {
  for (int n : {3, 5, 7, 9, 15}) {
    const ModularDatum d = radford_datum(n);
    for (int64_t q : units_mod(n)) {
      const GaloisPermutation p = index_action(d, q);
      EXPECT_EQ(p.modulus, n);
      for (int a = 0; a < n; ++a) ASSERT_EQ(p.perm[a], mod_floor(q * a, n)) << n << " " << q;
    }
  }
}

TEST(GaloisTest, SemionActionIsTrivial) {
  const ModularDatum d = semion_datum();
  EXPECT_EQ(index_action(d, 3).perm, (std::vector<int>{0, 1}));
  EXPECT_EQ(index_action(d, -1).perm, d.star());
  EXPECT_TRUE(ThrowsCode([&] { index_action(d, 2); }, ErrorCode::kNotAUnit));
}

TEST(GaloisTest, ActionLawsOnExamples) {
  for (const ModularDatum& d :
       {trivial_datum(), semion_datum(), radford_datum(3), radford_datum(5), radford_datum(7),
        radford_datum(9), kronecker_product(semion_datum(), radford_datum(3))}) {
    const Report r = verify_action_laws(d);
    EXPECT_TRUE(r.passed()) << FailedChecks(r);
    EXPECT_TRUE(r.holds("complex-conjugation-is-star"));
    EXPECT_TRUE(r.holds("s-permutation-relation"));
  }
}

TEST(GaloisTest, GaloisPredicate) {
  for (const ModularDatum& d : {trivial_datum(), semion_datum(), radford_datum(3),
                                radford_datum(5), radford_datum(7), radford_datum(9),
                                radford_datum(11), radford_datum(13), radford_datum(15)}) {
    const GaloisVerdict v = is_galois_datum(d);
    EXPECT_TRUE(v.is_galois);
    EXPECT_FALSE(v.witness.has_value());
  }
}

TEST(GaloisTest, GaloisPredicateFindsWitness) {
  // Twisting every T entry by z5 keeps the axioms but breaks
  // t_{sigma.i} = sigma^2(t_i) whenever q^2 != 1 mod 5.
  const ModularDatum a = radford_datum(5);
  std::vector<CycloNum> t = a.t();
  for (auto& x : t) x *= Z(5, 1);
  const ModularDatum d = a.with_matrices(a.s(), t);
  ASSERT_TRUE(validate_axioms(d).passed());
  const GaloisVerdict v = is_galois_datum(d);
  EXPECT_FALSE(v.is_galois);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_TRUE(ThrowsCode([&] { relact_check(d, 2, 3); }, ErrorCode::kNotGalois));
}

TEST(GaloisTest, SemionFusionSymbol) {
  const ModularDatum d = semion_datum();
  EXPECT_EQ(fusion_symbol(d, 1), CycloNum(1));
  EXPECT_EQ(fusion_symbol(d, 3), -Z(4, 1));
  EXPECT_EQ(fusion_symbol(d, 2), CycloNum(0));
  const FusionSymbolTable t = fusion_symbol_table(d);
  EXPECT_EQ(t.modulus, 4);
  EXPECT_EQ(t(-1), t(3));
  const Report r = fusion_symbol_analysis(d);
  EXPECT_TRUE(r.passed()) << FailedChecks(r);
  EXPECT_FALSE(r.holds("dirichlet-character"));
  EXPECT_TRUE(r.holds("symbol-power-N"));
  EXPECT_TRUE(r.holds("symbol-power-12"));
}

// Cocycle law recomputed from the table with the library's Galois maps.
TEST(GaloisTest, FusionSymbolCocycleLaw) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 8; ++trial) {
    const ModularDatum d = test::RandomExampleDatum(rng);
    const FusionSymbolTable f = fusion_symbol_table(d);
    const int64_t n = f.modulus;
    for (int64_t q : units_mod(n)) {
      for (int64_t r : units_mod(n)) {
        ASSERT_EQ(f(q * r), f(q) * galois_apply_lifted(f(r), q, n));
      }
    }
    const Report rep = fusion_symbol_analysis(d);
    EXPECT_TRUE(rep.passed()) << FailedChecks(rep);
  }
}

TEST(GaloisTest, DefinitionOf24) {
  for (int d = 1; d <= 60; ++d) {
    EXPECT_EQ(definition_of_24_check(Z(d, 1)), 24 % d == 0) << d;
  }
  EXPECT_TRUE(definition_of_24_check(Z(8, 3)));
  EXPECT_TRUE(ThrowsCode([] { definition_of_24_check(CycloNum(2)); }, ErrorCode::kNotRootOfUnity));
}

TEST(GaloisTest, VerlindeFieldIndex) {
  EXPECT_EQ(verlinde_field_index(trivial_datum()), 1);
  EXPECT_EQ(verlinde_field_index(semion_datum()), 2);
  EXPECT_EQ(verlinde_field_index(kronecker_product(semion_datum(), semion_datum())), 2);
  EXPECT_EQ(verlinde_field_index(radford_datum(5)), 1);
  EXPECT_EQ(verlinde_field_index(radford_datum(9)), 1);
  // S of semion x Radford(3) lies in Q_3 inside Q_12.
  EXPECT_EQ(verlinde_field_index(kronecker_product(semion_datum(), radford_datum(3))), 2);
}

TEST(GaloisTest, PermutationFromSAndT) {
  const Report r5 = relact_check(radford_datum(5), 2, 3);
  EXPECT_TRUE(r5.passed()) << FailedChecks(r5);
  EXPECT_TRUE(r5.holds("permutation-from-s-and-t"));
  const Report semion = relact_check(semion_datum(), 3, 3);
  EXPECT_TRUE(semion.passed()) << FailedChecks(semion);
  EXPECT_TRUE(ThrowsCode([] { relact_check(radford_datum(5), 2, 2); }, ErrorCode::kBadInversePair));
  const ModularDatum d = radford_datum(7);
  for (int64_t q : units_mod(7)) {
    const Report r = relact_check(d, q, inverse_mod(q, 7));
    EXPECT_TRUE(r.passed()) << q << " " << FailedChecks(r);
  }
}

TEST(GaloisTest, ReciprocalGaussIdentity) {
  for (const ModularDatum& d : {semion_datum(), radford_datum(3), radford_datum(5),
                                kronecker_product(semion_datum(), radford_datum(3))}) {
    const Report r = reciprocal_gauss_identity(d);
    EXPECT_TRUE(r.passed()) << FailedChecks(r);
  }
}

TEST(GaloisTest, OddSignTheorem) {
  for (int n = 3; n <= 15; n += 2) {
    const ModularDatum d = radford_datum(n);
    const Report r = odd_sign_analysis(d);
    EXPECT_TRUE(r.passed()) << n << " " << FailedChecks(r);
    const int expected = n % 4 == 1 ? 1 : -1;
    ASSERT_NE(r.value("sign"), nullptr);
    EXPECT_EQ(*r.value("sign"), std::to_string(expected)) << n;
    EXPECT_TRUE(r.holds("symbol-is-jacobi"));
    const DatumReport rep = derive_report(d);
    EXPECT_EQ(rep.g_rec, CycloNum(expected) * rep.g);
    for (int64_t q : units_mod(n)) {
      EXPECT_EQ(fusion_symbol(d, q), CycloNum(test::JacobiByFactoring(q, n))) << n << " " << q;
    }
  }
  EXPECT_TRUE(ThrowsCode([] { odd_sign_analysis(semion_datum()); }, ErrorCode::kEvenExponent));
}

TEST(GaloisTest, Divisibility) {
  const Report r15 = arithmetic_divisibility_checks(radford_datum(15), true);
  EXPECT_TRUE(r15.passed()) << FailedChecks(r15);
  EXPECT_TRUE(r15.holds("odd-primes-divide-exponent"));
  EXPECT_EQ(r15.find("exponent-divisible-by-4"), nullptr);
  const Report semion = arithmetic_divisibility_checks(semion_datum(), true);
  EXPECT_TRUE(semion.passed()) << FailedChecks(semion);
  EXPECT_TRUE(semion.holds("exponent-divisible-by-4"));
  const Check* open1 = semion.find("open-exponent-4-mod-8");
  const Check* open2 = semion.find("open-gauss-square-sign");
  ASSERT_NE(open1, nullptr);
  ASSERT_NE(open2, nullptr);
  EXPECT_FALSE(open1->asserted);
  EXPECT_TRUE(open1->passed);
  EXPECT_FALSE(open2->asserted);
  EXPECT_TRUE(open2->passed);
}

}  // namespace
}  // namespace moddata
