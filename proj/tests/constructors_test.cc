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

#include "moddata/constructors.h"

#include <gtest/gtest.h>

#include <random>

#include "moddata/datum.h"
#include "moddata/error.h"
#include "oracles.h"
#include "test_util.h"

namespace moddata {
namespace {

using test::ThrowsCode;

CycloNum Z(int m, int64_t k) { return root_of_unity(m, k); }

TEST(RadfordTest, ClosedFormsMatchRMatrixOracle) {
  for (int n : {3, 5, 7}) {
    const ModularDatum d = radford_datum(n);
    const test::RadfordOracleResult oracle = test::RadfordOracle(n);
    EXPECT_EQ(d.s(), oracle.s) << n;
    EXPECT_EQ(d.t(), oracle.t) << n;
  }
}

TEST(RadfordTest, Basics) {
  EXPECT_EQ(radford_datum(1), trivial_datum());
  const ModularDatum d = radford_datum(5);
  EXPECT_EQ(d.size(), 5);
  EXPECT_EQ(d.unit(), 0);
  EXPECT_EQ(d.star(2), 3);
  EXPECT_TRUE(validate_axioms(d).passed());
  const DatumReport r = derive_report(d);
  for (const auto& x : r.dims) EXPECT_EQ(x, CycloNum(1));
  EXPECT_EQ(r.g, classical_gauss_sum(5));
  EXPECT_EQ(r.g * r.g, CycloNum(5));
  const DatumReport r3 = derive_report(radford_datum(3));
  EXPECT_EQ(r3.g, 1 + 2 * Z(3, 1));
  EXPECT_EQ(r3.g * r3.g, CycloNum(-3));
}

TEST(RadfordTest, OtherPrimitiveRootsGiveConjugateData) {
  const ModularDatum d = radford_datum(7);
  const ModularDatum e = radford_datum(7, 3);
  EXPECT_TRUE(validate_axioms(e).passed());
  for (int a = 0; a < 7; ++a) {
    EXPECT_EQ(e.t(a), galois_apply(d.t(a), 3));
    for (int b = 0; b < 7; ++b) EXPECT_EQ(e.s(a, b), galois_apply(d.s(a, b), 3));
  }
}

TEST(RadfordTest, Errors) {
  EXPECT_TRUE(ThrowsCode([] { radford_datum(2); }, ErrorCode::kEvenOrder));
  EXPECT_TRUE(ThrowsCode([] { radford_datum(4); }, ErrorCode::kEvenOrder));
  EXPECT_TRUE(ThrowsCode([] { radford_datum(0); }, ErrorCode::kEvenOrder));
  EXPECT_TRUE(ThrowsCode([] { radford_datum(9, 3); }, ErrorCode::kNotAUnit));
}

TEST(SemionTest, Matrices) {
  const ModularDatum d = semion_datum();
  EXPECT_EQ(d.s(), CycloMatrix::from_rows({{1, 1}, {1, -1}}));
  EXPECT_EQ(d.t(), (std::vector<CycloNum>{1, Z(4, 1)}));
  EXPECT_EQ(d.star(1), 1);
  EXPECT_TRUE(validate_axioms(d).passed());
}

// Gauss sum summed by exponent counts, independent of the library routine.
CycloNum GaussByCounting(int n, int multiplier) {
  std::vector<int64_t> count(n, 0);
  for (int i = 0; i < n; ++i) ++count[mod_floor(static_cast<int64_t>(multiplier) * i * i, n)];
  return test::FromExponentCounts(n, count);
}

TEST(GaussSumTest, Examples) {
  const CycloNum i = Z(4, 1);
  EXPECT_EQ(classical_gauss_sum(4), 2 + 2 * i);
  EXPECT_EQ(classical_gauss_sum(4).pow(2), 8 * i);
  EXPECT_EQ(classical_gauss_sum(2), CycloNum(0));
  EXPECT_EQ(classical_gauss_sum(1), CycloNum(1));
  const CycloNum g7 = classical_gauss_sum(7);
  EXPECT_EQ(galois_apply(g7, 3), -g7);
  EXPECT_EQ(classical_gauss_sum(7, 3), -g7);
  EXPECT_EQ(test::EulerCriterion(3, 7), -1);
  EXPECT_TRUE(ThrowsCode([] { classical_gauss_sum(6, 3); }, ErrorCode::kNotAUnit));
  EXPECT_TRUE(ThrowsCode([] { classical_gauss_sum(0); }, ErrorCode::kBadModulus));
}

TEST(GaussSumTest, LemmaTable) {
  const CycloNum i = Z(4, 1);
  for (int n = 1; n <= 16; ++n) {
    const CycloNum g = classical_gauss_sum(n);
    ASSERT_EQ(g, GaussByCounting(n, 1)) << n;
    const CycloNum sq = g * g;
    switch (n % 4) {
      case 0: EXPECT_TRUE(sq == 2 * i * n || sq == -2 * i * n) << n; break;
      case 1: EXPECT_EQ(sq, CycloNum(n)) << n; break;
      case 2: EXPECT_EQ(sq, CycloNum(0)) << n; break;
      case 3: EXPECT_EQ(sq, CycloNum(-n)) << n; break;
    }
    const CycloNum product = g * GaussByCounting(n, -1);
    const long expected = n % 4 == 0 ? 2 * n : n % 2 == 1 ? n : 0;
    EXPECT_EQ(product, CycloNum(expected)) << n;
    const Report r = verify_gauss_lemma(n);
    EXPECT_TRUE(r.passed()) << test::FailedChecks(r);
    if (n % 2 == 1) {
      for (int64_t q : units_mod(n)) {
        EXPECT_EQ(galois_apply_lifted(g, q, n), CycloNum(test::JacobiByFactoring(q, n)) * g) << n;
      }
    }
  }
}

TEST(CocycleTest, SignCocycleOnZ2) {
  const CocycleFn c = cocycle_omega(2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) EXPECT_EQ(c(i, j, k), CycloNum(i * j * k == 1 ? -1 : 1));
    }
  }
  EXPECT_EQ(c(1, 1, 1), CycloNum(-1));
  EXPECT_TRUE(verify_3cocycle(c).ok());
}

TEST(CocycleTest, CyclicCocyclesPassExhaustively) {
  EXPECT_TRUE(verify_3cocycle(cocycle_omega(3)).ok());
  EXPECT_TRUE(verify_3cocycle(CocycleFn(4)).ok());
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 8; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const auto units = units_mod(n);
    const int64_t e = units[rng() % units.size()];
    const CocycleVerdict v = verify_3cocycle(cocycle_omega(n, e));
    EXPECT_TRUE(v.ok()) << n << " " << e;
  }
}

TEST(CocycleTest, BrokenTablesAreDetected) {
  CocycleFn c = cocycle_omega(2);
  c(1, 1, 1) = Z(4, 1);
  const CocycleVerdict v = verify_3cocycle(c);
  EXPECT_TRUE(v.normalized);
  EXPECT_FALSE(v.cocycle);
  ASSERT_TRUE(v.witness.has_value());
  CocycleFn d(3);
  d(0, 1, 2) = Z(3, 1);
  EXPECT_FALSE(verify_3cocycle(d).normalized);
}

}  // namespace
}  // namespace moddata
