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

#include "moddata/fusion.h"

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

TEST(FusionTest, SemionSquareIsUnit) {
  const ModularDatum d = semion_datum();
  const FusionTable t = fusion_coefficients(d);
  EXPECT_EQ(t(1, 1, 0), 1);
  EXPECT_EQ(t(1, 1, 1), 0);
  EXPECT_EQ(t(0, 1, 1), 1);
  const FusionElement b1 = FusionElement::basis(2, 1);
  EXPECT_EQ(multiply(b1, b1, t), FusionElement::basis(2, 0));
}

// The Radford fusion ring is the group ring of Z_n.
TEST(FusionTest, RadfordFusionIsGroupLaw) {
  for (int n : {1, 3, 5, 7, 9}) {
    const FusionTable t = fusion_coefficients(radford_datum(n));
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        for (int c = 0; c < n; ++c) ASSERT_EQ(t(a, b, c), (a + b) % n == c ? 1 : 0) << n;
      }
    }
  }
}

TEST(FusionTest, LawSuitesOnExamples) {
  const std::vector<ModularDatum> examples = {
      trivial_datum(),   semion_datum(),    radford_datum(3),
      radford_datum(5),  radford_datum(7),  kronecker_product(semion_datum(), semion_datum()),
      kronecker_product(semion_datum(), radford_datum(3))};
  for (const auto& d : examples) {
    const FusionTable t = fusion_coefficients(d);
    EXPECT_TRUE(t.violations().empty());
    const Report laws = verify_table_laws(t, d);
    const Report ring = verify_ring_homomorphisms(d, t);
    const Report idem = verify_idempotent_laws(d, t);
    EXPECT_TRUE(laws.passed()) << FailedChecks(laws);
    EXPECT_TRUE(ring.passed()) << FailedChecks(ring);
    EXPECT_TRUE(idem.passed()) << FailedChecks(idem);
    for (const char* name : {"nonnegative-integer", "commutative", "unit", "duality", "associative"}) {
      EXPECT_TRUE(laws.holds(name)) << name;
    }
    for (const char* name : {"xi-multiplicative", "xi-distinct", "basis-evaluation-injective"}) {
      EXPECT_TRUE(ring.holds(name)) << name;
    }
    for (const char* name : {"idempotent", "orthogonal", "partition-of-unit", "dual-basis",
                             "eigenvectors", "unit-idempotent-dimensions"}) {
      EXPECT_TRUE(idem.holds(name)) << name;
    }
  }
}

// xi_j(p_i) = delta_ij, evaluated directly from S rather than through the
// law suite.
TEST(FusionTest, IdempotentsAreDualToCharacters) {
  const ModularDatum d = kronecker_product(semion_datum(), radford_datum(3));
  const FusionTable t = fusion_coefficients(d);
  const std::vector<FusionElement> p = idempotents(d, t);
  ASSERT_EQ(static_cast<int>(p.size()), d.size());
  for (int i = 0; i < d.size(); ++i) {
    for (int j = 0; j < d.size(); ++j) {
      EXPECT_EQ(xi_evaluate(d, j, p[i]), CycloNum(i == j ? 1 : 0));
    }
  }
}

TEST(FusionTest, XiOfBasisIsNormalizedColumn) {
  const ModularDatum d = radford_datum(5);
  for (int i = 0; i < 5; ++i) {
    for (int q = 0; q < 5; ++q) {
      EXPECT_EQ(xi_evaluate(d, q, FusionElement::basis(5, i)), d.s(i, q) / d.s(d.unit(), q));
    }
  }
}

TEST(FusionTest, NonIntegralCoefficientsAreRecorded) {
  // S^2 = 5 E but the Verlinde formula gives fractions.
  const ModularDatum d({"0", "1"}, 0, {0, 1}, CycloMatrix::from_rows({{1, 2}, {2, -1}}),
                       {1, root_of_unity(4, 1)});
  const FusionTable t = evaluate_fusion(d);
  EXPECT_FALSE(t.violations().empty());
  EXPECT_TRUE(test::ThrowsCode([&] { fusion_coefficients(d); }, ErrorCode::kInvalidDatum));
}

TEST(FusionTest, MultiplyRejectsWrongSizes) {
  const FusionTable t = fusion_coefficients(semion_datum());
  EXPECT_TRUE(test::ThrowsCode(
      [&] { multiply(FusionElement::basis(3, 0), FusionElement::basis(2, 0), t); },
      ErrorCode::kDimensionMismatch));
}

// Products of random integer combinations are associative and commutative,
// and every xi_q is multiplicative on them.
TEST(FusionTest, RandomElementsRespectRingLaws) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int trial = 0; trial < 10; ++trial) {
    const ModularDatum d = test::RandomExampleDatum(rng);
    const FusionTable t = fusion_coefficients(d);
    auto random_element = [&] {
      FusionElement x = FusionElement::zero(d.size());
      for (auto& c : x.coeffs) c = CycloNum(coeff(rng));
      return x;
    };
    const FusionElement x = random_element(), y = random_element(), z = random_element();
    EXPECT_EQ(multiply(multiply(x, y, t), z, t), multiply(x, multiply(y, z, t), t));
    EXPECT_EQ(multiply(x, y, t), multiply(y, x, t));
    for (int q = 0; q < d.size(); ++q) {
      EXPECT_EQ(xi_evaluate(d, q, multiply(x, y, t)), xi_evaluate(d, q, x) * xi_evaluate(d, q, y));
    }
  }
}

}  // namespace
}  // namespace moddata
