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

// Extended modular data (generalized rank D and multiplicative central
// charge ell), the homogeneous matrices S' = S / D and T' = T / (t_o ell),
// and the congruence machinery deciding whether the induced (projective)
// representation of SL(2,Z) factors through SL(2,Z_M).

#ifndef MODDATA_EXTENSION_H_
#define MODDATA_EXTENSION_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "moddata/cyclotomic.h"
#include "moddata/datum.h"
#include "moddata/matrix.h"
#include "moddata/report.h"
#include "moddata/sl2.h"

namespace moddata {

struct ExtendedDatum {
  ModularDatum datum;
  CycloNum D;    // generalized rank, D^4 = n^2
  CycloNum ell;  // ell^3 = g / (n_o t_o D)
  bool is_rank = false;  // D^2 = n
};

// r, -r, z4 r, -z4 r with r = sqrt_integer(n). Throws NotIntegral.
std::vector<CycloNum> enumerate_ranks(const ModularDatum& d);

// The three roots of unity ell with ell^3 = g / (n_o t_o D), ordered by
// angle. Throws ChargeNotRootOfUnity, InvalidExtension if D^4 != n^2.
std::vector<CycloNum> enumerate_charges(const ModularDatum& d, const CycloNum& D);

// Checks the invariants of ExtendedDatum. Throws InvalidExtension.
ExtendedDatum make_extension(const ModularDatum& d, const CycloNum& D, const CycloNum& ell);

struct HomogeneousPair {
  CycloMatrix s;  // S / D
  CycloMatrix t;  // T / (t_o ell)
};

// Also asserts s^4 = E and (t s)^3 = s^2. Throws InvalidExtension.
HomogeneousPair homogeneous_matrices(const ExtendedDatum& e);

// All 12 extensions, ranks outer and charges inner.
std::vector<ExtendedDatum> extension_family(const ModularDatum& d);

// Any two extensions differ by a twelfth root of unity z as (D / z^3, z ell),
// and every twelfth root of unity maps the family into itself.
Report extension_family_check(const ModularDatum& d);

// c in [0, 24) with ell = z24^c. Throws ChargeOrderTooLarge if ell^24 != 1.
// For integral data of odd exponent with a rank, c is asserted even.
int additive_charge(const ExtendedDatum& e);

// ell^24 = 1 and g^4 = t_o^8 g'^4, the consequences expected of a Galois
// projective congruence datum.
Report central_charge_checks(const ExtendedDatum& e);

enum class FactorMode { kLinear, kProjective };

struct CongruenceWitness {
  Mat2 element;
  // Two words for the element: its BFS tree word and tree word of a
  // neighbor followed by one generator.
  std::string tree_word;
  std::string edge_word;
  CycloMatrix tree_matrix;
  CycloMatrix edge_matrix;
};

struct CongruenceReport {
  int64_t modulus = 1;
  int64_t group_order = 1;
  bool linear_factors = false;
  bool projective_factors = false;
  // First failing Cayley edge in BFS order for the requested mode.
  std::optional<CongruenceWitness> witness;
};

// Whether s -> S_mat, t -> T_mat is well defined on SL(2,Z_M), exactly
// (linear) or up to scalars (projective). Both verdicts are computed; the
// witness belongs to the requested mode. Throws NonInvertibleInput, DimensionMismatch,
// TooLarge.
CongruenceReport factor_check(const CycloMatrix& s_mat, const CycloMatrix& t_mat, int64_t m,
                              FactorMode mode, int64_t max_order = default_max_group_order());

struct CongruenceClassification {
  CongruenceReport projective;  // raw S, T at N_o
  CongruenceReport linear;      // S', T' at N_o
  std::optional<int64_t> minimal_level;
  std::vector<int64_t> skipped_levels;  // over the group order bound
  bool exhausted = false;  // no candidate factored

  bool is_projective_congruence() const { return projective.projective_factors; }
  bool is_congruence() const { return linear.linear_factors; }
  Report report() const;
};

// Candidates default to the divisors of 24 N_o, ascending. Levels whose
// group exceeds max_order are skipped; TooLarge only if N_o itself is.
CongruenceClassification congruence_classify(
    const ExtendedDatum& e, const std::optional<std::vector<int64_t>>& level_candidates = {},
    int64_t max_order = default_max_group_order());

// congruence_classify for each member, sharing one enumeration per level.
// Throws InvalidExtension unless all members extend the same datum.
std::vector<CongruenceClassification> congruence_classify_family(
    const std::vector<ExtendedDatum>& family,
    const std::optional<std::vector<int64_t>>& level_candidates = {},
    int64_t max_order = default_max_group_order());

// Members of the extension family whose homogeneous matrices linearly factor
// through SL(2,Z_M). Exhaustive. Throws NotIntegral, TooLarge.
std::vector<ExtendedDatum> lift_search(const ModularDatum& d, int64_t m,
                                       int64_t max_order = default_max_group_order());

}  // namespace moddata

#endif  // MODDATA_EXTENSION_H_
