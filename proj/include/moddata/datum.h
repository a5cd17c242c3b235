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

// Modular data: an index set with unit and involution, a Verlinde matrix S
// and a diagonal Dehn matrix T, all entries cyclotomic.

#ifndef MODDATA_DATUM_H_
#define MODDATA_DATUM_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "moddata/cyclotomic.h"
#include "moddata/matrix.h"
#include "moddata/report.h"

namespace moddata {

class ModularDatum {
 public:
  // Checks only the shape: distinct nonempty label list, unit in range, star
  // an involutive permutation, S square of matching size, one T entry per
  // label. Everything else is left to validate_axioms. Throws InvalidDatum.
  ModularDatum(std::vector<std::string> labels, int unit, std::vector<int> star, CycloMatrix s,
               std::vector<CycloNum> t);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  std::optional<int> index_of(std::string_view label) const;

  int unit() const { return unit_; }
  int star(int i) const { return star_[i]; }
  const std::vector<int>& star() const { return star_; }

  const CycloMatrix& s() const { return s_; }
  const CycloNum& s(int i, int j) const { return s_(i, j); }
  const std::vector<CycloNum>& t() const { return t_; }
  const CycloNum& t(int i) const { return t_[i]; }

  CycloMatrix t_matrix() const { return CycloMatrix::diagonal(t_); }
  // C = (delta_{i, j*}).
  CycloMatrix c_matrix() const;

  // Same labels, unit and star with new matrices.
  ModularDatum with_matrices(CycloMatrix s, std::vector<CycloNum> t) const;

  friend bool operator==(const ModularDatum& a, const ModularDatum& b);

 private:
  std::vector<std::string> labels_;
  int unit_;
  std::vector<int> star_;
  CycloMatrix s_;
  std::vector<CycloNum> t_;
};

struct DatumReport {
  CycloNum n;     // global dimension
  int64_t N = 1;  // exponent, the order of T
  int64_t N_o = 1;  // order of T / t_o
  std::vector<CycloNum> dims;  // n_i = s_{i,o}
  CycloNum g;      // sum n_i^2 t_i
  CycloNum g_rec;  // sum n_i^2 / t_i
  bool normalized = false;
  bool integral = false;
};

// Check names, in evaluation order.
inline constexpr std::string_view kSymmetryAndFiniteOrder = "symmetric-s-finite-order-t";
inline constexpr std::string_view kDualityAndNonzeroDims = "dual-twists-nonzero-dims";
inline constexpr std::string_view kSSquaredIsNC = "s-squared-equals-nc";
inline constexpr std::string_view kModularRelation = "modular-relation-constant-form";
inline constexpr std::string_view kIntegralFusion = "nonnegative-integer-fusion";

// Total: never throws on a well-formed ModularDatum. Each of the five
// definition conditions gets one entry; details name the offending indices.
Report validate_axioms(const ModularDatum& d);

// Throws InvalidDatum if validate_axioms fails.
DatumReport derive_report(const ModularDatum& d);

// The elementary consequences of the axioms: star symmetry of S and of the
// dimensions, C commuting with S and T, unit and duality rules for the
// fusion coefficients, S recovered from the fusion table, and g g' = n n_o^2.
// Throws InvalidDatum on an invalid datum.
Report verify_structural_identities(const ModularDatum& d);

// Index set I1 x I2 (labels "(a,b)"), unit (o1,o2), componentwise star,
// S1 (x) S2, T1 (x) T2. Throws InvalidDatum if either factor is invalid.
ModularDatum kronecker_product(const ModularDatum& d1, const ModularDatum& d2);

// (g/g')^(2Nm) = 1 always; for integral data (g/g')^(2N) = 1 and, if N is
// even, (g/g')^N = 1. Whether g^2 = g'^2 and g^4 = g'^4 is recorded without
// being asserted. Throws InvalidDatum.
Report power_identity_check(const ModularDatum& d);

// Throws InvalidDatum carrying the first failed check if d is invalid.
void require_valid(const ModularDatum& d);

}  // namespace moddata

#endif  // MODDATA_DATUM_H_
