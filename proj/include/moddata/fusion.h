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

// Fusion rings from the Verlinde formula
//   N_ij^k = (1/n) sum_l s_il s_jl s_{k* l} / s_ol
// together with the characters xi_q(b_i) = s_iq / n_q and the primitive
// idempotents built from them.

#ifndef MODDATA_FUSION_H_
#define MODDATA_FUSION_H_

#include <cstdint>
#include <string>
#include <vector>

#include "moddata/cyclotomic.h"
#include "moddata/datum.h"
#include "moddata/report.h"

namespace moddata {

class FusionTable {
 public:
  FusionTable() = default;
  explicit FusionTable(int size)
      : size_(size), coeffs_(static_cast<size_t>(size) * size * size, 0) {}

  int size() const { return size_; }
  int64_t operator()(int i, int j, int k) const { return coeffs_[index(i, j, k)]; }
  int64_t& operator()(int i, int j, int k) { return coeffs_[index(i, j, k)]; }

  // Entries that were not nonnegative integers; those are stored as 0.
  const std::vector<std::string>& violations() const { return violations_; }
  void add_violation(std::string v) { violations_.push_back(std::move(v)); }

  friend bool operator==(const FusionTable& a, const FusionTable& b) {
    return a.size_ == b.size_ && a.coeffs_ == b.coeffs_;
  }

 private:
  size_t index(int i, int j, int k) const {
    return (static_cast<size_t>(i) * size_ + j) * size_ + k;
  }

  int size_ = 0;
  std::vector<int64_t> coeffs_;
  std::vector<std::string> violations_;
};

// Element of the fusion ring over a cyclotomic field, in the basis b_i.
struct FusionElement {
  std::vector<CycloNum> coeffs;

  static FusionElement basis(int size, int i);
  static FusionElement zero(int size);
  int size() const { return static_cast<int>(coeffs.size()); }

  FusionElement& operator+=(const FusionElement& other);
  FusionElement& operator-=(const FusionElement& other);
  FusionElement operator*(const CycloNum& scalar) const;
  friend bool operator==(const FusionElement& a, const FusionElement& b);
};

// Evaluates the Verlinde formula exactly. Non-integral or negative entries
// are recorded as violations instead of thrown. Throws InvalidDatum if n or
// some s_ol vanishes.
FusionTable evaluate_fusion(const ModularDatum& d);

// As evaluate_fusion, but requires the first four axioms to hold. Throws
// InvalidDatum.
FusionTable fusion_coefficients(const ModularDatum& d);

// Commutativity, unit, duality and associativity of the table itself.
Report verify_table_laws(const FusionTable& t, const ModularDatum& d);

// Table-driven product. Throws DimensionMismatch.
FusionElement multiply(const FusionElement& x, const FusionElement& y, const FusionTable& t);

// xi_q(x) = sum_i x_i s_iq / n_q. Throws InvalidDatum.
CycloNum xi_evaluate(const ModularDatum& d, int q, const FusionElement& x);

// xi_q(b_i b_j) = xi_q(b_i) xi_q(b_j) for all q, i, j, and the xi_q pairwise
// distinct. Throws InvalidDatum.
Report verify_ring_homomorphisms(const ModularDatum& d, const FusionTable& t);

// p_i = (1 / xi_i(b_A)) sum_j xi_i(b_{j*}) b_j with b_A = sum_j b_j b_{j*}.
// Throws InvalidDatum if some xi_i(b_A) differs from n / n_i^2.
std::vector<FusionElement> idempotents(const ModularDatum& d, const FusionTable& t);

// p_i^2 = p_i, p_i p_j = 0, sum p_i = b_o, xi_j(p_i) = delta_ij,
// b_k p_i = xi_i(b_k) p_i and b_k p_o = (n_k / n_o) p_o. Throws InvalidDatum.
Report verify_idempotent_laws(const ModularDatum& d, const FusionTable& t);

}  // namespace moddata

#endif  // MODDATA_FUSION_H_
