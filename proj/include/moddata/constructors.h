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

// Built-in modular data and classical number-theoretic generators.

#ifndef MODDATA_CONSTRUCTORS_H_
#define MODDATA_CONSTRUCTORS_H_

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "moddata/cyclotomic.h"
#include "moddata/datum.h"
#include "moddata/report.h"

namespace moddata {

// Datum of the group ring of Z_n with Radford's R-matrix, n odd:
// labels "0".."n-1", o = 0, a* = -a, s_ab = z^(-2ab), t_a = z^(a^2) where
// z = z_n^zeta_exponent. Throws EvenOrder for even or nonpositive n and
// NotAUnit if zeta_exponent is not a unit mod n.
ModularDatum radford_datum(int64_t n, int64_t zeta_exponent = 1);

// Labels "0", "1"; S = [[1,1],[1,-1]], T = diag(1, z_4).
ModularDatum semion_datum();

// One label "0", S = (1), T = (1).
ModularDatum trivial_datum();

// sum_{i<n} z_n^(multiplier i^2). Throws NotAUnit if gcd(multiplier, n) != 1
// and BadModulus if n < 1.
CycloNum classical_gauss_sum(int64_t n, int64_t multiplier = 1);

// G^2 by n mod 4 (2 i n up to sign, n, 0, -n), G G' by n mod 4 (2n, n, 0),
// and sigma_q(G) = (q|n) G for every unit q when n is odd.
Report verify_gauss_lemma(int64_t n);

// omega(i, j, k) for i, j, k in Z_n.
class CocycleFn {
 public:
  explicit CocycleFn(int n);

  int n() const { return n_; }
  const CycloNum& operator()(int i, int j, int k) const { return table_[index(i, j, k)]; }
  CycloNum& operator()(int i, int j, int k) { return table_[index(i, j, k)]; }

 private:
  size_t index(int i, int j, int k) const {
    return (static_cast<size_t>(i) * n_ + j) * n_ + k;
  }

  int n_;
  std::vector<CycloNum> table_;
};

// omega(i,j,k) = sigma(i,j)^k with sigma(i,j) = z^(q_ij),
// q_ij = (i + j - ((i + j) mod n)) / n, z = z_n^zeta_exponent.
CocycleFn cocycle_omega(int n, int64_t zeta_exponent = 1);

struct CocycleVerdict {
  bool normalized = true;
  bool cocycle = true;
  // First failing (i, j, k, l) for the cocycle identity.
  std::optional<std::array<int, 4>> witness;
  bool ok() const { return normalized && cocycle; }
};

// Checks omega(i,j,k) = 1 when an argument is 0 and
// omega(j,k,l) omega(i,j+k,l) omega(i,j,k) = omega(i+j,k,l) omega(i,j,k+l).
CocycleVerdict verify_3cocycle(const CocycleFn& c);

}  // namespace moddata

#endif  // MODDATA_CONSTRUCTORS_H_
