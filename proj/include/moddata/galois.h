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

// Galois action of Gal(Q_No / Q) on the index set of an integral modular
// datum, the fusion symbol f(q) = sigma_q(g) / g, and the theorems built on
// them. Everything here requires an integral datum and throws NotIntegral
// otherwise (InvalidDatum if the datum fails validation).

#ifndef MODDATA_GALOIS_H_
#define MODDATA_GALOIS_H_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "moddata/cyclotomic.h"
#include "moddata/datum.h"
#include "moddata/matrix.h"
#include "moddata/report.h"

namespace moddata {

struct GaloisPermutation {
  int64_t q = 1;
  int64_t modulus = 1;  // N_o
  std::vector<int> perm;  // perm[i] = sigma_q . i

  // P(sigma) = (delta_{i, sigma.j}).
  CycloMatrix matrix() const { return permutation_matrix(perm); }
};

// sigma_q . i is the unique j with sigma_q(s_ik / n_i) = s_jk / n_j for all k.
// Throws NotIntegral, NotAUnit (gcd(q, N_o) != 1) or NoUniqueMatch.
GaloisPermutation index_action(const ModularDatum& d, int64_t q);

// For every unit q mod N_o: sigma(s_ij) = s_{sigma.i, j} = s_{i, sigma.j},
// n_{sigma.i} = n_i, sigma.o = o, sigma.(i*) = (sigma.i)*, the characters are
// permuted, S P = P^-1 S, P C = C P, composition of actions, and P(-1) = C.
Report verify_action_laws(const ModularDatum& d);

struct GaloisVerdict {
  bool is_galois = true;
  // First (q, i) with t_{sigma_q.i} != sigma_q^2(t_i).
  std::optional<std::pair<int64_t, int>> witness;
};

// t_{sigma.i} = sigma^2(t_i) for every unit q mod N, the action pulled back
// from N_o.
GaloisVerdict is_galois_datum(const ModularDatum& d);

// sigma_q(g) / g if gcd(q, N) = 1, else 0.
CycloNum fusion_symbol(const ModularDatum& d, int64_t q);

struct FusionSymbolTable {
  int64_t modulus = 1;  // N
  std::vector<CycloNum> values;  // values[q] for 0 <= q < N

  const CycloNum& operator()(int64_t q) const { return values[mod_floor(q, modulus)]; }
};

FusionSymbolTable fusion_symbol_table(const ModularDatum& d);

// Cocycle law f(qq') = f(q) sigma_q(f(q')), f(q)^(2N) = 1 (f(q)^N = 1 for even
// N), the character criterion (f multiplicative iff g' = +-g), and for
// Galois data f(q)^12 = 1, t_o^24 = 1 and sigma_q^2(g) = g.
Report fusion_symbol_analysis(const ModularDatum& d);

// Whether x^(q^2) = x for every unit q modulo the order of x. When true,
// x^24 = 1 is enforced (Internal error otherwise). Throws NotRootOfUnity.
bool definition_of_24_check(const CycloNum& x);

// Number of units q mod N whose sigma_q fixes every s_ij, i.e. the index of
// the field generated by S inside Q_N. The equivalent count of q acting
// trivially on the index set is asserted equal. For Galois data the result
// must be a power of 2, and N must divide 24 when S is rational.
int64_t verlinde_field_index(const ModularDatum& d);

// S T^q' S^-1 T^q S T^q' = (t_o^(2q) / n_o) sigma_q(g) P(sigma_q^-1) for a
// Galois datum, plus the reciprocal identity checked by
// reciprocal_gauss_identity. Throws NotGalois or BadInversePair (qq' != 1
// mod N).
Report relact_check(const ModularDatum& d, int64_t q, int64_t q_prime);

// g sum_k s_{i*k} s_jk t_k^-2 = g' (t_i t_j / t_o^4) sum_k s_ik s_jk t_k^2 for
// all i, j. Needs only a valid datum.
Report reciprocal_gauss_identity(const ModularDatum& d);

// For odd N: the sign v with g = v t_o^2 g'. For odd n also v = (-1)^((n-1)/2)
// and g / (t_o n_o) = +-G_n, and for normalized data f(q) = (q|n) for q
// coprime to N n. Throws EvenExponent for even N and SignMismatch if no sign
// fits.
Report odd_sign_analysis(const ModularDatum& d);

// Odd primes dividing n an odd number of times divide N. If the caller
// certifies a Galois projective congruence datum and n = 2 mod 4, also
// N = 0 mod 4. The open statements N = 4 mod 8 and g^2 = -t_o^4 g'^2 are
// reported without being asserted.
Report arithmetic_divisibility_checks(const ModularDatum& d, bool galois_projective_congruence);

}  // namespace moddata

#endif  // MODDATA_GALOIS_H_
