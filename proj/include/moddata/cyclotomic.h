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

// Exact arithmetic in cyclotomic fields Q_M = Q[x]/(Phi_M(x)).
//
// A CycloNum carries its own conductor M and the coordinates of the element
// in the power basis 1, z, ..., z^(phi(M)-1), where z is a primitive M-th
// root of unity. Binary operations lift both operands to the lcm of their
// conductors, so there is no global ambient field. Distinct conductors may
// represent the same element; operator== compares values, not
// representations.
//
// Roots of unity are identified compatibly across conductors:
// z_M = z_{M'}^(M'/M) whenever M divides M'. Under the usual complex
// embedding this is z_M = exp(2 pi i / M).

#ifndef MODDATA_CYCLOTOMIC_H_
#define MODDATA_CYCLOTOMIC_H_

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace moddata {

using Rational = mpq_class;

// Canonical "p/q" form, denominator omitted when it is 1.
std::string rational_to_string(const Rational& r);
// Accepts "p", "-p", "p/q"; result is canonicalized. Throws SchemaError.
Rational parse_rational(std::string_view text);

// Integer helpers shared by the rest of the library.
int64_t gcd64(int64_t a, int64_t b);
int64_t lcm64(int64_t a, int64_t b);
// Least nonnegative residue of a modulo m (m > 0).
int64_t mod_floor(int64_t a, int64_t m);
int64_t euler_phi(int64_t n);
// Prime factorization as (prime, exponent) pairs in ascending order.
std::vector<std::pair<int64_t, int>> factorize(int64_t n);
std::vector<int64_t> divisors(int64_t n);
// Units of Z/m in [1, m), ascending. units_mod(1) == {0}.
std::vector<int64_t> units_mod(int64_t m);
// Inverse of q modulo m; throws NotAUnit if gcd(q, m) != 1.
int64_t inverse_mod(int64_t q, int64_t m);

// Coefficients of Phi_M, constant term first; degree phi(M), monic.
const std::vector<long>& cyclotomic_polynomial(int conductor);

class CycloNum {
 public:
  // Zero at conductor 1.
  CycloNum();
  CycloNum(long value);  // NOLINT(runtime/explicit): integers embed in every Q_M
  explicit CycloNum(const Rational& value);
  // Throws BadConductor if conductor < 1 or coeffs.size() != phi(conductor).
  CycloNum(int conductor, std::vector<Rational> coeffs);

  int conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;

  CycloNum operator-() const;
  CycloNum& operator+=(const CycloNum& other);
  CycloNum& operator-=(const CycloNum& other);
  CycloNum& operator*=(const CycloNum& other);
  CycloNum& operator/=(const CycloNum& other);

  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator/(CycloNum a, const CycloNum& b) { return a /= b; }

  // Value equality across conductors.
  friend bool operator==(const CycloNum& a, const CycloNum& b);

  // Throws DivisionByZero on zero.
  CycloNum inverse() const;
  // Negative exponents go through inverse().
  CycloNum pow(int64_t exponent) const;

  std::string to_string() const;

 private:
  friend CycloNum lift_conductor(const CycloNum& x, int conductor);
  friend CycloNum root_of_unity(int conductor, int64_t k);
  CycloNum(int conductor, std::vector<Rational> coeffs, bool /*trusted*/);
  void scale(const Rational& factor);

  int conductor_;
  std::vector<Rational> coeffs_;
};

// z_M^k in canonical form.
CycloNum root_of_unity(int conductor, int64_t k);

// Same element represented at a multiple of its conductor. Throws
// BadConductor if x.conductor() does not divide `conductor`.
CycloNum lift_conductor(const CycloNum& x, int conductor);

// sigma_q: z_M -> z_M^q at the element's own conductor. Throws NotAUnit if
// gcd(q, M) != 1.
CycloNum galois_apply(const CycloNum& x, int64_t q);

// sigma_q for q a unit modulo `modulus`, applied to an element of
// Q_modulus that may be represented at another conductor: q is replaced by
// some q + k * modulus that is a unit at x's conductor. Throws NotAUnit if
// gcd(q, modulus) != 1.
CycloNum galois_apply_lifted(const CycloNum& x, int64_t q, int64_t modulus);

// Multiplicative order if x is a root of unity, detected by x^(2M) == 1 at
// the element's conductor M.
std::optional<int64_t> root_of_unity_order(const CycloNum& x);

std::optional<Rational> is_rational(const CycloNum& x);

// An element r with r*r == n, built from Gauss sums over the squarefree part
// of n. Throws BadModulus if n < 1.
CycloNum sqrt_integer(int64_t n);

// Jacobi symbol (q | n) for odd n >= 1. Throws BadModulus for even or
// nonpositive n.
int jacobi_symbol(int64_t q, int64_t n);

}  // namespace moddata

#endif  // MODDATA_CYCLOTOMIC_H_
