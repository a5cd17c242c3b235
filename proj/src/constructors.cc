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

#include <string>

#include "moddata/error.h"

namespace moddata {

ModularDatum radford_datum(int64_t n, int64_t zeta_exponent) {
  if (n < 1 || n % 2 == 0) {
    throw Error(ErrorCode::kEvenOrder, "Radford datum needs odd n, got " + std::to_string(n));
  }
  if (n > 1 && gcd64(mod_floor(zeta_exponent, n), n) != 1) {
    throw Error(ErrorCode::kNotAUnit, std::to_string(zeta_exponent) + " is not a unit modulo " +
                                          std::to_string(n));
  }
  const int m = static_cast<int>(n);
  std::vector<std::string> labels(m);
  std::vector<int> star(m);
  std::vector<CycloNum> t(m);
  CycloMatrix s(m, m);
  for (int a = 0; a < m; ++a) {
    labels[a] = std::to_string(a);
    star[a] = static_cast<int>(mod_floor(-a, n));
    t[a] = root_of_unity(m, mod_floor(zeta_exponent * a * a, n));
    for (int b = 0; b < m; ++b) {
      s(a, b) = root_of_unity(m, mod_floor(-2 * zeta_exponent * a * b, n));
    }
  }
  return ModularDatum(std::move(labels), 0, std::move(star), std::move(s), std::move(t));
}

ModularDatum semion_datum() {
  CycloMatrix s = CycloMatrix::from_rows({{1, 1}, {1, -1}});
  return ModularDatum({"0", "1"}, 0, {0, 1}, std::move(s), {CycloNum(1), root_of_unity(4, 1)});
}

ModularDatum trivial_datum() {
  return ModularDatum({"0"}, 0, {0}, CycloMatrix::from_rows({{1}}), {CycloNum(1)});
}

CycloNum classical_gauss_sum(int64_t n, int64_t multiplier) {
  if (n < 1) throw Error(ErrorCode::kBadModulus, "Gauss sum needs n >= 1");
  if (gcd64(mod_floor(multiplier, n), n) != 1 && n > 1) {
    throw Error(ErrorCode::kNotAUnit,
                std::to_string(multiplier) + " is not a unit modulo " + std::to_string(n));
  }
  std::vector<long> counts(n, 0);
  for (int64_t i = 0; i < n; ++i) ++counts[mod_floor(multiplier * ((i * i) % n), n)];
  const int m = static_cast<int>(n);
  CycloNum g = lift_conductor(CycloNum(0), m);
  for (int64_t k = 0; k < n; ++k) {
    if (counts[k] != 0) g += CycloNum(counts[k]) * root_of_unity(m, k);
  }
  return g;
}

Report verify_gauss_lemma(int64_t n) {
  Report r("gauss-lemma");
  const CycloNum g = classical_gauss_sum(n);
  const CycloNum g_rec = classical_gauss_sum(n, -1);
  const CycloNum sq = g * g;
  const CycloNum nn(static_cast<long>(n));
  const CycloNum i = root_of_unity(4, 1);
  bool square_ok = false;
  CycloNum product_expected;
  switch (n % 4) {
    case 0:
      square_ok = sq == 2 * i * nn || sq == -2 * i * nn;
      product_expected = 2 * nn;
      break;
    case 1:
      square_ok = sq == nn;
      product_expected = nn;
      break;
    case 2:
      square_ok = sq.is_zero();
      product_expected = CycloNum(0);
      break;
    default:
      square_ok = sq == -nn;
      product_expected = nn;
      break;
  }
  r.add("gauss-sum-square", square_ok, "G^2 = " + sq.to_string());
  r.add("gauss-sum-norm", g * g_rec == product_expected);
  if (n % 2 == 1) {
    std::string bad;
    for (int64_t q : units_mod(n)) {
      if (n == 1) break;
      if (!(galois_apply(g, q) == CycloNum(jacobi_symbol(q, n)) * g)) {
        bad = "q = " + std::to_string(q);
        break;
      }
      if (!(classical_gauss_sum(n, q) == galois_apply(g, q))) {
        bad = "G_n(z^q) differs at q = " + std::to_string(q);
        break;
      }
    }
    r.add("gauss-sum-galois-jacobi", bad.empty(), bad);
  }
  r.set_value("G", g.to_string());
  return r;
}

CocycleFn::CocycleFn(int n) : n_(n), table_(static_cast<size_t>(n) * n * n, CycloNum(1)) {}

CocycleFn cocycle_omega(int n, int64_t zeta_exponent) {
  if (n < 1) throw Error(ErrorCode::kBadModulus, "cocycle needs n >= 1");
  CocycleFn c(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int q = (i + j) / n;  // 1 exactly when i + j wraps
      for (int k = 0; k < n; ++k) {
        c(i, j, k) = root_of_unity(n, mod_floor(zeta_exponent * q * k, n));
      }
    }
  }
  return c;
}

CocycleVerdict verify_3cocycle(const CocycleFn& c) {
  CocycleVerdict v;
  const int n = c.n();
  const CycloNum one(1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!(c(0, i, j) == one) || !(c(i, 0, j) == one) || !(c(i, j, 0) == one)) {
        v.normalized = false;
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          const CycloNum lhs = c(j, k, l) * c(i, (j + k) % n, l) * c(i, j, k);
          const CycloNum rhs = c((i + j) % n, k, l) * c(i, j, (k + l) % n);
          if (!(lhs == rhs)) {
            v.cocycle = false;
            v.witness = std::array<int, 4>{i, j, k, l};
            return v;
          }
        }
      }
    }
  }
  return v;
}

}  // namespace moddata
