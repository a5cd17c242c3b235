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

#include "moddata/error.h"

namespace moddata {

namespace {

std::string triple(const ModularDatum& d, int i, int j, int k) {
  return "(" + d.label(i) + "," + d.label(j) + "," + d.label(k) + ")";
}

// xi[q][i] = s_iq / n_q.
std::vector<std::vector<CycloNum>> character_table(const ModularDatum& d) {
  const int m = d.size();
  std::vector<std::vector<CycloNum>> xi(m, std::vector<CycloNum>(m));
  for (int q = 0; q < m; ++q) {
    const CycloNum& n_q = d.s(q, d.unit());
    if (n_q.is_zero()) throw Error(ErrorCode::kInvalidDatum, "dimension of " + d.label(q) + " is 0");
    const CycloNum inv = n_q.inverse();
    for (int i = 0; i < m; ++i) xi[q][i] = d.s(i, q) * inv;
  }
  return xi;
}

CycloNum evaluate(const std::vector<CycloNum>& xi_row, const FusionElement& x) {
  CycloNum out;
  for (size_t i = 0; i < x.coeffs.size(); ++i) {
    if (!x.coeffs[i].is_zero()) out += x.coeffs[i] * xi_row[i];
  }
  return out;
}

void require_size(const ModularDatum& d, const FusionTable& t) {
  if (t.size() != d.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "fusion table and datum differ in size");
  }
}

}  // namespace

FusionElement FusionElement::basis(int size, int i) {
  FusionElement e = zero(size);
  e.coeffs[i] = CycloNum(1);
  return e;
}

FusionElement FusionElement::zero(int size) { return FusionElement{std::vector<CycloNum>(size)}; }

FusionElement& FusionElement::operator+=(const FusionElement& other) {
  if (other.size() != size()) throw Error(ErrorCode::kDimensionMismatch, "fusion element sizes");
  for (int i = 0; i < size(); ++i) coeffs[i] += other.coeffs[i];
  return *this;
}

FusionElement& FusionElement::operator-=(const FusionElement& other) {
  if (other.size() != size()) throw Error(ErrorCode::kDimensionMismatch, "fusion element sizes");
  for (int i = 0; i < size(); ++i) coeffs[i] -= other.coeffs[i];
  return *this;
}

FusionElement FusionElement::operator*(const CycloNum& scalar) const {
  FusionElement out = *this;
  for (auto& c : out.coeffs) c *= scalar;
  return out;
}

bool operator==(const FusionElement& a, const FusionElement& b) {
  if (a.size() != b.size()) return false;
  for (int i = 0; i < a.size(); ++i) {
    if (!(a.coeffs[i] == b.coeffs[i])) return false;
  }
  return true;
}

FusionTable evaluate_fusion(const ModularDatum& d) {
  const int m = d.size();
  const int o = d.unit();
  CycloNum n;
  for (int j = 0; j < m; ++j) n += d.s(o, j) * d.s(j, d.star(o));
  if (n.is_zero()) throw Error(ErrorCode::kInvalidDatum, "global dimension is 0");
  std::vector<CycloNum> weight(m);
  for (int l = 0; l < m; ++l) {
    if (d.s(o, l).is_zero()) {
      throw Error(ErrorCode::kInvalidDatum, "s(" + d.label(o) + "," + d.label(l) + ") is 0");
    }
    weight[l] = (n * d.s(o, l)).inverse();
  }
  FusionTable table(m);
  std::vector<CycloNum> v(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int l = 0; l < m; ++l) v[l] = d.s(i, l) * d.s(j, l) * weight[l];
      for (int k = 0; k < m; ++k) {
        CycloNum sum;
        for (int l = 0; l < m; ++l) sum += v[l] * d.s(d.star(k), l);
        auto r = is_rational(sum);
        if (!r || r->get_den() != 1 || sgn(*r) < 0 || !r->get_num().fits_slong_p()) {
          table.add_violation("N" + triple(d, i, j, k) + " = " + sum.to_string());
          continue;
        }
        table(i, j, k) = r->get_num().get_si();
      }
    }
  }
  return table;
}

FusionTable fusion_coefficients(const ModularDatum& d) {
  const Report axioms = validate_axioms(d);
  for (const auto& c : axioms.checks()) {
    if (c.name == kIntegralFusion) continue;
    if (!c.passed) throw Error(ErrorCode::kInvalidDatum, c.name + ": " + c.detail);
  }
  return evaluate_fusion(d);
}

Report verify_table_laws(const FusionTable& t, const ModularDatum& d) {
  require_size(d, t);
  Report r("fusion-table");
  const int m = t.size();
  const int o = d.unit();
  r.add("nonnegative-integer", t.violations().empty(),
        t.violations().empty() ? "" : t.violations().front());
  bool comm = true, unit = true, dual = true, assoc = true;
  std::string where;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < m; ++k) {
        if (t(i, j, k) != t(j, i, k) && comm) {
          comm = false;
          where = triple(d, i, j, k);
        }
      }
      const int64_t delta = i == j ? 1 : 0;
      if (t(o, i, j) != delta || t(i, o, j) != delta) unit = false;
      if (t(i, j, o) != (i == d.star(j) ? 1 : 0)) dual = false;
    }
  }
  std::string assoc_where;
  for (int i = 0; i < m && assoc; ++i) {
    for (int j = 0; j < m && assoc; ++j) {
      for (int l = 0; l < m && assoc; ++l) {
        for (int p = 0; p < m; ++p) {
          int64_t lhs = 0, rhs = 0;
          for (int k = 0; k < m; ++k) {
            lhs += t(i, j, k) * t(k, l, p);
            rhs += t(j, l, k) * t(i, k, p);
          }
          if (lhs != rhs) {
            assoc = false;
            assoc_where = "(" + d.label(i) + "," + d.label(j) + "," + d.label(l) + "," +
                          d.label(p) + ")";
            break;
          }
        }
      }
    }
  }
  r.add("commutative", comm, where);
  r.add("unit", unit);
  r.add("duality", dual);
  r.add("associative", assoc, assoc_where);
  return r;
}

FusionElement multiply(const FusionElement& x, const FusionElement& y, const FusionTable& t) {
  const int m = t.size();
  if (x.size() != m || y.size() != m) {
    throw Error(ErrorCode::kDimensionMismatch, "fusion element size differs from table");
  }
  FusionElement out = FusionElement::zero(m);
  for (int i = 0; i < m; ++i) {
    if (x.coeffs[i].is_zero()) continue;
    for (int j = 0; j < m; ++j) {
      if (y.coeffs[j].is_zero()) continue;
      const CycloNum c = x.coeffs[i] * y.coeffs[j];
      for (int k = 0; k < m; ++k) {
        const int64_t n = t(i, j, k);
        if (n == 0) continue;
        out.coeffs[k] += n == 1 ? c : CycloNum(static_cast<long>(n)) * c;
      }
    }
  }
  return out;
}

CycloNum xi_evaluate(const ModularDatum& d, int q, const FusionElement& x) {
  if (x.size() != d.size()) throw Error(ErrorCode::kDimensionMismatch, "fusion element size");
  const CycloNum& n_q = d.s(q, d.unit());
  if (n_q.is_zero()) throw Error(ErrorCode::kInvalidDatum, "dimension of " + d.label(q) + " is 0");
  CycloNum out;
  for (int i = 0; i < d.size(); ++i) {
    if (!x.coeffs[i].is_zero()) out += x.coeffs[i] * d.s(i, q);
  }
  return out / n_q;
}

Report verify_ring_homomorphisms(const ModularDatum& d, const FusionTable& t) {
  require_size(d, t);
  const auto xi = character_table(d);
  const int m = d.size();
  Report r("ring-homomorphisms");
  std::string where;
  for (int q = 0; q < m && where.empty(); ++q) {
    for (int i = 0; i < m && where.empty(); ++i) {
      for (int j = i; j < m; ++j) {
        CycloNum lhs;
        for (int k = 0; k < m; ++k) {
          if (t(i, j, k) != 0) lhs += CycloNum(static_cast<long>(t(i, j, k))) * xi[q][k];
        }
        if (!(lhs == xi[q][i] * xi[q][j])) {
          where = "(q,i,j) = " + triple(d, q, i, j);
          break;
        }
      }
    }
  }
  r.add("xi-multiplicative", where.empty(), where);
  std::string same;
  for (int q = 0; q < m && same.empty(); ++q) {
    for (int p = q + 1; p < m; ++p) {
      if (xi[q] == xi[p]) {
        same = d.label(q) + " and " + d.label(p);
        break;
      }
    }
  }
  r.add("xi-distinct", same.empty(), same);
  std::string cols;
  for (int i = 0; i < m && cols.empty(); ++i) {
    for (int j = i + 1; j < m; ++j) {
      bool equal = true;
      for (int q = 0; q < m && equal; ++q) equal = xi[q][i] == xi[q][j];
      if (equal) {
        cols = d.label(i) + " and " + d.label(j);
        break;
      }
    }
  }
  r.add("basis-evaluation-injective", cols.empty(), cols);
  return r;
}

std::vector<FusionElement> idempotents(const ModularDatum& d, const FusionTable& t) {
  require_size(d, t);
  const int m = d.size();
  const int o = d.unit();
  const auto xi = character_table(d);
  FusionElement b_a = FusionElement::zero(m);
  for (int j = 0; j < m; ++j) {
    for (int k = 0; k < m; ++k) {
      if (t(j, d.star(j), k) != 0) b_a.coeffs[k] += CycloNum(static_cast<long>(t(j, d.star(j), k)));
    }
  }
  CycloNum n;
  for (int j = 0; j < m; ++j) n += d.s(j, o) * d.s(j, o);
  std::vector<FusionElement> out;
  out.reserve(m);
  for (int i = 0; i < m; ++i) {
    const CycloNum xa = evaluate(xi[i], b_a);
    const CycloNum expected = n / (d.s(i, o) * d.s(i, o));
    if (!(xa == expected) || xa.is_zero()) {
      throw Error(ErrorCode::kInvalidDatum,
                  "xi_" + d.label(i) + "(b_A) = " + xa.to_string() + ", expected " + expected.to_string());
    }
    const CycloNum scale = xa.inverse();
    FusionElement p = FusionElement::zero(m);
    for (int j = 0; j < m; ++j) p.coeffs[j] = xi[i][d.star(j)] * scale;
    out.push_back(std::move(p));
  }
  return out;
}

Report verify_idempotent_laws(const ModularDatum& d, const FusionTable& t) {
  const auto p = idempotents(d, t);
  const auto xi = character_table(d);
  const int m = d.size();
  const int o = d.unit();
  Report r("idempotents");
  const FusionElement zero = FusionElement::zero(m);
  std::string idem, orth, dual, eigen, unit_eigen;
  FusionElement total = zero;
  for (int i = 0; i < m; ++i) {
    total += p[i];
    for (int j = i; j < m; ++j) {
      const FusionElement prod = multiply(p[i], p[j], t);
      if (i == j && !(prod == p[i]) && idem.empty()) idem = d.label(i);
      if (i != j && !(prod == zero) && orth.empty()) orth = d.label(i) + "," + d.label(j);
    }
    for (int j = 0; j < m; ++j) {
      const CycloNum v = evaluate(xi[j], p[i]);
      if (!(v == CycloNum(i == j ? 1 : 0)) && dual.empty()) dual = d.label(j) + "," + d.label(i);
    }
    for (int k = 0; k < m; ++k) {
      const FusionElement lhs = multiply(FusionElement::basis(m, k), p[i], t);
      if (!(lhs == p[i] * xi[i][k]) && eigen.empty()) eigen = d.label(k) + "," + d.label(i);
      if (i == o && !(lhs == p[o] * (d.s(k, o) / d.s(o, o))) && unit_eigen.empty()) {
        unit_eigen = d.label(k);
      }
    }
  }
  r.add("idempotent", idem.empty(), idem);
  r.add("orthogonal", orth.empty(), orth);
  r.add("partition-of-unit", total == FusionElement::basis(m, o));
  r.add("dual-basis", dual.empty(), dual);
  r.add("eigenvectors", eigen.empty(), eigen);
  r.add("unit-idempotent-dimensions", unit_eigen.empty(), unit_eigen);
  return r;
}

}  // namespace moddata
