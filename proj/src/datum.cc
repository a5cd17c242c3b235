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

#include "moddata/datum.h"

#include <set>
#include <utility>

#include "moddata/error.h"
#include "moddata/fusion.h"

namespace moddata {

namespace {

// Collects up to a few offending index tuples for a check's detail text.
class Witnesses {
 public:
  void add(std::string w) {
    if (count_++ < kShown) items_.push_back(std::move(w));
  }
  bool empty() const { return count_ == 0; }
  std::string str() const {
    std::string out;
    for (size_t k = 0; k < items_.size(); ++k) {
      if (k > 0) out += "; ";
      out += items_[k];
    }
    if (count_ > kShown) out += "; ... (" + std::to_string(count_) + " total)";
    return out;
  }

 private:
  static constexpr int kShown = 5;
  int count_ = 0;
  std::vector<std::string> items_;
};

std::string pair_str(const ModularDatum& d, int i, int j) {
  return "(" + d.label(i) + "," + d.label(j) + ")";
}

}  // namespace

ModularDatum::ModularDatum(std::vector<std::string> labels, int unit, std::vector<int> star,
                           CycloMatrix s, std::vector<CycloNum> t)
    : labels_(std::move(labels)),
      unit_(unit),
      star_(std::move(star)),
      s_(std::move(s)),
      t_(std::move(t)) {
  const int m = static_cast<int>(labels_.size());
  auto fail = [](const std::string& msg) { return Error(ErrorCode::kInvalidDatum, msg); };
  if (m == 0) throw fail("empty index set");
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (static_cast<int>(seen.size()) != m) throw fail("duplicate labels");
  if (unit_ < 0 || unit_ >= m) throw fail("unit out of range");
  if (static_cast<int>(star_.size()) != m) throw fail("star has wrong length");
  for (int i = 0; i < m; ++i) {
    if (star_[i] < 0 || star_[i] >= m) throw fail("star out of range");
  }
  for (int i = 0; i < m; ++i) {
    if (star_[star_[i]] != i) throw fail("star is not an involution at " + labels_[i]);
  }
  if (s_.rows() != m || s_.cols() != m) throw fail("S has the wrong shape");
  if (static_cast<int>(t_.size()) != m) throw fail("T has the wrong length");
}

std::optional<int> ModularDatum::index_of(std::string_view label) const {
  for (int i = 0; i < size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

CycloMatrix ModularDatum::c_matrix() const {
  CycloMatrix c(size(), size());
  for (int j = 0; j < size(); ++j) c(star_[j], j) = CycloNum(1);
  return c;
}

ModularDatum ModularDatum::with_matrices(CycloMatrix s, std::vector<CycloNum> t) const {
  return ModularDatum(labels_, unit_, star_, std::move(s), std::move(t));
}

bool operator==(const ModularDatum& a, const ModularDatum& b) {
  if (a.labels_ != b.labels_ || a.unit_ != b.unit_ || a.star_ != b.star_) return false;
  if (!(a.s_ == b.s_)) return false;
  for (int i = 0; i < a.size(); ++i) {
    if (!(a.t_[i] == b.t_[i])) return false;
  }
  return true;
}

Report validate_axioms(const ModularDatum& d) {
  Report r("axioms");
  const int m = d.size();
  const int o = d.unit();

  // Symmetric S, finite order T.
  {
    Witnesses w;
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        if (!(d.s(i, j) == d.s(j, i))) w.add("s" + pair_str(d, i, j) + " != s" + pair_str(d, j, i));
      }
    }
    for (int i = 0; i < m; ++i) {
      if (!root_of_unity_order(d.t(i))) w.add("t(" + d.label(i) + ") is not a root of unity");
    }
    r.add(std::string(kSymmetryAndFiniteOrder), w.empty(), w.str());
  }

  // t_{i*} = t_i, s_io != 0, o* = o.
  bool dims_ok = true;
  {
    Witnesses w;
    for (int i = 0; i < m; ++i) {
      if (!(d.t(d.star(i)) == d.t(i))) w.add("t(" + d.label(d.star(i)) + ") != t(" + d.label(i) + ")");
      if (d.s(i, o).is_zero()) {
        w.add("s" + pair_str(d, i, o) + " = 0");
        dims_ok = false;
      }
      if (d.s(o, i).is_zero()) dims_ok = false;
    }
    if (d.star(o) != o) w.add("unit is not self-dual");
    r.add(std::string(kDualityAndNonzeroDims), w.empty(), w.str());
  }

  // S^2 = n C with n != 0.
  bool n_ok = false;
  try {
    const CycloMatrix s2 = d.s() * d.s();
    const CycloNum n = s2(o, d.star(o));
    Witnesses w;
    if (n.is_zero()) {
      w.add("n = 0");
    } else {
      for (int i = 0; i < m; ++i) {
        for (int k = 0; k < m; ++k) {
          const CycloNum expected = k == d.star(i) ? n : CycloNum(0);
          if (!(s2(i, k) == expected)) w.add("(S^2)" + pair_str(d, i, k) + " = " + s2(i, k).to_string());
        }
      }
    }
    n_ok = w.empty();
    r.add(std::string(kSSquaredIsNC), n_ok, n_ok ? "n = " + n.to_string() : w.str());
  } catch (const Error& e) {
    r.add(std::string(kSSquaredIsNC), false, e.what());
  }

  // g T^-1 S T^-1 = (n_o / t_o^2) S T S.
  try {
    bool t_invertible = true;
    for (const auto& t : d.t()) t_invertible = t_invertible && !t.is_zero();
    if (!t_invertible) {
      r.add(std::string(kModularRelation), false, "T is not invertible");
    } else {
      const CycloMatrix t_mat = d.t_matrix();
      const CycloMatrix t_inv = t_mat.inverse();
      const CycloMatrix sts = d.s() * t_mat * d.s();
      const CycloNum g = sts(o, o);
      const CycloMatrix lhs = g * (t_inv * d.s() * t_inv);
      const CycloMatrix rhs = (d.s(o, o) / (d.t(o) * d.t(o))) * sts;
      Witnesses w;
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
          if (!(lhs(i, j) == rhs(i, j))) w.add("entry " + pair_str(d, i, j));
        }
      }
      r.add(std::string(kModularRelation), w.empty(), w.str());
    }
  } catch (const Error& e) {
    r.add(std::string(kModularRelation), false, e.what());
  }

  // Verlinde coefficients.
  if (!dims_ok || !n_ok) {
    r.add(std::string(kIntegralFusion), false,
          "not evaluated: needs nonzero dimensions and S^2 = nC");
  } else {
    try {
      const FusionTable t = evaluate_fusion(d);
      Witnesses w;
      for (const auto& v : t.violations()) w.add(v);
      r.add(std::string(kIntegralFusion), w.empty(), w.str());
    } catch (const Error& e) {
      r.add(std::string(kIntegralFusion), false, e.what());
    }
  }
  return r;
}

void require_valid(const ModularDatum& d) {
  const Report r = validate_axioms(d);
  for (const auto& c : r.checks()) {
    if (c.asserted && !c.passed) {
      throw Error(ErrorCode::kInvalidDatum, c.name + (c.detail.empty() ? "" : ": " + c.detail));
    }
  }
}

DatumReport derive_report(const ModularDatum& d) {
  require_valid(d);
  DatumReport rep;
  const int m = d.size();
  const int o = d.unit();
  CycloNum n_from_square;
  for (int j = 0; j < m; ++j) n_from_square += d.s(o, j) * d.s(j, d.star(o));
  rep.dims.resize(m);
  CycloNum sum_sq;
  for (int i = 0; i < m; ++i) {
    rep.dims[i] = d.s(i, o);
    sum_sq += rep.dims[i] * rep.dims[i];
  }
  if (!(n_from_square == sum_sq)) {
    throw Error(ErrorCode::kInternal, "global dimension disagrees with the sum of squared dims");
  }
  rep.n = n_from_square;
  const CycloNum t_o_inv = d.t(o).inverse();
  for (int i = 0; i < m; ++i) {
    rep.N = lcm64(rep.N, *root_of_unity_order(d.t(i)));
    rep.N_o = lcm64(rep.N_o, *root_of_unity_order(d.t(i) * t_o_inv));
    const CycloNum sq = rep.dims[i] * rep.dims[i];
    rep.g += sq * d.t(i);
    rep.g_rec += sq / d.t(i);
  }
  rep.normalized = d.s(o, o) == CycloNum(1) && d.t(o) == CycloNum(1);
  rep.integral = true;
  for (const auto& x : rep.dims) {
    auto r = is_rational(x);
    if (!r || r->get_den() != 1 || sgn(*r) <= 0) rep.integral = false;
  }
  return rep;
}

Report verify_structural_identities(const ModularDatum& d) {
  const DatumReport rep = derive_report(d);
  const FusionTable fusion = fusion_coefficients(d);
  Report r("structural-identities");
  const int m = d.size();
  const int o = d.unit();

  {
    Witnesses w;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        if (!(d.s(d.star(i), d.star(j)) == d.s(i, j))) w.add("s at " + pair_str(d, i, j));
      }
      if (!(rep.dims[d.star(i)] == rep.dims[i])) w.add("dimension of " + d.label(i));
    }
    r.add("star-invariance", w.empty(), w.str());
  }
  {
    const CycloMatrix c = d.c_matrix();
    const CycloMatrix t = d.t_matrix();
    const bool cs = c * d.s() == d.s() * c;
    const bool ct = c * t == t * c;
    r.add("charge-conjugation-commutes", cs && ct,
          cs && ct ? "" : (cs ? "CT != TC" : "CS != SC"));
  }
  {
    Witnesses w;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        const int64_t delta = i == j ? 1 : 0;
        if (fusion(o, i, j) != delta || fusion(i, o, j) != delta) w.add("unit at " + pair_str(d, i, j));
        if (fusion(i, j, o) != (i == d.star(j) ? 1 : 0)) w.add("duality at " + pair_str(d, i, j));
      }
    }
    r.add("fusion-unit-and-duality", w.empty(), w.str());
  }
  {
    Witnesses w;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        CycloNum sum;
        for (int k = 0; k < m; ++k) {
          if (fusion(i, k, j) != 0) {
            sum += CycloNum(static_cast<long>(fusion(i, k, j))) * rep.dims[k] * d.t(k);
          }
        }
        if (!(d.t(o) / (d.t(i) * d.t(j)) * sum == d.s(i, j))) w.add("s at " + pair_str(d, i, j));
      }
    }
    r.add("s-from-fusion-and-twists", w.empty(), w.str());
  }
  {
    const CycloNum lhs = rep.g * rep.g_rec;
    const CycloNum rhs = rep.n * rep.dims[o] * rep.dims[o];
    const bool ok = lhs == rhs && !rep.g.is_zero() && !rep.g_rec.is_zero();
    r.add("gauss-product", ok, "g g' = " + lhs.to_string() + ", n n_o^2 = " + rhs.to_string());
  }
  return r;
}

ModularDatum kronecker_product(const ModularDatum& d1, const ModularDatum& d2) {
  require_valid(d1);
  require_valid(d2);
  const int m1 = d1.size();
  const int m2 = d2.size();
  const int m = m1 * m2;
  std::vector<std::string> labels(m);
  std::vector<int> star(m);
  std::vector<CycloNum> t(m);
  CycloMatrix s(m, m);
  for (int a = 0; a < m1; ++a) {
    for (int b = 0; b < m2; ++b) {
      const int i = a * m2 + b;
      labels[i] = "(" + d1.label(a) + "," + d2.label(b) + ")";
      star[i] = d1.star(a) * m2 + d2.star(b);
      t[i] = d1.t(a) * d2.t(b);
      for (int c = 0; c < m1; ++c) {
        for (int e = 0; e < m2; ++e) s(i, c * m2 + e) = d1.s(a, c) * d2.s(b, e);
      }
    }
  }
  return ModularDatum(std::move(labels), d1.unit() * m2 + d2.unit(), std::move(star), std::move(s),
                      std::move(t));
}

Report power_identity_check(const ModularDatum& d) {
  const DatumReport rep = derive_report(d);
  Report r("power-identities");
  const CycloNum ratio = rep.g / rep.g_rec;
  const CycloNum one(1);
  const int64_t m = d.size();
  r.add("gauss-ratio-power-2Nm", ratio.pow(2 * rep.N * m) == one);
  if (rep.integral) {
    r.add("gauss-ratio-power-2N", ratio.pow(2 * rep.N) == one);
    if (rep.N % 2 == 0) r.add("gauss-ratio-power-N", ratio.pow(rep.N) == one);
  }
  r.note("g-squared-equals-reciprocal-squared", rep.g * rep.g == rep.g_rec * rep.g_rec);
  r.note("g-fourth-equals-reciprocal-fourth", rep.g.pow(4) == rep.g_rec.pow(4));
  r.set_value("gauss-ratio", ratio.to_string());
  return r;
}

}  // namespace moddata
