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

#include "moddata/cyclotomic.h"

#include <algorithm>
#include <array>
#include <atomic>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "moddata/error.h"

namespace moddata {

// ---------------------------------------------------------------------------
// Rationals and integers.

std::string rational_to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] {
    return Error(ErrorCode::kSchemaError, "malformed rational \"" + s + "\"");
  };
  if (s.empty()) throw bad();
  size_t i = 0;
  if (s[0] == '-') i = 1;
  size_t slash = s.find('/');
  auto all_digits = [&](size_t from, size_t to) {
    if (from >= to) return false;
    for (size_t k = from; k < to; ++k) {
      if (s[k] < '0' || s[k] > '9') return false;
    }
    return true;
  };
  if (slash == std::string::npos) {
    if (!all_digits(i, s.size())) throw bad();
  } else {
    if (!all_digits(i, slash) || !all_digits(slash + 1, s.size())) throw bad();
  }
  Rational r;
  if (r.set_str(s, 10) != 0 || r.get_den() == 0) throw bad();
  r.canonicalize();
  return r;
}

int64_t gcd64(int64_t a, int64_t b) { return std::gcd(a, b); }

int64_t lcm64(int64_t a, int64_t b) {
  if (a == 0 || b == 0) return 0;
  return std::lcm(a, b);
}

int64_t mod_floor(int64_t a, int64_t m) {
  int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::vector<std::pair<int64_t, int>> factorize(int64_t n) {
  std::vector<std::pair<int64_t, int>> out;
  if (n < 0) n = -n;
  for (int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int64_t euler_phi(int64_t n) {
  int64_t result = n;
  for (auto [p, e] : factorize(n)) result = result / p * (p - 1);
  return result;
}

std::vector<int64_t> divisors(int64_t n) {
  std::vector<int64_t> out;
  for (int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int64_t> units_mod(int64_t m) {
  if (m == 1) return {0};
  std::vector<int64_t> out;
  for (int64_t q = 1; q < m; ++q) {
    if (std::gcd(q, m) == 1) out.push_back(q);
  }
  return out;
}

int64_t inverse_mod(int64_t q, int64_t m) {
  if (m == 1) return 0;
  int64_t a = mod_floor(q, m);
  int64_t old_r = a, r = m, old_s = 1, s = 0;
  while (r != 0) {
    int64_t quot = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - quot * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - quot * s);
  }
  if (old_r != 1) {
    throw Error(ErrorCode::kNotAUnit,
                std::to_string(q) + " is not a unit modulo " + std::to_string(m));
  }
  return mod_floor(old_s, m);
}

// ---------------------------------------------------------------------------
// Per-conductor tables.

namespace {

constexpr int kMaxConductor = 1 << 16;
constexpr int kFastTable = 4096;

struct FieldData {
  int conductor = 1;
  int degree = 1;
  std::vector<long> cyclo;  // Phi_M, constant term first, monic
  // powers[k] = coordinates of z^k, 0 <= k < M.
  std::vector<std::vector<long>> powers;
};

long checked(__int128 v) {
  if (v > std::numeric_limits<long>::max() || v < std::numeric_limits<long>::min()) {
    throw Error(ErrorCode::kTooLarge, "cyclotomic polynomial coefficient overflow");
  }
  return static_cast<long>(v);
}

const FieldData& field_data(int conductor);

std::unique_ptr<FieldData> build_field(int m) {
  auto fd = std::make_unique<FieldData>();
  fd->conductor = m;
  // x^m - 1 divided exactly by Phi_d for every proper divisor d of m.
  std::vector<long> poly(m + 1, 0);
  poly[0] = -1;
  poly[m] = 1;
  for (int64_t d : divisors(m)) {
    if (d == m) continue;
    const std::vector<long>& div = field_data(static_cast<int>(d)).cyclo;
    int dd = static_cast<int>(div.size()) - 1;
    int deg = static_cast<int>(poly.size()) - 1;
    std::vector<long> quot(deg - dd + 1, 0);
    for (int k = deg; k >= dd; --k) {
      long c = poly[k];
      quot[k - dd] = c;
      if (c == 0) continue;
      for (int j = 0; j <= dd; ++j) {
        poly[k - dd + j] = checked(static_cast<__int128>(poly[k - dd + j]) -
                                   static_cast<__int128>(c) * div[j]);
      }
    }
    for (int j = 0; j < dd; ++j) {
      if (poly[j] != 0) throw Error(ErrorCode::kInternal, "inexact cyclotomic division");
    }
    poly = std::move(quot);
  }
  fd->cyclo = std::move(poly);
  fd->degree = static_cast<int>(fd->cyclo.size()) - 1;
  const int phi = fd->degree;
  fd->powers.assign(m, std::vector<long>(phi, 0));
  std::vector<long> cur(phi, 0);
  cur[0] = 1;
  for (int k = 0; k < m; ++k) {
    fd->powers[k] = cur;
    // cur *= x, reduced by the monic Phi_M.
    long top = cur[phi - 1];
    for (int j = phi - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (top != 0) {
      for (int j = 0; j < phi; ++j) {
        cur[j] = checked(static_cast<__int128>(cur[j]) -
                         static_cast<__int128>(top) * fd->cyclo[j]);
      }
    }
  }
  return fd;
}

std::mutex& field_mutex() {
  static std::mutex mu;
  return mu;
}

std::map<int, std::unique_ptr<FieldData>>& field_store() {
  static std::map<int, std::unique_ptr<FieldData>> store;
  return store;
}

std::array<std::atomic<const FieldData*>, kFastTable>& fast_table() {
  static std::array<std::atomic<const FieldData*>, kFastTable> table{};
  return table;
}

const FieldData& field_data(int conductor) {
  if (conductor < 1 || conductor > kMaxConductor) {
    throw Error(ErrorCode::kBadConductor,
                "conductor " + std::to_string(conductor) + " out of range");
  }
  if (conductor < kFastTable) {
    const FieldData* fd = fast_table()[conductor].load(std::memory_order_acquire);
    if (fd != nullptr) return *fd;
  }
  // build_field recurses into field_data for the divisors, so the lookup and
  // the construction are done separately and only insertion is locked.
  {
    std::lock_guard<std::mutex> lock(field_mutex());
    auto it = field_store().find(conductor);
    if (it != field_store().end()) return *it->second;
  }
  auto built = build_field(conductor);
  std::lock_guard<std::mutex> lock(field_mutex());
  auto [it, inserted] = field_store().emplace(conductor, std::move(built));
  if (conductor < kFastTable) {
    fast_table()[conductor].store(it->second.get(), std::memory_order_release);
  }
  return *it->second;
}

// Coordinates over a common denominator: value_i = num[i] / den.
struct Scaled {
  std::vector<mpz_class> num;
  mpz_class den;
};

Scaled scale_out(const std::vector<Rational>& coeffs) {
  Scaled s;
  s.den = 1;
  for (const auto& c : coeffs) {
    if (c.get_den() != 1) mpz_lcm(s.den.get_mpz_t(), s.den.get_mpz_t(), c.get_den_mpz_t());
  }
  s.num.resize(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (s.den == 1) {
      s.num[i] = coeffs[i].get_num();
    } else {
      s.num[i] = coeffs[i].get_num() * (s.den / coeffs[i].get_den());
    }
  }
  return s;
}

std::vector<Rational> scale_in(const std::vector<mpz_class>& num, const mpz_class& den) {
  std::vector<Rational> out(num.size());
  for (size_t i = 0; i < num.size(); ++i) {
    out[i].get_num() = num[i];
    out[i].get_den() = den;
    if (den != 1) out[i].canonicalize();
  }
  return out;
}

constexpr int64_t kSmall = int64_t{1} << 31;

bool to_small(const std::vector<mpz_class>& v, std::vector<int64_t>& out) {
  out.resize(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    if (!v[i].fits_slong_p()) return false;
    long x = v[i].get_si();
    if (x >= kSmall || x <= -kSmall) return false;
    out[i] = x;
  }
  return true;
}

__int128 abs128(__int128 v) { return v < 0 ? -v : v; }

// Product of two coordinate vectors reduced modulo Phi_M in 128-bit integers.
// Returns false if an intermediate value gets too large.
bool small_mul_reduce(const std::vector<int64_t>& a, const std::vector<int64_t>& b,
                      const FieldData& fd, std::vector<mpz_class>& out) {
  const int phi = fd.degree;
  std::vector<__int128> prod(2 * phi - 1, 0);
  for (int i = 0; i < phi; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < phi; ++j) {
      prod[i + j] += static_cast<__int128>(a[i]) * b[j];
    }
  }
  const __int128 limit = static_cast<__int128>(1) << 100;
  for (int k = 2 * phi - 2; k >= phi; --k) {
    const __int128 c = prod[k];
    if (c == 0) continue;
    if (abs128(c) > limit) return false;
    for (int j = 0; j < phi; ++j) {
      if (fd.cyclo[j] == 0) continue;
      prod[k - phi + j] -= c * fd.cyclo[j];
    }
  }
  out.resize(phi);
  const __int128 long_max = std::numeric_limits<long>::max();
  for (int j = 0; j < phi; ++j) {
    if (abs128(prod[j]) > long_max) return false;
    out[j] = static_cast<long>(prod[j]);
  }
  return true;
}

void big_mul_reduce(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b,
                    const FieldData& fd, std::vector<mpz_class>& out) {
  const int phi = fd.degree;
  std::vector<mpz_class> prod(2 * phi - 1);
  for (int i = 0; i < phi; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (int j = 0; j < phi; ++j) {
      if (sgn(b[j]) == 0) continue;
      mpz_addmul(prod[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  for (int k = 2 * phi - 2; k >= phi; --k) {
    if (sgn(prod[k]) == 0) continue;
    const mpz_class c = prod[k];
    for (int j = 0; j < phi; ++j) {
      long m = fd.cyclo[j];
      if (m == 0) continue;
      if (m > 0) {
        mpz_submul_ui(prod[k - phi + j].get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(m));
      } else {
        mpz_addmul_ui(prod[k - phi + j].get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(-m));
      }
    }
  }
  prod.resize(phi);
  out = std::move(prod);
}

// out = sum_i num[i] * table[index(i)], an integer-linear map on coordinates.
template <typename IndexFn>
std::vector<mpz_class> integer_linear_map(const std::vector<mpz_class>& num, const FieldData& fd,
                                          IndexFn index) {
  std::vector<mpz_class> out(fd.degree);
  for (size_t i = 0; i < num.size(); ++i) {
    if (sgn(num[i]) == 0) continue;
    const std::vector<long>& row = fd.powers[index(static_cast<int64_t>(i))];
    for (int j = 0; j < fd.degree; ++j) {
      long m = row[j];
      if (m == 0) continue;
      if (m > 0) {
        mpz_addmul_ui(out[j].get_mpz_t(), num[i].get_mpz_t(), static_cast<unsigned long>(m));
      } else {
        mpz_submul_ui(out[j].get_mpz_t(), num[i].get_mpz_t(), static_cast<unsigned long>(-m));
      }
    }
  }
  return out;
}

std::vector<Rational> zeros(int n) { return std::vector<Rational>(n, Rational(0)); }

// Q[x] polynomials for the extended Euclid inversion.
using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

// a = q*b + r with deg r < deg b; b nonzero.
void poly_divmod(Poly a, const Poly& b, Poly& q, Poly& r) {
  trim(a);
  const size_t db = b.size() - 1;
  if (a.size() < b.size()) {
    q.clear();
    r = std::move(a);
    return;
  }
  q.assign(a.size() - db, Rational(0));
  const Rational lead_inv = 1 / b.back();
  for (size_t k = a.size(); k-- > db;) {
    if (sgn(a[k]) == 0) continue;
    Rational c = a[k] * lead_inv;
    q[k - db] = c;
    for (size_t j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
  }
  a.resize(db);
  trim(a);
  trim(q);
  r = std::move(a);
}

int lcm_conductor(int a, int b) {
  int64_t l = lcm64(a, b);
  if (l > kMaxConductor) {
    throw Error(ErrorCode::kTooLarge, "conductor " + std::to_string(l) + " too large");
  }
  return static_cast<int>(l);
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int conductor) {
  return field_data(conductor).cyclo;
}

// ---------------------------------------------------------------------------
// CycloNum.

CycloNum::CycloNum() : conductor_(1), coeffs_(1, Rational(0)) {}

CycloNum::CycloNum(long value) : conductor_(1), coeffs_(1, Rational(value)) {}

CycloNum::CycloNum(const Rational& value) : conductor_(1), coeffs_(1, value) {}

CycloNum::CycloNum(int conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {
  const FieldData& fd = field_data(conductor);
  if (static_cast<int>(coeffs_.size()) != fd.degree) {
    throw Error(ErrorCode::kBadConductor,
                "expected " + std::to_string(fd.degree) + " coefficients at conductor " +
                    std::to_string(conductor) + ", got " + std::to_string(coeffs_.size()));
  }
  for (auto& c : coeffs_) c.canonicalize();
}

CycloNum::CycloNum(int conductor, std::vector<Rational> coeffs, bool)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {}

bool CycloNum::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return sgn(c) == 0; });
}

CycloNum CycloNum::operator-() const {
  CycloNum out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycloNum& CycloNum::operator+=(const CycloNum& other) {
  if (other.conductor_ != conductor_) {
    int m = lcm_conductor(conductor_, other.conductor_);
    if (m != conductor_) *this = lift_conductor(*this, m);
    if (m != other.conductor_) return *this += lift_conductor(other, m);
  }
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& other) {
  if (other.conductor_ != conductor_) {
    int m = lcm_conductor(conductor_, other.conductor_);
    if (m != conductor_) *this = lift_conductor(*this, m);
    if (m != other.conductor_) return *this -= lift_conductor(other, m);
  }
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

void CycloNum::scale(const Rational& factor) {
  for (auto& c : coeffs_) c *= factor;
}

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
  if (a.conductor_ != b.conductor_) {
    int m = lcm_conductor(a.conductor_, b.conductor_);
    const CycloNum la = m == a.conductor_ ? a : lift_conductor(a, m);
    const CycloNum lb = m == b.conductor_ ? b : lift_conductor(b, m);
    return la * lb;
  }
  auto rational_part = [](const CycloNum& x) -> const Rational* {
    for (size_t i = 1; i < x.coeffs_.size(); ++i) {
      if (sgn(x.coeffs_[i]) != 0) return nullptr;
    }
    return &x.coeffs_[0];
  };
  if (const Rational* r = rational_part(a)) {
    CycloNum out = b;
    out.scale(*r);
    return out;
  }
  if (const Rational* r = rational_part(b)) {
    CycloNum out = a;
    out.scale(*r);
    return out;
  }
  const FieldData& fd = field_data(a.conductor_);
  const Scaled sa = scale_out(a.coeffs_);
  const Scaled sb = scale_out(b.coeffs_);
  std::vector<int64_t> small_a, small_b;
  std::vector<mpz_class> prod;
  if (!to_small(sa.num, small_a) || !to_small(sb.num, small_b) ||
      !small_mul_reduce(small_a, small_b, fd, prod)) {
    big_mul_reduce(sa.num, sb.num, fd, prod);
  }
  return CycloNum(a.conductor_, scale_in(prod, sa.den * sb.den), true);
}

CycloNum& CycloNum::operator*=(const CycloNum& other) {
  *this = *this * other;
  return *this;
}

CycloNum& CycloNum::operator/=(const CycloNum& other) {
  *this = *this * other.inverse();
  return *this;
}

bool operator==(const CycloNum& a, const CycloNum& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  int m = lcm_conductor(a.conductor_, b.conductor_);
  return lift_conductor(a, m).coeffs_ == lift_conductor(b, m).coeffs_;
}

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  if (auto r = is_rational(*this)) {
    return CycloNum(conductor_, [&] {
      std::vector<Rational> c = zeros(static_cast<int>(coeffs_.size()));
      c[0] = 1 / *r;
      return c;
    }(), true);
  }
  const FieldData& fd = field_data(conductor_);
  // Extended Euclid: track s with s * a == r (mod Phi_M).
  Poly r0(fd.cyclo.begin(), fd.cyclo.end());
  Poly r1 = coeffs_;
  trim(r1);
  Poly s0, s1{Rational(1)};
  while (r1.size() > 1) {
    Poly q, rem;
    poly_divmod(r0, r1, q, rem);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) throw Error(ErrorCode::kInternal, "Phi_M shares a factor with a nonzero element");
  const Rational c_inv = 1 / r1[0];
  for (auto& c : s1) c *= c_inv;
  // s1 may exceed degree phi - 1; reduce by long division.
  Poly q, rem;
  poly_divmod(s1, Poly(fd.cyclo.begin(), fd.cyclo.end()), q, rem);
  rem.resize(fd.degree, Rational(0));
  return CycloNum(conductor_, std::move(rem), true);
}

CycloNum CycloNum::pow(int64_t exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  CycloNum result = lift_conductor(CycloNum(1L), conductor_);
  CycloNum base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::string CycloNum::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << "z" << conductor_;
    if (i > 1) out << "^" << i;
  }
  if (first) out << "0";
  return out.str();
}

CycloNum root_of_unity(int conductor, int64_t k) {
  const FieldData& fd = field_data(conductor);
  const std::vector<long>& row = fd.powers[mod_floor(k, conductor)];
  std::vector<Rational> coeffs(row.begin(), row.end());
  return CycloNum(conductor, std::move(coeffs), true);
}

CycloNum lift_conductor(const CycloNum& x, int conductor) {
  if (conductor < 1 || conductor % x.conductor_ != 0) {
    throw Error(ErrorCode::kBadConductor, std::to_string(x.conductor_) +
                                              " does not divide " + std::to_string(conductor));
  }
  if (conductor == x.conductor_) return x;
  const FieldData& fd = field_data(conductor);
  const int64_t step = conductor / x.conductor_;
  const Scaled sx = scale_out(x.coeffs_);
  auto out = integer_linear_map(sx.num, fd, [step](int64_t i) { return i * step; });
  return CycloNum(conductor, scale_in(out, sx.den), true);
}

CycloNum galois_apply(const CycloNum& x, int64_t q) {
  const int m = x.conductor();
  if (gcd64(mod_floor(q, m), m) != 1) {
    throw Error(ErrorCode::kNotAUnit, std::to_string(q) + " is not a unit modulo " +
                                          std::to_string(m));
  }
  if (m <= 2) return x;
  const FieldData& fd = field_data(m);
  const Scaled sx = scale_out(x.coeffs());
  auto out = integer_linear_map(sx.num, fd, [q, m](int64_t i) { return mod_floor(q * i, m); });
  return CycloNum(m, scale_in(out, sx.den));
}

CycloNum galois_apply_lifted(const CycloNum& x, int64_t q, int64_t modulus) {
  if (modulus < 1 || gcd64(mod_floor(q, modulus), modulus) != 1) {
    throw Error(ErrorCode::kNotAUnit, std::to_string(q) + " is not a unit modulo " +
                                          std::to_string(modulus));
  }
  const int64_t m = x.conductor();
  int64_t lifted = mod_floor(q, modulus);
  for (int64_t k = 0; k <= m; ++k, lifted += modulus) {
    if (gcd64(lifted, m) == 1) return galois_apply(x, lifted);
  }
  throw Error(ErrorCode::kInternal, "no unit lift found");
}

std::optional<int64_t> root_of_unity_order(const CycloNum& x) {
  if (x.is_zero()) return std::nullopt;
  if (auto r = is_rational(x)) {
    if (*r == 1) return 1;
    if (*r == -1) return 2;
    return std::nullopt;
  }
  const CycloNum one(1L);
  int64_t order = 2 * static_cast<int64_t>(x.conductor());
  if (!(x.pow(order) == one)) return std::nullopt;
  for (auto [p, e] : factorize(order)) {
    for (int i = 0; i < e; ++i) {
      if (x.pow(order / p) == one) {
        order /= p;
      } else {
        break;
      }
    }
  }
  return order;
}

std::optional<Rational> is_rational(const CycloNum& x) {
  for (size_t i = 1; i < x.coeffs().size(); ++i) {
    if (sgn(x.coeffs()[i]) != 0) return std::nullopt;
  }
  return x.coeffs()[0];
}

namespace {

// sum_{i < p} z_p^(i^2), p an odd prime.
CycloNum prime_gauss_sum(int64_t p) {
  std::vector<long> counts(p, 0);
  for (int64_t i = 0; i < p; ++i) ++counts[(i * i) % p];
  CycloNum g = lift_conductor(CycloNum(0L), static_cast<int>(p));
  for (int64_t k = 0; k < p; ++k) {
    if (counts[k] != 0) g += CycloNum(counts[k]) * root_of_unity(static_cast<int>(p), k);
  }
  return g;
}

}  // namespace

CycloNum sqrt_integer(int64_t n) {
  if (n < 1) throw Error(ErrorCode::kBadModulus, "sqrt_integer needs n >= 1");
  int64_t k = 1;
  CycloNum result(1L);
  for (auto [p, e] : factorize(n)) {
    for (int i = 0; i < e / 2; ++i) k *= p;
    if (e % 2 == 0) continue;
    if (p == 2) {
      result *= root_of_unity(8, 1) + root_of_unity(8, -1);
    } else if (p % 4 == 1) {
      result *= prime_gauss_sum(p);
    } else {
      // G_p^2 = -p, so G_p / z_4 squares to p.
      result *= prime_gauss_sum(p) * root_of_unity(4, -1);
    }
  }
  return result * CycloNum(static_cast<long>(k));
}

int jacobi_symbol(int64_t q, int64_t n) {
  if (n < 1 || n % 2 == 0) {
    throw Error(ErrorCode::kBadModulus, "Jacobi symbol needs an odd positive modulus, got " +
                                            std::to_string(n));
  }
  int64_t a = mod_floor(q, n);
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      int64_t r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

}  // namespace moddata
