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

#include "moddata/matrix.h"

#include <algorithm>
#include <optional>
#include <sstream>
#include <utility>

#include "moddata/error.h"

namespace moddata {

namespace {

void require_same_shape(const CycloMatrix& a, const CycloMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::string(op) + " of " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()) + " and " + std::to_string(b.rows()) + "x" +
                    std::to_string(b.cols()));
  }
}

}  // namespace

CycloMatrix::CycloMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

CycloMatrix CycloMatrix::identity(int n) {
  CycloMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = CycloNum(1);
  return m;
}

CycloMatrix CycloMatrix::diagonal(const std::vector<CycloNum>& entries) {
  const int n = static_cast<int>(entries.size());
  CycloMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = entries[i];
  return m;
}

CycloMatrix CycloMatrix::from_rows(const std::vector<std::vector<CycloNum>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  CycloMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) {
      throw Error(ErrorCode::kDimensionMismatch, "ragged matrix rows");
    }
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

bool CycloMatrix::is_diagonal() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if (i != j && !(*this)(i, j).is_zero()) return false;
    }
  }
  return true;
}

bool CycloMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

CycloMatrix CycloMatrix::transpose() const {
  CycloMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

CycloMatrix CycloMatrix::inverse() const {
  if (!is_square()) throw Error(ErrorCode::kDimensionMismatch, "inverse of a non-square matrix");
  const int n = rows_;
  if (is_diagonal()) {
    CycloMatrix inv(n, n);
    for (int i = 0; i < n; ++i) {
      if ((*this)(i, i).is_zero()) throw Error(ErrorCode::kNonInvertibleInput, "singular matrix");
      inv(i, i) = (*this)(i, i).inverse();
    }
    return inv;
  }
  CycloMatrix a = *this;
  CycloMatrix inv = identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (!a(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw Error(ErrorCode::kNonInvertibleInput, "singular matrix");
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const CycloNum p = a(col, col).inverse();
    for (int j = 0; j < n; ++j) {
      a(col, j) *= p;
      inv(col, j) *= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const CycloNum f = a(r, col);
      for (int j = 0; j < n; ++j) {
        if (!a(col, j).is_zero()) a(r, j) -= f * a(col, j);
        if (!inv(col, j).is_zero()) inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

CycloMatrix CycloMatrix::pow(int64_t exponent) const {
  if (!is_square()) throw Error(ErrorCode::kDimensionMismatch, "power of a non-square matrix");
  if (exponent < 0) return inverse().pow(-exponent);
  CycloMatrix result = identity(rows_);
  CycloMatrix base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

CycloMatrix CycloMatrix::galois(int64_t q) const {
  CycloMatrix out(rows_, cols_);
  for (size_t k = 0; k < data_.size(); ++k) out.data_[k] = galois_apply(data_[k], q);
  return out;
}

CycloMatrix CycloMatrix::operator-() const {
  CycloMatrix out = *this;
  for (auto& x : out.data_) x = -x;
  return out;
}

CycloMatrix& CycloMatrix::operator+=(const CycloMatrix& other) {
  require_same_shape(*this, other, "sum");
  for (size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

CycloMatrix& CycloMatrix::operator-=(const CycloMatrix& other) {
  require_same_shape(*this, other, "difference");
  for (size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

CycloMatrix& CycloMatrix::operator*=(const CycloNum& scalar) {
  for (auto& x : data_) x *= scalar;
  return *this;
}

namespace {

using Int128 = __int128;

// Entries lifted to one conductor and scaled by a common denominator:
// entry (i, j) is sum_k nums[(i * cols + j) * phi + k] z^k / den.
struct IntegerForm {
  mpz_class den = 1;
  std::vector<int64_t> nums;
  uint64_t max_abs = 0;
};

std::optional<IntegerForm> integer_form(const CycloMatrix& m, int conductor, int phi) {
  IntegerForm f;
  std::vector<CycloNum> lifted;
  lifted.reserve(static_cast<size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      lifted.push_back(lift_conductor(m(i, j), conductor));
      for (const auto& c : lifted.back().coeffs()) mpz_lcm(f.den.get_mpz_t(), f.den.get_mpz_t(), c.get_den_mpz_t());
    }
  }
  f.nums.reserve(lifted.size() * phi);
  mpz_class num;
  for (const auto& x : lifted) {
    for (const auto& c : x.coeffs()) {
      num = c.get_num() * (f.den / c.get_den());
      if (!num.fits_slong_p()) return std::nullopt;
      const int64_t v = num.get_si();
      if (v > (int64_t{1} << 62) || v < -(int64_t{1} << 62)) return std::nullopt;
      f.max_abs = std::max<uint64_t>(f.max_abs, static_cast<uint64_t>(v < 0 ? -v : v));
      f.nums.push_back(v);
    }
  }
  return f;
}

mpz_class to_mpz(Int128 v) {
  const bool negative = v < 0;
  const unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v) : v;
  mpz_class r = static_cast<unsigned long>(u >> 64);
  r <<= 64;
  r += static_cast<unsigned long>(u & ~uint64_t{0});
  return negative ? mpz_class(-r) : r;
}

// Dense product with machine-integer accumulation; empty if some
// intermediate would overflow.
std::optional<CycloMatrix> integer_product(const CycloMatrix& a, const CycloMatrix& b) {
  int conductor = 1;
  for (const auto* m : {&a, &b}) {
    for (int i = 0; i < m->rows(); ++i) {
      for (int j = 0; j < m->cols(); ++j) {
        conductor = static_cast<int>(lcm64(conductor, (*m)(i, j).conductor()));
      }
    }
  }
  const std::vector<long>& cyc = cyclotomic_polynomial(conductor);
  const int phi = static_cast<int>(cyc.size()) - 1;
  const auto fa = integer_form(a, conductor, phi);
  if (!fa) return std::nullopt;
  const auto fb = integer_form(b, conductor, phi);
  if (!fb) return std::nullopt;
  const long double bound = static_cast<long double>(fa->max_abs) * fb->max_abs * a.cols() * phi;
  if (bound > 0x1p100L) return std::nullopt;

  const mpz_class den = fa->den * fb->den;
  const int inner = a.cols();
  const int width = 2 * phi - 1;
  std::vector<Int128> acc(width);
  std::vector<Rational> coeffs(phi);
  CycloMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) {
      std::fill(acc.begin(), acc.end(), 0);
      for (int k = 0; k < inner; ++k) {
        const int64_t* x = &fa->nums[(static_cast<size_t>(i) * inner + k) * phi];
        const int64_t* y = &fb->nums[(static_cast<size_t>(k) * b.cols() + j) * phi];
        for (int p = 0; p < phi; ++p) {
          if (x[p] == 0) continue;
          for (int q = 0; q < phi; ++q) acc[p + q] += static_cast<Int128>(x[p]) * y[q];
        }
      }
      for (int top = width - 1; top >= phi; --top) {
        const Int128 c = acc[top];
        if (c == 0) continue;
        for (int t = 0; t < phi; ++t) {
          Int128 prod;
          if (__builtin_mul_overflow(c, static_cast<Int128>(cyc[t]), &prod) ||
              __builtin_sub_overflow(acc[top - phi + t], prod, &acc[top - phi + t])) {
            return std::nullopt;
          }
        }
        acc[top] = 0;
      }
      for (int p = 0; p < phi; ++p) {
        coeffs[p] = Rational(to_mpz(acc[p]), den);
        coeffs[p].canonicalize();
      }
      out(i, j) = CycloNum(conductor, coeffs);
    }
  }
  return out;
}

}  // namespace

CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "product of " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                    " and " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  }
  if (a.is_diagonal()) {
    CycloMatrix out = b;
    for (int i = 0; i < b.rows_; ++i) {
      for (int j = 0; j < b.cols_; ++j) out(i, j) = a(i, i) * b(i, j);
    }
    return out;
  }
  if (b.is_diagonal()) {
    CycloMatrix out = a;
    for (int i = 0; i < a.rows_; ++i) {
      for (int j = 0; j < a.cols_; ++j) out(i, j) = a(i, j) * b(j, j);
    }
    return out;
  }
  if (a.cols_ >= 4) {
    if (auto fast = integer_product(a, b)) return *std::move(fast);
  }
  CycloMatrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const CycloNum& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        if (b(k, j).is_zero()) continue;
        out(i, j) += x * b(k, j);
      }
    }
  }
  return out;
}

bool operator==(const CycloMatrix& a, const CycloMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (size_t k = 0; k < a.data_.size(); ++k) {
    if (!(a.data_[k] == b.data_[k])) return false;
  }
  return true;
}

std::string CycloMatrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (int i = 0; i < rows_; ++i) {
    out << (i == 0 ? "[" : ", [");
    for (int j = 0; j < cols_; ++j) {
      if (j > 0) out << ", ";
      out << (*this)(i, j).to_string();
    }
    out << "]";
  }
  out << "]";
  return out.str();
}

std::optional<CycloNum> proportionality_factor(const CycloMatrix& a, const CycloMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return std::nullopt;
  std::optional<CycloNum> lambda;
  for (int i = 0; i < a.rows() && !lambda; ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (!b(i, j).is_zero()) {
        lambda = a(i, j) / b(i, j);
        break;
      }
    }
  }
  if (!lambda) return std::nullopt;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (!(a(i, j) == *lambda * b(i, j))) return std::nullopt;
    }
  }
  return lambda;
}

CycloMatrix permutation_matrix(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  CycloMatrix p(n, n);
  for (int j = 0; j < n; ++j) p(perm[j], j) = CycloNum(1);
  return p;
}

}  // namespace moddata
