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

// Dense matrices over cyclotomic numbers.

#ifndef MODDATA_MATRIX_H_
#define MODDATA_MATRIX_H_

#include <optional>
#include <string>
#include <vector>

#include "moddata/cyclotomic.h"

namespace moddata {

class CycloMatrix {
 public:
  CycloMatrix() = default;
  // rows x cols zero matrix.
  CycloMatrix(int rows, int cols);

  static CycloMatrix identity(int n);
  static CycloMatrix diagonal(const std::vector<CycloNum>& entries);
  // Throws DimensionMismatch on ragged input.
  static CycloMatrix from_rows(const std::vector<std::vector<CycloNum>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  CycloNum& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const CycloNum& operator()(int i, int j) const {
    return data_[static_cast<size_t>(i) * cols_ + j];
  }

  bool is_square() const { return rows_ == cols_; }
  bool is_diagonal() const;
  bool is_zero() const;

  CycloMatrix transpose() const;
  // Gauss-Jordan elimination. Throws NonInvertibleInput if singular and
  // DimensionMismatch if not square.
  CycloMatrix inverse() const;
  // Negative exponents invert first.
  CycloMatrix pow(int64_t exponent) const;

  // Entrywise sigma_q.
  CycloMatrix galois(int64_t q) const;

  CycloMatrix operator-() const;
  CycloMatrix& operator+=(const CycloMatrix& other);
  CycloMatrix& operator-=(const CycloMatrix& other);
  CycloMatrix& operator*=(const CycloNum& scalar);

  friend CycloMatrix operator+(CycloMatrix a, const CycloMatrix& b) { return a += b; }
  friend CycloMatrix operator-(CycloMatrix a, const CycloMatrix& b) { return a -= b; }
  // Diagonal operands are applied as row or column scalings.
  friend CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b);
  friend CycloMatrix operator*(CycloMatrix a, const CycloNum& s) { return a *= s; }
  friend CycloMatrix operator*(const CycloNum& s, CycloMatrix a) { return a *= s; }

  friend bool operator==(const CycloMatrix& a, const CycloMatrix& b);

  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<CycloNum> data_;
};

// The scalar lambda with a == lambda * b, taken from the first entry where b
// is nonzero. Absent if no such scalar exists or b is zero.
std::optional<CycloNum> proportionality_factor(const CycloMatrix& a, const CycloMatrix& b);

// Permutation matrix P with P(i, j) = [i == perm[j]].
CycloMatrix permutation_matrix(const std::vector<int>& perm);

}  // namespace moddata

#endif  // MODDATA_MATRIX_H_
