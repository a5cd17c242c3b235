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

// Integer 2x2 matrices, words in the generators s = [[0,-1],[1,0]] and
// t = [[1,1],[0,1]] of SL(2,Z), and the finite groups SL(2,Z_M).

#ifndef MODDATA_SL2_H_
#define MODDATA_SL2_H_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace moddata {

struct Mat2 {
  int64_t a = 1, b = 0, c = 0, d = 1;  // [[a, b], [c, d]]

  int64_t det() const { return a * d - b * c; }
  Mat2 transpose() const { return {a, c, b, d}; }
  // Adjugate; the inverse when det() == 1.
  Mat2 adjugate() const { return {d, -b, -c, a}; }
  Mat2 reduce(int64_t m) const;

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const Mat2& x, const Mat2& y) = default;
};

std::string to_string(const Mat2& m);

// Generators in BFS order. Capital letters denote inverses in words.
enum class Generator { kS = 0, kT = 1, kSInv = 2, kTInv = 3 };
inline constexpr std::array<Generator, 4> kGenerators = {Generator::kS, Generator::kT,
                                                         Generator::kSInv, Generator::kTInv};
char generator_symbol(Generator g);
Mat2 generator_matrix(Generator g);

// Product of a word over {s, t, S, T}, read left to right. Throws SchemaError
// on other characters.
Mat2 word_product(std::string_view word);

// d(q, r) = s t^r s^-1 t^q s t^r = [[q, qr - 1], [1 - qr, r(2 - qr)]].
// Checks the word product, s d^-1 = d^T s and s d^-1 = d(-q, -r) s^-1;
// a failure is an Internal error.
Mat2 d_matrix(int64_t q, int64_t r);

// M^3 prod_{p | M} (1 - p^-2).
int64_t sl2_order(int64_t m);

// Group order bound: MODDATA_MAX_GROUP_ORDER if set, else 10^6.
int64_t default_max_group_order();

class SL2Mod {
 public:
  int64_t modulus() const { return modulus_; }
  int64_t size() const { return static_cast<int64_t>(elements_.size()); }
  // Elements in BFS discovery order from the identity.
  const std::vector<Mat2>& elements() const { return elements_; }
  const Mat2& element(int64_t i) const { return elements_[i]; }
  // Index of element(i) * generator.
  int64_t next(int64_t i, Generator g) const { return next_[i][static_cast<int>(g)]; }
  // BFS tree: the vertex is reached as element(parent) * parent_generator.
  int64_t parent(int64_t i) const { return parent_[i]; }
  Generator parent_generator(int64_t i) const { return parent_gen_[i]; }
  // -1 if the matrix (reduced mod M) is not in the group.
  int64_t index_of(const Mat2& m) const;
  // Word of the BFS tree path from the identity.
  std::string word(int64_t i) const;

 private:
  friend SL2Mod sl2_enumerate(int64_t m, int64_t max_order);
  int64_t key(const Mat2& m) const;

  int64_t modulus_ = 1;
  std::vector<Mat2> elements_;
  std::vector<std::array<int64_t, 4>> next_;
  std::vector<int64_t> parent_;
  std::vector<Generator> parent_gen_;
  std::unordered_map<int64_t, int64_t> index_;
};

// BFS closure of the identity under s, t, s^-1, t^-1 mod M. Throws BadModulus
// for M < 1, TooLarge if sl2_order(M) exceeds max_order, Internal if the
// count disagrees with sl2_order.
SL2Mod sl2_enumerate(int64_t m, int64_t max_order = default_max_group_order());

}  // namespace moddata

#endif  // MODDATA_SL2_H_
