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

#include "moddata/sl2.h"

#include <cstdlib>

#include "moddata/cyclotomic.h"
#include "moddata/error.h"

namespace moddata {

namespace {

Mat2 d_formula(int64_t q, int64_t r) { return {q, q * r - 1, 1 - q * r, r * (2 - q * r)}; }

Mat2 t_power(int64_t k) { return {1, k, 0, 1}; }

}  // namespace

Mat2 Mat2::reduce(int64_t m) const {
  return {mod_floor(a, m), mod_floor(b, m), mod_floor(c, m), mod_floor(d, m)};
}

std::string to_string(const Mat2& m) {
  return "[[" + std::to_string(m.a) + "," + std::to_string(m.b) + "],[" + std::to_string(m.c) +
         "," + std::to_string(m.d) + "]]";
}

char generator_symbol(Generator g) {
  switch (g) {
    case Generator::kS: return 's';
    case Generator::kT: return 't';
    case Generator::kSInv: return 'S';
    case Generator::kTInv: return 'T';
  }
  return '?';
}

Mat2 generator_matrix(Generator g) {
  switch (g) {
    case Generator::kS: return {0, -1, 1, 0};
    case Generator::kT: return {1, 1, 0, 1};
    case Generator::kSInv: return {0, 1, -1, 0};
    case Generator::kTInv: return {1, -1, 0, 1};
  }
  return {};
}

Mat2 word_product(std::string_view word) {
  Mat2 result;
  for (char ch : word) {
    Generator g;
    switch (ch) {
      case 's': g = Generator::kS; break;
      case 't': g = Generator::kT; break;
      case 'S': g = Generator::kSInv; break;
      case 'T': g = Generator::kTInv; break;
      default:
        throw Error(ErrorCode::kSchemaError, std::string("bad generator '") + ch + "' in word");
    }
    result = result * generator_matrix(g);
  }
  return result;
}

Mat2 d_matrix(int64_t q, int64_t r) {
  const Mat2 s = generator_matrix(Generator::kS);
  const Mat2 s_inv = generator_matrix(Generator::kSInv);
  const Mat2 d = d_formula(q, r);
  const Mat2 word = s * t_power(r) * s_inv * t_power(q) * s * t_power(r);
  if (!(word == d)) {
    throw Error(ErrorCode::kInternal, "d(" + std::to_string(q) + "," + std::to_string(r) +
                                          ") differs from its word: " + to_string(word));
  }
  if (d.det() != 1) throw Error(ErrorCode::kInternal, "d matrix has determinant " + std::to_string(d.det()));
  const Mat2 lhs = s * d.adjugate();
  if (!(lhs == d.transpose() * s)) throw Error(ErrorCode::kInternal, "s d^-1 != d^T s");
  if (!(lhs == d_formula(-q, -r) * s_inv)) throw Error(ErrorCode::kInternal, "s d^-1 != d(-q,-r) s^-1");
  return d;
}

int64_t sl2_order(int64_t m) {
  if (m < 1) throw Error(ErrorCode::kBadModulus, "modulus " + std::to_string(m));
  int64_t order = m * m * m;
  for (auto [p, e] : factorize(m)) order = order / (p * p) * (p * p - 1);
  return order;
}

int64_t default_max_group_order() {
  if (const char* env = std::getenv("MODDATA_MAX_GROUP_ORDER")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 1000000;
}

int64_t SL2Mod::key(const Mat2& m) const {
  const Mat2 r = m.reduce(modulus_);
  return ((r.a * modulus_ + r.b) * modulus_ + r.c) * modulus_ + r.d;
}

int64_t SL2Mod::index_of(const Mat2& m) const {
  auto it = index_.find(key(m));
  return it == index_.end() ? -1 : it->second;
}

std::string SL2Mod::word(int64_t i) const {
  std::string w;
  while (i != 0) {
    w.push_back(generator_symbol(parent_gen_[i]));
    i = parent_[i];
  }
  return std::string(w.rbegin(), w.rend());
}

SL2Mod sl2_enumerate(int64_t m, int64_t max_order) {
  const int64_t order = sl2_order(m);
  if (order > max_order) {
    throw Error(ErrorCode::kTooLarge, "|SL(2,Z_" + std::to_string(m) + ")| = " +
                                          std::to_string(order) + " exceeds bound " +
                                          std::to_string(max_order));
  }
  SL2Mod g;
  g.modulus_ = m;
  g.elements_.reserve(order);
  g.next_.reserve(order);
  g.index_.reserve(order);
  const Mat2 id = Mat2{}.reduce(m);
  g.elements_.push_back(id);
  g.parent_.push_back(-1);
  g.parent_gen_.push_back(Generator::kS);
  g.index_.emplace(g.key(id), 0);
  for (size_t i = 0; i < g.elements_.size(); ++i) {
    std::array<int64_t, 4> next{};
    for (Generator gen : kGenerators) {
      const Mat2 prod = (g.elements_[i] * generator_matrix(gen)).reduce(m);
      const int64_t k = g.key(prod);
      auto it = g.index_.find(k);
      int64_t j;
      if (it == g.index_.end()) {
        j = static_cast<int64_t>(g.elements_.size());
        g.index_.emplace(k, j);
        g.elements_.push_back(prod);
        g.parent_.push_back(static_cast<int64_t>(i));
        g.parent_gen_.push_back(gen);
      } else {
        j = it->second;
      }
      next[static_cast<int>(gen)] = j;
    }
    g.next_.push_back(next);
  }
  if (g.size() != order) {
    throw Error(ErrorCode::kInternal, "enumerated " + std::to_string(g.size()) +
                                          " elements, expected " + std::to_string(order));
  }
  return g;
}

}  // namespace moddata
