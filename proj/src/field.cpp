// Copyright 2026 The wynerdof Authors
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

#include "wyner/field.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "wyner/errors.hpp"

namespace wyner {

PrimeField::PrimeField(FieldElem prime) : p_(prime) {
  if (prime < 2 || prime > 0xFFFFFFFFULL || !is_probable_prime(prime)) {
    throw InputError("field modulus must be a prime below 2^32");
  }
}

FieldElem PrimeField::pow(FieldElem base, std::uint64_t e) const {
  FieldElem result = 1 % p_;
  base %= p_;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

FieldElem PrimeField::inv(FieldElem a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero");
  return pow(a, p_ - 2);
}

FieldElem PrimeField::dot(std::span<const FieldElem> a, std::span<const FieldElem> b) const {
  FieldElem acc = 0;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) acc = add(acc, mul(a[i], b[i]));
  return acc;
}

namespace {

// In-place reduced row echelon form; returns the pivot column of each pivot row.
std::vector<std::size_t> reduce(const PrimeField& f, FieldMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows.size() && m.rows[sel][col] == 0) ++sel;
    if (sel == m.rows.size()) continue;
    std::swap(m.rows[row], m.rows[sel]);
    const FieldElem scale = f.inv(m.rows[row][col]);
    for (auto& x : m.rows[row]) x = f.mul(x, scale);
    for (std::size_t r = 0; r < m.rows.size(); ++r) {
      if (r == row || m.rows[r][col] == 0) continue;
      const FieldElem factor = m.rows[r][col];
      for (std::size_t c = col; c < m.cols; ++c) {
        m.rows[r][c] = f.sub(m.rows[r][c], f.mul(factor, m.rows[row][c]));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const PrimeField& f, FieldMatrix m) { return reduce(f, m).size(); }

std::vector<std::vector<FieldElem>> null_space(const PrimeField& f, FieldMatrix m) {
  const auto pivots = reduce(f, m);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<std::vector<FieldElem>> basis;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldElem> v(m.cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = f.neg(m.rows[r][free]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool is_probable_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n && d < 1000; ++d) {
    if (n % d == 0) return n == d;
  }
  // Deterministic Miller-Rabin for n < 2^32 with bases 2, 7, 61; products fit in 64 bits.
  if (n > 0xFFFFFFFFULL) return false;
  auto mulmod = [n](std::uint64_t a, std::uint64_t b) { return a * b % n; };
  auto powmod = [&](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    b %= n;
    while (e) {
      if (e & 1U) r = mulmod(r, b);
      b = mulmod(b, b);
      e >>= 1U;
    }
    return r;
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 7ULL, 61ULL}) {
    if (a % n == 0) continue;
    std::uint64_t x = powmod(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace wyner
