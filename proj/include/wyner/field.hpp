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

#ifndef WYNER_FIELD_HPP
#define WYNER_FIELD_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace wyner {

using FieldElem = std::uint64_t;

inline constexpr FieldElem kDefaultPrime = 2147483647;  // 2^31 - 1

/// Arithmetic in Z/pZ for a prime p < 2^32.
class PrimeField {
 public:
  explicit PrimeField(FieldElem prime = kDefaultPrime);

  [[nodiscard]] FieldElem prime() const { return p_; }
  [[nodiscard]] FieldElem add(FieldElem a, FieldElem b) const { return (a + b) % p_; }
  [[nodiscard]] FieldElem sub(FieldElem a, FieldElem b) const { return (a + p_ - b) % p_; }
  [[nodiscard]] FieldElem mul(FieldElem a, FieldElem b) const { return (a * b) % p_; }
  [[nodiscard]] FieldElem neg(FieldElem a) const { return a == 0 ? 0 : p_ - a; }
  [[nodiscard]] FieldElem pow(FieldElem base, std::uint64_t e) const;
  /// Throws std::domain_error on zero.
  [[nodiscard]] FieldElem inv(FieldElem a) const;
  [[nodiscard]] FieldElem dot(std::span<const FieldElem> a, std::span<const FieldElem> b) const;

 private:
  FieldElem p_;
};

/// Dense row-major matrix over a prime field; rows may be added one at a time.
struct FieldMatrix {
  std::size_t cols = 0;
  std::vector<std::vector<FieldElem>> rows;

  explicit FieldMatrix(std::size_t c) : cols(c) {}
};

[[nodiscard]] std::size_t rank(const PrimeField& f, FieldMatrix m);

/// Basis of {v : M v = 0}, one vector per free column of the reduced echelon form.
[[nodiscard]] std::vector<std::vector<FieldElem>> null_space(const PrimeField& f, FieldMatrix m);

[[nodiscard]] bool is_probable_prime(std::uint64_t n);

}  // namespace wyner

#endif  // WYNER_FIELD_HPP
