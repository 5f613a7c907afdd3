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

#ifndef WYNER_MODEL_HPP
#define WYNER_MODEL_HPP

// Linear (chain) interference network: mobile terminal i hears base stations
// i-1 and i. All indices are 1-based.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "wyner/field.hpp"

namespace wyner {

/// Sorted, duplicate-free list of 1-based indices.
using IndexSet = std::vector<int>;

[[nodiscard]] IndexSet make_index_set(std::vector<int> items);
[[nodiscard]] bool contains(const IndexSet& s, int x);

struct Topology {
  int k = 1;

  explicit Topology(int users);
};

/// True iff terminal i hears base station j (i in {j, j+1}).
[[nodiscard]] bool connected(int i, int j, int k);
/// {i-1, i} intersected with [1..k].
[[nodiscard]] IndexSet connected_bs(int i, int k);
/// {j, j+1} intersected with [1..k].
[[nodiscard]] IndexSet heard_mts(int j, int k);

/// Generic channel coefficients for every connected (terminal, base station) pair.
class ChannelRealization {
 public:
  ChannelRealization(int k, FieldElem prime, std::uint64_t seed,
                     std::vector<FieldElem> direct, std::vector<FieldElem> cross);

  [[nodiscard]] int k() const { return k_; }
  [[nodiscard]] FieldElem prime() const { return field_.prime(); }
  [[nodiscard]] std::uint64_t seed() const { return seed_; }
  [[nodiscard]] const PrimeField& field() const { return field_; }

  /// H_{i,j}; zero for unconnected pairs.
  [[nodiscard]] FieldElem h(int i, int j) const;

  struct Entry {
    int mt;
    int bs;
    FieldElem value;
  };
  /// Stored coefficients in (mt, bs) order; exactly 2k-1 entries.
  [[nodiscard]] std::vector<Entry> entries() const;

  friend bool operator==(const ChannelRealization& a, const ChannelRealization& b) {
    return a.k_ == b.k_ && a.field_.prime() == b.field_.prime() && a.seed_ == b.seed_ &&
           a.direct_ == b.direct_ && a.cross_ == b.cross_;
  }

 private:
  int k_;
  PrimeField field_;
  std::uint64_t seed_;
  std::vector<FieldElem> direct_;  // H_{i,i}, index i-1
  std::vector<FieldElem> cross_;   // H_{i,i-1}, index i-2
};

/// Deterministic draw of uniform nonzero field elements for every connected pair.
[[nodiscard]] ChannelRealization draw_channels(int k, std::uint64_t seed,
                                               FieldElem prime = kDefaultPrime);

/// Per-terminal base-station sets C_1..C_k under a budget |C_i| <= nc.
struct CellAssociation {
  int k = 0;
  int nc = 0;
  std::vector<IndexSet> cells;

  CellAssociation() = default;
  CellAssociation(int users, int budget);
  CellAssociation(int users, int budget, std::vector<IndexSet> sets);

  /// C_i for a 1-based terminal index.
  [[nodiscard]] const IndexSet& cell(int i) const { return cells.at(static_cast<std::size_t>(i - 1)); }
  [[nodiscard]] IndexSet& cell(int i) { return cells.at(static_cast<std::size_t>(i - 1)); }

  friend bool operator==(const CellAssociation&, const CellAssociation&) = default;
  friend auto operator<=>(const CellAssociation& a, const CellAssociation& b) {
    return a.cells <=> b.cells;
  }
};

struct Violation {
  int mt;  // 0 when the violation is structural (cell count mismatch)
  std::string reason;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Every budget or range violation; empty means the association is valid.
[[nodiscard]] std::vector<Violation> validate_association(const CellAssociation& a);

/// Throws InputError listing the violations, if any.
void require_valid(const CellAssociation& a);

/// "{1,2,3}" style rendering of an index set.
[[nodiscard]] std::string to_string(const IndexSet& s);

}  // namespace wyner

#endif  // WYNER_MODEL_HPP
