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

#ifndef WYNER_DOWNLINK_ZF_HPP
#define WYNER_DOWNLINK_ZF_HPP

// One-shot linear zero-forcing downlink.
//
// Each active message m is precoded over the transmitters in C_m. The scheme
// is feasible iff every message can be nulled at every other active receiver
// while keeping a nonzero gain at its own receiver. Message symbols are
// independent, so the condition decouples per message: the desired channel
// row must lie outside the span of the rows of the unintended active
// receivers that hear some transmitter in C_m.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wyner/model.hpp"

namespace wyner {

struct ZfWitness {
  std::uint64_t seed = 0;
  FieldElem prime = kDefaultPrime;
  /// message m -> (base station j -> precoding coefficient v_{m,j})
  std::map<int, std::map<int, FieldElem>> precoders;

  friend bool operator==(const ZfWitness&, const ZfWitness&) = default;
};

/// Removes the silent transmitters from every C_m.
[[nodiscard]] CellAssociation remove_silent(const CellAssociation& assoc, const IndexSet& silent_bs);

/// Exact feasibility for a single channel realization. Throws InputError when
/// an active user has an empty association or indices are out of range.
[[nodiscard]] std::optional<ZfWitness> zf_feasible(const CellAssociation& assoc,
                                                   const IndexSet& active,
                                                   const ChannelRealization& ch);

/// Re-checks both witness conditions by direct evaluation in the field.
[[nodiscard]] bool verify_witness(const ZfWitness& w, const CellAssociation& assoc,
                                  const IndexSet& active, const ChannelRealization& ch);

struct DlOptions {
  std::vector<std::uint64_t> seeds{1, 2, 3};
  FieldElem prime = kDefaultPrime;
  int exact_limit = 16;
  /// Above exact_limit: return a greedy lower bound instead of failing.
  bool allow_greedy = false;
};

/// Majority decision over several channel draws.
struct DlDecision {
  bool feasible = false;
  std::optional<ZfWitness> witness;
  std::vector<std::string> warnings;  // one entry per seed disagreement
};

[[nodiscard]] DlDecision decide_downlink(const CellAssociation& assoc, const IndexSet& active,
                                         const DlOptions& opts = {});

struct DlEvaluation {
  int sum_dof = 0;
  IndexSet active_users;
  ZfWitness witness;
  std::vector<std::uint64_t> seeds_tried;
  bool exact = true;
  std::vector<std::string> warnings;
};

/// Largest active set admitting a zero-forcing scheme; ties broken toward the
/// lexicographically smallest set.
[[nodiscard]] DlEvaluation max_downlink_dof(const CellAssociation& assoc, const DlOptions& opts = {});

}  // namespace wyner

#endif  // WYNER_DOWNLINK_ZF_HPP
