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

#ifndef WYNER_UPLINK_DECODE_HPP
#define WYNER_UPLINK_DECODE_HPP

// One-shot uplink with successive decoding and decoded-message passing.
//
// A base station b decodes M_m only if every other active terminal it hears
// has already been decoded somewhere and its message was passed to b
// (b in C_m'). Decoded messages reach all of C_m at no cost.

#include <optional>
#include <vector>

#include "wyner/model.hpp"

namespace wyner {

struct DecodeStep {
  int m = 0;
  int bs = 0;

  friend bool operator==(const DecodeStep&, const DecodeStep&) = default;
};

struct DecodingOrder {
  std::vector<DecodeStep> steps;

  friend bool operator==(const DecodingOrder&, const DecodingOrder&) = default;
};

/// Fixpoint scheduling; nullopt when some active message can never be decoded.
[[nodiscard]] std::optional<DecodingOrder> uplink_feasible(const CellAssociation& assoc,
                                                           const IndexSet& active);

/// Independent check of an order against the decoding invariants.
[[nodiscard]] bool verify_order(const DecodingOrder& order, const CellAssociation& assoc,
                                const IndexSet& active);

struct UlOptions {
  int exact_limit = 20;
  bool allow_greedy = false;
};

struct UlEvaluation {
  int sum_dof = 0;
  IndexSet active_users;
  DecodingOrder order;
  bool exact = true;
};

[[nodiscard]] UlEvaluation max_uplink_dof(const CellAssociation& assoc, const UlOptions& opts = {});

/// C_i intersected with the base stations terminal i is connected to.
[[nodiscard]] CellAssociation prune(const CellAssociation& assoc);

}  // namespace wyner

#endif  // WYNER_UPLINK_DECODE_HPP
