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

#ifndef WYNER_SCHEMES_HPP
#define WYNER_SCHEMES_HPP

// Periodic cell-association schemes with declared activation patterns.
//
// Block b covers users [(b-1)L+1 .. bL]. Complete blocks carry closed-form
// claims; users in a trailing partial block get the pattern prefix and their
// contribution is whatever the oracles certify.

#include <optional>
#include <string>
#include <vector>

#include "wyner/downlink_zf.hpp"
#include "wyner/model.hpp"
#include "wyner/rational.hpp"
#include "wyner/uplink_decode.hpp"

namespace wyner {

struct SchemePlan {
  CellAssociation assoc;
  IndexSet dl_active_users;
  IndexSet dl_silent_bs;
  IndexSet ul_active_users;
  Rational claimed_dl_dof;
  Rational claimed_ul_dof;
  /// Per-block choices made by the oracles, in human-readable form.
  std::vector<std::string> notes;

  friend bool operator==(const SchemePlan&, const SchemePlan&) = default;
};

/// Downlink-optimal pattern with period 2nc+1: middle user unserved, last
/// base station of every block silent.
[[nodiscard]] SchemePlan downlink_optimal(int k, int nc, const DlOptions& opts = {});

/// C_1 = {1}, C_i = {i-1, i}; recorded with nc = 2.
[[nodiscard]] CellAssociation pair_association(int k);

/// Average-optimal scheme: blocks of 3 for nc = 1, pair association with an
/// oracle-chosen downlink pattern for nc = 2, and period 2nc-1 for nc > 2.
[[nodiscard]] SchemePlan avg_optimal(int k, int nc, const DlOptions& opts = {});

struct PlanCertificate {
  bool dl_ok = false;
  bool ul_ok = false;
  std::optional<ZfWitness> dl_witness;
  std::optional<DecodingOrder> ul_order;
  std::vector<std::string> warnings;
  std::vector<std::string> problems;

  [[nodiscard]] bool ok() const { return dl_ok && ul_ok; }
};

/// Checks the declared activation sets with both oracles and compares their
/// sizes against the claimed values.
[[nodiscard]] PlanCertificate certify_plan(const SchemePlan& plan, const DlOptions& opts = {});

}  // namespace wyner

#endif  // WYNER_SCHEMES_HPP
