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

#ifndef WYNER_BOUNDS_HPP
#define WYNER_BOUNDS_HPP

// Converse certificates. Each certificate carries enough data (flagged pairs
// or block classifications plus k and nc) to recompute its value and to
// re-check every flag against the association it was issued for.

#include <string>
#include <string_view>
#include <vector>

#include "wyner/model.hpp"
#include "wyner/rational.hpp"

namespace wyner {

enum class BoundKind {
  lemma2_chain,       // uplink sum over the whole chain
  dl_reconstruction,  // downlink sum
  avg_counting,       // (uplink + downlink) / 2
  ncone_constant,     // either session, nc = 1
};

[[nodiscard]] std::string to_string(BoundKind kind);
[[nodiscard]] BoundKind bound_kind_from_string(std::string_view name);

/// A block of 2nc-1 consecutive indices. GOOD iff its middle base station is
/// associated with both terminals that hear it.
struct BlockClass {
  int start = 0;
  int end = 0;
  int middle_bs = 0;
  bool good = false;

  friend bool operator==(const BlockClass&, const BlockClass&) = default;
};

struct BoundCertificate {
  BoundKind kind = BoundKind::lemma2_chain;
  std::vector<int> flagged_pairs;  // lemma2_chain: i such that d_i + d_{i+1} <= 1
  std::vector<BlockClass> blocks;  // block-based kinds
  int tail = 0;                    // users outside full blocks, bounded by 1 each
  Rational value;                  // bound on the sum DoF of the session(s)
  int k = 0;
  int nc = 0;
  std::string assumption;

  [[nodiscard]] Rational per_user() const { return value / Rational(k); }

  friend bool operator==(const BoundCertificate&, const BoundCertificate&) = default;
};

/// Flags every i in [1..k-1] where terminal i or i+1 is not associated with
/// base station i and maximizes sum d_i under d_i + d_{i+1} <= 1 on flags.
[[nodiscard]] BoundCertificate lemma2_chain_bound(const CellAssociation& assoc);

/// Average-session bound from block counting; requires nc >= 2.
[[nodiscard]] BoundCertificate counting_bound(const CellAssociation& assoc, int nc);

/// Downlink bound from block reconstruction; requires nc >= 2.
[[nodiscard]] BoundCertificate reconstruction_bound(const CellAssociation& assoc, int nc);

/// Association-independent bound for nc = 1: at most two served users in any
/// three consecutive ones, per session.
[[nodiscard]] BoundCertificate ncone_bound(int k);

/// Value implied by the certificate's flags alone.
[[nodiscard]] Rational recompute_value(const BoundCertificate& cert);

/// Re-derives the flags from the association and checks the value.
[[nodiscard]] bool check_certificate(const BoundCertificate& cert, const CellAssociation& assoc);

}  // namespace wyner

#endif  // WYNER_BOUNDS_HPP
