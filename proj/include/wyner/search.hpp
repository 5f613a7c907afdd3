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

#ifndef WYNER_SEARCH_HPP
#define WYNER_SEARCH_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wyner/bounds.hpp"
#include "wyner/downlink_zf.hpp"
#include "wyner/model.hpp"
#include "wyner/rational.hpp"
#include "wyner/uplink_decode.hpp"

namespace wyner {

// ---------------------------------------------------------------------------
// Windowed enumeration
// ---------------------------------------------------------------------------

/// Candidate cells for terminal i: subsets of [i-w .. i+w] ∩ [1..k] with at
/// most nc elements, in lexicographic order (the empty set first).
[[nodiscard]] std::vector<IndexSet> cell_options(int i, int k, int nc, int window);

/// Number of windowed associations; saturates at UINT64_MAX.
[[nodiscard]] std::uint64_t association_count(int k, int nc, int window);

/// Lexicographic enumeration over (C_1, ..., C_k) with C_1 most significant.
class AssociationEnumerator {
 public:
  AssociationEnumerator(int k, int nc, int window);

  [[nodiscard]] std::uint64_t size() const { return total_; }
  /// The association at a given position in the enumeration.
  [[nodiscard]] CellAssociation at(std::uint64_t index) const;

  /// Calls fn for every association in order; stops early when fn returns false.
  void for_each(const std::function<bool(const CellAssociation&)>& fn) const;

 private:
  int k_;
  int nc_;
  std::vector<std::vector<IndexSet>> options_;
  std::uint64_t total_ = 0;
};

/// Convenience wrapper returning every windowed association.
[[nodiscard]] std::vector<CellAssociation> enumerate_associations(int k, int nc, int window);

// ---------------------------------------------------------------------------
// Exhaustive search
// ---------------------------------------------------------------------------

enum class Objective { avg, dl, ul };

[[nodiscard]] std::string to_string(Objective o);
[[nodiscard]] Objective objective_from_string(std::string_view name);

struct SearchOptions {
  int window = 0;  // 0 selects the default window, nc
  Objective objective = Objective::avg;
  std::vector<std::uint64_t> seeds{1, 2, 3};
  std::uint64_t cap = 5'000'000;
  unsigned workers = 1;
  bool record_table = false;
  /// Called with (done, total) roughly every 1% of the candidates.
  std::function<void(std::uint64_t, std::uint64_t)> progress;
};

struct CandidateRow {
  std::uint64_t id = 0;
  int dl = 0;
  int ul = 0;
  Rational avg_per_user;
  Rational bound_per_user;
};

/// A candidate whose oracle value exceeded one of its converse certificates.
struct SoundnessViolation {
  std::uint64_t id = 0;
  BoundKind kind = BoundKind::lemma2_chain;
  Rational achieved;
  Rational bound;
};

struct SearchResult {
  int k = 0;
  int nc = 0;
  int window = 0;
  Objective objective = Objective::avg;
  CellAssociation best_assoc;
  std::uint64_t best_id = 0;
  DlEvaluation dl;
  UlEvaluation ul;
  Rational avg_per_user;
  std::uint64_t candidates_enumerated = 0;
  BoundCertificate bound;
  /// Every candidate checked against the lemma-2, reconstruction and counting
  /// certificates (or the nc = 1 constant bound).
  std::uint64_t soundness_checks = 0;
  std::vector<SoundnessViolation> soundness_violations;
  std::vector<std::string> warnings;
  std::vector<CandidateRow> table;
  std::string scope;
};

[[nodiscard]] SearchResult exhaustive_search(int k, int nc, const SearchOptions& opts = {});

// ---------------------------------------------------------------------------
// Periodic patterns
// ---------------------------------------------------------------------------

struct PeriodicPattern {
  int period = 1;
  /// offsets[r]: relative base-station offsets for terminals i with (i-1) mod period == r.
  std::vector<std::vector<int>> offsets;

  [[nodiscard]] CellAssociation instantiate(int k, int nc) const;
  [[nodiscard]] std::string str() const;
};

struct SessionSeries {
  std::array<Rational, 3> values;  // sums at k = p*m, p*(m+1), p*(m+2)
  Rational slope;                  // growth per period, first step
  bool affine = false;
  Rational per_user;               // slope / period
  Rational max_step_per_user;      // larger of the two steps, / period
};

struct PeriodicReport {
  PeriodicPattern pattern;
  int nc = 0;
  int m = 0;
  std::array<int, 3> ks{};
  SessionSeries dl;
  SessionSeries ul;
  SessionSeries avg;
  bool affine = false;  // all three sessions affine
  std::vector<std::string> warnings;
};

[[nodiscard]] PeriodicReport periodic_eval(const PeriodicPattern& pattern, int nc, int m,
                                           const DlOptions& opts = {});

/// All period-p patterns whose offsets lie in [-w, w] with at most nc entries.
[[nodiscard]] std::vector<PeriodicPattern> enumerate_patterns(int period, int nc, int window);

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

/// 2/3 for nc = 1, otherwise (4nc-3)/(4nc-2).
[[nodiscard]] Rational theorem_tau(int nc);
/// 2nc/(2nc+1).
[[nodiscard]] Rational downlink_tau(int nc);

struct TheoremComparison {
  int nc = 0;
  Rational tau;
  Rational tau_d;
  std::optional<Rational> relation_rhs;  // (1 + tau_d(nc-1)) / 2 for nc >= 2
  std::optional<bool> relation_holds;
  std::optional<Rational> achieved;
  std::optional<Rational> delta;  // achieved - tau
};

[[nodiscard]] TheoremComparison compare_with_theorem(int nc, std::optional<Rational> achieved = std::nullopt);
[[nodiscard]] TheoremComparison compare_with_theorem(int nc, const SearchResult& result);

}  // namespace wyner

#endif  // WYNER_SEARCH_HPP
