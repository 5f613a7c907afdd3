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

#include "wyner/downlink_zf.hpp"

#include <algorithm>
#include <unordered_map>
#include <utility>

#include "wyner/errors.hpp"

namespace wyner {

namespace {

void check_shape(const CellAssociation& assoc, const IndexSet& active) {
  if (assoc.k < 1 || assoc.cells.size() != static_cast<std::size_t>(assoc.k)) {
    throw InputError("association must hold exactly k >= 1 cells");
  }
  for (const auto& c : assoc.cells) {
    for (int j : c) {
      if (j < 1 || j > assoc.k) throw InputError("association references base station out of range");
    }
  }
  for (int m : active) {
    if (m < 1 || m > assoc.k) throw InputError("active user " + std::to_string(m) + " out of range");
  }
}

/// Unintended receivers that hear at least one transmitter carrying message m.
IndexSet exposed_receivers(int m, const IndexSet& cm, int k) {
  std::vector<int> out;
  for (int j : cm) {
    for (int r : heard_mts(j, k)) {
      if (r != m) out.push_back(r);
    }
  }
  return make_index_set(std::move(out));
}

template <class IsActive>
std::optional<std::vector<FieldElem>> solve_message(const ChannelRealization& ch, int m,
                                                    const IndexSet& cm, const IndexSet& exposed,
                                                    IsActive&& is_active) {
  if (cm.empty()) return std::nullopt;
  const PrimeField& f = ch.field();
  FieldMatrix constraints(cm.size());
  for (int r : exposed) {
    if (!is_active(r)) continue;
    std::vector<FieldElem> row;
    row.reserve(cm.size());
    for (int j : cm) row.push_back(ch.h(r, j));
    constraints.rows.push_back(std::move(row));
  }
  std::vector<FieldElem> desired;
  desired.reserve(cm.size());
  for (int j : cm) desired.push_back(ch.h(m, j));

  // d lies outside the row space iff it is not orthogonal to the null space.
  for (auto& v : null_space(f, std::move(constraints))) {
    if (f.dot(desired, v) != 0) return v;
  }
  return std::nullopt;
}

std::string describe(const IndexSet& s) { return to_string(s); }

/// Per-message feasibility with majority voting across seeds and memoization
/// keyed by the active pattern among the exposed receivers.
class DownlinkOracle {
 public:
  DownlinkOracle(const CellAssociation& assoc, const DlOptions& opts) : k_(assoc.k) {
    if (opts.seeds.empty()) throw InputError("at least one channel seed is required");
    for (auto s : opts.seeds) channels_.push_back(draw_channels(k_, s, opts.prime));
    cells_ = assoc.cells;
    exposed_.resize(static_cast<std::size_t>(k_));
    affects_.resize(static_cast<std::size_t>(k_));
    memo_.resize(static_cast<std::size_t>(k_));
    for (int m = 1; m <= k_; ++m) {
      exposed_[idx(m)] = exposed_receivers(m, cells_[idx(m)], k_);
      for (int r : exposed_[idx(m)]) affects_[idx(r)].push_back(m);
    }
  }

  /// Whether message m can be served alone.
  [[nodiscard]] bool can_serve(int m) const {
    for (int j : cells_[idx(m)]) {
      if (connected(m, j, k_)) return true;
    }
    return false;
  }

  bool message_ok(int m, const std::vector<char>& active) {
    const auto& exposed = exposed_[idx(m)];
    const bool use_memo = exposed.size() <= 64;
    std::uint64_t key = 0;
    if (use_memo) {
      for (std::size_t b = 0; b < exposed.size(); ++b) {
        if (active[static_cast<std::size_t>(exposed[b])]) key |= (std::uint64_t{1} << b);
      }
      auto& table = memo_[idx(m)];
      if (auto it = table.find(key); it != table.end()) return it->second;
    }
    int votes = 0;
    for (const auto& ch : channels_) {
      auto is_active = [&](int r) { return active[static_cast<std::size_t>(r)] != 0; };
      if (solve_message(ch, m, cells_[idx(m)], exposed, is_active)) ++votes;
    }
    const int n = static_cast<int>(channels_.size());
    if (votes != 0 && votes != n) {
      IndexSet on;
      for (int r : exposed) {
        if (active[static_cast<std::size_t>(r)]) on.push_back(r);
      }
      warnings_.push_back("genericity: message " + std::to_string(m) + " with active exposed receivers " +
                          describe(on) + " feasible on " + std::to_string(votes) + " of " +
                          std::to_string(n) + " seeds");
    }
    const bool ok = 2 * votes > n;
    if (use_memo) memo_[idx(m)].emplace(key, ok);
    return ok;
  }

  /// Checks the effect of switching on user u (already marked in active).
  bool admits(int u, const std::vector<char>& active) {
    if (!message_ok(u, active)) return false;
    for (int m : affects_[idx(u)]) {
      if (active[static_cast<std::size_t>(m)] && !message_ok(m, active)) return false;
    }
    return true;
  }

  [[nodiscard]] const std::vector<ChannelRealization>& channels() const { return channels_; }
  std::vector<std::string>& warnings() { return warnings_; }

 private:
  static std::size_t idx(int m) { return static_cast<std::size_t>(m - 1); }

  int k_;
  std::vector<ChannelRealization> channels_;
  std::vector<IndexSet> cells_;
  std::vector<IndexSet> exposed_;
  std::vector<std::vector<int>> affects_;
  std::vector<std::unordered_map<std::uint64_t, bool>> memo_;
  std::vector<std::string> warnings_;
};

struct BranchAndBound {
  DownlinkOracle& oracle;
  std::vector<int> candidates;
  std::vector<char> active;
  std::vector<int> current;
  std::vector<int> best;

  void run(std::size_t pos) {
    if (current.size() > best.size()) best = current;
    if (pos == candidates.size()) return;
    if (current.size() + (candidates.size() - pos) <= best.size()) return;
    const int u = candidates[pos];
    active[static_cast<std::size_t>(u)] = 1;
    if (oracle.admits(u, active)) {
      current.push_back(u);
      run(pos + 1);
      current.pop_back();
    }
    active[static_cast<std::size_t>(u)] = 0;
    run(pos + 1);
  }
};

}  // namespace

CellAssociation remove_silent(const CellAssociation& assoc, const IndexSet& silent_bs) {
  CellAssociation out = assoc;
  for (auto& c : out.cells) {
    std::erase_if(c, [&](int j) { return contains(silent_bs, j); });
  }
  return out;
}

std::optional<ZfWitness> zf_feasible(const CellAssociation& assoc, const IndexSet& active,
                                     const ChannelRealization& ch) {
  check_shape(assoc, active);
  if (ch.k() != assoc.k) throw InputError("channel realization size does not match association");
  const IndexSet act = make_index_set(active);
  std::vector<char> on(static_cast<std::size_t>(assoc.k) + 1, 0);
  for (int m : act) on[static_cast<std::size_t>(m)] = 1;

  ZfWitness w;
  w.seed = ch.seed();
  w.prime = ch.prime();
  for (int m : act) {
    const auto& cm = assoc.cell(m);
    if (cm.empty()) throw InputError("active user " + std::to_string(m) + " has an empty association");
    auto v = solve_message(ch, m, cm, exposed_receivers(m, cm, assoc.k),
                           [&](int r) { return on[static_cast<std::size_t>(r)] != 0; });
    if (!v) return std::nullopt;
    auto& pre = w.precoders[m];
    for (std::size_t t = 0; t < cm.size(); ++t) pre[cm[t]] = (*v)[t];
  }
  return w;
}

bool verify_witness(const ZfWitness& w, const CellAssociation& assoc, const IndexSet& active,
                    const ChannelRealization& ch) {
  if (w.prime != ch.prime() || w.seed != ch.seed() || ch.k() != assoc.k) return false;
  const IndexSet act = make_index_set(active);
  if (w.precoders.size() != act.size()) return false;
  const PrimeField& f = ch.field();
  for (int m : act) {
    auto it = w.precoders.find(m);
    if (it == w.precoders.end() || m < 1 || m > assoc.k) return false;
    for (const auto& [j, v] : it->second) {
      if (!contains(assoc.cell(m), j) || v >= w.prime) return false;
    }
    // Received contribution of message m at receiver r.
    auto gain = [&](int r) {
      FieldElem acc = 0;
      for (const auto& [j, v] : it->second) acc = f.add(acc, f.mul(ch.h(r, j), v));
      return acc;
    };
    if (gain(m) == 0) return false;
    for (int r : act) {
      if (r != m && gain(r) != 0) return false;
    }
  }
  return true;
}

DlDecision decide_downlink(const CellAssociation& assoc, const IndexSet& active, const DlOptions& opts) {
  if (opts.seeds.empty()) throw InputError("at least one channel seed is required");
  DlDecision out;
  int votes = 0;
  for (auto seed : opts.seeds) {
    const auto ch = draw_channels(assoc.k, seed, opts.prime);
    auto w = zf_feasible(assoc, active, ch);
    if (!w) continue;
    ++votes;
    if (!verify_witness(*w, assoc, active, ch)) {
      throw VerificationError("zero-forcing witness failed re-verification for seed " + std::to_string(seed));
    }
    if (!out.witness) out.witness = std::move(w);
  }
  const int n = static_cast<int>(opts.seeds.size());
  if (votes != 0 && votes != n) {
    out.warnings.push_back("genericity: active set " + describe(make_index_set(active)) + " feasible on " +
                           std::to_string(votes) + " of " + std::to_string(n) + " seeds");
  }
  out.feasible = 2 * votes > n;
  if (!out.feasible) out.witness.reset();
  return out;
}

DlEvaluation max_downlink_dof(const CellAssociation& assoc, const DlOptions& opts) {
  check_shape(assoc, {});
  const bool exact = assoc.k <= opts.exact_limit;
  if (!exact && !opts.allow_greedy) {
    throw SizeLimitError("exact downlink search limited to k <= " + std::to_string(opts.exact_limit) +
                         " (got k = " + std::to_string(assoc.k) + ")");
  }
  DownlinkOracle oracle(assoc, opts);
  std::vector<int> candidates;
  for (int m = 1; m <= assoc.k; ++m) {
    if (oracle.can_serve(m)) candidates.push_back(m);
  }

  std::vector<int> best;
  if (exact) {
    BranchAndBound bnb{oracle, candidates, std::vector<char>(static_cast<std::size_t>(assoc.k) + 1, 0), {}, {}};
    bnb.run(0);
    best = std::move(bnb.best);
  } else {
    std::vector<char> active(static_cast<std::size_t>(assoc.k) + 1, 0);
    for (int u : candidates) {
      active[static_cast<std::size_t>(u)] = 1;
      if (oracle.admits(u, active)) {
        best.push_back(u);
      } else {
        active[static_cast<std::size_t>(u)] = 0;
      }
    }
  }

  DlEvaluation out;
  out.sum_dof = static_cast<int>(best.size());
  out.active_users = best;
  out.seeds_tried = opts.seeds;
  out.exact = exact;
  out.warnings = std::move(oracle.warnings());
  bool witnessed = false;
  for (const auto& ch : oracle.channels()) {
    auto w = zf_feasible(assoc, out.active_users, ch);
    if (w && verify_witness(*w, assoc, out.active_users, ch)) {
      out.witness = std::move(*w);
      witnessed = true;
      break;
    }
  }
  if (!witnessed) throw VerificationError("no seed produced a verifiable witness for the maximizing set");
  return out;
}

}  // namespace wyner
