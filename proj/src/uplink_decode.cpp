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

#include "wyner/uplink_decode.hpp"

#include <algorithm>

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

/// Decoders usable for m: associated and able to hear the terminal.
IndexSet decoders(const CellAssociation& assoc, int m) {
  IndexSet out;
  for (int b : assoc.cell(m)) {
    if (b == m || b == m - 1) out.push_back(b);
  }
  return out;
}

std::optional<DecodingOrder> schedule(const CellAssociation& assoc, const std::vector<char>& active,
                                      int n_active) {
  const int k = assoc.k;
  std::vector<char> decoded(static_cast<std::size_t>(k) + 2, 0);
  DecodingOrder order;
  auto ready = [&](int m, int b) {
    // Terminals heard at b are b and b+1.
    for (int other : {b, b + 1}) {
      if (other == m || other > k || !active[static_cast<std::size_t>(other)]) continue;
      if (!decoded[static_cast<std::size_t>(other)] || !contains(assoc.cell(other), b)) return false;
    }
    return true;
  };
  bool progress = true;
  while (progress && static_cast<int>(order.steps.size()) < n_active) {
    progress = false;
    for (int m = 1; m <= k; ++m) {
      if (!active[static_cast<std::size_t>(m)] || decoded[static_cast<std::size_t>(m)]) continue;
      for (int b : decoders(assoc, m)) {
        if (ready(m, b)) {
          order.steps.push_back({m, b});
          decoded[static_cast<std::size_t>(m)] = 1;
          progress = true;
          break;
        }
      }
    }
  }
  if (static_cast<int>(order.steps.size()) < n_active) return std::nullopt;
  return order;
}

struct BranchAndBound {
  const CellAssociation& assoc;
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
    current.push_back(u);
    if (schedule(assoc, active, static_cast<int>(current.size()))) run(pos + 1);
    current.pop_back();
    active[static_cast<std::size_t>(u)] = 0;
    run(pos + 1);
  }
};

}  // namespace

std::optional<DecodingOrder> uplink_feasible(const CellAssociation& assoc, const IndexSet& active) {
  check_shape(assoc, active);
  const IndexSet act = make_index_set(active);
  std::vector<char> on(static_cast<std::size_t>(assoc.k) + 2, 0);
  for (int m : act) on[static_cast<std::size_t>(m)] = 1;
  return schedule(assoc, on, static_cast<int>(act.size()));
}

bool verify_order(const DecodingOrder& order, const CellAssociation& assoc, const IndexSet& active) {
  const int k = assoc.k;
  if (k < 1 || assoc.cells.size() != static_cast<std::size_t>(k)) return false;
  const IndexSet act = make_index_set(active);
  if (order.steps.size() != act.size()) return false;
  std::vector<int> position(static_cast<std::size_t>(k) + 2, -1);
  for (std::size_t t = 0; t < order.steps.size(); ++t) {
    const auto [m, b] = order.steps[t];
    if (m < 1 || m > k || !contains(act, m) || position[static_cast<std::size_t>(m)] >= 0) return false;
    position[static_cast<std::size_t>(m)] = static_cast<int>(t);
  }
  for (std::size_t t = 0; t < order.steps.size(); ++t) {
    const auto [m, b] = order.steps[t];
    if (b < 1 || b > k || !contains(assoc.cell(m), b) || !connected(m, b, k)) return false;
    for (int other : heard_mts(b, k)) {
      if (other == m || !contains(act, other)) continue;
      const int when = position[static_cast<std::size_t>(other)];
      if (when < 0 || when >= static_cast<int>(t) || !contains(assoc.cell(other), b)) return false;
    }
  }
  return true;
}

UlEvaluation max_uplink_dof(const CellAssociation& assoc, const UlOptions& opts) {
  check_shape(assoc, {});
  const bool exact = assoc.k <= opts.exact_limit;
  if (!exact && !opts.allow_greedy) {
    throw SizeLimitError("exact uplink search limited to k <= " + std::to_string(opts.exact_limit) +
                         " (got k = " + std::to_string(assoc.k) + ")");
  }
  std::vector<int> candidates;
  for (int m = 1; m <= assoc.k; ++m) {
    if (!decoders(assoc, m).empty()) candidates.push_back(m);
  }

  UlEvaluation out;
  out.exact = exact;
  if (exact) {
    BranchAndBound bnb{assoc, candidates, std::vector<char>(static_cast<std::size_t>(assoc.k) + 2, 0), {}, {}};
    bnb.run(0);
    out.active_users = std::move(bnb.best);
  } else {
    std::vector<char> on(static_cast<std::size_t>(assoc.k) + 2, 0);
    int n = 0;
    for (int u : candidates) {
      on[static_cast<std::size_t>(u)] = 1;
      if (schedule(assoc, on, n + 1)) {
        ++n;
        out.active_users.push_back(u);
      } else {
        on[static_cast<std::size_t>(u)] = 0;
      }
    }
  }
  out.sum_dof = static_cast<int>(out.active_users.size());
  auto order = uplink_feasible(assoc, out.active_users);
  if (!order || !verify_order(*order, assoc, out.active_users)) {
    throw VerificationError("uplink decoding order for the maximizing set failed re-verification");
  }
  out.order = std::move(*order);
  return out;
}

CellAssociation prune(const CellAssociation& assoc) {
  CellAssociation out = assoc;
  for (int i = 1; i <= out.k && static_cast<std::size_t>(i) <= out.cells.size(); ++i) {
    std::erase_if(out.cell(i), [&](int j) { return j != i && j != i - 1; });
  }
  return out;
}

}  // namespace wyner
