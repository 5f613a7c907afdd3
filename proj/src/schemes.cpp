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

#include "wyner/schemes.hpp"

#include <algorithm>
#include <functional>

#include "wyner/errors.hpp"

namespace wyner {

namespace {

constexpr std::size_t kMaxEnumeratedTail = 16;

IndexSet span(int first, int last, int k) {
  IndexSet out;
  for (int j = std::max(first, 1); j <= std::min(last, k); ++j) out.push_back(j);
  return out;
}

IndexSet merge(const IndexSet& a, const IndexSet& b) {
  IndexSet out = a;
  out.insert(out.end(), b.begin(), b.end());
  return make_index_set(std::move(out));
}

void check_params(int k, int nc) {
  if (k < 1) throw InputError("k must be >= 1");
  if (nc < 1) throw InputError("nc must be >= 1");
}

/// Largest subset of `extra` that keeps `fixed ∪ subset` feasible; among
/// equal sizes the lexicographically smallest. Greedy when `extra` is large.
IndexSet best_extension(const IndexSet& fixed, const IndexSet& extra,
                        const std::function<bool(const IndexSet&)>& feasible, bool& exact) {
  if (extra.size() > kMaxEnumeratedTail) {
    exact = false;
    IndexSet chosen;
    for (int u : extra) {
      IndexSet trial = chosen;
      trial.push_back(u);
      if (feasible(merge(fixed, trial))) chosen = std::move(trial);
    }
    return chosen;
  }
  std::vector<IndexSet> options;
  const std::size_t n = extra.size();
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    IndexSet s;
    for (std::size_t b = 0; b < n; ++b) {
      if (mask & (1U << b)) s.push_back(extra[b]);
    }
    options.push_back(std::move(s));
  }
  std::sort(options.begin(), options.end(), [](const IndexSet& a, const IndexSet& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  for (auto& s : options) {
    if (feasible(merge(fixed, s))) return s;
  }
  return {};
}

std::function<bool(const IndexSet&)> dl_check(const CellAssociation& silenced, const DlOptions& opts,
                                              std::vector<std::string>& notes) {
  return [&silenced, &opts, &notes](const IndexSet& active) {
    for (int m : active) {
      if (silenced.cell(m).empty()) return false;
    }
    auto d = decide_downlink(silenced, active, opts);
    notes.insert(notes.end(), d.warnings.begin(), d.warnings.end());
    return d.feasible;
  };
}

std::function<bool(const IndexSet&)> ul_check(const CellAssociation& assoc) {
  return [&assoc](const IndexSet& active) { return uplink_feasible(assoc, active).has_value(); };
}

std::string range_text(int first, int last) {
  return std::to_string(first) + "-" + std::to_string(last);
}

/// Uplink maximum for a plan whose blocks of length `len` never share a
/// decoding base station: solve one block locally, replicate, then certify
/// the union on the full network.
void blockwise_uplink(SchemePlan& plan, int len) {
  const int k = plan.assoc.k;
  const int full = k / len;
  auto local = [&](int offset, int size) {
    CellAssociation inst(size, plan.assoc.nc);
    for (int loc = 1; loc <= size; ++loc) {
      for (int j : plan.assoc.cell(offset + loc)) {
        if (j <= offset || j > offset + size) {
          throw std::logic_error("blockwise uplink used on a non block-contained association");
        }
        inst.cell(loc).push_back(j - offset);
      }
    }
    return max_uplink_dof(inst, UlOptions{20, true});
  };
  IndexSet active;
  int claimed = 0;
  if (full > 0) {
    const auto block = local(0, len);
    if (!block.exact) plan.notes.push_back("uplink: block maximum is a greedy lower bound");
    for (int b = 0; b < full; ++b) {
      for (int u : block.active_users) active.push_back(b * len + u);
    }
    claimed += block.sum_dof * full;
  }
  if (const int tail = k - full * len; tail > 0) {
    const auto t = local(full * len, tail);
    for (int u : t.active_users) active.push_back(full * len + u);
    claimed += t.sum_dof;
    plan.notes.push_back("uplink: trailing users " + range_text(full * len + 1, k) + " contribute " +
                         std::to_string(t.sum_dof));
  }
  plan.ul_active_users = make_index_set(std::move(active));
  plan.claimed_ul_dof = claimed;
  if (!uplink_feasible(plan.assoc, plan.ul_active_users)) {
    throw VerificationError("blockwise uplink activation is not decodable on the full network");
  }
}

/// Completes the downlink activation of trailing users by oracle search.
void downlink_tail(SchemePlan& plan, int first_tail, const DlOptions& opts, int per_block_claim,
                   int full_blocks) {
  const int k = plan.assoc.k;
  plan.claimed_dl_dof = per_block_claim * full_blocks;
  if (first_tail > k) return;
  const auto silenced = remove_silent(plan.assoc, plan.dl_silent_bs);
  bool exact = true;
  const IndexSet extra = span(first_tail, k, k);
  const IndexSet chosen =
      best_extension(plan.dl_active_users, extra, dl_check(silenced, opts, plan.notes), exact);
  plan.dl_active_users = merge(plan.dl_active_users, chosen);
  plan.claimed_dl_dof += static_cast<std::int64_t>(chosen.size());
  plan.notes.push_back("downlink: trailing users " + range_text(first_tail, k) + " contribute " +
                       std::to_string(chosen.size()) + (exact ? "" : " (greedy)"));
}

SchemePlan ncone_scheme(int k, const DlOptions& opts) {
  SchemePlan plan;
  plan.assoc = CellAssociation(k, 1);
  const int full = k / 3;
  for (int i = 1; i <= k; ++i) {
    if (i % 3 == 1) plan.assoc.cell(i) = {i};
    if (i % 3 == 0) plan.assoc.cell(i) = {i - 1};
  }
  for (int b = 0; b < full; ++b) {
    const int o = 3 * b;
    plan.dl_active_users.push_back(o + 1);
    plan.dl_active_users.push_back(o + 3);
    plan.dl_silent_bs.push_back(o + 3);
  }
  plan.ul_active_users = plan.dl_active_users;
  downlink_tail(plan, 3 * full + 1, opts, 2, full);

  plan.claimed_ul_dof = 2 * full;
  if (3 * full < k) {
    bool exact = true;
    const IndexSet chosen =
        best_extension(plan.ul_active_users, span(3 * full + 1, k, k), ul_check(plan.assoc), exact);
    plan.ul_active_users = merge(plan.ul_active_users, chosen);
    plan.claimed_ul_dof += static_cast<std::int64_t>(chosen.size());
    plan.notes.push_back("uplink: trailing users " + range_text(3 * full + 1, k) + " contribute " +
                         std::to_string(chosen.size()));
  }
  return plan;
}

SchemePlan pair_scheme(int k, const DlOptions& opts) {
  SchemePlan plan;
  plan.assoc = pair_association(k);
  plan.ul_active_users = span(1, k, k);
  plan.claimed_ul_dof = k;

  // Blocks of three: one inactive terminal and one silent base station each.
  // The first candidate whose prefix the oracle certifies is kept.
  const auto& a = plan.assoc;
  const int full = k / 3;
  std::vector<std::string> scratch;
  for (int b = 0; b < full; ++b) {
    const int o = 3 * b;
    bool found = false;
    for (int p = 1; p <= 3 && !found; ++p) {
      const int off_user = o + p;
      const int off_bs = o + p % 3 + 1;
      IndexSet silent = merge(plan.dl_silent_bs, {off_bs});
      IndexSet active = plan.dl_active_users;
      for (int u = o + 1; u <= o + 3; ++u) {
        if (u != off_user) active.push_back(u);
      }
      active = make_index_set(std::move(active));
      const auto silenced = remove_silent(a, silent);
      if (dl_check(silenced, opts, scratch)(active)) {
        plan.dl_silent_bs = std::move(silent);
        plan.dl_active_users = std::move(active);
        plan.notes.push_back("downlink block " + range_text(o + 1, o + 3) + ": inactive MT " +
                             std::to_string(off_user) + ", silent BS " + std::to_string(off_bs));
        found = true;
      }
    }
    if (!found) {
      throw VerificationError("no candidate downlink pattern is feasible for block " + range_text(o + 1, o + 3));
    }
  }
  plan.notes.insert(plan.notes.end(), scratch.begin(), scratch.end());
  downlink_tail(plan, 3 * full + 1, opts, 2, full);
  return plan;
}

SchemePlan wide_scheme(int k, int nc, const DlOptions& opts) {
  const int len = 2 * nc - 1;
  SchemePlan plan;
  plan.assoc = CellAssociation(k, nc);
  for (int i = 1; i <= k; ++i) {
    const int o = (i - 1) / len * len;
    const int loc = i - o;
    IndexSet c = span(i - 1, i, k);
    if (loc <= nc - 1) c = merge(c, span(o + loc, o + nc - 1, k));
    if (loc >= nc + 1) c = merge(c, span(o + nc, o + loc - 1, k));
    plan.assoc.cell(i) = std::move(c);
  }
  const int full = k / len;
  for (int b = 0; b < full; ++b) {
    const int o = b * len;
    for (int loc = 1; loc <= len; ++loc) {
      if (loc != nc) plan.dl_active_users.push_back(o + loc);
    }
    plan.dl_silent_bs.push_back(o + len);
  }
  plan.ul_active_users = span(1, k, k);
  plan.claimed_ul_dof = k;
  downlink_tail(plan, full * len + 1, opts, 2 * nc - 2, full);
  return plan;
}

}  // namespace

CellAssociation pair_association(int k) {
  if (k < 1) throw InputError("k must be >= 1");
  CellAssociation a(k, 2);
  for (int i = 1; i <= k; ++i) a.cell(i) = span(i - 1, i, k);
  return a;
}

SchemePlan downlink_optimal(int k, int nc, const DlOptions& opts) {
  check_params(k, nc);
  const int len = 2 * nc + 1;
  SchemePlan plan;
  plan.assoc = CellAssociation(k, nc);
  for (int i = 1; i <= k; ++i) {
    const int o = (i - 1) / len * len;
    const int loc = i - o;
    if (loc <= nc) {
      plan.assoc.cell(i) = span(o + loc, o + nc, k);
    } else if (loc >= nc + 2) {
      plan.assoc.cell(i) = span(o + nc + 1, o + loc - 1, k);
    }
  }
  const int full = k / len;
  for (int b = 0; b < full; ++b) {
    const int o = b * len;
    for (int loc = 1; loc <= len; ++loc) {
      if (loc != nc + 1) plan.dl_active_users.push_back(o + loc);
    }
    plan.dl_silent_bs.push_back(o + len);
  }
  downlink_tail(plan, full * len + 1, opts, 2 * nc, full);
  blockwise_uplink(plan, len);
  return plan;
}

SchemePlan avg_optimal(int k, int nc, const DlOptions& opts) {
  check_params(k, nc);
  if (nc == 1) return ncone_scheme(k, opts);
  if (nc == 2) return pair_scheme(k, opts);
  return wide_scheme(k, nc, opts);
}

PlanCertificate certify_plan(const SchemePlan& plan, const DlOptions& opts) {
  PlanCertificate cert;
  for (const auto& v : validate_association(plan.assoc)) cert.problems.push_back(v.reason);
  if (!cert.problems.empty()) return cert;

  const auto silenced = remove_silent(plan.assoc, plan.dl_silent_bs);
  bool dl_shape_ok = true;
  for (int m : plan.dl_active_users) {
    if (m < 1 || m > plan.assoc.k || silenced.cell(m).empty()) {
      cert.problems.push_back("downlink-active user " + std::to_string(m) + " has no transmitter");
      dl_shape_ok = false;
    }
  }
  if (dl_shape_ok) {
    auto d = decide_downlink(silenced, plan.dl_active_users, opts);
    cert.warnings = d.warnings;
    cert.dl_witness = d.witness;
    if (!d.feasible) cert.problems.push_back("downlink activation is not zero-forcing feasible");
    if (plan.claimed_dl_dof != Rational(static_cast<std::int64_t>(plan.dl_active_users.size()))) {
      cert.problems.push_back("claimed downlink DoF " + plan.claimed_dl_dof.str() + " differs from " +
                              std::to_string(plan.dl_active_users.size()) + " active users");
    } else {
      cert.dl_ok = d.feasible;
    }
  }

  auto order = uplink_feasible(plan.assoc, plan.ul_active_users);
  if (!order || !verify_order(*order, plan.assoc, plan.ul_active_users)) {
    cert.problems.push_back("uplink activation is not decodable");
  } else if (plan.claimed_ul_dof != Rational(static_cast<std::int64_t>(plan.ul_active_users.size()))) {
    cert.problems.push_back("claimed uplink DoF " + plan.claimed_ul_dof.str() + " differs from " +
                            std::to_string(plan.ul_active_users.size()) + " active users");
  } else {
    cert.ul_ok = true;
  }
  cert.ul_order = std::move(order);
  return cert;
}

}  // namespace wyner
