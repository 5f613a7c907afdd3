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

#include "wyner/search.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <thread>

#include "wyner/errors.hpp"

namespace wyner {

namespace {

constexpr std::size_t kMaxStoredViolations = 64;
constexpr std::size_t kMaxStoredWarnings = 64;

std::vector<IndexSet> subsets_up_to(const std::vector<int>& ground, int max_size) {
  std::vector<IndexSet> out;
  const std::size_t n = ground.size();
  if (n > 20) throw SizeLimitError("window too wide to enumerate");
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (std::popcount(mask) > max_size) continue;
    IndexSet s;
    for (std::size_t b = 0; b < n; ++b) {
      if (mask & (1U << b)) s.push_back(ground[b]);
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

int score(Objective o, int dl, int ul) {
  switch (o) {
    case Objective::avg:
      return dl + ul;
    case Objective::dl:
      return dl;
    case Objective::ul:
      return ul;
  }
  return 0;
}

std::string cells_key(const CellAssociation& a) {
  std::string key;
  for (const auto& c : a.cells) {
    for (int j : c) key += std::to_string(j) + ',';
    key += ';';
  }
  return key;
}

struct ChunkResult {
  bool has_best = false;
  int best_score = -1;
  std::uint64_t best_id = 0;
  std::uint64_t checks = 0;
  std::vector<SoundnessViolation> violations;
  std::uint64_t violation_count = 0;
  std::vector<std::string> warnings;
  std::vector<CandidateRow> rows;
};

}  // namespace

std::vector<IndexSet> cell_options(int i, int k, int nc, int window) {
  if (window < 1) throw InputError("window must be >= 1");
  if (nc < 1) throw InputError("nc must be >= 1");
  if (i < 1 || i > k) throw InputError("terminal index out of range");
  std::vector<int> ground;
  for (int j = std::max(1, i - window); j <= std::min(k, i + window); ++j) ground.push_back(j);
  return subsets_up_to(ground, nc);
}

std::uint64_t association_count(int k, int nc, int window) {
  if (k < 1) throw InputError("k must be >= 1");
  std::uint64_t total = 1;
  for (int i = 1; i <= k; ++i) total = saturating_mul(total, cell_options(i, k, nc, window).size());
  return total;
}

AssociationEnumerator::AssociationEnumerator(int k, int nc, int window) : k_(k), nc_(nc) {
  if (k < 1) throw InputError("k must be >= 1");
  total_ = 1;
  for (int i = 1; i <= k; ++i) {
    options_.push_back(cell_options(i, k, nc, window));
    total_ = saturating_mul(total_, options_.back().size());
  }
}

CellAssociation AssociationEnumerator::at(std::uint64_t index) const {
  if (index >= total_) throw InputError("enumeration index out of range");
  CellAssociation a(k_, nc_);
  for (int i = k_; i >= 1; --i) {
    const auto& opts = options_[static_cast<std::size_t>(i - 1)];
    a.cell(i) = opts[index % opts.size()];
    index /= opts.size();
  }
  return a;
}

void AssociationEnumerator::for_each(const std::function<bool(const CellAssociation&)>& fn) const {
  std::vector<std::size_t> digit(static_cast<std::size_t>(k_), 0);
  CellAssociation a(k_, nc_);
  for (int i = 1; i <= k_; ++i) a.cell(i) = options_[static_cast<std::size_t>(i - 1)][0];
  while (true) {
    if (!fn(a)) return;
    int i = k_;
    while (i >= 1) {
      auto& d = digit[static_cast<std::size_t>(i - 1)];
      const auto& opts = options_[static_cast<std::size_t>(i - 1)];
      if (++d < opts.size()) {
        a.cell(i) = opts[d];
        break;
      }
      d = 0;
      a.cell(i) = opts[0];
      --i;
    }
    if (i == 0) return;
  }
}

std::vector<CellAssociation> enumerate_associations(int k, int nc, int window) {
  std::vector<CellAssociation> out;
  AssociationEnumerator(k, nc, window).for_each([&](const CellAssociation& a) {
    out.push_back(a);
    return true;
  });
  return out;
}

std::string to_string(Objective o) {
  switch (o) {
    case Objective::avg:
      return "avg";
    case Objective::dl:
      return "dl";
    case Objective::ul:
      return "ul";
  }
  return "avg";
}

Objective objective_from_string(std::string_view name) {
  if (name == "avg") return Objective::avg;
  if (name == "dl" || name == "down") return Objective::dl;
  if (name == "ul" || name == "up") return Objective::ul;
  throw InputError("unknown objective '" + std::string(name) + "'");
}

SearchResult exhaustive_search(int k, int nc, const SearchOptions& opts) {
  if (k < 1) throw InputError("k must be >= 1");
  if (nc < 1) throw InputError("nc must be >= 1");
  const int window = opts.window == 0 ? nc : opts.window;
  const AssociationEnumerator en(k, nc, window);
  const std::uint64_t total = en.size();
  if (total > opts.cap) {
    throw SizeLimitError(std::to_string(total) + " candidates exceed the cap of " + std::to_string(opts.cap));
  }
  DlOptions dl_opts;
  dl_opts.seeds = opts.seeds;
  if (k > dl_opts.exact_limit) {
    throw SizeLimitError("exhaustive search needs exact downlink evaluation (k <= " +
                         std::to_string(dl_opts.exact_limit) + ")");
  }

  const unsigned workers = std::max(1U, opts.workers);
  const std::uint64_t n_chunks = std::min<std::uint64_t>(total, std::uint64_t{workers} * 8);
  std::vector<ChunkResult> chunks(n_chunks);
  std::mutex progress_mu;
  std::uint64_t done = 0;
  const std::uint64_t tick = std::max<std::uint64_t>(1, total / 100);

  auto run_chunk = [&](std::uint64_t c) {
    ChunkResult& out = chunks[c];
    const std::uint64_t lo = total * c / n_chunks;
    const std::uint64_t hi = total * (c + 1) / n_chunks;
    std::map<std::string, int> ul_memo;  // keyed by the pruned association
    for (std::uint64_t id = lo; id < hi; ++id) {
      const CellAssociation a = en.at(id);
      const DlEvaluation dl = max_downlink_dof(a, dl_opts);
      for (const auto& w : dl.warnings) {
        if (out.warnings.size() < kMaxStoredWarnings) out.warnings.push_back("candidate " + std::to_string(id) + ": " + w);
      }
      const CellAssociation pruned = prune(a);
      const std::string key = cells_key(pruned);
      auto it = ul_memo.find(key);
      if (it == ul_memo.end()) it = ul_memo.emplace(key, max_uplink_dof(pruned).sum_dof).first;
      const int ul = it->second;

      auto violate = [&](BoundKind kind, Rational achieved, Rational bound) {
        ++out.checks;
        if (achieved <= bound) return;
        ++out.violation_count;
        if (out.violations.size() < kMaxStoredViolations) out.violations.push_back({id, kind, achieved, bound});
      };
      Rational bound_per_user;
      violate(BoundKind::lemma2_chain, ul, lemma2_chain_bound(a).value);
      if (nc >= 2) {
        violate(BoundKind::dl_reconstruction, dl.sum_dof, reconstruction_bound(a, nc).value);
        const auto counting = counting_bound(a, nc);
        violate(BoundKind::avg_counting, Rational(dl.sum_dof + ul, 2), counting.value);
        bound_per_user = counting.per_user();
      } else {
        const auto c1 = ncone_bound(k);
        violate(BoundKind::ncone_constant, dl.sum_dof, c1.value);
        violate(BoundKind::ncone_constant, ul, c1.value);
        bound_per_user = c1.per_user();
      }

      const int s = score(opts.objective, dl.sum_dof, ul);
      if (!out.has_best || s > out.best_score) {
        out.has_best = true;
        out.best_score = s;
        out.best_id = id;
      }
      if (opts.record_table) {
        out.rows.push_back({id, dl.sum_dof, ul, Rational(dl.sum_dof + ul, 2 * k), bound_per_user});
      }
      if (opts.progress && (id + 1) % tick == 0) {
        std::lock_guard lock(progress_mu);
        done += tick;
        opts.progress(std::min(done, total), total);
      }
    }
  };

  if (workers == 1) {
    for (std::uint64_t c = 0; c < n_chunks; ++c) run_chunk(c);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::uint64_t c = w; c < n_chunks; c += workers) run_chunk(c);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    pool.clear();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  SearchResult result;
  result.k = k;
  result.nc = nc;
  result.window = window;
  result.objective = opts.objective;
  result.candidates_enumerated = total;
  bool found = false;
  int best_score = -1;
  for (auto& c : chunks) {
    // Chunks are in enumeration order, so strict improvement keeps the
    // lexicographically least maximizer.
    if (c.has_best && (!found || c.best_score > best_score)) {
      found = true;
      best_score = c.best_score;
      result.best_id = c.best_id;
    }
    result.soundness_checks += c.checks;
    for (auto& v : c.violations) {
      if (result.soundness_violations.size() < kMaxStoredViolations) result.soundness_violations.push_back(v);
    }
    for (auto& w : c.warnings) {
      if (result.warnings.size() < kMaxStoredWarnings) result.warnings.push_back(std::move(w));
    }
    if (opts.record_table) result.table.insert(result.table.end(), c.rows.begin(), c.rows.end());
  }
  std::uint64_t violation_total = 0;
  for (auto& c : chunks) violation_total += c.violation_count;
  if (violation_total > result.soundness_violations.size()) {
    result.warnings.push_back(std::to_string(violation_total) + " soundness violations in total");
  }

  result.best_assoc = en.at(result.best_id);
  result.dl = max_downlink_dof(result.best_assoc, dl_opts);
  result.ul = max_uplink_dof(result.best_assoc);
  result.avg_per_user = Rational(result.dl.sum_dof + result.ul.sum_dof, 2 * k);
  result.bound = nc >= 2 ? counting_bound(result.best_assoc, nc) : ncone_bound(k);
  result.scope = "candidates restricted to C_i within [i-" + std::to_string(window) + ", i+" +
                 std::to_string(window) + "]; optimality holds within this window only";
  return result;
}

CellAssociation PeriodicPattern::instantiate(int k, int nc) const {
  if (period < 1 || offsets.size() != static_cast<std::size_t>(period)) {
    throw InputError("pattern needs exactly one offset set per residue");
  }
  CellAssociation a(k, nc);
  for (int i = 1; i <= k; ++i) {
    IndexSet c;
    for (int o : offsets[static_cast<std::size_t>((i - 1) % period)]) {
      if (i + o >= 1 && i + o <= k) c.push_back(i + o);
    }
    a.cell(i) = make_index_set(std::move(c));
  }
  require_valid(a);
  return a;
}

std::string PeriodicPattern::str() const {
  std::string out;
  for (std::size_t r = 0; r < offsets.size(); ++r) {
    if (r) out += '/';
    out += to_string(make_index_set(offsets[r]));
  }
  return out;
}

namespace {

SessionSeries make_series(const std::array<Rational, 3>& v, int period) {
  SessionSeries s;
  s.values = v;
  s.slope = v[1] - v[0];
  const Rational second = v[2] - v[1];
  s.affine = second == s.slope;
  s.per_user = s.slope / Rational(period);
  s.max_step_per_user = std::max(s.slope, second) / Rational(period);
  return s;
}

}  // namespace

PeriodicReport periodic_eval(const PeriodicPattern& pattern, int nc, int m, const DlOptions& opts) {
  if (m < 3) throw InputError("periodic evaluation needs m >= 3");
  PeriodicReport rep;
  rep.pattern = pattern;
  rep.nc = nc;
  rep.m = m;
  std::array<Rational, 3> dl{}, ul{}, avg{};
  for (int t = 0; t < 3; ++t) {
    const int k = pattern.period * (m + t);
    rep.ks[static_cast<std::size_t>(t)] = k;
    const auto a = pattern.instantiate(k, nc);
    const auto d = max_downlink_dof(a, opts);
    const auto u = max_uplink_dof(a);
    rep.warnings.insert(rep.warnings.end(), d.warnings.begin(), d.warnings.end());
    dl[static_cast<std::size_t>(t)] = d.sum_dof;
    ul[static_cast<std::size_t>(t)] = u.sum_dof;
    avg[static_cast<std::size_t>(t)] = Rational(d.sum_dof + u.sum_dof, 2);
  }
  rep.dl = make_series(dl, pattern.period);
  rep.ul = make_series(ul, pattern.period);
  rep.avg = make_series(avg, pattern.period);
  rep.affine = rep.dl.affine && rep.ul.affine && rep.avg.affine;
  return rep;
}

std::vector<PeriodicPattern> enumerate_patterns(int period, int nc, int window) {
  if (period < 1 || window < 0 || nc < 1) throw InputError("invalid pattern enumeration parameters");
  std::vector<int> ground;
  for (int o = -window; o <= window; ++o) ground.push_back(o);
  const auto opts = subsets_up_to(ground, nc);
  std::vector<PeriodicPattern> out;
  std::vector<std::size_t> digit(static_cast<std::size_t>(period), 0);
  while (true) {
    PeriodicPattern p;
    p.period = period;
    for (auto d : digit) p.offsets.push_back(opts[d]);
    out.push_back(std::move(p));
    int r = period - 1;
    while (r >= 0 && ++digit[static_cast<std::size_t>(r)] == opts.size()) {
      digit[static_cast<std::size_t>(r)] = 0;
      --r;
    }
    if (r < 0) break;
  }
  return out;
}

Rational theorem_tau(int nc) {
  if (nc < 1) throw InputError("nc must be >= 1");
  if (nc == 1) return Rational(2, 3);
  return Rational(4 * nc - 3, 4 * nc - 2);
}

Rational downlink_tau(int nc) {
  if (nc < 1) throw InputError("nc must be >= 1");
  return Rational(2 * nc, 2 * nc + 1);
}

TheoremComparison compare_with_theorem(int nc, std::optional<Rational> achieved) {
  TheoremComparison c;
  c.nc = nc;
  c.tau = theorem_tau(nc);
  c.tau_d = downlink_tau(nc);
  if (nc >= 2) {
    c.relation_rhs = (Rational(1) + downlink_tau(nc - 1)) / Rational(2);
    c.relation_holds = *c.relation_rhs == c.tau;
  }
  if (achieved) {
    c.achieved = achieved;
    c.delta = *achieved - c.tau;
  }
  return c;
}

TheoremComparison compare_with_theorem(int nc, const SearchResult& result) {
  return compare_with_theorem(nc, result.avg_per_user);
}

}  // namespace wyner
