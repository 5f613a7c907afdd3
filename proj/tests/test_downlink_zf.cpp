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

#include <random>

#include "doctest.h"
#include "test_support.hpp"
#include "wyner/downlink_zf.hpp"
#include "wyner/errors.hpp"
#include "wyner/schemes.hpp"

using namespace wyner;
using wyner::testing::all_subsets;
using wyner::testing::random_association;

namespace {

bool is_subset(const IndexSet& a, const IndexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

TEST_CASE("single user without interference") {
  const CellAssociation a(1, 1, {{1}});
  const auto ch = draw_channels(1, 1);
  const auto w = zf_feasible(a, {1}, ch);
  REQUIRE(w);
  CHECK(w->precoders.at(1).at(1) != 0);
  CHECK(verify_witness(*w, a, {1}, ch));
}

TEST_CASE("a single coefficient cannot null a cross link") {
  const CellAssociation a(2, 1, {{1}, {2}});
  for (std::uint64_t seed : {1, 2, 3}) CHECK_FALSE(zf_feasible(a, {1, 2}, draw_channels(2, seed)));
  CHECK_FALSE(decide_downlink(a, {1, 2}).feasible);
  CHECK(decide_downlink(a, {1}).feasible);
  CHECK(decide_downlink(a, {2}).feasible);
}

TEST_CASE("seven-user nc=3 downlink plan") {
  const SchemePlan plan = downlink_optimal(7, 3);
  const auto assoc = remove_silent(plan.assoc, plan.dl_silent_bs);
  const auto d = decide_downlink(assoc, {1, 2, 3, 5, 6, 7});
  CHECK(d.feasible);
  CHECK(d.warnings.empty());
  REQUIRE(d.witness);
  CHECK(d.witness->precoders.size() == 6);
  CHECK(max_downlink_dof(assoc).sum_dof == 6);
}

TEST_CASE("avg_optimal(5, 3) downlink activation") {
  const SchemePlan plan = avg_optimal(5, 3);
  CHECK(decide_downlink(remove_silent(plan.assoc, plan.dl_silent_bs), {1, 2, 4, 5}).feasible);
  CHECK(max_downlink_dof(plan.assoc).sum_dof == 4);
}

TEST_CASE("maximum downlink DoF examples") {
  CHECK(max_downlink_dof(pair_association(6)).sum_dof == 4);
  CHECK(max_downlink_dof(downlink_optimal(5, 2).assoc).sum_dof == 4);
  CHECK(max_downlink_dof(CellAssociation(2, 2, {{1}, {1, 2}})).sum_dof == 1);
  CHECK(max_downlink_dof(CellAssociation(4, 2)).sum_dof == 0);
}

TEST_CASE("max_downlink_dof matches exhaustive active-set enumeration") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 60; ++t) {
    const int k = 2 + static_cast<int>(rng() % 6);
    const int nc = 1 + static_cast<int>(rng() % 3);
    const auto a = random_association(rng, k, nc, 1 + static_cast<int>(rng() % 2));
    int best = 0;
    for (const auto& s : all_subsets(k)) {
      const bool servable = std::all_of(s.begin(), s.end(), [&](int m) { return !a.cell(m).empty(); });
      if (servable && static_cast<int>(s.size()) > best && decide_downlink(a, s).feasible) {
        best = static_cast<int>(s.size());
      }
    }
    const auto e = max_downlink_dof(a);
    CAPTURE(k);
    CHECK(e.sum_dof == best);
    CHECK(e.warnings.empty());
    CHECK(verify_witness(e.witness, a, e.active_users, draw_channels(k, e.witness.seed)));
  }
}

TEST_CASE("witness verification rejects tampering") {
  const auto a = pair_association(6);
  const auto e = max_downlink_dof(a);
  const auto ch = draw_channels(6, e.witness.seed);
  REQUIRE(verify_witness(e.witness, a, e.active_users, ch));

  // Bumping a coefficient that feeds an active unintended receiver breaks its null.
  int tampered = 0;
  for (const auto& [m, row] : e.witness.precoders) {
    for (const auto& [j, v] : row) {
      const bool reaches_other = std::any_of(e.active_users.begin(), e.active_users.end(),
                                             [&](int r) { return r != m && ch.h(r, j) != 0; });
      if (!reaches_other) continue;
      auto w = e.witness;
      w.precoders[m][j] = (v + 1) % w.prime;
      CHECK_FALSE(verify_witness(w, a, e.active_users, ch));
      ++tampered;
    }
  }
  CHECK(tampered > 0);

  auto zero = e.witness;
  for (auto& [m, row] : zero.precoders) {
    for (auto& [j, v] : row) v = 0;
  }
  CHECK_FALSE(verify_witness(zero, a, e.active_users, ch));

  auto wrong_seed = e.witness;
  wrong_seed.seed += 100;
  CHECK_FALSE(verify_witness(wrong_seed, a, e.active_users, ch));
}

TEST_CASE("downward closure") {
  std::mt19937_64 rng(3);
  int checked = 0;
  for (int t = 0; t < 120; ++t) {
    const int k = 2 + static_cast<int>(rng() % 7);
    const auto a = random_association(rng, k, 1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 2));
    const auto e = max_downlink_dof(a);
    CHECK(e.warnings.empty());
    for (const auto& s : all_subsets(k)) {
      if (!is_subset(s, e.active_users)) continue;
      const auto d = decide_downlink(a, s);
      CHECK(d.feasible);
      CHECK(d.warnings.empty());
      ++checked;
    }
  }
  CHECK(checked > 120);
}

TEST_CASE("enlarging a cell never lowers the downlink maximum") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 120; ++t) {
    const int k = 2 + static_cast<int>(rng() % 7);
    auto a = random_association(rng, k, 2, 1);
    const int before = max_downlink_dof(a).sum_dof;
    const int m = 1 + static_cast<int>(rng() % k);
    const int j = 1 + static_cast<int>(rng() % k);
    a.cell(m) = make_index_set([&] {
      auto c = a.cell(m);
      c.push_back(j);
      return c;
    }());
    a.nc = 3;
    CHECK(max_downlink_dof(a).sum_dof >= before);
  }
}

TEST_CASE("rank oracle equals brute-force witness search over a small field") {
  DlOptions small;
  small.prime = 31;
  for (int k = 1; k <= 3; ++k) {
    for (int nc = 1; nc <= 2; ++nc) {
      for (const auto& a : enumerate_associations(k, nc, 1)) {
        const auto ch = draw_channels(k, 1, 31);
        for (const auto& s : all_subsets(k)) {
          if (std::any_of(s.begin(), s.end(), [&](int m) { return a.cell(m).empty(); })) continue;
          CHECK(zf_feasible(a, s, ch).has_value() == wyner::testing::brute_force_zf(a, s, ch));
        }
      }
    }
  }
}

TEST_CASE("silent base stations are removed from every cell") {
  const CellAssociation a(3, 2, {{1, 2}, {2}, {2, 3}});
  const auto r = remove_silent(a, {2});
  CHECK(r.cell(1) == IndexSet{1});
  CHECK(r.cell(2).empty());
  CHECK(r.cell(3) == IndexSet{3});
}

TEST_CASE("limits and input errors") {
  CHECK_THROWS_AS((void)max_downlink_dof(pair_association(17)), SizeLimitError);
  DlOptions greedy;
  greedy.allow_greedy = true;
  const auto g = max_downlink_dof(pair_association(17), greedy);
  CHECK_FALSE(g.exact);
  CHECK(g.sum_dof > 0);

  const CellAssociation a(2, 1, {{1}, {}});
  CHECK_THROWS_AS((void)zf_feasible(a, {2}, draw_channels(2, 1)), InputError);
  CHECK_THROWS_AS((void)zf_feasible(a, {3}, draw_channels(2, 1)), InputError);
  CHECK_THROWS_AS((void)zf_feasible(a, {1}, draw_channels(3, 1)), InputError);
  DlOptions none;
  none.seeds.clear();
  CHECK_THROWS_AS((void)max_downlink_dof(a, none), InputError);
}
