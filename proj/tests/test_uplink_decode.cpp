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
#include "wyner/bounds.hpp"
#include "wyner/errors.hpp"
#include "wyner/schemes.hpp"
#include "wyner/uplink_decode.hpp"

using namespace wyner;
using wyner::testing::all_subsets;
using wyner::testing::random_association;

TEST_CASE("pair association decodes right to left") {
  const auto order = uplink_feasible(pair_association(3), {1, 2, 3});
  REQUIRE(order);
  CHECK(*order == DecodingOrder{{{3, 3}, {2, 2}, {1, 1}}});
  CHECK(verify_order(*order, pair_association(3), {1, 2, 3}));
}

TEST_CASE("no passing path") {
  const CellAssociation a(2, 1, {{1}, {2}});
  CHECK_FALSE(uplink_feasible(a, {1, 2}));
  CHECK(uplink_feasible(a, {1}));
}

TEST_CASE("nc = 1 pattern") {
  const CellAssociation a(3, 1, {{1}, {}, {2}});
  const auto order = uplink_feasible(a, {1, 3});
  REQUIRE(order);
  REQUIRE(order->steps.size() == 2);
  CHECK(std::count(order->steps.begin(), order->steps.end(), DecodeStep{1, 1}) == 1);
  CHECK(std::count(order->steps.begin(), order->steps.end(), DecodeStep{3, 2}) == 1);
  CHECK(max_uplink_dof(a).sum_dof == 2);
}

TEST_CASE("maximum uplink examples") {
  for (int k = 1; k <= 20; ++k) CHECK(max_uplink_dof(pair_association(k)).sum_dof == k);
  const auto e = max_uplink_dof(downlink_optimal(5, 2).assoc);
  CHECK(e.sum_dof == 2);
  CHECK(verify_order(e.order, downlink_optimal(5, 2).assoc, e.active_users));
}

TEST_CASE("fixpoint equals permutation enumeration") {
  for (int k = 1; k <= 4; ++k) {
    for (int nc = 1; nc <= 2; ++nc) {
      for (const auto& a : enumerate_associations(k, nc, 1)) {
        for (const auto& s : all_subsets(k)) {
          CHECK(uplink_feasible(a, s).has_value() == wyner::testing::brute_force_uplink(a, s));
        }
      }
    }
  }
}

TEST_CASE("branch and bound equals the brute-force maximum") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) {
    const int k = 1 + static_cast<int>(rng() % 7);
    const auto a = random_association(rng, k, 1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 2));
    CHECK(max_uplink_dof(a).sum_dof == wyner::testing::brute_force_max_uplink(a));
  }
}

TEST_CASE("random instance properties") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 150; ++t) {
    const int k = 2 + static_cast<int>(rng() % 7);
    const auto a = random_association(rng, k, 1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 2));
    const auto e = max_uplink_dof(a);
    CAPTURE(k);
    CHECK(verify_order(e.order, a, e.active_users));
    CHECK(max_uplink_dof(prune(a)).sum_dof == e.sum_dof);
    CHECK(Rational(e.sum_dof) <= lemma2_chain_bound(a).value);
    for (const auto& s : all_subsets(k)) {
      if (std::includes(e.active_users.begin(), e.active_users.end(), s.begin(), s.end())) {
        const auto o = uplink_feasible(a, s);
        REQUIRE(o);
        CHECK(verify_order(*o, a, s));
      }
    }
  }
}

TEST_CASE("full neighbour association gives k") {
  for (int k = 1; k <= 12; ++k) {
    CellAssociation a(k, 3);
    for (int i = 1; i <= k; ++i) {
      a.cell(i) = i > 1 ? IndexSet{i - 1, i} : IndexSet{1};
      if (i + 1 <= k) a.cell(i).push_back(i + 1);
    }
    const auto e = max_uplink_dof(a);
    CHECK(e.sum_dof == k);
    CHECK(e.order.steps.front().m == k);
    CHECK(e.order.steps.back().m == 1);
  }
}

TEST_CASE("order checker catches bad orders") {
  const auto a = pair_association(3);
  CHECK_FALSE(verify_order(DecodingOrder{{{1, 1}, {2, 2}, {3, 3}}}, a, {1, 2, 3}));
  CHECK_FALSE(verify_order(DecodingOrder{{{3, 3}, {2, 2}}}, a, {1, 2, 3}));
  CHECK_FALSE(verify_order(DecodingOrder{{{3, 3}, {3, 3}, {2, 2}, {1, 1}}}, a, {1, 2, 3}));
  CHECK(verify_order(DecodingOrder{{{3, 2}}}, a, {3}));
  CHECK_FALSE(verify_order(DecodingOrder{{{3, 1}}}, a, {3}));
  CHECK_FALSE(verify_order(DecodingOrder{{{2, 2}}}, a, {2, 3}));
  CHECK(verify_order(DecodingOrder{{{3, 3}}}, a, {3}));
}

TEST_CASE("pruning keeps only connected base stations") {
  CellAssociation a(6, 3);
  a.cell(5) = {3, 4};
  a.cell(1) = {1, 2, 3};
  const auto p = prune(a);
  CHECK(p.cell(5) == IndexSet{4});
  CHECK(p.cell(1) == IndexSet{1});
  CHECK(prune(pair_association(9)) == pair_association(9));
}

TEST_CASE("uplink limits") {
  CHECK_THROWS_AS((void)max_uplink_dof(pair_association(21)), SizeLimitError);
  UlOptions greedy;
  greedy.allow_greedy = true;
  const auto g = max_uplink_dof(pair_association(21), greedy);
  CHECK_FALSE(g.exact);
  CHECK(verify_order(g.order, pair_association(21), g.active_users));
  CHECK_THROWS_AS((void)uplink_feasible(pair_association(3), {4}), InputError);
}
