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

#include "doctest.h"
#include "wyner/errors.hpp"
#include "wyner/model.hpp"

using namespace wyner;

TEST_CASE("connectivity of the chain") {
  CHECK(connected(1, 1, 5));
  CHECK(connected(3, 2, 5));
  CHECK_FALSE(connected(1, 2, 5));
  CHECK(connected(5, 5, 5));
  CHECK(heard_mts(5, 5) == IndexSet{5});

  CHECK(connected_bs(1, 7) == IndexSet{1});
  CHECK(connected_bs(4, 7) == IndexSet{3, 4});
  CHECK(connected_bs(7, 7) == IndexSet{6, 7});

  CHECK(heard_mts(1, 3) == IndexSet{1, 2});
  CHECK(heard_mts(3, 3) == IndexSet{3});
  CHECK(heard_mts(2, 5) == IndexSet{2, 3});
}

TEST_CASE("out-of-range indices are input errors") {
  CHECK_THROWS_AS((void)connected(0, 1, 3), InputError);
  CHECK_THROWS_AS((void)connected_bs(4, 3), InputError);
  CHECK_THROWS_AS((void)heard_mts(0, 3), InputError);
}

TEST_CASE("2k-1 connected pairs seen from either side") {
  for (int k = 1; k <= 40; ++k) {
    std::size_t from_mt = 0;
    std::size_t from_bs = 0;
    for (int i = 1; i <= k; ++i) from_mt += connected_bs(i, k).size();
    for (int j = 1; j <= k; ++j) from_bs += heard_mts(j, k).size();
    CHECK(from_mt == static_cast<std::size_t>(2 * k - 1));
    CHECK(from_bs == static_cast<std::size_t>(2 * k - 1));
    for (int i = 1; i <= k; ++i) {
      for (int j = 1; j <= k; ++j) {
        const bool c = connected(i, j, k);
        CHECK(c == contains(connected_bs(i, k), j));
        CHECK(c == contains(heard_mts(j, k), i));
      }
    }
  }
}

TEST_CASE("channel draws") {
  const auto ch = draw_channels(3, 1);
  const auto e = ch.entries();
  REQUIRE(e.size() == 5);
  const std::vector<std::pair<int, int>> pairs{{1, 1}, {2, 1}, {2, 2}, {3, 2}, {3, 3}};
  for (std::size_t t = 0; t < e.size(); ++t) {
    CHECK(e[t].mt == pairs[t].first);
    CHECK(e[t].bs == pairs[t].second);
    CHECK(e[t].value != 0);
    CHECK(e[t].value < kDefaultPrime);
  }
  CHECK(ch.h(1, 2) == 0);
  CHECK(ch.h(3, 1) == 0);

  const auto single = draw_channels(1, 7);
  REQUIRE(single.entries().size() == 1);
  CHECK(single.entries()[0].mt == 1);
  CHECK(single.entries()[0].bs == 1);

  CHECK(draw_channels(9, 42) == draw_channels(9, 42));
  CHECK_FALSE(draw_channels(9, 42) == draw_channels(9, 43));
  CHECK_FALSE(draw_channels(9, 42) == draw_channels(9, 42, 31));
  for (const auto& x : draw_channels(20, 3, 31).entries()) CHECK((x.value >= 1 && x.value < 31));
}

TEST_CASE("a realization with a zero connected coefficient is rejected") {
  CHECK_THROWS_AS(ChannelRealization(2, 31, 0, {1, 0}, {1}), InputError);
  CHECK_THROWS_AS(ChannelRealization(2, 31, 0, {1, 2}, {}), InputError);
  CHECK_NOTHROW(ChannelRealization(2, 31, 0, {1, 2}, {3}));
}

TEST_CASE("association validation") {
  CHECK(validate_association(CellAssociation(5, 2, {{1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}})).empty());

  const auto oversized = validate_association(CellAssociation(5, 1, {{1, 2}, {1}, {2}, {3}, {4}}));
  REQUIRE(oversized.size() == 1);
  CHECK(oversized[0].mt == 1);

  const auto range = validate_association(CellAssociation(3, 2, {{1}, {2}, {4}}));
  REQUIRE(range.size() == 1);
  CHECK(range[0].mt == 3);

  CHECK_FALSE(validate_association(CellAssociation(3, 2, {{1}, {2}})).empty());
  CHECK_FALSE(validate_association(CellAssociation(0, 1)).empty());
  CHECK_THROWS_AS(require_valid(CellAssociation(3, 2, {{1}, {2}, {0}})), InputError);
}

TEST_CASE("cells are stored as sorted sets") {
  const CellAssociation a(3, 3, {{3, 1, 1}, {}, {2}});
  CHECK(a.cell(1) == IndexSet{1, 3});
  CHECK(to_string(a.cell(1)) == "{1,3}");
  CHECK(to_string(a.cell(2)) == "{}");
}
