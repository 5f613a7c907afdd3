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

using namespace wyner;

TEST_CASE("lemma-2 chain bound examples") {
  const auto pair6 = lemma2_chain_bound(pair_association(6));
  CHECK(pair6.flagged_pairs.empty());
  CHECK(pair6.value == Rational(6));

  const auto d52 = lemma2_chain_bound(downlink_optimal(5, 2).assoc);
  CHECK(d52.flagged_pairs == std::vector<int>{1, 2, 3, 4});
  CHECK(d52.value == Rational(3));

  const auto small = lemma2_chain_bound(CellAssociation(3, 1, {{1}, {}, {2}}));
  CHECK(small.flagged_pairs == std::vector<int>{1, 2});
  CHECK(small.value == Rational(2));
}

TEST_CASE("a pair decodable away from the shared base station is not flagged") {
  // M_3 at BS 2 and M_4 at BS 4; Y_3 is not needed by either.
  const CellAssociation a(5, 2, {{}, {1, 2}, {2}, {3, 4}, {4, 5}});
  const auto c = lemma2_chain_bound(a);
  CHECK(c.flagged_pairs == std::vector<int>{1});
  CHECK(Rational(max_uplink_dof(a).sum_dof) <= c.value);
}

TEST_CASE("counting bound examples") {
  const auto c12 = counting_bound(pair_association(12), 2);
  CHECK(c12.blocks.size() == 4);
  CHECK(std::all_of(c12.blocks.begin(), c12.blocks.end(), [](const BlockClass& b) { return b.good; }));
  CHECK(c12.value == Rational(10));
  CHECK(c12.per_user() == Rational(5, 6));

  CHECK(counting_bound(CellAssociation(25, 3), 3).per_user() == Rational(9, 10));

  const auto c7 = counting_bound(pair_association(7), 2);
  CHECK(c7.tail == 1);
  CHECK(c7.value == Rational(6));
  CHECK(c7.per_user() == Rational(6, 7));
}

TEST_CASE("counting bound is association-independent on whole blocks") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 100; ++t) {
    const int nc = 2 + static_cast<int>(rng() % 3);
    const int k = (2 * nc - 1) * (1 + static_cast<int>(rng() % 4));
    const auto a = wyner::testing::random_association(rng, k, nc, nc);
    CHECK(counting_bound(a, nc).per_user() == Rational(4 * nc - 3, 4 * nc - 2));
  }
}

TEST_CASE("reconstruction bound examples") {
  const auto r6 = reconstruction_bound(pair_association(6), 2);
  CHECK(r6.blocks.size() == 2);
  CHECK(r6.value == Rational(4));

  const auto r5 = reconstruction_bound(downlink_optimal(5, 2).assoc, 2);
  REQUIRE(r5.blocks.size() == 1);
  CHECK_FALSE(r5.blocks[0].good);
  CHECK(r5.blocks[0].middle_bs == 2);
  CHECK(r5.tail == 2);
  CHECK(r5.value == Rational(5));

  const auto empty = reconstruction_bound(CellAssociation(3, 2), 2);
  CHECK_FALSE(empty.blocks[0].good);
  CHECK(empty.value == Rational(3));
}

TEST_CASE("nc = 1 constant bound") {
  CHECK(ncone_bound(3).value == Rational(2));
  CHECK(ncone_bound(12).per_user() == Rational(2, 3));
  CHECK(ncone_bound(4).value == Rational(3));
  CHECK(ncone_bound(5).value == Rational(4));
  CHECK_THROWS_AS((void)ncone_bound(0), InputError);
}

TEST_CASE("block bounds need nc >= 2") {
  CHECK_THROWS_AS((void)counting_bound(pair_association(3), 1), InputError);
  CHECK_THROWS_AS((void)reconstruction_bound(pair_association(3), 1), InputError);
}

TEST_CASE("certificates are self-verifying") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 100; ++t) {
    const int k = 1 + static_cast<int>(rng() % 12);
    const int nc = 1 + static_cast<int>(rng() % 3);
    const auto a = wyner::testing::random_association(rng, k, nc, 1);
    std::vector<BoundCertificate> certs{lemma2_chain_bound(a)};
    if (nc >= 2) {
      certs.push_back(counting_bound(a, nc));
      certs.push_back(reconstruction_bound(a, nc));
    } else {
      certs.push_back(ncone_bound(k));
    }
    for (auto& c : certs) {
      CHECK(recompute_value(c) == c.value);
      CHECK(check_certificate(c, a));
      auto forged = c;
      forged.value = forged.value - Rational(1, 2);
      CHECK_FALSE(check_certificate(forged, a));
    }
  }
}

TEST_CASE("converse soundness on exhaustive small enumerations") {
  // Uplink against lemma 2, the average against counting, nc = 1 against the
  // constant bound. The downlink reconstruction bound is exercised below.
  for (int k = 1; k <= 6; ++k) {
    for (int nc = 1; nc <= 2; ++nc) {
      for (const auto& a : enumerate_associations(k, nc, 1)) {
        const int ul = max_uplink_dof(a).sum_dof;
        const int dl = max_downlink_dof(a).sum_dof;
        CHECK(Rational(ul) <= lemma2_chain_bound(a).value);
        if (nc >= 2) {
          CHECK(Rational(dl + ul, 2) <= counting_bound(a, nc).value);
        } else {
          CHECK(Rational(ul) <= ncone_bound(k).value);
          CHECK(Rational(dl) <= ncone_bound(k).value);
        }
      }
    }
  }
}

TEST_CASE("downlink reconstruction bound soundness on exhaustive small enumerations") {
  int violations = 0;
  for (int k = 3; k <= 6; ++k) {
    for (const auto& a : enumerate_associations(k, 2, 1)) {
      const int dl = max_downlink_dof(a).sum_dof;
      if (Rational(dl) > reconstruction_bound(a, 2).value) {
        if (violations < 3) MESSAGE("dl " << dl << " exceeds reconstruction bound for cells " << [&] {
                                      std::string s;
                                      for (const auto& c : a.cells) s += to_string(c);
                                      return s;
                                    }());
        ++violations;
      }
    }
  }
  CHECK(violations == 0);
}
