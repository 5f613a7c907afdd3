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

#ifndef WYNER_TESTS_TEST_SUPPORT_HPP
#define WYNER_TESTS_TEST_SUPPORT_HPP

// Independent brute-force oracles and instance generators shared by the unit
// tests and the acceptance driver. Nothing here calls the solvers under test.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "wyner/model.hpp"
#include "wyner/search.hpp"

namespace wyner::testing {

/// Every subset of [1..k] as a sorted IndexSet, by bitmask order.
inline std::vector<IndexSet> all_subsets(int k) {
  std::vector<IndexSet> out;
  for (std::uint32_t mask = 0; mask < (1U << k); ++mask) {
    IndexSet s;
    for (int i = 1; i <= k; ++i) {
      if (mask & (1U << (i - 1))) s.push_back(i);
    }
    out.push_back(std::move(s));
  }
  return out;
}

inline CellAssociation random_association(std::mt19937_64& rng, int k, int nc, int window) {
  CellAssociation a(k, nc);
  for (int i = 1; i <= k; ++i) {
    const auto options = cell_options(i, k, nc, window);
    a.cell(i) = options[rng() % options.size()];
  }
  return a;
}

/// Searches F_p^{|C_m|} for a precoder of each active message that reaches
/// its own receiver and is nulled at every other active receiver. Suitable
/// for small primes only.
inline bool brute_force_zf(const CellAssociation& a, const IndexSet& active, const ChannelRealization& ch) {
  const std::uint64_t p = ch.prime();
  for (int m : active) {
    const IndexSet& cm = a.cell(m);
    if (cm.empty()) return false;
    std::uint64_t total = 1;
    for (std::size_t t = 0; t < cm.size(); ++t) total *= p;
    bool found = false;
    for (std::uint64_t code = 1; code < total && !found; ++code) {
      std::vector<std::uint64_t> v(cm.size());
      std::uint64_t c = code;
      for (auto& x : v) {
        x = c % p;
        c /= p;
      }
      const auto gain = [&](int r) {
        std::uint64_t acc = 0;
        for (std::size_t t = 0; t < cm.size(); ++t) acc = (acc + ch.h(r, cm[t]) * v[t]) % p;
        return acc;
      };
      if (gain(m) == 0) continue;
      found = std::all_of(active.begin(), active.end(), [&](int r) { return r == m || gain(r) == 0; });
    }
    if (!found) return false;
  }
  return true;
}

/// Tries every decoding permutation of the active messages and every decoder
/// choice. Message m decoded at base station b needs b in C_m, b connected to
/// m, and every other active terminal heard at b already decoded and
/// associated with b.
inline bool brute_force_uplink(const CellAssociation& a, const IndexSet& active) {
  std::vector<int> perm(active.begin(), active.end());
  const int n = static_cast<int>(perm.size());
  do {
    for (std::uint32_t choice = 0; choice < (1U << n); ++choice) {
      std::vector<int> done;
      bool ok = true;
      for (int t = 0; t < n && ok; ++t) {
        const int m = perm[static_cast<std::size_t>(t)];
        const int b = (choice & (1U << t)) ? m - 1 : m;
        if (b < 1 || !contains(a.cell(m), b)) {
          ok = false;
          break;
        }
        for (int other : active) {
          if (other == m || !(other == b || other == b + 1)) continue;
          const bool decoded = std::find(done.begin(), done.end(), other) != done.end();
          if (!decoded || !contains(a.cell(other), b)) ok = false;
        }
        done.push_back(m);
      }
      if (ok) return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline int brute_force_max_uplink(const CellAssociation& a) {
  int best = 0;
  for (const auto& s : all_subsets(a.k)) {
    if (static_cast<int>(s.size()) > best && brute_force_uplink(a, s)) best = static_cast<int>(s.size());
  }
  return best;
}

}  // namespace wyner::testing

#endif  // WYNER_TESTS_TEST_SUPPORT_HPP
