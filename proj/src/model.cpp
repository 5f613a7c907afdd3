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

#include "wyner/model.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "wyner/errors.hpp"

namespace wyner {

IndexSet make_index_set(std::vector<int> items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  return items;
}

bool contains(const IndexSet& s, int x) { return std::binary_search(s.begin(), s.end(), x); }

Topology::Topology(int users) : k(users) {
  if (users < 1) throw InputError("topology needs k >= 1");
}

namespace {

void check_index(int idx, int k, const char* what) {
  if (k < 1) throw InputError("k must be >= 1");
  if (idx < 1 || idx > k) {
    throw InputError(std::string(what) + " index " + std::to_string(idx) +
                     " out of range [1.." + std::to_string(k) + "]");
  }
}

}  // namespace

bool connected(int i, int j, int k) {
  check_index(i, k, "terminal");
  check_index(j, k, "base station");
  return i == j || i == j + 1;
}

IndexSet connected_bs(int i, int k) {
  check_index(i, k, "terminal");
  if (i == 1) return {1};
  return {i - 1, i};
}

IndexSet heard_mts(int j, int k) {
  check_index(j, k, "base station");
  if (j == k) return {j};
  return {j, j + 1};
}

ChannelRealization::ChannelRealization(int k, FieldElem prime, std::uint64_t seed,
                                       std::vector<FieldElem> direct,
                                       std::vector<FieldElem> cross)
    : k_(k), field_(prime), seed_(seed), direct_(std::move(direct)), cross_(std::move(cross)) {
  if (k < 1) throw InputError("channel realization needs k >= 1");
  if (direct_.size() != static_cast<std::size_t>(k) ||
      cross_.size() != static_cast<std::size_t>(k - 1)) {
    throw InputError("channel realization has the wrong number of coefficients");
  }
  auto bad = [prime](FieldElem v) { return v % prime == 0; };
  if (std::any_of(direct_.begin(), direct_.end(), bad) ||
      std::any_of(cross_.begin(), cross_.end(), bad)) {
    throw InputError("channel coefficients must be nonzero modulo the prime");
  }
}

FieldElem ChannelRealization::h(int i, int j) const {
  if (i == j) return direct_.at(static_cast<std::size_t>(i - 1));
  if (i == j + 1 && j >= 1) return cross_.at(static_cast<std::size_t>(i - 2));
  return 0;
}

std::vector<ChannelRealization::Entry> ChannelRealization::entries() const {
  std::vector<Entry> out;
  out.reserve(static_cast<std::size_t>(2 * k_ - 1));
  for (int i = 1; i <= k_; ++i) {
    if (i > 1) out.push_back({i, i - 1, h(i, i - 1)});
    out.push_back({i, i, h(i, i)});
  }
  return out;
}

ChannelRealization draw_channels(int k, std::uint64_t seed, FieldElem prime) {
  if (k < 1) throw InputError("draw_channels needs k >= 1");
  PrimeField field(prime);
  // mt19937_64 output is fixed by the standard, so draws are portable.
  std::mt19937_64 rng(seed);
  auto draw = [&] { return 1 + rng() % (prime - 1); };
  std::vector<FieldElem> direct(static_cast<std::size_t>(k));
  std::vector<FieldElem> cross(static_cast<std::size_t>(k - 1));
  for (int i = 1; i <= k; ++i) {
    if (i > 1) cross[static_cast<std::size_t>(i - 2)] = draw();
    direct[static_cast<std::size_t>(i - 1)] = draw();
  }
  return {k, prime, seed, std::move(direct), std::move(cross)};
}

CellAssociation::CellAssociation(int users, int budget)
    : k(users), nc(budget), cells(static_cast<std::size_t>(std::max(users, 0))) {}

CellAssociation::CellAssociation(int users, int budget, std::vector<IndexSet> sets)
    : k(users), nc(budget), cells(std::move(sets)) {
  for (auto& c : cells) c = make_index_set(std::move(c));
}

std::vector<Violation> validate_association(const CellAssociation& a) {
  std::vector<Violation> out;
  if (a.k < 1) out.push_back({0, "k must be >= 1"});
  if (a.nc < 1) out.push_back({0, "nc must be >= 1"});
  if (a.cells.size() != static_cast<std::size_t>(std::max(a.k, 0))) {
    out.push_back({0, "expected " + std::to_string(a.k) + " cells, got " +
                          std::to_string(a.cells.size())});
    return out;
  }
  for (int i = 1; i <= a.k; ++i) {
    const auto& c = a.cell(i);
    if (static_cast<int>(c.size()) > a.nc) {
      out.push_back({i, "|C_" + std::to_string(i) + "| = " + std::to_string(c.size()) +
                            " exceeds nc = " + std::to_string(a.nc)});
    }
    for (int j : c) {
      if (j < 1 || j > a.k) {
        out.push_back({i, "C_" + std::to_string(i) + " contains base station " +
                              std::to_string(j) + " outside [1.." + std::to_string(a.k) +
                              "]"});
      }
    }
  }
  return out;
}

void require_valid(const CellAssociation& a) {
  const auto v = validate_association(a);
  if (v.empty()) return;
  std::ostringstream msg;
  msg << "invalid cell association:";
  for (const auto& x : v) msg << ' ' << x.reason << ';';
  throw InputError(msg.str());
}

std::string to_string(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

}  // namespace wyner
