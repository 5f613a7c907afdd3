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

#include "wyner/bounds.hpp"

#include <algorithm>

#include "wyner/errors.hpp"

namespace wyner {

namespace {

constexpr const char* kReconstructionAssumption =
    "GOOD blocks: 2nc-2 received signals determine all 2nc-1 transmit signals of the block "
    "(counting consequence only); BAD blocks: middle pair limited to one uplink DoF";

void check_cells(const CellAssociation& assoc) {
  if (assoc.k < 1 || assoc.cells.size() != static_cast<std::size_t>(assoc.k)) {
    throw InputError("association must hold exactly k >= 1 cells");
  }
}

/// Max sum of 0/1 values on a path of k nodes with "not both" on flagged edges.
int chain_optimum(int k, const std::vector<int>& flagged) {
  int take = 0;  // best sum with node i at 1
  int skip = 0;  // best sum with node i at 0
  for (int i = 1; i <= k; ++i) {
    const bool tied = i > 1 && std::binary_search(flagged.begin(), flagged.end(), i - 1);
    const int t = 1 + (tied ? skip : std::max(take, skip));
    skip = std::max(take, skip);
    take = t;
  }
  return std::max(take, skip);
}

// Pair (i, i+1) is flagged when base station i does not hold both messages,
// unless both can be decoded without Y_i: M_i at base station i-1 and M_{i+1}
// at base station i+1. In that case Y_i is ignorable and no pairwise limit
// applies.
std::vector<int> lemma2_flags(const CellAssociation& assoc) {
  std::vector<int> flags;
  for (int i = 1; i < assoc.k; ++i) {
    const bool shared = contains(assoc.cell(i), i) && contains(assoc.cell(i + 1), i);
    const bool bypass = i > 1 && contains(assoc.cell(i), i - 1) && contains(assoc.cell(i + 1), i + 1);
    if (!shared && !bypass) flags.push_back(i);
  }
  return flags;
}

std::vector<BlockClass> classify_blocks(const CellAssociation& assoc, int nc, int& tail) {
  const int len = 2 * nc - 1;
  std::vector<BlockClass> blocks;
  const int full = assoc.k / len;
  for (int b = 0; b < full; ++b) {
    const int s = b * len + 1;
    const int mid = s + nc - 1;
    const bool good = contains(assoc.cell(mid), mid) && contains(assoc.cell(mid + 1), mid);
    blocks.push_back({s, s + len - 1, mid, good});
  }
  tail = assoc.k - full * len;
  return blocks;
}

void require_nc(int nc) {
  if (nc < 2) throw InputError("block bounds require nc >= 2");
}

}  // namespace

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::lemma2_chain:
      return "lemma2_chain";
    case BoundKind::dl_reconstruction:
      return "dl_reconstruction";
    case BoundKind::avg_counting:
      return "avg_counting";
    case BoundKind::ncone_constant:
      return "ncone_constant";
  }
  return "unknown";
}

BoundKind bound_kind_from_string(std::string_view name) {
  for (auto kind : {BoundKind::lemma2_chain, BoundKind::dl_reconstruction, BoundKind::avg_counting,
                    BoundKind::ncone_constant}) {
    if (to_string(kind) == name) return kind;
  }
  throw InputError("unknown bound kind '" + std::string(name) + "'");
}

BoundCertificate lemma2_chain_bound(const CellAssociation& assoc) {
  check_cells(assoc);
  BoundCertificate c;
  c.kind = BoundKind::lemma2_chain;
  c.k = assoc.k;
  c.nc = assoc.nc;
  c.flagged_pairs = lemma2_flags(assoc);
  c.value = recompute_value(c);
  c.assumption = "flagged pair: base station i lacks message i or i+1 and the pair cannot bypass Y_i";
  return c;
}

BoundCertificate counting_bound(const CellAssociation& assoc, int nc) {
  require_nc(nc);
  check_cells(assoc);
  BoundCertificate c;
  c.kind = BoundKind::avg_counting;
  c.k = assoc.k;
  c.nc = nc;
  c.blocks = classify_blocks(assoc, nc, c.tail);
  c.value = recompute_value(c);
  c.assumption = kReconstructionAssumption;
  return c;
}

BoundCertificate reconstruction_bound(const CellAssociation& assoc, int nc) {
  require_nc(nc);
  check_cells(assoc);
  BoundCertificate c;
  c.kind = BoundKind::dl_reconstruction;
  c.k = assoc.k;
  c.nc = nc;
  c.blocks = classify_blocks(assoc, nc, c.tail);
  c.value = recompute_value(c);
  c.assumption = kReconstructionAssumption;
  return c;
}

BoundCertificate ncone_bound(int k) {
  if (k < 1) throw InputError("k must be >= 1");
  BoundCertificate c;
  c.kind = BoundKind::ncone_constant;
  c.k = k;
  c.nc = 1;
  c.tail = k % 3;
  c.value = recompute_value(c);
  c.assumption = "nc = 1: at most two of any three consecutive users served, in either session";
  return c;
}

Rational recompute_value(const BoundCertificate& cert) {
  switch (cert.kind) {
    case BoundKind::lemma2_chain:
      return chain_optimum(cert.k, cert.flagged_pairs);
    case BoundKind::avg_counting:
      return Rational(4 * cert.nc - 3, 2) * Rational(static_cast<std::int64_t>(cert.blocks.size())) +
             Rational(cert.tail);
    case BoundKind::dl_reconstruction: {
      std::int64_t sum = cert.tail;
      for (const auto& b : cert.blocks) sum += b.good ? 2 * cert.nc - 2 : 2 * cert.nc - 1;
      return sum;
    }
    case BoundKind::ncone_constant:
      return 2 * (cert.k / 3) + cert.tail;
  }
  return 0;
}

bool check_certificate(const BoundCertificate& cert, const CellAssociation& assoc) {
  if (cert.k != assoc.k || recompute_value(cert) != cert.value) return false;
  switch (cert.kind) {
    case BoundKind::lemma2_chain:
      return cert.flagged_pairs == lemma2_flags(assoc);
    case BoundKind::avg_counting:
    case BoundKind::dl_reconstruction: {
      if (cert.nc < 2) return false;
      int tail = 0;
      return cert.blocks == classify_blocks(assoc, cert.nc, tail) && tail == cert.tail;
    }
    case BoundKind::ncone_constant:
      return cert.nc == 1 && cert.tail == cert.k % 3;
  }
  return false;
}

}  // namespace wyner
