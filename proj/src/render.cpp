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

#include "wyner/render.hpp"

#include <algorithm>
#include <sstream>

#include "wyner/errors.hpp"

namespace wyner {

namespace {

constexpr int kLinkWidth = 12;

void check_shape(const CellAssociation& assoc) {
  if (assoc.k < 1 || assoc.cells.size() != static_cast<std::size_t>(assoc.k)) {
    throw InputError("cannot render: association must hold exactly k >= 1 cells");
  }
}

bool inactive(const std::optional<RenderOverlay>& o, bool mt, int i) {
  return o && contains(mt ? o->inactive_mts : o->inactive_bs, i);
}

IndexSet unreachable(const CellAssociation& assoc, int i) {
  IndexSet out;
  for (int j : assoc.cell(i)) {
    if (!(j >= 1 && j <= assoc.k && connected(i, j, assoc.k))) out.push_back(j);
  }
  return out;
}

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

}  // namespace

RenderOverlay overlay_from_plan(const SchemePlan& plan) {
  RenderOverlay o;
  for (int i = 1; i <= plan.assoc.k; ++i) {
    if (!contains(plan.dl_active_users, i)) o.inactive_mts.push_back(i);
  }
  o.inactive_bs = plan.dl_silent_bs;
  return o;
}

std::string render_ascii(const CellAssociation& assoc, const std::optional<RenderOverlay>& overlay) {
  check_shape(assoc);
  const int k = assoc.k;
  const std::size_t label = ("MT" + std::to_string(k)).size();
  std::ostringstream out;
  out << "wyner network k=" << k << " nc=" << assoc.nc << '\n';
  for (int i = 1; i <= k; ++i) {
    if (i > 1) {
      // cross link MT i -- BS i-1 rises from lower left to upper right
      const bool assoc_cross = contains(assoc.cell(i), i - 1);
      out << std::string(label + 2 + kLinkWidth / 2, ' ') << (assoc_cross ? "//" : "/") << '\n';
    }
    const bool assoc_direct = contains(assoc.cell(i), i);
    out << pad_left("MT" + std::to_string(i), label) << ' ' << (inactive(overlay, true, i) ? 'x' : 'o')
        << std::string(kLinkWidth, assoc_direct ? '=' : '-') << (inactive(overlay, false, i) ? 'x' : 'o') << ' '
        << "BS" << i << '\n';
  }
  out << "associations:\n";
  for (int i = 1; i <= k; ++i) {
    out << "  C_" << i << " = " << to_string(assoc.cell(i));
    const auto far = unreachable(assoc, i);
    if (!far.empty()) out << "  not connected: " << to_string(far);
    out << '\n';
  }
  if (overlay) {
    out << "inactive terminals: " << to_string(overlay->inactive_mts) << '\n';
    out << "inactive base stations: " << to_string(overlay->inactive_bs) << '\n';
  }
  out << "legend: - / link, = // associated link, x inactive node\n";
  return out.str();
}

std::string render_svg(const CellAssociation& assoc, const std::optional<RenderOverlay>& overlay) {
  check_shape(assoc);
  const int k = assoc.k;
  constexpr int kMtX = 90;
  constexpr int kBsX = 330;
  constexpr int kTop = 40;
  constexpr int kStep = 56;
  constexpr int kRadius = 15;
  const auto y = [](int i) { return kTop + kStep * (i - 1); };
  const int height = y(k) + kTop;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"420\" height=\"" << height << "\" viewBox=\"0 0 420 "
      << height << "\" font-family=\"monospace\" font-size=\"12\">\n";
  out << "<title>wyner network k=" << k << " nc=" << assoc.nc << "</title>\n";

  out << "<g class=\"links\" stroke=\"#9a9a9a\" stroke-width=\"1.5\">\n";
  for (int i = 1; i <= k; ++i) {
    out << "<line x1=\"" << kMtX << "\" y1=\"" << y(i) << "\" x2=\"" << kBsX << "\" y2=\"" << y(i) << "\"/>\n";
    if (i > 1) {
      out << "<line x1=\"" << kMtX << "\" y1=\"" << y(i) << "\" x2=\"" << kBsX << "\" y2=\"" << y(i - 1)
          << "\"/>\n";
    }
  }
  out << "</g>\n";

  out << "<g class=\"associations\" stroke=\"#1f5fa8\" stroke-width=\"4\" stroke-opacity=\"0.7\">\n";
  for (int i = 1; i <= k; ++i) {
    for (int j : assoc.cell(i)) {
      if (j < 1 || j > k) continue;
      out << "<line x1=\"" << kMtX << "\" y1=\"" << y(i) << "\" x2=\"" << kBsX << "\" y2=\"" << y(j) << "\"";
      if (!connected(i, j, k)) out << " stroke-width=\"2\" stroke-dasharray=\"2,4\"";
      out << "/>\n";
    }
  }
  out << "</g>\n";

  const auto node = [&](bool mt, int i) {
    const bool off = inactive(overlay, mt, i);
    const std::string id = (mt ? "MT" : "BS") + std::to_string(i);
    const int x = mt ? kMtX : kBsX;
    out << "<circle id=\"" << id << "\" class=\"node" << (off ? " inactive" : "") << "\" cx=\"" << x
        << "\" cy=\"" << y(i) << "\" r=\"" << kRadius << "\" fill=\"#ffffff\" stroke=\""
        << (off ? "#d62728" : "#222222") << "\" stroke-width=\"2\"";
    if (off) out << " stroke-dasharray=\"4,3\"";
    out << "/>\n";
    const int tx = mt ? x - kRadius - 6 : x + kRadius + 6;
    out << "<text x=\"" << tx << "\" y=\"" << y(i) + 4 << "\" text-anchor=\"" << (mt ? "end" : "start")
        << "\" fill=\"" << (off ? "#d62728" : "#222222") << "\">" << id << "</text>\n";
  };
  out << "<g class=\"nodes\">\n";
  for (int i = 1; i <= k; ++i) node(true, i);
  for (int i = 1; i <= k; ++i) node(false, i);
  out << "</g>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace wyner
