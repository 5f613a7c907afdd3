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

#ifndef WYNER_RENDER_HPP
#define WYNER_RENDER_HPP

#include <optional>
#include <string>

#include "wyner/model.hpp"
#include "wyner/schemes.hpp"

namespace wyner {

/// Nodes drawn as inactive (red, dashed in SVG; "x" in ASCII).
struct RenderOverlay {
  IndexSet inactive_mts;
  IndexSet inactive_bs;
};

/// Downlink view of a plan: terminals outside dl_active_users, silent base stations.
[[nodiscard]] RenderOverlay overlay_from_plan(const SchemePlan& plan);

/// Row-per-index text diagram: terminals left, base stations right. Each row
/// carries the direct link, each gap the cross link to the base station above.
/// Associated links are doubled. Output is a pure function of its inputs.
[[nodiscard]] std::string render_ascii(const CellAssociation& assoc,
                                       const std::optional<RenderOverlay>& overlay = std::nullopt);

/// Minimal hand-written SVG with the same layout.
[[nodiscard]] std::string render_svg(const CellAssociation& assoc,
                                     const std::optional<RenderOverlay>& overlay = std::nullopt);

}  // namespace wyner

#endif  // WYNER_RENDER_HPP
