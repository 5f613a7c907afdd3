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

#include <sstream>

#include "doctest.h"
#include "wyner/errors.hpp"
#include "wyner/render.hpp"

using namespace wyner;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("ASCII diagram of the pair association") {
  const std::string text = render_ascii(pair_association(3));
  int mt_rows = 0;
  int bs_rows = 0;
  int direct = 0;
  int cross = 0;
  for (const auto& l : lines(text)) {
    if (l.rfind("MT", 0) == 0) ++mt_rows;
    if (l.find(" BS") != std::string::npos && l.rfind("MT", 0) == 0) ++bs_rows;
    if (l.find("---") != std::string::npos || l.find("===") != std::string::npos) ++direct;
    if (l.find_first_not_of(' ') != std::string::npos && l[l.find_first_not_of(' ')] == '/') ++cross;
  }
  CHECK(mt_rows == 3);
  CHECK(bs_rows == 3);
  CHECK(direct + cross == 5);
  CHECK(count(text, "============") == 3);
  CHECK(count(text, "//\n") == 2);
  CHECK(text.find("C_2 = {1,2}") != std::string::npos);
}

TEST_CASE("empty association carries no association marks") {
  const std::string text = render_ascii(CellAssociation(4, 2));
  for (const auto& l : lines(text)) {
    if (l.rfind("MT", 0) == 0) CHECK(l.find('=') == std::string::npos);
    if (l.find_first_not_of(' ') != std::string::npos && l[l.find_first_not_of(' ')] == '/') CHECK(l.find("//") == std::string::npos);
  }
  CHECK(count(text, "------------") == 4);
  const std::string svg = render_svg(CellAssociation(4, 2));
  CHECK(count(svg, "<line") == 7);
}

TEST_CASE("seven-user nc=3 downlink plan overlay") {
  const auto plan = downlink_optimal(7, 3);
  const auto overlay = overlay_from_plan(plan);
  CHECK(overlay.inactive_mts == IndexSet{4});
  CHECK(overlay.inactive_bs == IndexSet{7});

  const std::string svg = render_svg(plan.assoc, overlay);
  CHECK(svg.find(R"(id="MT4" class="node inactive")") != std::string::npos);
  CHECK(svg.find(R"(id="BS7" class="node inactive")") != std::string::npos);
  CHECK(count(svg, "inactive") == 2);
  CHECK(count(svg, "stroke-dasharray=\"4,3\"") == 2);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.back() == '\n');

  const std::string text = render_ascii(plan.assoc, overlay);
  CHECK(text.find("MT4 x") != std::string::npos);
  CHECK(text.find("x BS7") != std::string::npos);
  CHECK(text.find("C_7 = {4,5,6}  not connected: {4,5}") != std::string::npos);
}

TEST_CASE("rendering is deterministic") {
  const auto plan = avg_optimal(9, 2);
  const auto o = overlay_from_plan(plan);
  CHECK(render_svg(plan.assoc, o) == render_svg(plan.assoc, o));
  CHECK(render_ascii(plan.assoc, o) == render_ascii(plan.assoc, o));
  // 2k-1 links plus one line per in-range association
  std::size_t assoc_edges = 0;
  for (const auto& c : plan.assoc.cells) assoc_edges += c.size();
  CHECK(count(render_svg(plan.assoc), "<line") == 17 + assoc_edges);
}

TEST_CASE("malformed shapes are rejected") {
  CellAssociation bad(3, 2);
  bad.cells.pop_back();
  CHECK_THROWS_AS((void)render_ascii(bad), InputError);
  CHECK_THROWS_AS((void)render_svg(bad), InputError);
}
