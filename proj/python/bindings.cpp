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

// Python extension. Structured values cross the boundary as JSON text in the
// same schema the command-line tool reads and writes; the wynerdof package
// decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "wyner/bounds.hpp"
#include "wyner/downlink_zf.hpp"
#include "wyner/errors.hpp"
#include "wyner/json_io.hpp"
#include "wyner/render.hpp"
#include "wyner/schemes.hpp"
#include "wyner/search.hpp"
#include "wyner/uplink_decode.hpp"

namespace py = pybind11;
using namespace wyner;

namespace {

CellAssociation parse_assoc(const std::string& text) { return association_from_json(parse_json_text(text)); }

DlOptions dl_options(const std::vector<std::uint64_t>& seeds, int exact_limit, bool greedy) {
  DlOptions o;
  o.seeds = seeds;
  o.exact_limit = exact_limit;
  o.allow_greedy = greedy;
  return o;
}

IndexSet to_set(std::vector<int> v) { return make_index_set(std::move(v)); }

}  // namespace

PYBIND11_MODULE(_wynerdof, m) {
  m.doc() = "Cell association toolkit for the Wyner linear network (DoF level)";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<SizeLimitError>(m, "SizeLimitError", PyExc_RuntimeError);
  py::register_exception<VerificationError>(m, "VerificationError", PyExc_RuntimeError);

  const std::vector<std::uint64_t> default_seeds{1, 2, 3};

  m.def(
      "validate_association",
      [](const std::string& assoc) {
        std::vector<std::string> out;
        for (const auto& v : validate_association(parse_assoc(assoc))) out.push_back(v.reason);
        return out;
      },
      py::arg("assoc"));

  m.def(
      "scheme",
      [](const std::string& type, int k, int nc) {
        if (type == "avg") return to_json(avg_optimal(k, nc)).dump();
        if (type == "downlink") return to_json(downlink_optimal(k, nc)).dump();
        if (type == "pair") return to_json(pair_association(k)).dump();
        throw InputError("unknown scheme type '" + type + "'");
      },
      py::arg("type"), py::arg("k"), py::arg("nc") = 2);

  m.def(
      "certify_plan",
      [](const std::string& plan) {
        const auto c = certify_plan(plan_from_json(parse_json_text(plan)));
        Json j;
        j["dl_ok"] = c.dl_ok;
        j["ul_ok"] = c.ul_ok;
        j["problems"] = c.problems;
        j["warnings"] = c.warnings;
        return j.dump();
      },
      py::arg("plan"));

  m.def(
      "decide_downlink",
      [](const std::string& assoc, std::vector<int> active, const std::vector<std::uint64_t>& seeds) {
        const auto d = decide_downlink(parse_assoc(assoc), to_set(std::move(active)), dl_options(seeds, 16, false));
        Json j;
        j["feasible"] = d.feasible;
        j["witness"] = d.witness ? to_json(*d.witness) : Json(nullptr);
        return j.dump();
      },
      py::arg("assoc"), py::arg("active"), py::arg("seeds") = default_seeds);

  m.def(
      "uplink_feasible",
      [](const std::string& assoc, std::vector<int> active) -> std::optional<std::string> {
        const auto o = uplink_feasible(parse_assoc(assoc), to_set(std::move(active)));
        if (!o) return std::nullopt;
        return to_json(*o).dump();
      },
      py::arg("assoc"), py::arg("active"));

  m.def(
      "max_downlink_dof",
      [](const std::string& assoc, const std::vector<std::uint64_t>& seeds, int exact_limit, bool greedy) {
        return to_json(max_downlink_dof(parse_assoc(assoc), dl_options(seeds, exact_limit, greedy))).dump();
      },
      py::arg("assoc"), py::arg("seeds") = default_seeds, py::arg("exact_limit") = 16, py::arg("greedy") = false);

  m.def(
      "max_uplink_dof",
      [](const std::string& assoc, int exact_limit, bool greedy) {
        UlOptions o;
        o.exact_limit = exact_limit;
        o.allow_greedy = greedy;
        return to_json(max_uplink_dof(parse_assoc(assoc), o)).dump();
      },
      py::arg("assoc"), py::arg("exact_limit") = 20, py::arg("greedy") = false);

  m.def(
      "bound",
      [](const std::string& kind, const std::string& assoc, int nc) {
        const auto a = parse_assoc(assoc);
        switch (bound_kind_from_string(kind)) {
          case BoundKind::lemma2_chain:
            return to_json(lemma2_chain_bound(a)).dump();
          case BoundKind::dl_reconstruction:
            return to_json(reconstruction_bound(a, nc)).dump();
          case BoundKind::avg_counting:
            return to_json(counting_bound(a, nc)).dump();
          case BoundKind::ncone_constant:
            return to_json(ncone_bound(a.k)).dump();
        }
        throw InputError("unknown bound kind");
      },
      py::arg("kind"), py::arg("assoc"), py::arg("nc"));

  m.def(
      "exhaustive_search",
      [](int k, int nc, int window, const std::string& objective, std::uint64_t cap, unsigned workers,
         const std::vector<std::uint64_t>& seeds) {
        SearchOptions o;
        o.window = window;
        o.objective = objective_from_string(objective);
        o.cap = cap;
        o.workers = workers;
        o.seeds = seeds;
        py::gil_scoped_release release;
        return to_json(exhaustive_search(k, nc, o)).dump();
      },
      py::arg("k"), py::arg("nc"), py::arg("window") = 0, py::arg("objective") = "avg",
      py::arg("cap") = 5'000'000, py::arg("workers") = 1, py::arg("seeds") = default_seeds);

  m.def(
      "compare_with_theorem",
      [](int nc) { return to_json(compare_with_theorem(nc)).dump(); }, py::arg("nc"));

  m.def(
      "render",
      [](const std::string& assoc, const std::string& format, const std::optional<std::string>& plan) {
        const auto a = parse_assoc(assoc);
        std::optional<RenderOverlay> overlay;
        if (plan) overlay = overlay_from_plan(plan_from_json(parse_json_text(*plan)));
        if (format == "ascii") return render_ascii(a, overlay);
        if (format == "svg") return render_svg(a, overlay);
        throw InputError("format must be ascii or svg");
      },
      py::arg("assoc"), py::arg("format") = "ascii", py::arg("plan") = std::nullopt);
}
