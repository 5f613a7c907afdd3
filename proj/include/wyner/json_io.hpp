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

#ifndef WYNER_JSON_IO_HPP
#define WYNER_JSON_IO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "wyner/bounds.hpp"
#include "wyner/downlink_zf.hpp"
#include "wyner/model.hpp"
#include "wyner/rational.hpp"
#include "wyner/schemes.hpp"
#include "wyner/search.hpp"
#include "wyner/uplink_decode.hpp"

namespace wyner {

/// Insertion-ordered so that emitted documents are byte-stable.
using Json = nlohmann::ordered_json;

/// Parses a JSON document; malformed text raises InputError.
[[nodiscard]] Json parse_json_text(std::string_view text);

/// Rationals travel as "p/q" strings ("p" for integers).
[[nodiscard]] Json to_json(Rational r);
[[nodiscard]] Rational rational_from_json(const Json& j);

// Every *_from_json rejects unknown keys, missing keys and wrong types with
// InputError. Derived fields (per-user values) are checked, not trusted.

[[nodiscard]] Json to_json(const CellAssociation& a);
/// Structural parse only; call require_valid for the budget and range checks.
[[nodiscard]] CellAssociation association_from_json(const Json& j);

[[nodiscard]] Json to_json(const SchemePlan& p);
[[nodiscard]] SchemePlan plan_from_json(const Json& j);

[[nodiscard]] Json to_json(const ZfWitness& w);
[[nodiscard]] ZfWitness witness_from_json(const Json& j);

[[nodiscard]] Json to_json(const DecodingOrder& o);
[[nodiscard]] DecodingOrder order_from_json(const Json& j);

[[nodiscard]] Json to_json(const BoundCertificate& c);
[[nodiscard]] BoundCertificate certificate_from_json(const Json& j);

[[nodiscard]] Json to_json(const DlEvaluation& e);
[[nodiscard]] DlEvaluation dl_evaluation_from_json(const Json& j);

[[nodiscard]] Json to_json(const UlEvaluation& e);
[[nodiscard]] UlEvaluation ul_evaluation_from_json(const Json& j);

/// Both sessions plus the exact average per-user DoF (dl + ul) / 2k.
[[nodiscard]] Json avg_evaluation_to_json(int k, const DlEvaluation& dl, const UlEvaluation& ul);

[[nodiscard]] Json to_json(const SearchResult& r);
[[nodiscard]] SearchResult search_result_from_json(const Json& j);

/// Columns: assoc-id, dl_dof, ul_dof, avg_num, avg_den, bound_num, bound_den.
[[nodiscard]] std::string search_table_csv(const SearchResult& r);
[[nodiscard]] std::vector<CandidateRow> search_table_from_csv(std::string_view text);

[[nodiscard]] Json to_json(const PeriodicReport& r);
[[nodiscard]] Json to_json(const TheoremComparison& t);

/// Search run configuration file. Absent fields keep their command-line value.
struct RunConfig {
  std::optional<int> k;
  std::optional<int> nc;
  std::optional<int> window;
  std::optional<Objective> objective;
  std::optional<std::vector<std::uint64_t>> seeds;
  std::optional<std::uint64_t> cap;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

[[nodiscard]] Json to_json(const RunConfig& c);
[[nodiscard]] RunConfig run_config_from_json(const Json& j);

}  // namespace wyner

#endif  // WYNER_JSON_IO_HPP
