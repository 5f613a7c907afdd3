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

#include "wyner/json_io.hpp"

#include <algorithm>
#include <charconv>
#include <initializer_list>
#include <limits>
#include <sstream>

#include "wyner/errors.hpp"

namespace wyner {

namespace {

using Keys = std::initializer_list<std::string_view>;

[[noreturn]] void fail(std::string_view what, const std::string& msg) {
  throw InputError(std::string(what) + ": " + msg);
}

void check_object(const Json& j, std::string_view what, Keys required, Keys optional = {}) {
  if (!j.is_object()) fail(what, "expected a JSON object");
  for (auto key : required) {
    if (!j.contains(std::string(key))) fail(what, "missing key '" + std::string(key) + "'");
  }
  const auto listed = [](Keys keys, const std::string& k) {
    return std::find(keys.begin(), keys.end(), k) != keys.end();
  };
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!listed(required, it.key()) && !listed(optional, it.key())) {
      fail(what, "unknown key '" + it.key() + "'");
    }
  }
}

std::int64_t as_i64(const Json& v, std::string_view what, std::string_view name) {
  if (!v.is_number_integer()) fail(what, "'" + std::string(name) + "' must be an integer");
  if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    fail(what, "'" + std::string(name) + "' is out of range");
  }
  return v.get<std::int64_t>();
}

int as_int(const Json& v, std::string_view what, std::string_view name) {
  const auto x = as_i64(v, what, name);
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max()) {
    fail(what, "'" + std::string(name) + "' is out of range");
  }
  return static_cast<int>(x);
}

std::uint64_t as_u64(const Json& v, std::string_view what, std::string_view name) {
  if (!v.is_number_integer() || (!v.is_number_unsigned() && v.get<std::int64_t>() < 0)) {
    fail(what, "'" + std::string(name) + "' must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

int get_int(const Json& j, const char* key, std::string_view what) { return as_int(j.at(key), what, key); }

std::uint64_t get_u64(const Json& j, const char* key, std::string_view what) {
  return as_u64(j.at(key), what, key);
}

bool get_bool(const Json& j, const char* key, std::string_view what) {
  if (!j.at(key).is_boolean()) fail(what, "'" + std::string(key) + "' must be a boolean");
  return j.at(key).get<bool>();
}

std::string get_string(const Json& j, const char* key, std::string_view what) {
  if (!j.at(key).is_string()) fail(what, "'" + std::string(key) + "' must be a string");
  return j.at(key).get<std::string>();
}

std::vector<int> get_int_list(const Json& v, std::string_view what, std::string_view name) {
  if (!v.is_array()) fail(what, "'" + std::string(name) + "' must be an array of integers");
  std::vector<int> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(as_int(x, what, name));
  return out;
}

std::vector<std::uint64_t> get_u64_list(const Json& v, std::string_view what, std::string_view name) {
  if (!v.is_array()) fail(what, "'" + std::string(name) + "' must be an array of integers");
  std::vector<std::uint64_t> out;
  for (const auto& x : v) out.push_back(as_u64(x, what, name));
  return out;
}

std::vector<std::string> get_string_list(const Json& v, std::string_view what, std::string_view name) {
  if (!v.is_array()) fail(what, "'" + std::string(name) + "' must be an array of strings");
  std::vector<std::string> out;
  for (const auto& x : v) {
    if (!x.is_string()) fail(what, "'" + std::string(name) + "' must be an array of strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

Rational get_rational(const Json& j, const char* key, std::string_view what) {
  try {
    return rational_from_json(j.at(key));
  } catch (const InputError& e) {
    fail(what, "'" + std::string(key) + "': " + e.what());
  }
}

int parse_index_key(const std::string& key, std::string_view what) {
  int value = 0;
  const auto* end = key.data() + key.size();
  const auto [ptr, ec] = std::from_chars(key.data(), end, value);
  if (key.empty() || ec != std::errc() || ptr != end) fail(what, "key '" + key + "' is not an integer index");
  return value;
}

Json index_list(const IndexSet& s) {
  Json out = Json::array();
  for (int x : s) out.push_back(x);
  return out;
}

Json series_json(const SessionSeries& s) {
  Json values = Json::array();
  for (const auto& v : s.values) values.push_back(to_json(v));
  return {{"values", values},
          {"slope", to_json(s.slope)},
          {"affine", s.affine},
          {"per_user", to_json(s.per_user)},
          {"max_step_per_user", to_json(s.max_step_per_user)}};
}

}  // namespace

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Json to_json(Rational r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return as_i64(j, "rational", "value");
  throw InputError("rational must be a \"p/q\" string or an integer");
}

// --- CellAssociation -------------------------------------------------------

Json to_json(const CellAssociation& a) {
  Json cells = Json::array();
  for (const auto& c : a.cells) cells.push_back(index_list(c));
  return {{"k", a.k}, {"nc", a.nc}, {"cells", cells}};
}

CellAssociation association_from_json(const Json& j) {
  constexpr std::string_view what = "association";
  check_object(j, what, {"k", "nc", "cells"});
  const Json& cells = j.at("cells");
  if (!cells.is_array()) fail(what, "'cells' must be an array of arrays");
  std::vector<IndexSet> sets;
  sets.reserve(cells.size());
  for (const auto& c : cells) sets.push_back(get_int_list(c, what, "cells"));
  return CellAssociation(get_int(j, "k", what), get_int(j, "nc", what), std::move(sets));
}

// --- SchemePlan ------------------------------------------------------------

Json to_json(const SchemePlan& p) {
  Json out = {{"assoc", to_json(p.assoc)},
              {"dl_active_users", index_list(p.dl_active_users)},
              {"dl_silent_bs", index_list(p.dl_silent_bs)},
              {"ul_active_users", index_list(p.ul_active_users)},
              {"claimed_dl_dof", to_json(p.claimed_dl_dof)},
              {"claimed_ul_dof", to_json(p.claimed_ul_dof)}};
  if (!p.notes.empty()) out["notes"] = p.notes;
  return out;
}

SchemePlan plan_from_json(const Json& j) {
  constexpr std::string_view what = "scheme plan";
  check_object(j, what,
               {"assoc", "dl_active_users", "dl_silent_bs", "ul_active_users", "claimed_dl_dof",
                "claimed_ul_dof"},
               {"notes"});
  SchemePlan p;
  p.assoc = association_from_json(j.at("assoc"));
  p.dl_active_users = make_index_set(get_int_list(j.at("dl_active_users"), what, "dl_active_users"));
  p.dl_silent_bs = make_index_set(get_int_list(j.at("dl_silent_bs"), what, "dl_silent_bs"));
  p.ul_active_users = make_index_set(get_int_list(j.at("ul_active_users"), what, "ul_active_users"));
  p.claimed_dl_dof = get_rational(j, "claimed_dl_dof", what);
  p.claimed_ul_dof = get_rational(j, "claimed_ul_dof", what);
  if (j.contains("notes")) p.notes = get_string_list(j.at("notes"), what, "notes");
  return p;
}

// --- Witness and order -----------------------------------------------------

Json to_json(const ZfWitness& w) {
  Json precoders = Json::object();
  for (const auto& [m, row] : w.precoders) {
    Json coeffs = Json::object();
    for (const auto& [j, v] : row) coeffs[std::to_string(j)] = v;
    precoders[std::to_string(m)] = coeffs;
  }
  return {{"seed", w.seed}, {"prime", w.prime}, {"precoders", precoders}};
}

ZfWitness witness_from_json(const Json& j) {
  constexpr std::string_view what = "witness";
  check_object(j, what, {"seed", "prime", "precoders"});
  ZfWitness w;
  w.seed = get_u64(j, "seed", what);
  w.prime = get_u64(j, "prime", what);
  const Json& pre = j.at("precoders");
  if (!pre.is_object()) fail(what, "'precoders' must be an object");
  for (auto it = pre.begin(); it != pre.end(); ++it) {
    const int m = parse_index_key(it.key(), what);
    if (!it.value().is_object()) fail(what, "precoder of message " + it.key() + " must be an object");
    auto& row = w.precoders[m];
    for (auto c = it.value().begin(); c != it.value().end(); ++c) {
      row[parse_index_key(c.key(), what)] = as_u64(c.value(), what, "coefficient");
    }
  }
  return w;
}

Json to_json(const DecodingOrder& o) {
  Json steps = Json::array();
  for (const auto& s : o.steps) steps.push_back({{"m", s.m}, {"bs", s.bs}});
  return {{"steps", steps}};
}

DecodingOrder order_from_json(const Json& j) {
  constexpr std::string_view what = "decoding order";
  check_object(j, what, {"steps"});
  if (!j.at("steps").is_array()) fail(what, "'steps' must be an array");
  DecodingOrder o;
  for (const auto& s : j.at("steps")) {
    check_object(s, what, {"m", "bs"});
    o.steps.push_back({get_int(s, "m", what), get_int(s, "bs", what)});
  }
  return o;
}

// --- Certificates ----------------------------------------------------------

Json to_json(const BoundCertificate& c) {
  Json flagged = Json::array();
  if (c.kind == BoundKind::lemma2_chain) {
    for (int i : c.flagged_pairs) flagged.push_back(i);
  } else {
    for (const auto& b : c.blocks) {
      flagged.push_back({{"start", b.start},
                         {"end", b.end},
                         {"middle_bs", b.middle_bs},
                         {"class", b.good ? "GOOD" : "BAD"}});
    }
  }
  Json out = {{"kind", to_string(c.kind)}, {"flagged", flagged}, {"value", to_json(c.value)},
              {"k", c.k},                  {"nc", c.nc},         {"tail", c.tail}};
  if (c.k > 0) out["per_user"] = to_json(c.per_user());
  out["assumption"] = c.assumption;
  return out;
}

BoundCertificate certificate_from_json(const Json& j) {
  constexpr std::string_view what = "certificate";
  check_object(j, what, {"kind", "flagged", "value", "k", "nc"}, {"tail", "per_user", "assumption"});
  BoundCertificate c;
  try {
    c.kind = bound_kind_from_string(get_string(j, "kind", what));
  } catch (const InputError& e) {
    fail(what, e.what());
  }
  c.k = get_int(j, "k", what);
  c.nc = get_int(j, "nc", what);
  c.value = get_rational(j, "value", what);
  const Json& flagged = j.at("flagged");
  if (!flagged.is_array()) fail(what, "'flagged' must be an array");
  if (c.kind == BoundKind::lemma2_chain) {
    c.flagged_pairs = get_int_list(flagged, what, "flagged");
  } else {
    for (const auto& b : flagged) {
      check_object(b, what, {"start", "end", "middle_bs", "class"});
      const auto cls = get_string(b, "class", what);
      if (cls != "GOOD" && cls != "BAD") fail(what, "block class must be GOOD or BAD");
      c.blocks.push_back({get_int(b, "start", what), get_int(b, "end", what), get_int(b, "middle_bs", what),
                          cls == "GOOD"});
    }
  }
  if (j.contains("tail")) {
    c.tail = get_int(j, "tail", what);
  } else if (c.kind == BoundKind::ncone_constant) {
    c.tail = c.k % 3;
  } else if (c.kind != BoundKind::lemma2_chain) {
    c.tail = c.k - static_cast<int>(c.blocks.size()) * (2 * c.nc - 1);
  }
  if (j.contains("assumption")) c.assumption = get_string(j, "assumption", what);
  if (j.contains("per_user")) {
    if (c.k < 1) fail(what, "'per_user' requires k >= 1");
    if (get_rational(j, "per_user", what) != c.per_user()) fail(what, "'per_user' disagrees with value / k");
  }
  return c;
}

// --- Evaluations -----------------------------------------------------------

Json to_json(const DlEvaluation& e) {
  Json seeds = Json::array();
  for (auto s : e.seeds_tried) seeds.push_back(s);
  return {{"session", "down"},
          {"sum_dof", e.sum_dof},
          {"active_users", index_list(e.active_users)},
          {"exact", e.exact},
          {"seeds_tried", seeds},
          {"witness", to_json(e.witness)},
          {"warnings", e.warnings}};
}

DlEvaluation dl_evaluation_from_json(const Json& j) {
  constexpr std::string_view what = "downlink evaluation";
  check_object(j, what, {"session", "sum_dof", "active_users", "exact", "seeds_tried", "witness"},
               {"warnings"});
  if (get_string(j, "session", what) != "down") fail(what, "'session' must be \"down\"");
  DlEvaluation e;
  e.sum_dof = get_int(j, "sum_dof", what);
  e.active_users = make_index_set(get_int_list(j.at("active_users"), what, "active_users"));
  e.exact = get_bool(j, "exact", what);
  e.seeds_tried = get_u64_list(j.at("seeds_tried"), what, "seeds_tried");
  e.witness = witness_from_json(j.at("witness"));
  if (j.contains("warnings")) e.warnings = get_string_list(j.at("warnings"), what, "warnings");
  return e;
}

Json to_json(const UlEvaluation& e) {
  return {{"session", "up"},
          {"sum_dof", e.sum_dof},
          {"active_users", index_list(e.active_users)},
          {"exact", e.exact},
          {"order", to_json(e.order)}};
}

UlEvaluation ul_evaluation_from_json(const Json& j) {
  constexpr std::string_view what = "uplink evaluation";
  check_object(j, what, {"session", "sum_dof", "active_users", "exact", "order"});
  if (get_string(j, "session", what) != "up") fail(what, "'session' must be \"up\"");
  UlEvaluation e;
  e.sum_dof = get_int(j, "sum_dof", what);
  e.active_users = make_index_set(get_int_list(j.at("active_users"), what, "active_users"));
  e.exact = get_bool(j, "exact", what);
  e.order = order_from_json(j.at("order"));
  return e;
}

Json avg_evaluation_to_json(int k, const DlEvaluation& dl, const UlEvaluation& ul) {
  const Rational sum = Rational(dl.sum_dof + ul.sum_dof, 2);
  return {{"session", "avg"},
          {"k", k},
          {"dl", to_json(dl)},
          {"ul", to_json(ul)},
          {"avg_sum", to_json(sum)},
          {"avg_per_user", to_json(sum / Rational(k))}};
}

// --- Search ----------------------------------------------------------------

Json to_json(const SearchResult& r) {
  Json violations = Json::array();
  for (const auto& v : r.soundness_violations) {
    violations.push_back({{"id", v.id},
                          {"kind", to_string(v.kind)},
                          {"achieved", to_json(v.achieved)},
                          {"bound", to_json(v.bound)}});
  }
  Json table = Json::array();
  for (const auto& row : r.table) {
    table.push_back({{"id", row.id},
                     {"dl", row.dl},
                     {"ul", row.ul},
                     {"avg_per_user", to_json(row.avg_per_user)},
                     {"bound_per_user", to_json(row.bound_per_user)}});
  }
  return {{"k", r.k},
          {"nc", r.nc},
          {"window", r.window},
          {"objective", to_string(r.objective)},
          {"scope", r.scope},
          {"candidates_enumerated", r.candidates_enumerated},
          {"best_id", r.best_id},
          {"best_assoc", to_json(r.best_assoc)},
          {"dl", to_json(r.dl)},
          {"ul", to_json(r.ul)},
          {"avg_per_user", to_json(r.avg_per_user)},
          {"bound", to_json(r.bound)},
          {"soundness_checks", r.soundness_checks},
          {"soundness_violations", violations},
          {"warnings", r.warnings},
          {"table", table}};
}

SearchResult search_result_from_json(const Json& j) {
  constexpr std::string_view what = "search result";
  check_object(j, what,
               {"k", "nc", "window", "objective", "scope", "candidates_enumerated", "best_id", "best_assoc", "dl",
                "ul", "avg_per_user", "bound", "soundness_checks", "soundness_violations", "warnings"},
               {"table"});
  SearchResult r;
  r.k = get_int(j, "k", what);
  r.nc = get_int(j, "nc", what);
  r.window = get_int(j, "window", what);
  try {
    r.objective = objective_from_string(get_string(j, "objective", what));
  } catch (const InputError& e) {
    fail(what, e.what());
  }
  r.scope = get_string(j, "scope", what);
  r.candidates_enumerated = get_u64(j, "candidates_enumerated", what);
  r.best_id = get_u64(j, "best_id", what);
  r.best_assoc = association_from_json(j.at("best_assoc"));
  r.dl = dl_evaluation_from_json(j.at("dl"));
  r.ul = ul_evaluation_from_json(j.at("ul"));
  r.avg_per_user = get_rational(j, "avg_per_user", what);
  r.bound = certificate_from_json(j.at("bound"));
  r.soundness_checks = get_u64(j, "soundness_checks", what);
  if (!j.at("soundness_violations").is_array()) fail(what, "'soundness_violations' must be an array");
  for (const auto& v : j.at("soundness_violations")) {
    check_object(v, what, {"id", "kind", "achieved", "bound"});
    SoundnessViolation sv;
    sv.id = get_u64(v, "id", what);
    sv.kind = bound_kind_from_string(get_string(v, "kind", what));
    sv.achieved = get_rational(v, "achieved", what);
    sv.bound = get_rational(v, "bound", what);
    r.soundness_violations.push_back(sv);
  }
  r.warnings = get_string_list(j.at("warnings"), what, "warnings");
  if (j.contains("table")) {
    if (!j.at("table").is_array()) fail(what, "'table' must be an array");
    for (const auto& row : j.at("table")) {
      check_object(row, what, {"id", "dl", "ul", "avg_per_user", "bound_per_user"});
      r.table.push_back({get_u64(row, "id", what), get_int(row, "dl", what), get_int(row, "ul", what),
                         get_rational(row, "avg_per_user", what), get_rational(row, "bound_per_user", what)});
    }
  }
  return r;
}

namespace {
constexpr const char* kCsvHeader = "assoc-id,dl_dof,ul_dof,avg_num,avg_den,bound_num,bound_den";
}  // namespace

std::string search_table_csv(const SearchResult& r) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const auto& row : r.table) {
    out << row.id << ',' << row.dl << ',' << row.ul << ',' << row.avg_per_user.num() << ','
        << row.avg_per_user.den() << ',' << row.bound_per_user.num() << ',' << row.bound_per_user.den()
        << '\n';
  }
  return out.str();
}

std::vector<CandidateRow> search_table_from_csv(std::string_view text) {
  constexpr std::string_view what = "search table";
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) fail(what, "missing or unexpected CSV header");
  std::vector<CandidateRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::int64_t f[7];
    const char* p = line.data();
    const char* end = line.data() + line.size();
    for (int c = 0; c < 7; ++c) {
      const auto [ptr, ec] = std::from_chars(p, end, f[c]);
      if (ec != std::errc() || (c < 6 ? (ptr == end || *ptr != ',') : ptr != end)) {
        fail(what, "malformed row '" + line + "'");
      }
      p = ptr + 1;
    }
    if (f[0] < 0 || f[4] == 0 || f[6] == 0) fail(what, "malformed row '" + line + "'");
    rows.push_back({static_cast<std::uint64_t>(f[0]), static_cast<int>(f[1]), static_cast<int>(f[2]),
                    Rational(f[3], f[4]), Rational(f[5], f[6])});
  }
  return rows;
}

// --- Reports ---------------------------------------------------------------

Json to_json(const PeriodicReport& r) {
  Json offsets = Json::array();
  for (const auto& o : r.pattern.offsets) {
    Json row = Json::array();
    for (int x : o) row.push_back(x);
    offsets.push_back(row);
  }
  return {{"pattern", r.pattern.str()},
          {"period", r.pattern.period},
          {"offsets", offsets},
          {"nc", r.nc},
          {"m", r.m},
          {"ks", r.ks},
          {"dl", series_json(r.dl)},
          {"ul", series_json(r.ul)},
          {"avg", series_json(r.avg)},
          {"affine", r.affine},
          {"warnings", r.warnings}};
}

Json to_json(const TheoremComparison& t) {
  const auto opt = [](const std::optional<Rational>& r) { return r ? to_json(*r) : Json(nullptr); };
  return {{"nc", t.nc},
          {"tau", to_json(t.tau)},
          {"tau_d", to_json(t.tau_d)},
          {"relation_rhs", opt(t.relation_rhs)},
          {"relation_holds", t.relation_holds ? Json(*t.relation_holds) : Json(nullptr)},
          {"achieved", opt(t.achieved)},
          {"delta", opt(t.delta)}};
}

// --- Run configuration -----------------------------------------------------

Json to_json(const RunConfig& c) {
  Json out = Json::object();
  if (c.k) out["k"] = *c.k;
  if (c.nc) out["nc"] = *c.nc;
  if (c.window) out["window"] = *c.window;
  if (c.objective) out["objective"] = to_string(*c.objective);
  if (c.seeds) out["seeds"] = *c.seeds;
  if (c.cap) out["cap"] = *c.cap;
  return out;
}

RunConfig run_config_from_json(const Json& j) {
  constexpr std::string_view what = "run config";
  check_object(j, what, {}, {"k", "nc", "window", "objective", "seeds", "cap"});
  RunConfig c;
  if (j.contains("k")) c.k = get_int(j, "k", what);
  if (j.contains("nc")) c.nc = get_int(j, "nc", what);
  if (j.contains("window")) c.window = get_int(j, "window", what);
  if (j.contains("objective")) {
    try {
      c.objective = objective_from_string(get_string(j, "objective", what));
    } catch (const InputError& e) {
      fail(what, e.what());
    }
  }
  if (j.contains("seeds")) c.seeds = get_u64_list(j.at("seeds"), what, "seeds");
  if (j.contains("cap")) c.cap = get_u64(j, "cap", what);
  return c;
}

}  // namespace wyner
