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

#include "cli_app.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "wyner/bounds.hpp"
#include "wyner/downlink_zf.hpp"
#include "wyner/errors.hpp"
#include "wyner/json_io.hpp"
#include "wyner/render.hpp"
#include "wyner/schemes.hpp"
#include "wyner/search.hpp"
#include "wyner/uplink_decode.hpp"

namespace wyner::cli {

namespace {

struct Args {
  int k = 0;
  int nc = 0;
  std::string type = "avg";
  std::string session = "avg";
  int window = 0;
  std::string objective = "avg";
  std::vector<std::uint64_t> seeds{1, 2, 3};
  std::string format;
  std::string out_path;
  std::uint64_t cap = 5'000'000;
  std::string config_path;
  std::string input;
  std::string plan_path;
  std::string csv_path;
  std::string kind;
  std::vector<int> nc_list{1, 2, 3, 4};
  int blocks = 4;
  unsigned workers = 0;
  bool greedy = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void emit(const Args& a, std::ostream& out, const std::string& text) {
  if (a.out_path.empty()) {
    out << text;
  } else {
    write_file(a.out_path, text);
  }
}

void warn_all(std::ostream& err, const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) err << "warning: " << w << '\n';
}

DlOptions dl_options(const Args& a) {
  if (a.seeds.empty()) throw InputError("at least one --seed is required");
  DlOptions o;
  o.seeds = a.seeds;
  o.allow_greedy = a.greedy;
  return o;
}

void require_k_nc(const Args& a) {
  if (a.k < 1) throw InputError("--k must be >= 1");
  if (a.nc < 1) throw InputError("--nc must be >= 1");
}

// A file holding either a bare association or a scheme plan.
struct AssocInput {
  CellAssociation assoc;
  std::optional<SchemePlan> plan;
};

AssocInput load_assoc(const std::string& path) {
  const Json j = parse_json_text(read_file(path));
  AssocInput in;
  if (j.is_object() && j.contains("assoc")) {
    in.plan = plan_from_json(j);
    in.assoc = in.plan->assoc;
  } else {
    in.assoc = association_from_json(j);
  }
  require_valid(in.assoc);
  return in;
}

SchemePlan build_plan(int k, int nc, const std::string& type, const DlOptions& opts) {
  if (type == "ncone") {
    if (nc != 1) throw InputError("--type ncone requires --nc 1");
    return avg_optimal(k, 1, opts);
  }
  if (type == "downlink") return downlink_optimal(k, nc, opts);
  if (type == "pair") {
    if (nc < 2) throw InputError("--type pair requires --nc >= 2");
    SchemePlan p = avg_optimal(k, 2, opts);
    p.assoc.nc = nc;
    return p;
  }
  return avg_optimal(k, nc, opts);
}

// ---------------------------------------------------------------------------

int cmd_scheme(const Args& a, std::ostream& out, std::ostream& err) {
  require_k_nc(a);
  const auto opts = dl_options(a);
  const SchemePlan plan = build_plan(a.k, a.nc, a.type, opts);
  const PlanCertificate cert = certify_plan(plan, opts);
  warn_all(err, cert.warnings);
  if (!cert.ok()) {
    std::string msg = "plan failed certification:";
    for (const auto& p : cert.problems) msg += " " + p + ";";
    throw VerificationError(msg);
  }
  emit(a, out, dump(to_json(plan)));
  return kOk;
}

int cmd_eval(const Args& a, std::ostream& out, std::ostream& err) {
  const auto in = load_assoc(a.input);
  const auto opts = dl_options(a);
  UlOptions ul_opts;
  ul_opts.allow_greedy = a.greedy;
  if (in.plan) {
    // a plan's claims must survive the oracles before anything is reported
    const PlanCertificate cert = certify_plan(*in.plan, opts);
    warn_all(err, cert.warnings);
    if (!cert.ok()) {
      std::string msg = "plan claims do not certify:";
      for (const auto& p : cert.problems) msg += " " + p + ";";
      throw VerificationError(msg);
    }
  }
  Json result;
  if (a.session == "down") {
    const auto dl = max_downlink_dof(in.assoc, opts);
    warn_all(err, dl.warnings);
    result = to_json(dl);
  } else if (a.session == "up") {
    result = to_json(max_uplink_dof(in.assoc, ul_opts));
  } else {
    const auto dl = max_downlink_dof(in.assoc, opts);
    warn_all(err, dl.warnings);
    const auto ul = max_uplink_dof(in.assoc, ul_opts);
    result = avg_evaluation_to_json(in.assoc.k, dl, ul);
  }
  emit(a, out, dump(result));
  return kOk;
}

int cmd_search(Args a, const std::set<std::string>& given, std::ostream& out, std::ostream& err) {
  if (!a.config_path.empty()) {
    const RunConfig c = run_config_from_json(parse_json_text(read_file(a.config_path)));
    // explicit flags win over the file
    if (c.k && !given.count("k")) a.k = *c.k;
    if (c.nc && !given.count("nc")) a.nc = *c.nc;
    if (c.window && !given.count("window")) a.window = *c.window;
    if (c.objective && !given.count("objective")) a.objective = to_string(*c.objective);
    if (c.seeds && !given.count("seed")) a.seeds = *c.seeds;
    if (c.cap && !given.count("cap")) a.cap = *c.cap;
  }
  require_k_nc(a);
  if (a.window < 0) throw InputError("--window must be >= 0");
  if (a.seeds.empty()) throw InputError("at least one seed is required");
  SearchOptions so;
  so.window = a.window;
  so.objective = objective_from_string(a.objective);
  so.seeds = a.seeds;
  so.cap = a.cap;
  so.workers = a.workers ? a.workers : std::max(1U, std::thread::hardware_concurrency());
  so.record_table = a.format == "csv" || !a.csv_path.empty();
  const SearchResult r = exhaustive_search(a.k, a.nc, so);
  warn_all(err, r.warnings);
  if (!a.csv_path.empty()) write_file(a.csv_path, search_table_csv(r));
  emit(a, out, a.format == "csv" ? search_table_csv(r) : dump(to_json(r)));
  return kOk;
}

int cmd_bound(const Args& a, std::ostream& out, std::ostream&) {
  const auto in = load_assoc(a.input);
  const int nc = a.nc > 0 ? a.nc : in.assoc.nc;
  const auto one = [&](BoundKind kind) {
    switch (kind) {
      case BoundKind::lemma2_chain:
        return lemma2_chain_bound(in.assoc);
      case BoundKind::dl_reconstruction:
        return reconstruction_bound(in.assoc, nc);
      case BoundKind::avg_counting:
        return counting_bound(in.assoc, nc);
      case BoundKind::ncone_constant:
        if (nc != 1) throw InputError("ncone_constant applies to nc = 1 only");
        return ncone_bound(in.assoc.k);
    }
    throw InputError("unknown bound kind");
  };
  if (a.kind == "all") {
    Json arr = Json::array();
    arr.push_back(to_json(one(BoundKind::lemma2_chain)));
    if (nc >= 2) {
      arr.push_back(to_json(one(BoundKind::dl_reconstruction)));
      arr.push_back(to_json(one(BoundKind::avg_counting)));
    } else {
      arr.push_back(to_json(one(BoundKind::ncone_constant)));
    }
    emit(a, out, dump(arr));
    return kOk;
  }
  const BoundKind kind = a.kind.empty() ? (nc >= 2 ? BoundKind::avg_counting : BoundKind::ncone_constant)
                                        : bound_kind_from_string(a.kind);
  emit(a, out, dump(to_json(one(kind))));
  return kOk;
}

int cmd_render(const Args& a, std::ostream& out, std::ostream&) {
  const Json j = parse_json_text(read_file(a.input));
  std::optional<SchemePlan> plan;
  CellAssociation assoc;
  if (j.is_object() && j.contains("assoc")) {
    plan = plan_from_json(j);
    assoc = plan->assoc;
  } else {
    assoc = association_from_json(j);
  }
  if (!a.plan_path.empty()) plan = plan_from_json(parse_json_text(read_file(a.plan_path)));
  std::optional<RenderOverlay> overlay;
  if (plan) {
    if (plan->assoc.k != assoc.k) throw InputError("plan overlay has a different k");
    overlay = overlay_from_plan(*plan);
  }
  emit(a, out, a.format == "svg" ? render_svg(assoc, overlay) : render_ascii(assoc, overlay));
  return kOk;
}

int cmd_report(const Args& a, std::ostream& out, std::ostream& err) {
  if (a.nc_list.empty()) throw InputError("--nc needs at least one value");
  if (a.blocks < 1) throw InputError("--blocks must be >= 1");
  const auto opts = dl_options(a);
  Json rows = Json::array();
  std::ostringstream text;
  text << std::left << std::setw(4) << "nc" << std::setw(8) << "tau" << std::setw(8) << "tau_D" << std::setw(22)
       << "(1+tau_D(nc-1))/2" << std::setw(10) << "relation" << std::setw(6) << "k" << std::setw(10)
       << "achieved" << "delta\n";
  for (int nc : a.nc_list) {
    if (nc < 1) throw InputError("--nc values must be >= 1");
    const int period = nc == 1 ? 3 : 2 * nc - 1;
    const int k = period * a.blocks;
    const SchemePlan plan = avg_optimal(k, nc, opts);
    const PlanCertificate cert = certify_plan(plan, opts);
    warn_all(err, cert.warnings);
    if (!cert.ok()) throw VerificationError("scheme for nc = " + std::to_string(nc) + " failed certification");
    const Rational achieved = (plan.claimed_dl_dof + plan.claimed_ul_dof) / Rational(2 * k);
    const TheoremComparison t = compare_with_theorem(nc, achieved);
    Json row = to_json(t);
    row["k"] = k;
    rows.push_back(row);
    text << std::setw(4) << nc << std::setw(8) << t.tau.str() << std::setw(8) << t.tau_d.str() << std::setw(22)
         << (t.relation_rhs ? t.relation_rhs->str() : "-") << std::setw(10)
         << (t.relation_holds ? (*t.relation_holds ? "holds" : "FAILS") : "-") << std::setw(6) << k
         << std::setw(10) << achieved.str() << t.delta->str() << '\n';
  }
  emit(a, out, a.format == "json" ? dump(rows) : text.str());
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Args a;
  CLI::App app{"Cell association toolkit for the Wyner linear network (DoF level)", "wynerdof"};
  app.require_subcommand(1);

  const std::vector<std::string> objectives{"avg", "dl", "ul", "up", "down"};
  const auto add_seed = [&](CLI::App* s) {
    s->add_option("--seed", a.seeds, "channel seed, repeatable (default 1 2 3)");
  };
  const auto add_out = [&](CLI::App* s) { s->add_option("--out", a.out_path, "write output to this file"); };

  auto* scheme = app.add_subcommand("scheme", "construct a scheme plan");
  scheme->add_option("--k", a.k, "number of users")->required();
  scheme->add_option("--nc", a.nc, "cell association budget")->required();
  scheme->add_option("--type", a.type)->check(CLI::IsMember({"avg", "downlink", "pair", "ncone"}));
  scheme->add_option("--format", a.format)->check(CLI::IsMember({"json"}));
  add_seed(scheme);
  add_out(scheme);

  auto* eval = app.add_subcommand("eval", "evaluate an association with the oracles");
  eval->add_option("input", a.input, "association or plan JSON")->required();
  eval->add_option("--session", a.session)->check(CLI::IsMember({"up", "down", "avg"}));
  eval->add_option("--format", a.format)->check(CLI::IsMember({"json"}));
  eval->add_flag("--greedy", a.greedy, "fall back to greedy lower bounds above the exact limits");
  add_seed(eval);
  add_out(eval);

  auto* search = app.add_subcommand("search", "exhaustive windowed association search");
  search->add_option("--k", a.k);
  search->add_option("--nc", a.nc);
  search->add_option("--window", a.window, "association window (0 selects nc)");
  search->add_option("--objective", a.objective)->check(CLI::IsMember(objectives));
  search->add_option("--cap", a.cap, "maximum number of candidates");
  search->add_option("--config", a.config_path, "run config JSON");
  search->add_option("--workers", a.workers, "worker threads (0 selects all cores)");
  search->add_option("--csv", a.csv_path, "also write the candidate table as CSV");
  search->add_option("--format", a.format)->check(CLI::IsMember({"json", "csv"}));
  add_seed(search);
  add_out(search);

  auto* bound = app.add_subcommand("bound", "converse certificate for an association");
  bound->add_option("input", a.input, "association or plan JSON")->required();
  bound->add_option("--nc", a.nc, "budget used for block bounds (default: from the file)");
  bound->add_option("--kind", a.kind)
      ->check(CLI::IsMember({"lemma2_chain", "dl_reconstruction", "avg_counting", "ncone_constant", "all"}));
  bound->add_option("--format", a.format)->check(CLI::IsMember({"json"}));
  add_out(bound);

  auto* render = app.add_subcommand("render", "draw an association");
  render->add_option("input", a.input, "association or plan JSON")->required();
  render->add_option("--format", a.format)->check(CLI::IsMember({"ascii", "svg"}));
  render->add_option("--plan", a.plan_path, "plan JSON whose inactive nodes are marked");
  add_out(render);

  auto* report = app.add_subcommand("report", "closed forms against certified schemes");
  report->add_option("--nc", a.nc_list, "budgets to tabulate")->delimiter(',');
  report->add_option("--blocks", a.blocks, "scheme periods per instance");
  report->add_option("--format", a.format)->check(CLI::IsMember({"text", "json"}));
  add_seed(report);
  add_out(report);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? kOk : kInputError;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err) == 0 ? kOk : kInputError;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    if (scheme->parsed()) return cmd_scheme(a, out, err);
    if (eval->parsed()) return cmd_eval(a, out, err);
    if (search->parsed()) {
      std::set<std::string> given;
      for (const auto* name : {"k", "nc", "window", "objective", "seed", "cap"}) {
        if (search->count(std::string("--") + name) > 0) given.insert(name);
      }
      return cmd_search(a, given, out, err);
    }
    if (bound->parsed()) return cmd_bound(a, out, err);
    if (render->parsed()) return cmd_render(a, out, err);
    if (report->parsed()) return cmd_report(a, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const SizeLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kSizeLimit;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << '\n';
    return kVerification;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kVerification;
  }
  return kInputError;
}

}  // namespace wyner::cli
