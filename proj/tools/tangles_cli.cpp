#include "tangles/canonical.hpp"
#include "tangles/core.hpp"
#include "tangles/duality.hpp"
#include "tangles/error.hpp"
#include "tangles/graphsep.hpp"
#include "tangles/io.hpp"
#include "tangles/parallel.hpp"
#include "tangles/random.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace tangles;

namespace {

struct RunConfig {
  std::string input;
  std::optional<std::int64_t> k;
  std::string family;
  std::string format = "json";
  std::size_t max_seps = 4096;
  std::uint64_t seed = 1;
  int jobs = 1;
  bool trace = false;
  bool refine = false;
  bool good = false;
  std::vector<std::size_t> select;
  std::size_t batch = 0;
  std::string kind = "system";
};

struct Loaded {
  Instance inst;
  SeparationSystem S;
};

Loaded load(const RunConfig& cfg) {
  if (cfg.input.empty()) fail(ErrorKind::input, "no input file");
  if (cfg.k && *cfg.k <= 0) fail(ErrorKind::input, "--k must be positive");
  auto inst = load_instance(cfg.input);
  auto S = instantiate(inst, cfg.k, cfg.max_seps);
  return {std::move(inst), std::move(S)};
}

EnumLimits limits_of(const RunConfig& cfg) {
  EnumLimits limits;
  limits.max_seps = cfg.max_seps;
  return limits;
}

std::string default_family(const Loaded& l) { return l.inst.graph ? "tk-star" : "profiles"; }

// Profiles are the F-tangles for P_S; a null family means "profiles".
std::optional<StarFamily> resolve_family(const RunConfig& cfg, const Loaded& l) {
  std::string name = cfg.family.empty() ? default_family(l) : cfg.family;
  if (name == "tk-star") {
    if (!l.inst.graph) fail(ErrorKind::input, "--family tk-star needs a graph instance");
    return tk_star(l.S);
  }
  if (name == "profiles") return std::nullopt;
  if (name.rfind("file:", 0) == 0) return load_family(l.S, name.substr(5));
  fail(ErrorKind::input, "unknown family '" + name + "'");
}

OrientationSet orientations(const RunConfig& cfg, const Loaded& l, const std::optional<StarFamily>& F) {
  auto all = F ? enumerate_tangles(l.S, *F, limits_of(cfg)) : enumerate_profiles(l.S, limits_of(cfg));
  if (cfg.select.empty()) return all;
  OrientationSet chosen;
  for (auto i : cfg.select) {
    if (i >= all.size()) fail(ErrorKind::input, "--select index " + std::to_string(i) + " out of range");
    chosen.push_back(all[i]);
  }
  return chosen;
}

void emit(const RunConfig& cfg, const Json& j, const std::string& text, const std::string& dot = {}) {
  if (cfg.format == "json")
    std::cout << j.dump(2) << "\n";
  else if (cfg.format == "dot" && !dot.empty())
    std::cout << dot;
  else if (cfg.format == "dot")
    fail(ErrorKind::input, "no DOT rendering for this output");
  else
    std::cout << text;
}

int cmd_check(const RunConfig& cfg) {
  auto l = load(cfg);
  const auto& S = l.S;
  Json checks = Json::object();
  std::ostringstream text;
  bool all_ok = true;
  auto record = [&](const std::string& name, bool ok, const Json& witness) {
    Json entry{{"pass", ok}};
    if (!ok) entry["witness"] = witness;
    checks[name] = entry;
    text << (ok ? "PASS " : "FAIL ") << name;
    if (!ok) text << " " << witness.dump();
    text << "\n";
    all_ok = all_ok && ok;
  };
  auto pair_json = [&](const std::optional<IdPair>& p) {
    return p ? Json::array({S.describe(p->first), S.describe(p->second)}) : Json(nullptr);
  };
  auto sub = find_submodularity_violation(S);
  record("submodular", !sub, pair_json(sub));
  if (S.has_order()) {
    auto osub = find_order_submodularity_violation(S);
    record("order_submodular", !osub, pair_json(osub));
  }
  auto sep = separability_violation(S);
  record("separable", !sep, pair_json(sep));
  auto F = resolve_family(cfg, l);
  if (F) {
    auto shift = shifting_violation(S, *F);
    Json sw = shift ? Json{{"s", S.describe(shift->s)}, {"r", S.describe(shift->r)},
                           {"star", ids_json(S, F->members()[shift->star])}}
                    : Json(nullptr);
    bool stars_ok = true;
    Json bad_star = nullptr;
    for (const auto& m : F->members())
      if (!is_star(S, m)) {
        stars_ok = false;
        bad_star = ids_json(S, m);
        break;
      }
    record("stars", stars_ok, bad_star);
    auto rep = check_star_family(S, *F, !shift, limits_of(cfg));
    record("standard", rep.standard, rep.missing_standard ? Json(S.describe(*rep.missing_standard)) : Json(nullptr));
    record("small_singletons", rep.small_singletons,
           rep.missing_singleton ? Json(S.describe(*rep.missing_singleton)) : Json(nullptr));
    record("profile_respecting", rep.profile_respecting,
           rep.non_profile ? Json(*rep.non_profile) : Json(nullptr));
    record("closed_under_shifting", !shift, sw);
    record("friendly", rep.friendly, nullptr);
  }
  Json out{{"separations", S.unoriented().size()}, {"checks", checks}, {"pass", all_ok}};
  emit(cfg, out, text.str());
  return all_ok ? 0 : 1;
}

int cmd_tangles(const RunConfig& cfg) {
  auto l = load(cfg);
  auto F = resolve_family(cfg, l);
  auto found = orientations(cfg, l, F);
  Json list = Json::array();
  std::ostringstream text;
  text << found.size() << " " << (F ? "tangles" : "profiles") << "\n";
  for (std::size_t i = 0; i < found.size(); ++i) {
    list.push_back(orientation_json(l.S, found[i]));
    text << i << ":";
    for (Id x : found[i].ids()) text << " " << l.S.describe(x);
    text << "\n";
  }
  emit(cfg, Json{{"count", found.size()}, {"orientations", list}}, text.str());
  return 0;
}

int cmd_tree_of_tangles(const RunConfig& cfg) {
  auto l = load(cfg);
  const auto& S = l.S;
  auto F = resolve_family(cfg, l);
  Json out;
  std::ostringstream text;
  IdSet N;
  if (cfg.refine) {
    if (!F) fail(ErrorKind::input, "--refine needs a star family");
    if (!cfg.select.empty()) fail(ErrorKind::input, "--refine uses all tangles");
    RefineOptions opt;
    opt.limits = limits_of(cfg);
    auto R = refined_canonical(S, *F, opt);
    N = R.refined.N;
    Json nodes = Json::array();
    for (std::size_t i = 0; i < R.refined.nodes.size(); ++i)
      nodes.push_back(Json{{"star", ids_json(S, R.refined.nodes[i])},
                           {"in_F", static_cast<bool>(R.refined.node_in_F[i])},
                           {"tangle_home", static_cast<bool>(R.refined.node_home[i])}});
    out = Json{{"tangles", R.tangles.size()},
               {"Ntilde", nested_json(S, R.Ntilde)},
               {"N", nested_json(S, R.refined.N)},
               {"inessential_in_Ntilde", R.inessential_in_Ntilde},
               {"nodes", nodes}};
    if (cfg.trace) out["trace"] = construction_trace(S, R.construction);
    text << "Ntilde " << nested_json(S, R.Ntilde).dump() << "\nN " << nested_json(S, N).dump() << "\n";
    for (std::size_t i = 0; i < R.refined.nodes.size(); ++i)
      text << "node " << ids_json(S, R.refined.nodes[i]).dump() << (R.refined.node_in_F[i] ? " in-F" : "")
           << (R.refined.node_home[i] ? " tangle-home" : "") << "\n";
  } else {
    auto profiles = orientations(cfg, l, F);
    if (cfg.good) {
      auto G = good_nested_set(S, profiles);
      N = G.N;
      out = Json{{"profiles", profiles.size()}, {"N", nested_json(S, N)}};
      if (cfg.trace) out["trace"] = good_trace(S, G);
    } else {
      auto C = construction_41(S, profiles);
      N = C.N;
      out = Json{{"profiles", profiles.size()}, {"N", nested_json(S, N)}};
      if (cfg.trace) out["trace"] = construction_trace(S, C);
    }
    text << "N " << nested_json(S, N).dump() << "\n";
  }
  std::string dot;
  if (l.inst.graph && is_regular_tree_set(S, N)) {
    auto d = decomposition_export(S, N);
    out["decomposition"] = decomposition_json(S, d);
    dot = decomposition_dot(S, d);
  } else if (is_regular_tree_set(S, N)) {
    dot = stree_dot(S, treeset_to_stree(S, N, limits_of(cfg)));
  }
  emit(cfg, out, text.str(), dot);
  return 0;
}

Json decide_json(const SeparationSystem& S, const DualityResult& r, std::string& text, std::string& dot) {
  if (r.tangle) {
    text = "TANGLE " + orientation_json(S, *r.tangle).dump() + "\n";
    return Json{{"result", "TANGLE"}, {"tangle", orientation_json(S, *r.tangle)}};
  }
  dot = stree_dot(S, *r.tree);
  text = "TREE\n" + dot;
  return Json{{"result", "TREE"}, {"tree", stree_json(S, *r.tree)}};
}

int cmd_duality(const RunConfig& cfg) {
  DualityOptions opt;
  opt.limits = limits_of(cfg);
  if (cfg.batch > 0) {
    Rng rng(cfg.seed);
    Json runs = Json::array();
    std::ostringstream text;
    bool all_ok = true;
    for (std::size_t i = 0; i < cfg.batch; ++i) {
      auto S = random_submodular_system(rng, 10);
      auto F = random_shift_closed_family(S, rng, 4);
      auto r = duality_decide(S, F, opt);
      bool tangles_exist = !enumerate_tangles(S, F, opt.limits).empty();
      bool ok = r.tangle ? is_f_tangle(S, *r.tangle, F) && tangles_exist
                         : stree_validate(S, *r.tree, &F).ok() && !tangles_exist;
      all_ok = all_ok && ok;
      runs.push_back(Json{{"separations", S.unoriented().size()},
                          {"stars", F.size()},
                          {"result", r.tangle ? "TANGLE" : "TREE"},
                          {"verified", ok}});
      text << i << " " << (r.tangle ? "TANGLE" : "TREE") << (ok ? " ok" : " FAILED") << "\n";
    }
    emit(cfg, Json{{"seed", cfg.seed}, {"runs", runs}, {"pass", all_ok}}, text.str());
    return all_ok ? 0 : 1;
  }
  auto l = load(cfg);
  auto F = resolve_family(cfg, l);
  StarFamily fam = F ? *F : profile_family(l.S);
  auto r = duality_decide(l.S, fam, opt);
  std::string text, dot;
  auto out = decide_json(l.S, r, text, dot);
  if (cfg.format == "dot" && r.tangle) {
    std::cout << text;
    return 0;
  }
  emit(cfg, out, text, dot);
  return 0;
}

int cmd_generate(const RunConfig& cfg) {
  Rng rng(cfg.seed);
  Json out;
  if (cfg.kind == "system") {
    auto S = random_submodular_system(rng, 10);
    const auto& U = dynamic_cast<const BipartitionUniverse&>(S.universe());
    Json seps = Json::array();
    for (Id x : S.unoriented()) seps.push_back(U.describe(S.code(x)).substr(0, U.describe(S.code(x)).find('|')));
    out = Json{{"kind", "bipartition"}, {"ground_set", U.points()}, {"separations", seps}};
  } else if (cfg.kind == "graph" || cfg.kind == "symmetric") {
    Graph g = cfg.kind == "graph" ? random_graph(rng, 7, 0.5) : random_symmetric_graph(rng, 10);
    Json edges = Json::array();
    for (auto [u, v] : g.edges) edges.push_back(Json::array({g.names[u], g.names[v]}));
    out = Json{{"kind", "graph"}, {"vertices", g.names}, {"edges", edges}};
  } else {
    fail(ErrorKind::input, "unknown --kind '" + cfg.kind + "'");
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::input:
      return 2;
    case ErrorKind::resource:
      return 3;
    default:
      return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tangles, tangle-tree duality and canonical trees of tangles"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub, bool needs_input) {
    auto* in = sub->add_option("input", cfg.input, "Instance: universe JSON or graph edge list");
    if (needs_input) in->required();
    sub->add_option("--k", cfg.k, "Restrict to separations of order < k");
    sub->add_option("--family", cfg.family, "tk-star | profiles | file:<path>");
    sub->add_option("--format", cfg.format, "json | text | dot")->check(CLI::IsMember({"json", "text", "dot"}));
    sub->add_option("--max-seps", cfg.max_seps, "Cap on unoriented separations")->check(CLI::PositiveNumber);
    sub->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "Seed for random instances");
  };

  auto* check = app.add_subcommand("check", "Check submodularity, separability and star-family properties");
  common(check, true);
  auto* tangles_cmd = app.add_subcommand("tangles", "List F-tangles or profiles");
  common(tangles_cmd, true);
  tangles_cmd->add_option("--select", cfg.select, "Keep only these indices")->delimiter(',');
  auto* tot = app.add_subcommand("tree-of-tangles", "Canonical nested set distinguishing the tangles");
  common(tot, true);
  tot->add_flag("--refine", cfg.refine, "Refine inessential nodes");
  tot->add_flag("--good", cfg.good, "Good nested set instead of the canonical one");
  tot->add_flag("--trace", cfg.trace, "Include the round-by-round trace");
  tot->add_option("--select", cfg.select, "Distinguish only these tangles (by index)")->delimiter(',');
  auto* dual = app.add_subcommand("duality", "Decide tangle or tree");
  common(dual, false);
  dual->add_option("--batch", cfg.batch, "Random seeded instances instead of an input file");
  auto* gen = app.add_subcommand("generate", "Emit a random instance");
  common(gen, false);
  gen->add_option("--kind", cfg.kind, "system | graph | symmetric");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  if (tot->parsed() && cfg.refine && cfg.good) {
    std::cerr << "error: --refine and --good are exclusive\n";
    return 2;
  }
  set_jobs(cfg.jobs);
  try {
    if (check->parsed()) return cmd_check(cfg);
    if (tangles_cmd->parsed()) return cmd_tangles(cfg);
    if (tot->parsed()) return cmd_tree_of_tangles(cfg);
    if (dual->parsed()) return cmd_duality(cfg);
    if (gen->parsed()) return cmd_generate(cfg);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
