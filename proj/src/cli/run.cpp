#include "rcp/cli/run.hpp"

#include <ctime>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rcp/catalog/base_lemmas.hpp"
#include "rcp/catalog/catalog.hpp"
#include "rcp/catalog/sampling.hpp"
#include "rcp/discharge/appearance.hpp"
#include "rcp/discharge/charges.hpp"
#include "rcp/embed/generate.hpp"
#include "rcp/embed/plane_graph.hpp"
#include "rcp/motif/motif.hpp"
#include "rcp/recolor/coloring.hpp"
#include "rcp/recolor/explore.hpp"
#include "rcp/solver/scene.hpp"
#include "rcp/solver/transform.hpp"
#include "rcp/util/rng.hpp"
#include "rcp/util/text.hpp"

namespace rcp {

namespace {

using njson = nlohmann::ordered_json;

struct Options {
  uint64_t seed = 0;
  uint64_t samples = 1000000;
  long long budget_states = 2000000;
  std::string format = "text";
  int jobs = 1;
  std::string out_path;
};

// Counterexamples found while running a command; converted to exit code 2
// after the artifact is persisted.
struct CounterexampleFound {
  std::string context;
  std::string artifact_text;
  std::string artifact_suffix;  // "motif" or "graph"
};

std::string timestamp_utc() {
  std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

void render_text(const njson& j, std::ostream& os, int indent) {
  std::string pad(2 * indent, ' ');
  for (const auto& [key, val] : j.items()) {
    if (val.is_object()) {
      os << pad << key << ":\n";
      render_text(val, os, indent + 1);
    } else if (val.is_array()) {
      bool scalars = true;
      for (const auto& e : val) scalars = scalars && !e.is_structured();
      if (scalars) {
        os << pad << key << ":";
        for (const auto& e : val)
          os << ' ' << (e.is_string() ? e.get<std::string>() : e.dump());
        os << '\n';
      } else {
        os << pad << key << ":\n";
        for (const auto& e : val) {
          os << pad << "  -\n";
          render_text(e, os, indent + 2);
        }
      }
    } else if (val.is_string()) {
      std::string s = val.get<std::string>();
      if (s.find('\n') == std::string::npos) {
        os << pad << key << ": " << s << '\n';
      } else {
        os << pad << key << ": |\n";
        for (const auto& line : split_lines(s))
          if (!line.empty()) os << pad << "  " << line << '\n';
      }
    } else {
      os << pad << key << ": " << val.dump() << '\n';
    }
  }
}

void emit(const std::string& command, const njson& body, const Options& opt, std::ostream& os) {
  if (opt.format == "json") {
    njson full;
    full["schema"] = 1;
    full["command"] = command;
    full["generated_at"] = timestamp_utc();
    for (const auto& [key, val] : body.items()) full[key] = val;
    os << full.dump(2) << '\n';
  } else {
    njson head;
    head["command"] = command;
    render_text(head, os, 0);
    render_text(body, os, 0);
  }
}

PlaneGraph load_graph(const std::string& arg) {
  if (arg == "k4" || arg == "octahedron" || arg == "icosahedron") return generate_named(arg);
  return parse_plane_graph(read_file(arg));
}

Coloring load_or_random_coloring(const PlaneGraph& g, const std::string& arg, int k,
                                 uint64_t seed) {
  if (arg.empty()) return random_proper_coloring(g, k, seed);
  return parse_coloring(read_file(arg));
}

std::string write_counterexample(const CounterexampleFound& ce, const Options& opt) {
  std::string path = opt.out_path.empty() ? "counterexample." + ce.artifact_suffix
                                          : opt.out_path;
  write_file(path, ce.artifact_text);
  return path;
}

njson json_face(const std::array<int, 3>& f) { return njson::array({f[0], f[1], f[2]}); }

njson json_appearance(const Appearance& a) {
  njson out;
  out["template"] = a.config;
  out["center"] = a.center;
  out["rim"] = a.rim;
  out["injection"] = a.injection;
  return out;
}

njson json_solve_stats(const SolveStats& st) {
  njson out;
  out["edge_insertions"] = st.edge_insertions;
  out["identifications"] = st.identifications;
  out["ten_recolorings"] = st.ten_recolorings;
  out["low_degree_peels"] = st.low_degree_peels;
  out["configuration_peels"] = st.configuration_peels;
  njson used = njson::object();
  for (const auto& [id, count] : st.configs_used) used[id] = count;
  out["configs_used"] = used;
  return out;
}

// ----- subcommand bodies; each fills `body` and returns the exit code -----

int cmd_gen(const std::string& kind, int n, long flips, const Options& opt, njson& body) {
  PlaneGraph g;
  if (kind == "triangulation") {
    g = generate_random_triangulation(n, opt.seed, flips);
    body["kind"] = kind;
    body["seed"] = opt.seed;
  } else if (kind == "mindeg5") {
    g = generate_random_mindeg5(n, opt.seed);
    body["kind"] = kind;
    body["seed"] = opt.seed;
  } else {
    g = generate_named(kind);
    body["kind"] = kind;
  }
  body["n"] = g.n;
  body["edges"] = g.edge_count();
  std::string text = format_plane_graph(g);
  if (!opt.out_path.empty()) write_file(opt.out_path, text);
  body["graph"] = text;
  return 0;
}

int cmd_validate(const std::string& graph_arg, njson& body) {
  PlaneGraph g = load_graph(graph_arg);
  validate(g);
  body["valid"] = true;
  body["n"] = g.n;
  body["edges"] = g.edge_count();
  body["faces"] = faces(g).size();
  body["components"] = components(g).size();
  auto rep = validate_triangulation(g);
  body["connected"] = rep.connected;
  body["triangulation"] = rep.is_triangulation;
  body["min_degree"] = rep.min_degree;
  if (g.outer) body["outer"] = json_face(*g.outer);
  if (!rep.issues.empty()) body["issues"] = rep.issues;
  return 0;
}

int cmd_explore(const std::string& graph_arg, int k, const Options& opt, njson& body) {
  PlaneGraph g = load_graph(graph_arg);
  validate(g);
  ExploreReport rep = explore(g, k, opt.budget_states);
  body["n"] = g.n;
  body["k"] = rep.k;
  body["states"] = rep.states;
  body["budget_exceeded"] = rep.budget_exceeded;
  if (!rep.budget_exceeded) {
    body["frozen"] = rep.frozen;
    body["orbits"] = rep.orbits;
    body["connected"] = rep.connected;
    body["component_sizes"] = rep.component_sizes;
    body["component_diameters"] = rep.component_diameters;
    body["diameter"] = rep.diameter;
  }
  return 0;
}

njson json_lemma(const LemmaReport& rep) {
  njson row;
  row["name"] = rep.name;
  row["classes"] = rep.classes;
  row["instances"] = rep.instances;
  row["recolorable"] = rep.recolorable;
  row["exceptional"] = rep.exceptional;
  row["verified"] = rep.verified;
  if (!rep.failure.empty()) row["failure"] = rep.failure;
  return row;
}

int cmd_verify_lemmas(const std::string& single, const Options& opt, njson& body) {
  std::vector<LemmaReport> reports;
  if (single.empty()) {
    reports = verify_base_lemmas();
  } else {
    reports.push_back(verify_base_lemma(single));
  }
  njson rows = njson::array();
  bool all = true;
  const LemmaReport* bad = nullptr;
  for (const auto& rep : reports) {
    rows.push_back(json_lemma(rep));
    all = all && rep.verified;
    if (!rep.verified && !bad) bad = &rep;
  }
  body["lemmas"] = rows;
  body["all_verified"] = all;
  if (!all) {
    if (bad->counterexample) {
      std::string path =
          write_counterexample({bad->name, format_motif(*bad->counterexample), "motif"}, opt);
      body["counterexample"] = {{"context", bad->name}, {"artifact", path}};
    }
    return 2;
  }
  return 0;
}

int cmd_verify_catalog(const std::string& single, const std::string& mode_arg,
                       const Options& opt, njson& body) {
  const Catalog& cat = default_catalog();
  std::vector<const ConfigurationTemplate*> todo;
  for (const auto& t : cat.templates)
    if (single.empty() || t.id == single) todo.push_back(&t);
  if (todo.empty()) throw CatalogError("no catalog template named '" + single + "'");
  njson rows = njson::array();
  bool all = true;
  body["seed"] = opt.seed;
  body["samples"] = opt.samples;
  std::string ce_context, ce_text;
  for (const auto* t : todo) {
    VerifyMode mode = default_verify_mode(*t);
    if (mode_arg == "exhaustive") mode = VerifyMode::Exhaustive;
    if (mode_arg == "randomized") mode = VerifyMode::Randomized;
    VerifyReport rep =
        verify_configuration(*t, mode, opt.samples, mix_seed(opt.seed, config_tag(t->id)));
    njson row;
    row["config"] = rep.config;
    row["mode"] = verify_mode_token(rep.mode);
    row["classes_total"] = rep.classes_total;
    row["classes_checked"] = rep.classes_checked;
    row["classes_covered"] = rep.classes_covered;
    row["samples"] = rep.samples;
    row["verified"] = rep.verified;
    row["exhausted"] = rep.exhausted;
    row["game_nodes"] = rep.stats.nodes;
    rows.push_back(row);
    all = all && rep.verified;
    if (!rep.verified && ce_text.empty() && rep.counterexample) {
      ce_context = rep.config;
      ce_text = format_motif(*rep.counterexample);
    }
  }
  body["configs"] = rows;
  body["all_verified"] = all;
  if (!all) {
    if (!ce_text.empty()) {
      std::string path = write_counterexample({ce_context, ce_text, "motif"}, opt);
      body["counterexample"] = {{"context", ce_context}, {"artifact", path}};
    }
    return 2;
  }
  return 0;
}

int cmd_find_config(const std::string& graph_arg, const Options& opt, njson& body) {
  PlaneGraph g = load_graph(graph_arg);
  validate(g);
  try {
    InducedAppearance found = find_induced_configuration(g, default_catalog());
    body["appearance"] = json_appearance(found.appearance);
    body["used_separating_triangle"] = found.used_separating_triangle;
    if (found.used_separating_triangle) {
      body["disk_triangle"] = json_face(found.disk_triangle);
      body["disk_vertices"] = found.disk_vertices.size();
    }
    return 0;
  } catch (const std::logic_error& e) {
    // The discharging argument guarantees an appearance; its absence is a
    // theorem-level counterexample, so persist the graph for triage.
    std::string path = write_counterexample({e.what(), format_plane_graph(g), "graph"}, opt);
    body["appearance"] = nullptr;
    body["error"] = {{"code", "guarantee_failed"}, {"message", e.what()}};
    body["counterexample"] = {{"context", graph_arg}, {"artifact", path}};
    return 2;
  }
}

int cmd_discharge(const std::string& graph_arg, const Options& opt, njson& body) {
  PlaneGraph g = load_graph(graph_arg);
  validate(g);
  if (!g.outer) {
    // Pick the first traced face deterministically so plain triangulation
    // files work; the choice is reported.
    auto all = faces(g);
    if (all.empty() || all[0].size() != 3)
      throw GraphError("discharging needs a triangulation with a triangular face");
    g.outer = std::array<int, 3>{all[0][0], all[0][1], all[0][2]};
    validate(g);
  }
  body["n"] = g.n;
  body["outer"] = json_face(*g.outer);
  auto classes = classify_vertices(g);
  long big = 0, medium = 0, small = 0, none = 0;
  for (auto c : classes) {
    if (c == VertexClass::Big) ++big;
    if (c == VertexClass::Medium) ++medium;
    if (c == VertexClass::Small) ++small;
    if (c == VertexClass::None) ++none;
  }
  body["classes"] = {{"big", big}, {"medium", medium}, {"small", small}, {"none", none}};
  ChargeLedger ledger = apply_rules(g);
  long long initial_total = 0;
  for (int c : ledger.initial) initial_total += c;
  FinalChargeReport fin = final_charges(g, ledger);
  body["initial_total"] = initial_total;
  body["final_total"] = fin.total;
  body["conserved"] = fin.conserved;
  body["mediums_zero"] = fin.mediums_zero;
  njson rows = njson::array();
  for (const auto& tr : ledger.transfers) {
    njson row;
    row["rule"] = tr.rule;
    row["source"] = tr.source;
    row["sink"] = tr.sink;
    row["amount"] = tr.amount;
    row["leave_face"] = json_face(tr.leave_face);
    row["pass_face"] = json_face(tr.pass_face);
    row["arrive_edge"] = njson::array({tr.arrive_edge[0], tr.arrive_edge[1]});
    rows.push_back(row);
  }
  body["transfers"] = rows;
  njson incoming = njson::array();
  for (const auto& [v, units] : fin.small_incoming)
    incoming.push_back({{"vertex", v}, {"units", units}});
  body["small_incoming"] = incoming;
  if (none == 0) {
    auto found = find_appearance(g, default_catalog());
    body["appearance"] = found ? json_appearance(*found) : njson(nullptr);
  } else {
    // Inner vertices of degree below five void the appearance guarantee.
    body["appearance"] = nullptr;
  }
  if (!fin.conserved || !fin.mediums_zero) {
    std::string path =
        write_counterexample({"charge conservation", format_plane_graph(g), "graph"}, opt);
    body["counterexample"] = {{"context", graph_arg}, {"artifact", path}};
    return 2;
  }
  return 0;
}

int cmd_solve(const std::string& graph_arg, const std::string& coloring_arg,
              const Options& opt, njson& body) {
  PlaneGraph g = load_graph(graph_arg);
  validate(g);
  Coloring alpha = load_or_random_coloring(g, coloring_arg, 10, opt.seed);
  body["n"] = g.n;
  if (coloring_arg.empty()) body["seed"] = opt.seed;
  try {
    SolveResult res = solve_scene(Scene{g, alpha});
    body["length"] = res.sequence.size();
    body["length_bound"] = 2 * g.n;
    body["stats"] = json_solve_stats(res.stats);
    std::string text = format_sequence(res.sequence);
    if (!opt.out_path.empty()) write_file(opt.out_path, text);
    body["sequence"] = text;
    body["final"] = format_coloring(res.final);
    return 0;
  } catch (const ReductionFailure& e) {
    std::string path = write_counterexample({e.context, format_motif(e.motif), "motif"},
                                            Options{});  // keep --out for the sequence
    body["error"] = {{"code", "reduction_failure"}, {"message", e.what()}};
    body["counterexample"] = {{"context", e.context}, {"artifact", path}};
    return 2;
  }
}

int cmd_transform(const std::string& graph_arg, const std::string& a_arg,
                  const std::string& b_arg, int exact_cap, const Options& opt, njson& body) {
  PlaneGraph g = load_graph(graph_arg);
  validate(g);
  Coloring alpha = load_or_random_coloring(g, a_arg, 10, mix_seed(opt.seed, 1));
  Coloring beta = load_or_random_coloring(g, b_arg, 10, mix_seed(opt.seed, 2));
  body["n"] = g.n;
  if (a_arg.empty() || b_arg.empty()) body["seed"] = opt.seed;
  try {
    PartitionOptions popts;
    popts.exact_cap = exact_cap;
    popts.seed = opt.seed;
    TransformResult res = transform_10(g, alpha, beta, default_catalog(), popts);
    body["length"] = res.sequence.size();
    body["length_bound"] = 8 * g.n;
    body["independent_set"] = res.independent;
    body["lengths"] = {{"first", res.first_length},
                       {"middle", res.middle_length},
                       {"second", res.second_length}};
    body["stats"] = {{"first", json_solve_stats(res.first_stats)},
                     {"second", json_solve_stats(res.second_stats)}};
    std::string text = format_sequence(res.sequence);
    if (!opt.out_path.empty()) write_file(opt.out_path, text);
    body["sequence"] = text;
    return 0;
  } catch (const ReductionFailure& e) {
    std::string path =
        write_counterexample({e.context, format_motif(e.motif), "motif"}, Options{});
    body["error"] = {{"code", "reduction_failure"}, {"message", e.what()}};
    body["counterexample"] = {{"context", e.context}, {"artifact", path}};
    return 2;
  }
}

std::string error_code_of(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "parse_error";
  if (dynamic_cast<const GraphError*>(&e)) return "graph_error";
  if (dynamic_cast<const ColoringError*>(&e)) return "coloring_error";
  if (dynamic_cast<const CatalogError*>(&e)) return "catalog_error";
  if (dynamic_cast<const MotifError*>(&e)) return "motif_error";
  if (dynamic_cast<const std::out_of_range*>(&e)) return "unknown_name";
  if (dynamic_cast<const std::logic_error*>(&e)) return "internal_check_failed";
  return "error";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"planar recoloring toolkit"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&opt](CLI::App* sub) {
    sub->add_option("--seed", opt.seed, "random stream seed (default 0)");
    sub->add_option("--samples", opt.samples,
                    "samples per randomized verification (default 1000000)");
    sub->add_option("--budget-states", opt.budget_states,
                    "state cap for explicit state-space walks (default 2000000)");
    sub->add_option("--format", opt.format, "report format: text|json (default text)")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--jobs", opt.jobs, "worker count (accepted; runs single-threaded)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--out", opt.out_path,
                    "artifact path: generated graph / solution sequence / counterexample");
  };

  // gen
  std::string gen_kind;
  int gen_n = 12;
  long gen_flips = -1;
  auto* gen = app.add_subcommand("gen", "generate a graph (named solid or random)");
  gen->add_option("kind", gen_kind, "k4|octahedron|icosahedron|triangulation|mindeg5")
      ->required()
      ->check(CLI::IsMember({"k4", "octahedron", "icosahedron", "triangulation", "mindeg5"}));
  gen->add_option("--n", gen_n, "vertex count for random kinds (default 12)");
  gen->add_option("--flips", gen_flips, "diagonal flips (default 4m)");
  add_common(gen);

  // validate
  std::string val_graph;
  auto* val = app.add_subcommand("validate", "structural checks on a graph file");
  val->add_option("graph", val_graph, "graph file or named solid")->required();
  add_common(val);

  // explore
  std::string exp_graph;
  int exp_k = 10;
  auto* exp = app.add_subcommand("explore", "walk the full recoloring state space");
  exp->add_option("graph", exp_graph, "graph file or named solid")->required();
  exp->add_option("--k", exp_k, "number of colors (default 10)");
  add_common(exp);

  // verify-lemmas
  std::string lem_single;
  auto* lem = app.add_subcommand("verify-lemmas", "exhaustive small recoloring facts");
  lem->add_option("--single", lem_single, "run one named check only");
  add_common(lem);

  // verify-catalog
  std::string cat_single, cat_mode = "auto";
  auto* catv = app.add_subcommand("verify-catalog", "universal list claims per template");
  catv->add_option("--single", cat_single, "verify one template id only");
  catv->add_option("--mode", cat_mode, "auto|exhaustive|randomized (default auto)")
      ->check(CLI::IsMember({"auto", "exhaustive", "randomized"}));
  add_common(catv);

  // find-config
  std::string fc_graph;
  auto* fc = app.add_subcommand("find-config", "induced catalog configuration in a graph");
  fc->add_option("graph", fc_graph, "graph file or named solid")->required();
  add_common(fc);

  // discharge
  std::string dis_graph;
  auto* dis = app.add_subcommand("discharge", "charge redistribution ledger and totals");
  dis->add_option("graph", dis_graph, "graph file or named solid")->required();
  add_common(dis);

  // solve
  std::string sol_graph, sol_coloring;
  auto* sol = app.add_subcommand("solve", "recolor a 10-colored scene down to 9 colors");
  sol->add_option("graph", sol_graph, "graph file or named solid")->required();
  sol->add_option("coloring", sol_coloring, "coloring file (random proper one when omitted)");
  add_common(sol);

  // transform
  std::string tr_graph, tr_a, tr_b;
  int tr_cap = 40;
  auto* tr = app.add_subcommand("transform", "full walk between two 10-colorings");
  tr->add_option("graph", tr_graph, "graph file or named solid")->required();
  tr->add_option("from", tr_a, "start coloring file (random when omitted)");
  tr->add_option("to", tr_b, "target coloring file (random when omitted)");
  tr->add_option("--exact-cap", tr_cap, "complete partition search up to this size");
  add_common(tr);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    // CLI11 prints help to the success stream; route real errors to err.
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    app.exit(e, err, err);
    return 1;
  }

  std::string command = app.get_subcommands().front()->get_name();
  njson body;
  int code = 0;
  try {
    if (gen->parsed()) code = cmd_gen(gen_kind, gen_n, gen_flips, opt, body);
    if (val->parsed()) code = cmd_validate(val_graph, body);
    if (exp->parsed()) code = cmd_explore(exp_graph, exp_k, opt, body);
    if (lem->parsed()) code = cmd_verify_lemmas(lem_single, opt, body);
    if (catv->parsed()) code = cmd_verify_catalog(cat_single, cat_mode, opt, body);
    if (fc->parsed()) code = cmd_find_config(fc_graph, opt, body);
    if (dis->parsed()) code = cmd_discharge(dis_graph, opt, body);
    if (sol->parsed()) code = cmd_solve(sol_graph, sol_coloring, opt, body);
    if (tr->parsed()) code = cmd_transform(tr_graph, tr_a, tr_b, tr_cap, opt, body);
  } catch (const std::exception& e) {
    body["error"] = {{"code", error_code_of(e)}, {"message", e.what()}};
    emit(command, body, opt, opt.format == "json" ? out : err);
    return 1;
  }
  emit(command, body, opt, out);
  return code;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, out, err);
}

}  // namespace rcp
