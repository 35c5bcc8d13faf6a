#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pathcover/exact.hpp"
#include "pathcover/factor.hpp"
#include "pathcover/harness.hpp"
#include "pathcover/hstate.hpp"
#include "pathcover/local_ops.hpp"
#include "pathcover/matching.hpp"
#include "pathcover/phase1.hpp"
#include "pathcover/solver.hpp"
#include "pathcover/structure.hpp"

using nlohmann::json;
using namespace pathcover;

namespace {

Graph load_graph(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    ss << in.rdbuf();
  }
  return parse_graph(ss.str());
}

int oracle_cap_default(int fallback) {
  if (const char* s = std::getenv("PATHCOVER_ORACLE_CAP")) {
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return fallback;
}

double unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct Campaign {
  int count = 100;
  int min_n = 10;
  int max_n = 40;
  std::string model = "mixed";
  std::uint64_t seed = 1;
};

Graph make_instance(const Campaign& c, int i, std::uint64_t& inst_seed, std::string& model) {
  inst_seed = c.seed + static_cast<std::uint64_t>(i);
  std::mt19937_64 rng(inst_seed * 0x9E3779B97F4A7C15ULL + 1);
  int span = std::max(1, c.max_n - c.min_n + 1);
  int n = c.min_n + static_cast<int>(rng() % static_cast<std::uint64_t>(span));
  model = c.model;
  if (model == "mixed") model = i % 2 == 0 ? "uniform" : "planted";
  if (model == "uniform") {
    double p = 0.05 + 0.45 * unit(rng);
    return gen_gnp(n, p, inst_seed);
  }
  int paths = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::max(1, n / 6)));
  double noise = 0.25 * unit(rng);
  return gen_planted(n, paths, noise, inst_seed);
}

void add_campaign_options(CLI::App* cmd, Campaign& c) {
  cmd->add_option("--count", c.count, "number of instances");
  cmd->add_option("--min-n", c.min_n, "smallest instance size");
  cmd->add_option("--max-n", c.max_n, "largest instance size");
  cmd->add_option("--model", c.model, "uniform, planted, or mixed")
      ->check(CLI::IsMember({"uniform", "planted", "mixed"}));
  cmd->add_option("--seed", c.seed, "base seed");
}

json paths_json(const Solution& sol) {
  json arr = json::array();
  for (const Path& p : sol.paths) arr.push_back(p.verts);
  return arr;
}

void print_paths(std::ostream& os, const Solution& sol) {
  for (const Path& p : sol.paths) {
    for (std::size_t i = 0; i < p.verts.size(); ++i) {
      os << (i ? " " : "") << p.verts[i];
    }
    os << '\n';
  }
}

json level_json(const LevelStats& ls) {
  return json{{"n", ls.n},
              {"m", ls.m},
              {"terminal", ls.terminal},
              {"a", ls.a_sum},
              {"b", ls.b_sum},
              {"critical", ls.critical_comps},
              {"ops", {ls.op_counts[0], ls.op_counts[1], ls.op_counts[2]}},
              {"removed", ls.removed_verts}};
}

int cmd_solve(const std::string& input, bool as_json, bool trace) {
  Graph g = load_graph(input);
  SolveResult sr = solve(g);
  if (as_json) {
    json out{{"n", g.n},
             {"m", g.m()},
             {"covered", sr.sol.covered()},
             {"paths", paths_json(sr.sol)},
             {"depth", sr.depth()}};
    if (trace) {
      json levels = json::array();
      for (const LevelStats& ls : sr.levels) levels.push_back(level_json(ls));
      out["levels"] = levels;
    }
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  std::cout << "covered " << sr.sol.covered() << " of " << g.n << " vertices in "
            << sr.sol.paths.size() << " paths\n";
  print_paths(std::cout, sr.sol);
  if (trace) {
    for (std::size_t i = 0; i < sr.levels.size(); ++i) {
      const LevelStats& ls = sr.levels[i];
      std::cout << "# level " << i << ": n=" << ls.n << " m=" << ls.m
                << " a=" << ls.a_sum << " b=" << ls.b_sum
                << " critical=" << ls.critical_comps << " ops=" << ls.op_counts[0]
                << "/" << ls.op_counts[1] << "/" << ls.op_counts[2]
                << (ls.terminal ? " terminal" : " peeled") << '\n';
    }
  }
  return 0;
}

int cmd_exact(const std::string& input, int cap, long long nodes, bool as_json) {
  Graph g = load_graph(input);
  SearchBudget budget;
  budget.vertex_cap = cap;
  if (nodes > 0) budget.node_cap = nodes;
  Solution sol = exact_cover(g, 5, budget);
  if (as_json) {
    json out{{"n", g.n}, {"m", g.m()}, {"covered", sol.covered()}, {"paths", paths_json(sol)}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "optimum " << sol.covered() << " of " << g.n << " vertices\n";
    print_paths(std::cout, sol);
  }
  return 0;
}

int cmd_gen(int n, const std::string& model, double p, int paths, double noise,
            std::uint64_t seed) {
  Graph g = model == "uniform" ? gen_gnp(n, p, seed) : gen_planted(n, paths, noise, seed);
  std::cout << serialize_graph(g);
  return 0;
}

int cmd_verify(const Campaign& c, int cap, bool determinism, const std::string& artifact) {
  VerifyOptions vo;
  vo.oracle.vertex_cap = cap;
  vo.brute_cover_check = true;
  vo.check_determinism = determinism;
  json failures = json::array();
  int bad = 0;
  for (int i = 0; i < c.count; ++i) {
    std::uint64_t inst_seed = 0;
    std::string model;
    Graph g = make_instance(c, i, inst_seed, model);
    VerifyOutcome o = verify_instance(g, inst_seed, model, vo);
    if (o.violations.empty()) continue;
    ++bad;
    std::cerr << "violation: seed=" << inst_seed << " model=" << model << " n=" << g.n
              << '\n';
    for (const std::string& msg : o.violations) std::cerr << "  " << msg << '\n';
    failures.push_back(json{{"seed", inst_seed},
                            {"model", model},
                            {"n", g.n},
                            {"m", g.m()},
                            {"violations", o.violations},
                            {"graph", serialize_graph(g)}});
  }
  std::cout << "verified " << c.count << " instances, " << bad << " with violations\n";
  if (bad > 0) {
    std::ofstream out(artifact);
    out << failures.dump(2) << '\n';
    std::cerr << "replay artifact written to " << artifact << '\n';
    return 4;
  }
  return 0;
}

int cmd_bench(const Campaign& c, int cap, const std::string& out_path) {
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!out_path.empty() && out_path != "-") {
    file.open(out_path);
    if (!file) throw ParseError("cannot open " + out_path);
    os = &file;
  }
  *os << csv_header() << '\n';
  for (int i = 0; i < c.count; ++i) {
    std::uint64_t inst_seed = 0;
    std::string model;
    Graph g = make_instance(c, i, inst_seed, model);
    InstanceRecord rec;
    rec.seed = inst_seed;
    rec.n = g.n;
    rec.m = g.m();
    rec.model = model;
    auto t0 = std::chrono::steady_clock::now();
    SolveResult sr = solve(g);
    auto t1 = std::chrono::steady_clock::now();
    rec.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    rec.alg = sr.sol.covered();
    rec.branch_depth = sr.depth();
    rec.ops = sr.total_ops();
    if (cap > 0 && g.n <= cap) {
      try {
        SearchBudget budget;
        budget.vertex_cap = cap;
        rec.opt = exact_opt(g, 5, budget);
      } catch (const BudgetExceeded&) {
        rec.opt = -1;
      }
    }
    *os << csv_row(rec) << '\n';
  }
  return 0;
}

int cmd_inspect(const std::string& input, bool as_json) {
  Graph g = load_graph(input);
  std::vector<int> mate = maximum_matching(g);
  Phase1Result p1 = run_phase1(g, mate);
  RescueGraph rg = build_rescue_graph(g, p1.h);
  FGInstance inst = build_fg_instance(rg);
  PathCycleCover cover = prune_cover(extract_cover(max_weight_fg_factor(inst), inst), p1.h);
  LocalOpsResult ops = run_until_stable(g, p1.h, cover);
  const StructureView& view = ops.view;
  bool terminal = trunks_suffice(view.a_sum, view.b_sum);

  if (as_json) {
    json comps = json::array();
    for (const Component& k : view.comps) {
      json anchors = json::array();
      for (const Anchor& a : k.anchors) {
        anchors.push_back(json{{"v", a.v}, {"class", anchor_class_name(a.cls)}});
      }
      json sats = json::array();
      for (const Satellite& s : k.sats) {
        sats.push_back(json{{"comp", s.comp},
                            {"kind", kind_name(view.hd.comps[s.comp].kind)},
                            {"anchor", s.anchor},
                            {"attach", s.attach},
                            {"arm", s.arm}});
      }
      comps.push_back(json{{"center", k.center},
                           {"center_kind", kind_name(view.hd.comps[k.center].kind)},
                           {"verts", k.verts},
                           {"s", k.s},
                           {"eta", k.eta},
                           {"critical", k.critical},
                           {"anchors", anchors},
                           {"satellites", sats}});
    }
    json out{{"n", g.n},
             {"m", g.m()},
             {"components", comps},
             {"n0", view.n0},
             {"nc", view.nc},
             {"ncc", view.ncc},
             {"potential", view.potential()},
             {"a", view.a_sum},
             {"b", view.b_sum},
             {"ops", {ops.op_counts[0], ops.op_counts[1], ops.op_counts[2]}},
             {"decision", terminal ? "trunks" : "peel"}};
    std::cout << out.dump(2) << '\n';
    return 0;
  }

  std::cout << "components (" << view.comps.size() << "):\n";
  for (std::size_t ki = 0; ki < view.comps.size(); ++ki) {
    const Component& k = view.comps[ki];
    std::cout << "  [" << ki << "] center=" << kind_name(view.hd.comps[k.center].kind)
              << " elements=" << k.hcomps.size() << " |V|=" << k.verts.size()
              << " s=" << k.s << " eta=" << k.eta << (k.critical ? " critical" : "")
              << "\n      anchors:";
    for (const Anchor& a : k.anchors) {
      std::cout << ' ' << a.v << ':' << anchor_class_name(a.cls);
    }
    std::cout << '\n';
    for (const Satellite& s : k.sats) {
      std::cout << "      satellite " << s.comp << " ("
                << kind_name(view.hd.comps[s.comp].kind) << ") anchored " << s.anchor
                << "<-" << s.attach << '\n';
    }
  }
  std::cout << "free vertices: " << view.isolated_free_verts << '\n';
  std::cout << "n0=" << view.n0 << " nc=" << view.nc << " ncc=" << view.ncc
            << " potential=" << view.potential() << '\n';
  std::cout << "ops applied: " << ops.op_counts[0] << '/' << ops.op_counts[1] << '/'
            << ops.op_counts[2] << '\n';
  std::cout << "a=" << view.a_sum << " b=" << view.b_sum
            << " decision=" << (terminal ? "trunks" : "peel") << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vertex-disjoint long-path cover toolkit"};
  app.require_subcommand(1);

  std::string input = "-";
  bool as_json = false;
  bool trace = false;

  CLI::App* solve_cmd = app.add_subcommand("solve", "run the approximation solver");
  solve_cmd->add_option("input", input, "graph file, '-' for stdin");
  solve_cmd->add_flag("--json", as_json, "JSON output");
  solve_cmd->add_flag("--trace", trace, "include per-level statistics");

  int cap = oracle_cap_default(18);
  long long nodes = 0;
  CLI::App* exact_cmd = app.add_subcommand("exact", "exhaustive reference solver");
  exact_cmd->add_option("input", input, "graph file, '-' for stdin");
  exact_cmd->add_option("--cap", cap, "vertex count limit");
  exact_cmd->add_option("--nodes", nodes, "search node budget");
  exact_cmd->add_flag("--json", as_json, "JSON output");

  int gen_n = 20;
  std::string gen_model = "uniform";
  double gen_p = 0.2;
  int gen_paths = 2;
  double gen_noise = 0.05;
  std::uint64_t gen_seed = 1;
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate a random instance");
  gen_cmd->add_option("--n", gen_n, "vertex count");
  gen_cmd->add_option("--model", gen_model, "uniform or planted")
      ->check(CLI::IsMember({"uniform", "planted"}));
  gen_cmd->add_option("--p", gen_p, "edge probability (uniform)");
  gen_cmd->add_option("--paths", gen_paths, "planted path count");
  gen_cmd->add_option("--noise", gen_noise, "noise edge probability (planted)");
  gen_cmd->add_option("--seed", gen_seed, "seed");

  Campaign verify_c;
  int verify_cap = oracle_cap_default(14);
  bool determinism = false;
  std::string artifact = "pathcover_violation.json";
  CLI::App* verify_cmd = app.add_subcommand("verify", "randomized audit campaign");
  add_campaign_options(verify_cmd, verify_c);
  verify_cmd->add_option("--oracle-cap", verify_cap, "exact reference size limit");
  verify_cmd->add_flag("--determinism", determinism, "run the solver twice per instance");
  verify_cmd->add_option("--artifact", artifact, "replay artifact path");

  Campaign bench_c;
  bench_c.count = 50;
  int bench_cap = 0;
  std::string bench_out;
  CLI::App* bench_cmd = app.add_subcommand("bench", "timing sweep, CSV output");
  add_campaign_options(bench_cmd, bench_c);
  bench_cmd->add_option("--oracle-cap", bench_cap, "compute exact reference up to this size");
  bench_cmd->add_option("--out", bench_out, "CSV path, '-' for stdout");

  CLI::App* inspect_cmd = app.add_subcommand("inspect", "decompose and report structure");
  inspect_cmd->add_option("input", input, "graph file, '-' for stdin");
  inspect_cmd->add_flag("--json", as_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(input, as_json, trace);
    if (exact_cmd->parsed()) return cmd_exact(input, cap, nodes, as_json);
    if (gen_cmd->parsed()) {
      return cmd_gen(gen_n, gen_model, gen_p, gen_paths, gen_noise, gen_seed);
    }
    if (verify_cmd->parsed()) {
      return cmd_verify(verify_c, verify_cap, determinism, artifact);
    }
    if (bench_cmd->parsed()) return cmd_bench(bench_c, bench_cap, bench_out);
    if (inspect_cmd->parsed()) return cmd_inspect(input, as_json);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
