// Command-line front end for the precoloring-extension toolkit.
//
// Exit codes: 0 ok, 1 verification failed, 2 input error,
// 3 requested guarantee not applicable, 4 no base coloring with r colors.

#include <cmath>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "precolor/colorgraph.hpp"
#include "precolor/errors.hpp"
#include "precolor/extend2.hpp"
#include "precolor/extend3.hpp"
#include "precolor/graph.hpp"
#include "precolor/instances.hpp"
#include "precolor/io.hpp"
#include "precolor/oracle.hpp"

namespace {

using json = nlohmann::json;
using namespace precolor;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitNotApplicable = 3;
constexpr int kExitNoBase = 4;

struct TheoremCheck {
  std::string name;
  long long bound = 0;
  long long weight = 0;
  int budget = 0;
  bool applicable = false;
  long long margin() const { return bound - weight; }
};

TheoremCheck d2_check(int r, int k, long long weight) {
  TheoremCheck check;
  check.weight = weight;
  int s = r + k;
  if (k <= r) {
    if (s % 2 == 0) {
      check.name = "even";
      check.bound = 2LL * (s - 1);
    } else {
      check.name = "odd";
      check.bound = std::min<long long>(3LL * (s - 1), static_cast<long long>(s + 3) * (s + 5) / 8);
    }
    check.budget = (3 * r + k + 1) / 2;
  } else {
    long long quad = (2 * k <= 3 * r - 7)
                         ? static_cast<long long>(k + 3 * r - 4) * (k - r + 3) / 2
                         : static_cast<long long>(k + 1) * (k + 2) / 2;
    check.name = 2 * k <= 3 * r - 7 ? "large-mid-k" : "large-high-k";
    check.bound = std::min(quad, static_cast<long long>(k - r + 2) * (k + r - 1));
    check.budget = r + k;
  }
  check.applicable = weight < check.bound;
  return check;
}

int run_analyze(const std::string& graph_path, const std::string& pre_path, int r,
                std::optional<int> k_flag, bool as_json) {
  Graph g = load_dimacs_file(graph_path);
  Precoloring d = load_precoloring(read_file(pre_path), g.n());
  if (auto bad = precoloring_conflict(g, d)) {
    std::cerr << "error: precoloring assigns one color to adjacent vertices " << bad->first + 1
              << " and " << bad->second + 1 << "\n";
    return kExitInputError;
  }
  int maxd = max_color(d);
  int k = k_flag.value_or(std::max(1, maxd - r));
  if (r < 1 || k < 1) {
    std::cerr << "error: r and k must be positive\n";
    return kExitInputError;
  }
  if (maxd > r + k) {
    std::cerr << "error: precoloring uses color " << maxd << " beyond r+k = " << r + k << "\n";
    return kExitInputError;
  }
  auto p = precolored_vertices(d);
  long long d1 = static_cast<long long>(pairs_within(g, p, 1).size());
  long long d2 = static_cast<long long>(pairs_within(g, p, 2).size());
  long long d3 = static_cast<long long>(pairs_within(g, p, 3).size());
  OrderedPartition part = build_partition(g, d, r + k);
  long long weight = partition_weight(part);
  int k3 = least_k_for_pair_count(d3);
  TheoremCheck check = d2_check(r, k, weight);
  bool d3_applicable = maxd <= r + 1;
  int target = k <= r ? (r + k) / 2 : r;
  auto matching = find_good_matching(part, target);

  if (as_json) {
    json out;
    out["schema"] = 1;
    out["p_size"] = p.size();
    out["pairs_within"] = {{"1", d1}, {"2", d2}, {"3", d3}};
    json phi = json::array();
    for (const auto& [edge, count] : part.phi) phi.push_back({edge.first, edge.second, count});
    out["phi"] = phi;
    out["weight"] = weight;
    out["distance3"] = {{"applicable", d3_applicable},
                        {"k_min", k3},
                        {"budget", r + k3}};
    out["distance2"] = {{"theorem", check.name}, {"bound", check.bound},
                        {"weight", weight},      {"margin", check.margin()},
                        {"satisfied", check.applicable}, {"budget", check.budget},
                        {"target_order", target}};
    if (matching) {
      json pairs = json::array();
      for (const auto& [a, b] : *matching) pairs.push_back({a, b});
      out["good_matching"] = pairs;
    } else {
      out["good_matching"] = nullptr;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "p_size: " << p.size() << "\n";
    std::cout << "pairs within distance 1: " << d1 << "\n";
    std::cout << "pairs within distance 2: " << d2 << "\n";
    std::cout << "pairs within distance 3: " << d3 << "\n";
    std::cout << "phi:";
    if (part.phi.empty()) std::cout << " (empty)";
    std::cout << "\n";
    for (const auto& [edge, count] : part.phi)
      std::cout << "  {" << edge.first << "," << edge.second << "}: " << count << "\n";
    std::cout << "weight |E1|+2|E2|: " << weight << "\n";
    if (d3_applicable)
      std::cout << "distance-3 route: k_min " << k3 << ", budget " << r + k3 << " colors\n";
    else
      std::cout << "distance-3 route: not applicable (precolors exceed r+1)\n";
    std::cout << "distance-2 route (" << check.name << "): weight " << weight << " vs bound "
              << check.bound << " -> "
              << (check.applicable ? "hypothesis satisfied, margin " : "hypothesis violated by margin ")
              << (check.applicable ? check.margin() : -check.margin() ) << ", budget " << check.budget
              << " colors\n";
    if (matching) {
      std::cout << "good matching of order " << target << ":";
      for (const auto& [a, b] : *matching) std::cout << " {" << a << "," << b << "}";
      std::cout << "\n";
    } else {
      std::cout << "no good matching of order " << target << " exists\n";
    }
  }
  return kExitOk;
}

int run_extend(const std::string& graph_path, const std::string& pre_path, int r,
               const std::string& k_flag, const std::string& strategy,
               const std::string& base_flag, const std::string& fallback,
               const std::string& out_path, bool as_json) {
  Graph g = load_dimacs_file(graph_path);
  Precoloring d = load_precoloring(read_file(pre_path), g.n());
  if (auto bad = precoloring_conflict(g, d)) {
    std::cerr << "error: precoloring assigns one color to adjacent vertices " << bad->first + 1
              << " and " << bad->second + 1 << "\n";
    return kExitInputError;
  }
  int maxd = max_color(d);

  Coloring base;
  if (base_flag == "solve") {
    auto solved = exact_k_colorable(g, r);
    if (!solved) {
      std::cerr << "error: the graph has no coloring with r = " << r << " colors\n";
      return kExitNoBase;
    }
    base = *solved;
  } else {
    base = load_coloring(read_file(base_flag), g.n());
    if (!is_proper(g, base) || max_color(base) > r) {
      std::cerr << "error: base coloring is not a proper coloring over [r]\n";
      return kExitInputError;
    }
  }

  auto p = precolored_vertices(d);
  long long d3_pairs = static_cast<long long>(pairs_within(g, p, 3).size());
  bool k_auto = k_flag == "auto";
  int k_fixed = k_auto ? 0 : std::stoi(k_flag);
  if (!k_auto && k_fixed < 1) {
    std::cerr << "error: k must be positive\n";
    return kExitInputError;
  }

  int k3 = k_auto ? least_k_for_pair_count(d3_pairs) : k_fixed;
  int k2 = k_auto ? std::max(1, maxd - r) : k_fixed;
  bool d3_possible = maxd <= r + 1;
  int budget3 = r + k3;
  int budget2 = k2 <= r ? (3 * r + k2 + 1) / 2 : r + k2;

  std::string chosen = strategy;
  if (strategy == "auto") chosen = (d3_possible && budget3 <= budget2) ? "d3" : "d2";

  json out;
  out["schema"] = 1;
  out["strategy"] = chosen;
  out["r"] = r;
  if (strategy == "auto")
    out["strategy_comparison"] = {{"d3_applicable", d3_possible},
                                  {"d3_budget", budget3},
                                  {"d2_budget", budget2}};

  std::optional<Coloring> result;
  bool outside_guarantee = false;
  std::string failure;
  if (chosen == "d3") {
    out["k"] = k3;
    try {
      result = extend_distance3(g, d, base, r, k3);
      out["budget"] = budget3;
    } catch (const guarantee_error& e) {
      failure = e.what();
    }
  } else {
    out["k"] = k2;
    if (maxd > r + k2) {
      std::cerr << "error: precoloring uses color " << maxd << " beyond r+k = " << r + k2 << "\n";
      return kExitInputError;
    }
    Extend2Result r2 = extend_distance2(g, d, base, r, k2);
    out["theorem"] = r2.report.theorem;
    out["weight"] = r2.report.weight;
    out["bound"] = r2.report.bound;
    out["d2_pairs"] = r2.report.d2_pairs;
    out["hypothesis_satisfied"] = r2.report.hypothesis_satisfied;
    if (r2.coloring) {
      json matching = json::array();
      for (const auto& [a, b] : r2.report.matching) matching.push_back({a, b});
      out["matching"] = matching;
      out["budget"] = r2.report.budget;
      result = std::move(r2.coloring);
    } else {
      failure = "no good matching of order " + std::to_string(r2.report.target);
    }
  }

  if (!result) {
    if (fallback == "greedy") {
      result = greedy_extension(g, d);
      outside_guarantee = true;
      out["fallback"] = "greedy";
    } else {
      std::cerr << "guarantee not applicable: " << failure << "\n";
      std::cerr << "(rerun with --fallback greedy for a best-effort extension)\n";
      return kExitNotApplicable;
    }
  }

  // Self-check before anything is written.
  if (!is_proper(g, *result) || !extends(*result, d)) {
    std::cerr << "internal error: produced coloring failed verification\n";
    return kExitNotApplicable;
  }
  write_file(out_path, save_coloring(*result));
  out["colors_used"] = distinct_colors(*result);
  out["outside_guarantee"] = outside_guarantee;
  out["output"] = out_path;
  if (as_json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "strategy: " << chosen << (outside_guarantee ? " (greedy fallback)" : "") << "\n";
    if (out.contains("theorem")) std::cout << "theorem: " << out["theorem"].get<std::string>() << "\n";
    std::cout << "colors used: " << distinct_colors(*result) << "\n";
    if (out.contains("budget")) std::cout << "budget: " << out["budget"].get<int>() << "\n";
    if (outside_guarantee) std::cout << "outside guarantee: yes\n";
    std::cout << "wrote " << out_path << "\n";
  }
  return kExitOk;
}

int run_verify(const std::string& graph_path, const std::string& col_path,
               const std::string& pre_path) {
  Graph g = load_dimacs_file(graph_path);
  Coloring f = load_coloring(read_file(col_path), g.n());
  if (auto conflict = coloring_conflict(g, f)) {
    std::cout << "improper: vertices " << conflict->first + 1 << " and " << conflict->second + 1
              << " are adjacent and share color " << f[static_cast<size_t>(conflict->first)] << "\n";
    return kExitVerifyFailed;
  }
  if (!pre_path.empty()) {
    Precoloring d = load_precoloring(read_file(pre_path), g.n());
    if (!extends(f, d)) {
      std::cout << "coloring does not extend the precoloring\n";
      return kExitVerifyFailed;
    }
  }
  std::cout << "ok: proper coloring with " << distinct_colors(f) << " colors\n";
  return kExitOk;
}

int run_oracle(const std::string& graph_path, const std::string& pre_path, int cap,
               const std::string& witness_path) {
  Graph g = load_dimacs_file(graph_path);
  Precoloring d = load_precoloring(read_file(pre_path), g.n());
  auto result = min_extension_colors(g, d, cap);
  if (!result) {
    std::cout << "none <= " << cap << "\n";
    return kExitOk;
  }
  std::cout << "minimum: " << result->colors << "\n";
  if (!witness_path.empty()) write_file(witness_path, save_coloring(result->witness));
  return kExitOk;
}

int run_factorize(int n) {
  for (const auto& factor : one_factorization(n)) {
    bool first = true;
    for (const auto& [a, b] : factor) {
      if (!first) std::cout << ' ';
      std::cout << a << '-' << b;
      first = false;
    }
    std::cout << "\n";
  }
  return kExitOk;
}

int run_gen(const std::string& kind, int r, int k, int q, int n, double edge_prob, int p_size,
            long long max_d2, long long max_d3, std::uint64_t seed, const std::string& prefix) {
  Instance inst;
  if (kind == "sharpness-even") {
    inst = gen_sharpness_even(r, k, q);
  } else if (kind == "sharpness-odd") {
    inst = gen_sharpness_odd(r, k, q);
  } else if (kind == "random") {
    RandomInstanceParams params;
    params.r = r;
    params.k = k;
    params.n = n;
    params.edge_prob = edge_prob;
    params.p_size = p_size;
    params.max_d2 = max_d2;
    params.max_d3 = max_d3;
    params.seed = seed;
    inst = gen_random(params);
  } else {
    std::cerr << "error: unknown instance kind " << kind << "\n";
    return kExitInputError;
  }
  write_file(prefix + ".col", save_dimacs(inst.graph));
  write_file(prefix + ".pre", save_precoloring(inst.d));
  write_file(prefix + ".base", save_coloring(inst.base));
  json meta;
  meta["schema"] = 1;
  meta["kind"] = kind;
  meta["r"] = inst.r;
  meta["k"] = inst.k;
  if (inst.q > 0) meta["q"] = inst.q;
  if (kind == "random") meta["seed"] = seed;
  meta["n"] = inst.graph.n();
  meta["edges"] = inst.graph.edge_count();
  meta["p_size"] = inst.p.size();
  meta["d2_pairs"] = inst.d2_pairs;
  meta["d3_pairs"] = inst.d3_pairs;
  if (inst.budget) meta["unextendable_with"] = *inst.budget;
  meta["graph_file"] = prefix + ".col";
  meta["precoloring_file"] = prefix + ".pre";
  meta["base_coloring_file"] = prefix + ".base";
  write_file(prefix + ".json", meta.dump(2) + "\n");
  std::cout << "wrote " << prefix << ".col/.pre/.base/.json (n=" << inst.graph.n()
            << ", |D2|=" << inst.d2_pairs << ", |D3|=" << inst.d3_pairs << ")\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Precoloring extension under distance constraints"};
  app.require_subcommand(1);

  std::string graph_path, pre_path, col_path, base_flag = "solve", out_path, witness_path;
  std::string k_flag = "auto", strategy = "auto", fallback = "none", kind, prefix = "instance";
  int r = 2, cap = 0, fact_n = 0, q = 0, n = 20, p_size = 4;
  std::optional<int> k_opt;
  double edge_prob = 0.2;
  long long max_d2 = -1, max_d3 = -1;
  std::uint64_t seed = 0;
  bool as_json = false;

  auto* analyze = app.add_subcommand("analyze", "Report distance-pair counts and applicable bounds");
  analyze->add_option("graph", graph_path, "DIMACS graph file")->required();
  analyze->add_option("precoloring", pre_path, "precoloring file")->required();
  analyze->add_option("--r", r, "number of base colors")->required();
  analyze->add_option("--k", k_opt, "extra colors (default: derived from the precoloring)");
  analyze->add_flag("--json", as_json, "JSON output");

  auto* extend = app.add_subcommand("extend", "Extend a precoloring");
  extend->add_option("graph", graph_path)->required();
  extend->add_option("precoloring", pre_path)->required();
  extend->add_option("--r", r, "number of base colors")->required();
  extend->add_option("--k", k_flag, "extra colors or 'auto'");
  extend->add_option("--base", base_flag, "base coloring file, or 'solve'");
  extend->add_option("--strategy", strategy, "d3, d2 or auto")
      ->check(CLI::IsMember({"d3", "d2", "auto"}));
  extend->add_option("--fallback", fallback, "greedy or none")
      ->check(CLI::IsMember({"greedy", "none"}));
  extend->add_option("--out", out_path, "output coloring file")->required();
  extend->add_flag("--json", as_json, "JSON report");

  auto* verify = app.add_subcommand("verify", "Check a coloring (and extension, if given)");
  verify->add_option("graph", graph_path)->required();
  verify->add_option("coloring", col_path)->required();
  verify->add_option("precoloring", pre_path, "optional precoloring to check extension against");

  auto* oracle = app.add_subcommand("oracle", "Exact minimum extension color count");
  oracle->add_option("graph", graph_path)->required();
  oracle->add_option("precoloring", pre_path)->required();
  oracle->add_option("--cap", cap, "largest color count to try")->required();
  oracle->add_option("--witness", witness_path, "write a witness coloring here");

  auto* factorize = app.add_subcommand("factorize", "Print a 1-factorization of K_n");
  factorize->add_option("--n", fact_n, "even vertex count")->required();

  auto* gen = app.add_subcommand("gen", "Generate instances");
  gen->add_option("kind", kind, "sharpness-even, sharpness-odd or random")->required();
  gen->add_option("--r", r)->required();
  gen->add_option("--k", k_opt, "extra colors")->required();
  gen->add_option("--q", q, "partite set size (sharpness kinds)");
  gen->add_option("--n", n, "vertex count (random)");
  gen->add_option("--edge-prob", edge_prob, "edge probability (random)");
  gen->add_option("--p-size", p_size, "precolored set size (random)");
  gen->add_option("--max-d2", max_d2, "distance-2 pair budget (random)");
  gen->add_option("--max-d3", max_d3, "distance-3 pair budget (random)");
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("--out", prefix, "output file prefix");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return run_analyze(graph_path, pre_path, r, k_opt, as_json);
    if (extend->parsed())
      return run_extend(graph_path, pre_path, r, k_flag, strategy, base_flag, fallback, out_path,
                        as_json);
    if (verify->parsed()) return run_verify(graph_path, col_path, pre_path);
    if (oracle->parsed()) return run_oracle(graph_path, pre_path, cap, witness_path);
    if (factorize->parsed()) return run_factorize(fact_n);
    if (gen->parsed())
      return run_gen(kind, r, k_opt.value_or(1), q, n, edge_prob, p_size, max_d2, max_d3, seed,
                     prefix);
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const guarantee_error& e) {
    std::cerr << "guarantee not applicable: " << e.what() << "\n";
    return kExitNotApplicable;
  } catch (const retry_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
