#pragma once

// Command-line front end. Exit codes: 0 ok, 1 usage or input error,
// 2 precondition violation, 3 internal invariant failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "rbp/rbp.hpp"

namespace rbp::cli {

inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kPrecondition = 2;
inline constexpr int kInvariant = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvariantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw UsageError("cannot write '" + path + "'");
}

inline Instance load_instance(const std::string& path) {
  std::istringstream in(read_file(path));
  return parse_instance(in);
}

inline EdgeSet load_edges(const std::string& path, const Instance& inst) {
  std::istringstream in(read_file(path));
  return parse_edge_list(in, inst);
}

inline const std::vector<std::string>& algorithms() {
  static const std::vector<std::string> names{"exact",    "line",          "circle",         "approx-union",
                                              "approx-a", "oracle-forest", "oracle-subsets", "auto"};
  return names;
}

struct SolveConfig {
  std::string input;
  std::string algo = "auto";
  std::string out;
  std::string svg;
  std::string reference;
  double tolerance = kWeightTolerance;
  std::size_t max_purple = kOracleForestMaxPurple;
};

/// Runs one solver by name. `note` receives the auto selection and warnings.
inline Solution run_algorithm(const Instance& inst, const std::string& algo, const SolveConfig& cfg,
                              std::string& note, std::ostream& err) {
  const double cert_tol = std::max(cfg.tolerance, 1e-15);
  if (algo == "exact") return solve_exact(inst, ExactOptions{cfg.tolerance, false});
  if (algo == "line") return solve_line(inst, cert_tol);
  if (algo == "circle") return solve_circle(inst, cert_tol);
  if (algo == "approx-union") return approx_union(inst);
  if (algo == "approx-a") return approx_a(inst);
  if (algo == "oracle-forest") return oracle_forest(inst, cfg.max_purple);
  if (algo == "oracle-subsets") return oracle_subsets(inst);
  if (algo == "auto") {
    std::string pick;
    if (check_collinear(inst, cert_tol).collinear) pick = "line";
    else if (check_concyclic(inst, cert_tol).concyclic) pick = "circle";
    else if (inst.size() <= 20) pick = "exact";
    else {
      pick = "approx-a";
      err << "warning: " << inst.size() << " points is too many for the exact solver; using approx-a\n";
    }
    note = "auto:" + pick;
    return run_algorithm(inst, pick, cfg, note, err);
  }
  throw UsageError("unknown algorithm '" + algo + "'");
}

inline int cmd_solve(const SolveConfig& cfg, std::ostream& out, std::ostream& err) {
  const Instance inst = load_instance(cfg.input);
  std::string note;
  Solution sol = run_algorithm(inst, cfg.algo, cfg, note, err);
  if (sol.invalid_edges != 0 || !is_rbp_spanning(inst, sol.edges)) {
    throw InvariantError(sol.solver + " returned a graph that is not RBP spanning");
  }
  count_crossings(inst, sol);

  std::string stats = format_stats(sol);
  if (!note.empty()) stats += "selection " + note + '\n';
  if (!cfg.reference.empty()) {
    double reference = 0.0;
    ReferenceKind kind = ReferenceKind::Optimum;
    if (cfg.reference == "exact") reference = solve_exact(inst, ExactOptions{cfg.tolerance, false}).weight;
    else if (cfg.reference == "oracle") reference = oracle_forest(inst, cfg.max_purple).weight;
    else {
      const auto edges = load_edges(cfg.reference, inst);
      if (!is_rbp_spanning(inst, edges)) throw PreconditionError("reference edge list is not RBP spanning");
      reference = edges.weight();
      kind = ReferenceKind::UpperBound;
    }
    const auto r = ratio_report(sol, reference, kind);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", r.ratio);
    stats += "ratio " + std::string(buf) + '\n';
    std::snprintf(buf, sizeof buf, "%.17g", reference);
    stats += "reference_weight " + std::string(buf) + '\n';
    stats += std::string("reference_kind ") + (kind == ReferenceKind::Optimum ? "optimum" : "upper_bound") + '\n';
  }
  out << stats;
  if (cfg.out.empty()) out << "edges " << sol.edges.size() << '\n' << format_edge_list(sol.edges);
  else write_file(cfg.out, format_edge_list(sol.edges));
  if (!cfg.svg.empty()) write_file(cfg.svg, render_svg(inst, sol.edges));
  return kOk;
}

/// "key=value" pairs into numeric generator parameters.
inline std::map<std::string, double> parse_params(const std::vector<std::string>& raw) {
  std::map<std::string, double> params;
  for (const auto& kv : raw) {
    const auto eq = kv.find('=');
    double v = 0.0;
    if (eq == std::string::npos || eq == 0 || !detail::parse_double(std::string_view(kv).substr(eq + 1), v)) {
      throw UsageError("parameter '" + kv + "' is not of the form key=number");
    }
    params[kv.substr(0, eq)] = v;
  }
  return params;
}

inline int cmd_gen(const GenSpec& spec, const std::string& out_path, const std::string& solution_path,
                   std::ostream& out) {
  const GeneratedInstance g = [&] {
    try {
      return generate(spec);
    } catch (const std::invalid_argument& e) {
      throw PreconditionError(e.what());
    }
  }();
  const std::string text = serialize_instance(g.instance, g.labels);
  if (out_path.empty() || out_path == "-") out << text;
  else write_file(out_path, text);
  if (!solution_path.empty()) {
    if (!g.constructed) throw UsageError("generator '" + spec.name + "' has no constructed solution");
    write_file(solution_path, format_edge_list(*g.constructed));
  }
  return kOk;
}

inline int cmd_validate(const std::string& input, const std::string& edges_path, std::ostream& out) {
  const Instance inst = load_instance(input);
  const auto line = check_collinear(inst);
  const auto circle = check_concyclic(inst);
  out << "points " << inst.size() << '\n'
      << "red " << inst.red().size() << '\n'
      << "blue " << inst.blue().size() << '\n'
      << "purple " << inst.purple_count() << '\n'
      << "allowed_edges " << allowed_edge_count(inst) << '\n'
      << "equal_distance_pairs " << inst.general_position_violations() << '\n'
      << "collinear " << (line.collinear ? "yes" : "no") << '\n'
      << "concyclic " << (circle.concyclic ? "yes" : "no") << '\n';
  if (edges_path.empty()) return kOk;
  const auto edges = load_edges(edges_path, inst);
  const bool ok = is_rbp_spanning(inst, edges);
  Solution s = solution_stats(inst, edges, "input");
  out << format_stats(s) << "rbp_spanning " << (ok ? "yes" : "no") << '\n';
  return ok && s.invalid_edges == 0 ? kOk : kPrecondition;
}

inline int cmd_render(const std::string& input, const std::string& edges_path, const std::string& out_path,
                      std::ostream& out) {
  const Instance inst = load_instance(input);
  const EdgeSet edges = edges_path.empty() ? EdgeSet{} : load_edges(edges_path, inst);
  const std::string svg = render_svg(inst, edges);
  if (out_path.empty() || out_path == "-") out << svg;
  else write_file(out_path, svg);
  return kOk;
}

struct BenchConfig {
  std::string solver = "all";
  std::size_t reps = 5;
  std::uint64_t seed = 1;
  std::vector<std::size_t> line_sizes{10000, 100000, 1000000};
  std::vector<std::size_t> circle_sizes{50, 100, 200};
  std::size_t per_arc = 2;
  std::vector<std::size_t> exact_sizes{8, 10, 12, 14};
};

inline int cmd_bench(const BenchConfig& cfg, std::ostream& out) {
  std::vector<BenchRow> rows;
  auto take = [&](std::vector<BenchRow> more) { rows.insert(rows.end(), more.begin(), more.end()); };
  const bool all = cfg.solver == "all";
  if (all || cfg.solver == "line") take(bench_line(cfg.line_sizes, cfg.reps, cfg.seed));
  if (all || cfg.solver == "circle") take(bench_circle(cfg.circle_sizes, cfg.per_arc, cfg.reps, cfg.seed));
  if (all || cfg.solver == "exact") take(bench_exact(cfg.exact_sizes, cfg.reps, cfg.seed));
  out << format_bench(rows);
  return kOk;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum red-blue-purple spanning graphs"};
  app.require_subcommand(1);

  SolveConfig solve;
  auto* s = app.add_subcommand("solve", "Solve an instance and print its statistics");
  s->add_option("input", solve.input, "Instance file")->required();
  s->add_option("--algo", solve.algo, "Solver")->check(CLI::IsMember(algorithms()))->capture_default_str();
  s->add_option("--out", solve.out, "Write the edge list here instead of stdout");
  s->add_option("--svg", solve.svg, "Also render the solution to this SVG file");
  s->add_option("--reference", solve.reference, "Ratio reference: exact, oracle or an edge-list file");
  s->add_option("--tolerance", solve.tolerance,
                "Relative tolerance for ties and collinear/concyclic certificates")
      ->capture_default_str();
  s->add_option("--max-purple", solve.max_purple, "Purple-point bound for oracle-forest")->capture_default_str();

  GenSpec spec;
  std::vector<std::string> params;
  std::string gen_out, gen_solution;
  auto* g = app.add_subcommand("gen", "Generate an instance");
  g->add_option("name", spec.name, "random, random-line, random-circle, hexagon, steiner or martini")->required();
  g->add_option("-p,--param", params, "Generator parameter key=value (repeatable)");
  g->add_option("--seed", spec.seed, "Random seed")->capture_default_str();
  g->add_option("--out", gen_out, "Output file (default stdout)");
  g->add_option("--solution", gen_solution, "Write the constructed solution's edge list here");

  std::string v_input, v_edges;
  auto* v = app.add_subcommand("validate", "Check an instance and optionally an edge list");
  v->add_option("input", v_input, "Instance file")->required();
  v->add_option("--edges", v_edges, "Edge list to check");

  std::string r_input, r_edges, r_out;
  auto* r = app.add_subcommand("render", "Draw an instance and edge list as SVG");
  r->add_option("input", r_input, "Instance file")->required();
  r->add_option("--edges", r_edges, "Edge list");
  r->add_option("--out", r_out, "Output file (default stdout)");

  BenchConfig bench;
  auto* b = app.add_subcommand("bench", "Median solver wall times");
  b->add_option("--solver", bench.solver, "line, circle, exact or all")
      ->check(CLI::IsMember({"line", "circle", "exact", "all"}))
      ->capture_default_str();
  b->add_option("--reps", bench.reps, "Repetitions per size")->check(CLI::PositiveNumber)->capture_default_str();
  b->add_option("--seed", bench.seed, "Random seed")->capture_default_str();
  b->add_option("--line-sizes", bench.line_sizes, "Point counts for the line solver");
  b->add_option("--circle-sizes", bench.circle_sizes, "Purple counts for the circle solver");
  b->add_option("--per-arc", bench.per_arc, "Red/blue points per circle arc")->capture_default_str();
  b->add_option("--exact-sizes", bench.exact_sizes, "Point counts for the exact solver");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*s) return cmd_solve(solve, out, err);
    if (*g) {
      spec.params = parse_params(params);
      return cmd_gen(spec, gen_out, gen_solution, out);
    }
    if (*v) return cmd_validate(v_input, v_edges, out);
    if (*r) return cmd_render(r_input, r_edges, r_out, out);
    if (*b) return cmd_bench(bench, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InstanceError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << '\n';
    return kPrecondition;
  } catch (const InvariantError& e) {
    err << "invariant: " << e.what() << '\n';
    return kInvariant;
  } catch (const std::invalid_argument& e) {
    err << "precondition: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::logic_error& e) {
    err << "invariant: " << e.what() << '\n';
    return kInvariant;
  }
  return kUsage;
}

}  // namespace rbp::cli
