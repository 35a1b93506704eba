#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "helly/bench.hpp"
#include "helly/facility.hpp"
#include "helly/generators.hpp"
#include "helly/io.hpp"
#include "helly/khelly.hpp"
#include "helly/oracle.hpp"
#include "helly/recognition.hpp"

namespace {

using namespace helly;

constexpr std::uint64_t default_seed = 1729;
constexpr Vertex verify_budget = 5000;  // oracle cap: one BFS per vertex is quadratic total

std::uint64_t parse_seed(const std::string& text) {
  if (text == "random") {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  }
  try {
    std::size_t used = 0;
    std::uint64_t seed = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return seed;
  } catch (const std::exception&) {
    throw validation_error("bad --seed value \"" + text + "\" (expected an integer or \"random\")");
  }
}

struct CommonArgs {
  std::string graph_path;
  std::string costs_path;
  std::string seed_text = std::to_string(default_seed);
  bool verify = false;
  int threads = 1;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--graph", args.graph_path, "graph file (\"p <n> <m>\" header + edge lines)")->required();
  cmd->add_option("--costs", args.costs_path, "cost file (\"<vertex> <cost>\" lines, default 1)");
  cmd->add_option("--seed", args.seed_text, "RNG seed (integer, or \"random\" for entropy)");
  cmd->add_flag("--verify", args.verify, "cross-check against the all-pairs oracle when n <= 5000");
  cmd->add_option("--threads", args.threads, "worker threads for the verification oracle")
      ->check(CLI::PositiveNumber);
}

struct Loaded {
  Graph graph;
  CostFn costs;
  std::uint64_t seed = 0;
};

Loaded load_common(const CommonArgs& args) {
  Graph g = parse_graph_file(args.graph_path);
  CostFn c = args.costs_path.empty() ? CostFn::unit(g.vertex_count()) : parse_cost_file(args.costs_path, g.vertex_count());
  return {std::move(g), std::move(c), parse_seed(args.seed_text)};
}

void report_verify(const Loaded& in, int threads, Value value, Vertex vertex, bool median) {
  if (in.graph.vertex_count() > verify_budget) {
    std::cout << "verify skipped (n > " << verify_budget << ")\n";
    return;
  }
  ApspSummary oracle = apsp_summary(in.graph, in.costs, verify_budget, threads);
  Value want = median ? oracle.total_dist[static_cast<std::size_t>(oracle.median.front())] : oracle.radius;
  const std::vector<Vertex>& set = median ? oracle.median : oracle.center;
  if (value != want || !std::binary_search(set.begin(), set.end(), vertex))
    throw algorithm_error("verification failed: oracle optimum " + to_string(want) + ", search returned " +
                          to_string(value) + " at vertex " + std::to_string(vertex));
  std::cout << "verify ok\n";
}

int run_center(const CommonArgs& args) {
  Loaded in = load_common(args);
  CenterResult r = find_center(in.graph, in.costs, in.seed);
  std::cout << "vertex " << r.vertex << " ecc " << to_string(r.value) << "\n";
  if (args.verify) report_verify(in, args.threads, r.value, r.vertex, false);
  return 0;
}

int run_median(const CommonArgs& args) {
  Loaded in = load_common(args);
  MedianResult r = find_medians(in.graph, in.costs, in.seed);
  std::cout << "medians";
  for (Vertex v : r.medians) std::cout << ' ' << v;
  std::cout << " td " << to_string(r.value) << "\n";
  if (args.verify) report_verify(in, args.threads, r.value, r.medians.front(), true);
  return 0;
}

struct RadiusArgs {
  CommonArgs common;
  int k = 2;
  int alpha = 0;
  double eps_scale = 3.0;
};

int run_radius(const RadiusArgs& args) {
  Loaded in = load_common(args.common);
  DecideOptions opts;
  opts.eps_scale = args.eps_scale;
  RadiusResult r = radius(in.graph, args.k, args.alpha, in.seed, opts);
  std::cout << "R " << r.radius << " guarantee [" << r.radius << ", " << r.radius + r.alpha << "]\n";
  if (args.common.verify) {
    if (in.graph.vertex_count() > verify_budget) {
      std::cout << "verify skipped (n > " << verify_budget << ")\n";
    } else {
      ApspSummary oracle = apsp_summary(in.graph, CostFn::unit(in.graph.vertex_count()), verify_budget,
                                        args.common.threads);
      Value rad = oracle.radius;
      if (rad < static_cast<Value>(r.radius) || rad > static_cast<Value>(r.radius + r.alpha))
        throw algorithm_error("verification failed: oracle radius " + to_string(rad) + " outside [" +
                              std::to_string(r.radius) + ", " + std::to_string(r.radius + r.alpha) + "]");
      std::cout << "verify ok\n";
    }
  }
  return 0;
}

struct CheckArgs {
  std::string graph_path;
  int k = 2;
  int alpha = 0;
};

int run_check(const CheckArgs& args) {
  Graph g = parse_graph_file(args.graph_path);
  HellyReport report = is_k_alpha_helly(g, args.k, args.alpha);
  std::cout << "holds=" << (report.holds ? "true" : "false") << " k=" << report.k << " alpha=" << report.alpha
            << "\n";
  if (report.witness) {
    std::cout << "witness";
    for (Vertex v : report.witness->subset) std::cout << ' ' << v;
    std::cout << "\n";
  }
  return 0;
}

struct GenArgs {
  std::string family = "tree";
  Vertex n = 0;
  Vertex rows = 0;
  Vertex cols = 0;
  double density = 0.5;
  std::string seed_text = std::to_string(default_seed);
  std::string out_path;
};

int run_gen(const GenArgs& args) {
  GenSpec spec;
  spec.family = family_from_string(args.family);
  spec.n = args.n;
  spec.rows = args.rows;
  spec.cols = args.cols;
  spec.density = args.density;
  spec.seed = parse_seed(args.seed_text);
  Graph g = spec.family == Family::chordal ? gen_chordal(spec.n, spec.density, spec.seed) : gen_helly(spec);
  if (args.out_path.empty())
    write_graph(std::cout, g);
  else
    write_graph_file(args.out_path, g);
  return 0;
}

struct BenchArgs {
  std::string family = "king-grid";
  std::string algo = "center";
  std::vector<Vertex> sizes;
  std::vector<std::uint64_t> seeds;
  std::string out_path;
};

int run_bench_cmd(const BenchArgs& args) {
  BenchSpec spec;
  spec.family = family_from_string(args.family);
  spec.algo = bench_algo_from_string(args.algo);
  spec.sizes = args.sizes;
  spec.seeds = args.seeds;
  if (spec.seeds.empty()) spec.seeds.push_back(default_seed);
  std::vector<RunRecord> records = run_bench(spec);
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!args.out_path.empty()) {
    file.open(args.out_path);
    if (!file) throw validation_error("cannot open " + args.out_path);
    out = &file;
  }
  *out << run_record_csv_header() << "\n";
  for (const RunRecord& r : records) *out << to_csv_row(r) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Helly-graph distance toolkit: centers, medians, k-Helly radii"};
  app.require_subcommand(1);

  CommonArgs center_args;
  add_common(app.add_subcommand("center", "cost-weighted center by sampled start + gated descent"), center_args);

  CommonArgs median_args;
  add_common(app.add_subcommand("median", "cost-weighted median set by gated descent"), median_args);

  RadiusArgs radius_args;
  CLI::App* radius_cmd = app.add_subcommand("radius", "randomized radius with [R, R+alpha] guarantee");
  add_common(radius_cmd, radius_args.common);
  radius_cmd->add_option("--k", radius_args.k, "Helly number promise (k >= 2)")->required();
  radius_cmd->add_option("--alpha", radius_args.alpha, "additive slack of the promise");
  radius_cmd->add_option("--eps-scale", radius_args.eps_scale, "scales the log factor inside eps");

  CheckArgs check_args;
  CLI::App* check_cmd = app.add_subcommand("check", "exact k-Helly recognition (small n)");
  check_cmd->add_option("--graph", check_args.graph_path, "graph file")->required();
  check_cmd->add_option("--k", check_args.k, "ball Helly number to test")->required();
  check_cmd->add_option("--alpha", check_args.alpha, "additive slack");

  GenArgs gen_args;
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate a test graph");
  gen_cmd->add_option("--family", gen_args.family, "tree | interval | king-grid | chordal")->required();
  gen_cmd->add_option("--n", gen_args.n, "vertex count");
  gen_cmd->add_option("--rows", gen_args.rows, "king-grid rows");
  gen_cmd->add_option("--cols", gen_args.cols, "king-grid cols");
  gen_cmd->add_option("--density", gen_args.density, "chordal clique-size knob in [0, 1]");
  gen_cmd->add_option("--seed", gen_args.seed_text, "RNG seed (integer or \"random\")");
  gen_cmd->add_option("--out", gen_args.out_path, "output file (default stdout)");

  BenchArgs bench_args;
  CLI::App* bench_cmd = app.add_subcommand("bench", "timed runs over generated instances, CSV output");
  bench_cmd->add_option("--family", bench_args.family, "generator family")->required();
  bench_cmd->add_option("--algo", bench_args.algo, "center | median | radius | apsp");
  bench_cmd->add_option("--sizes", bench_args.sizes, "comma-separated instance sizes")
      ->required()
      ->delimiter(',');
  bench_cmd->add_option("--seeds", bench_args.seeds, "comma-separated seeds")->delimiter(',');
  bench_cmd->add_option("--out", bench_args.out_path, "CSV file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;  // parse problems are validation failures
  }

  try {
    if (app.got_subcommand("center")) return run_center(center_args);
    if (app.got_subcommand("median")) return run_median(median_args);
    if (app.got_subcommand("radius")) return run_radius(radius_args);
    if (app.got_subcommand("check")) return run_check(check_args);
    if (app.got_subcommand("gen")) return run_gen(gen_args);
    if (app.got_subcommand("bench")) return run_bench_cmd(bench_args);
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const algorithm_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
