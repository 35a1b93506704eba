#include "helly/bench.hpp"

#include <chrono>
#include <cstdio>
#include <istream>
#include <sstream>

#include "helly/facility.hpp"
#include "helly/khelly.hpp"
#include "helly/oracle.hpp"

namespace helly {

namespace {

Value parse_value(const std::string& s) {
  if (s.empty()) throw validation_error("empty value field in CSV");
  Value v = 0;
  for (char ch : s) {
    if (ch < '0' || ch > '9') throw validation_error("bad value field in CSV: " + s);
    v = v * 10 + static_cast<Value>(ch - '0');
  }
  return v;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string::npos) return fields;
    start = comma + 1;
  }
}

}  // namespace

BenchAlgo bench_algo_from_string(const std::string& name) {
  if (name == "center") return BenchAlgo::center;
  if (name == "median") return BenchAlgo::median;
  if (name == "radius") return BenchAlgo::radius;
  if (name == "apsp") return BenchAlgo::apsp;
  throw validation_error("unknown algorithm \"" + name + "\" (expected center, median, radius, or apsp)");
}

std::string bench_algo_to_string(BenchAlgo algo) {
  switch (algo) {
    case BenchAlgo::center: return "center";
    case BenchAlgo::median: return "median";
    case BenchAlgo::radius: return "radius";
    case BenchAlgo::apsp: return "apsp";
  }
  throw validation_error("unknown algorithm enum value");
}

std::string run_record_csv_header() {
  return "command,family,n,m,seed,steps,bfs_count,wallclock_ms,result_vertex,result_value";
}

std::string to_csv_row(const RunRecord& r) {
  char ms[32];
  std::snprintf(ms, sizeof(ms), "%.3f", r.wallclock_ms);
  std::ostringstream out;
  out << r.command << ',' << r.family << ',' << r.n << ',' << r.m << ',' << r.seed << ',' << r.steps << ','
      << r.bfs_count << ',' << ms << ',' << r.result_vertex << ',' << to_string(r.result_value);
  return out.str();
}

std::vector<RunRecord> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw validation_error("empty CSV: missing header");
  if (line == run_record_csv_header() + "\r") line.pop_back();
  if (line != run_record_csv_header()) throw validation_error("unexpected CSV header: " + line);
  std::vector<RunRecord> records;
  std::int64_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> f = split_fields(line);
    if (f.size() != 10)
      throw validation_error("CSV line " + std::to_string(line_no) + ": expected 10 fields, got " +
                             std::to_string(f.size()));
    try {
      RunRecord r;
      r.command = f[0];
      r.family = f[1];
      r.n = std::stoll(f[2]);
      r.m = std::stoll(f[3]);
      r.seed = std::stoull(f[4]);
      r.steps = std::stoll(f[5]);
      r.bfs_count = std::stoll(f[6]);
      r.wallclock_ms = std::stod(f[7]);
      r.result_vertex = static_cast<Vertex>(std::stol(f[8]));
      r.result_value = parse_value(f[9]);
      records.push_back(std::move(r));
    } catch (const std::exception& e) {
      throw validation_error("CSV line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return records;
}

RunRecord bench_one(const Graph& g, Family family, BenchAlgo algo, std::uint64_t seed) {
  RunRecord r;
  r.command = bench_algo_to_string(algo);
  r.family = family_to_string(family);
  r.n = g.vertex_count();
  r.m = g.edge_count();
  r.seed = seed;
  CostFn unit = CostFn::unit(g.vertex_count());
  auto start = std::chrono::steady_clock::now();
  switch (algo) {
    case BenchAlgo::center: {
      CenterResult res = find_center(g, unit, seed);
      r.steps = res.trace.length();
      r.bfs_count = res.trace.bfs_calls;
      r.result_vertex = res.vertex;
      r.result_value = res.value;
      break;
    }
    case BenchAlgo::median: {
      MedianResult res = find_medians(g, unit, seed);
      r.steps = res.trace.length();
      r.bfs_count = res.trace.bfs_calls;
      r.result_vertex = res.medians.front();
      r.result_value = res.value;
      break;
    }
    case BenchAlgo::radius: {
      RadiusResult res = radius(g, 2, 0, seed);
      r.steps = res.decision_calls;
      r.bfs_count = res.bfs_calls;
      r.result_vertex = -1;
      r.result_value = static_cast<Value>(res.radius);
      break;
    }
    case BenchAlgo::apsp: {
      ApspSummary res = apsp_summary(g, unit, g.vertex_count());
      r.steps = 0;
      r.bfs_count = res.bfs_calls;
      r.result_vertex = res.center.front();
      r.result_value = res.radius;
      break;
    }
  }
  auto stop = std::chrono::steady_clock::now();
  r.wallclock_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return r;
}

std::vector<RunRecord> run_bench(const BenchSpec& spec) {
  std::vector<RunRecord> records;
  for (Vertex n : spec.sizes) {
    for (std::uint64_t seed : spec.seeds) {
      GenSpec gen;
      gen.family = spec.family;
      gen.n = n;
      gen.seed = seed;
      Graph g = spec.family == Family::chordal ? gen_chordal(n, gen.density, seed) : gen_helly(gen);
      records.push_back(bench_one(g, spec.family, spec.algo, seed));
    }
  }
  return records;
}

}  // namespace helly
