#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "helly/generators.hpp"
#include "helly/graph.hpp"

namespace helly {

enum class BenchAlgo { center, median, radius, apsp };

BenchAlgo bench_algo_from_string(const std::string& name);
std::string bench_algo_to_string(BenchAlgo algo);

/** One timed run; serializes to one CSV row under run_record_csv_header(). */
struct RunRecord {
  std::string command;   // center | median | radius | apsp
  std::string family;    // generator family
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::uint64_t seed = 0;
  std::int64_t steps = 0;      // descent steps or decision calls
  std::int64_t bfs_count = 0;
  double wallclock_ms = 0.0;
  Vertex result_vertex = -1;   // -1 when the result is a value only
  Value result_value = 0;
};

std::string run_record_csv_header();
std::string to_csv_row(const RunRecord& record);
std::vector<RunRecord> parse_csv(std::istream& in);

/** Runs one algorithm on one generated instance (unit costs). */
RunRecord bench_one(const Graph& g, Family family, BenchAlgo algo, std::uint64_t seed);

struct BenchSpec {
  Family family = Family::king_grid;
  BenchAlgo algo = BenchAlgo::center;
  std::vector<Vertex> sizes;
  std::vector<std::uint64_t> seeds;
};

/** Generates family instances for every (size, seed) pair and times algo on each. */
std::vector<RunRecord> run_bench(const BenchSpec& spec);

}  // namespace helly
