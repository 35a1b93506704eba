#include "helly/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace helly {

namespace {

[[noreturn]] void fail(const std::string& name, std::int64_t line, const std::string& what) {
  throw validation_error(name + ":" + std::to_string(line) + ": " + what);
}

// Strips comments and surrounding whitespace; empty result means skip.
std::string payload(const std::string& raw) {
  std::string s = raw.substr(0, raw.find('#'));
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <typename T>
bool parse_fields(const std::string& line, T& a, T& b) {
  std::istringstream ss(line);
  T x, y;
  std::string rest;
  if (!(ss >> x >> y)) return false;
  if (ss >> rest) return false;
  a = x;
  b = y;
  return true;
}

std::ifstream open_or_fail(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open " + path);
  return in;
}

}  // namespace

Graph parse_graph(std::istream& in, const std::string& name) {
  std::string raw;
  std::int64_t line_no = 0;
  Vertex n = -1;
  std::int64_t m = -1;
  std::vector<std::pair<Vertex, Vertex>> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = payload(raw);
    if (line.empty()) continue;
    if (n < 0) {
      std::istringstream ss(line);
      std::string tag;
      std::string rest;
      if (!(ss >> tag >> n >> m) || tag != "p" || (ss >> rest)) fail(name, line_no, "expected header \"p <n> <m>\"");
      if (n < 1) fail(name, line_no, "vertex count must be positive");
      if (m < 0) fail(name, line_no, "edge count must be nonnegative");
      edges.reserve(static_cast<std::size_t>(m));
      continue;
    }
    if (static_cast<std::int64_t>(edges.size()) == m) fail(name, line_no, "more edge lines than the header promised");
    Vertex u, v;
    if (!parse_fields(line, u, v)) fail(name, line_no, "expected edge \"<u> <v>\"");
    edges.emplace_back(u, v);
  }
  if (n < 0) fail(name, line_no + 1, "missing header \"p <n> <m>\"");
  if (static_cast<std::int64_t>(edges.size()) != m)
    fail(name, line_no + 1,
         "expected " + std::to_string(m) + " edge lines, got " + std::to_string(edges.size()));
  return Graph::from_edge_list(n, edges);
}

Graph parse_graph_file(const std::string& path) {
  std::ifstream in = open_or_fail(path);
  return parse_graph(in, path);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v : g.neighbors(u))
      if (u < v) out << u << ' ' << v << '\n';
}

void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw validation_error("cannot open " + path);
  write_graph(out, g);
  if (!out.flush()) throw validation_error("write failed for " + path);
}

CostFn parse_costs(std::istream& in, Vertex n, const std::string& name) {
  if (n < 1) throw validation_error("vertex count must be positive");
  std::vector<Cost> costs(static_cast<std::size_t>(n), 1);
  std::string raw;
  std::int64_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = payload(raw);
    if (line.empty()) continue;
    std::int64_t v;
    std::int64_t c;
    if (!parse_fields(line, v, c)) fail(name, line_no, "expected \"<vertex> <cost>\"");
    if (v < 0 || v >= n) fail(name, line_no, "vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n - 1) + "]");
    if (c < 0) fail(name, line_no, "cost must be nonnegative");
    costs[static_cast<std::size_t>(v)] = static_cast<Cost>(c);
  }
  return CostFn(std::move(costs));
}

CostFn parse_cost_file(const std::string& path, Vertex n) {
  std::ifstream in = open_or_fail(path);
  return parse_costs(in, n, path);
}

}  // namespace helly
