#pragma once

#include <iosfwd>
#include <string>

#include "helly/graph.hpp"

namespace helly {

/**
 * Graph text format: '#' starts a comment, blank lines are skipped, the
 * first payload line is "p <n> <m>", followed by exactly m lines
 * "<u> <v>" with 0-based endpoints.  Parse errors name the line number.
 */
Graph parse_graph(std::istream& in, const std::string& name = "<stream>");
Graph parse_graph_file(const std::string& path);

void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

/**
 * Cost text format: lines "<vertex> <cost>" with non-negative 64-bit
 * costs; unspecified vertices default to cost 1, later lines override
 * earlier ones.  Comments and blank lines as in the graph format.
 */
CostFn parse_costs(std::istream& in, Vertex n, const std::string& name = "<stream>");
CostFn parse_cost_file(const std::string& path, Vertex n);

}  // namespace helly
