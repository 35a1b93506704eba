#pragma once

#include <cstdint>
#include <string>

#include "helly/graph.hpp"

namespace helly {

enum class Family { tree, interval, king_grid, chordal };

Family family_from_string(const std::string& name);
std::string family_to_string(Family family);

/**
 * Deterministic generator request: identical specs produce bit-identical
 * graphs.  n is the exact vertex count; rows/cols apply to king_grid
 * (when only n is given the grid is the squarest shape with that many
 * vertices); density in (0, 1] tunes chordal clique sizes.
 */
struct GenSpec {
  Family family = Family::tree;
  Vertex n = 1;
  Vertex rows = 0, cols = 0;
  double density = 0.5;
  std::uint64_t seed = 0;
};

/** Uniform random labeled tree (Pruefer decode). */
Graph gen_tree(Vertex n, std::uint64_t seed);

/**
 * Intersection graph of n random integer intervals in [0, 4n]; redrawn
 * (seed evolves) until connected, up to 100 attempts.
 */
Graph gen_interval(Vertex n, std::uint64_t seed);

/** Strong product of two paths: rows x cols vertices, king-move adjacency. */
Graph gen_king_grid(Vertex rows, Vertex cols);

/**
 * Random connected chordal graph built as a clique tree: each new clique
 * shares a non-empty subset with an existing one and adds fresh vertices
 * until exactly n exist.  Always chordal and connected by construction.
 */
Graph gen_chordal(Vertex n, double density, std::uint64_t seed);

/**
 * Dispatch for the Helly families (tree, interval, king_grid).  Chordal
 * graphs are not Helly in general; family == chordal is rejected here,
 * use gen_chordal.
 */
Graph gen_helly(const GenSpec& spec);

}  // namespace helly
