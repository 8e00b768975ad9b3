#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ecg/acyclicity.hpp"
#include "ecg/graph.hpp"
#include "ecg/reductions.hpp"

// Seeded instance generators for the equivalence sweeps.
namespace ecg::corpus {

using Rng = std::mt19937_64;

/// Every connected simple graph on 1..max_n labelled vertices whose edges
/// are blue or red (c = 2 on every graph).
[[nodiscard]] std::vector<Graph> connected_two_colored(int max_n);

struct RandomGraphOptions {
  int max_n = 7;
  int max_colors = 3;
  int max_edges_per_vertex = 2;  // edge count is drawn from 0..this * n
  bool multigraph = true;
};

/// n, c and the edges are drawn uniformly; parallel edges of any color are
/// allowed when `multigraph` is set.
[[nodiscard]] Graph random_graph(Rng& rng, const RandomGraphOptions& options = {});

struct Type4Instance {
  Graph graph;
  Vertex x = 0;
  Vertex y = 1;
  VertexOrdering planted;  // a type-4 ordering of graph
};

/// Plants a type-4 ordering: every vertex gets a color for its earlier and
/// one for its later neighbours, and an edge u < v may only be added when
/// u's later color equals v's earlier color. Labels are shuffled, then x, y
/// sit at two planted positions (usually the ends) that are never
/// joined by an edge.
[[nodiscard]] Type4Instance random_type4(Rng& rng, int min_n = 3, int max_n = 10,
                                         int colors = 2);

/// Every simple graph on exactly n labelled vertices.
[[nodiscard]] std::vector<PlainGraph> all_plain_graphs(int n);
/// Every loop-free digraph (no parallel arcs, 2-cycles allowed) on n vertices.
[[nodiscard]] std::vector<Digraph> all_digraphs(int n);

/// Side 1..max_side, each edge present with probability 1/2, then random
/// disjoint pairs of edges (adjacent pairs included, so callers must
/// normalize).
[[nodiscard]] RbpmInstance random_rbpm(Rng& rng, int max_side = 4, int max_pairs = 3);

/// Universe 3..max_universe, 1..max_triples distinct triples.
[[nodiscard]] BetweennessInstance random_betweenness(Rng& rng, int max_universe = 5,
                                                     int max_triples = 4);

}  // namespace ecg::corpus
