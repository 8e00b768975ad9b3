#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ecg/graph.hpp"

namespace ecg {

inline constexpr int kDefaultTrailWitnessEdges = 16;
inline constexpr int kDefaultCycleWitnessVertices = 12;

/// A polynomial decision plus, when one exists and the witness search is
/// within bounds, a certificate walk.
struct Detection {
  bool present = false;
  std::optional<Walk> witness;
  /// Set when a structure exists but the exhaustive witness search was
  /// refused by its capacity bound.
  std::optional<std::string> witness_refused;
};

/// Line-digraph of edge traversals. Node 2i is edges()[i] traversed u -> v,
/// node 2i+1 the reverse. An arc joins (e, into w) to (f, out of w) iff
/// color(e) != color(f); directed cycles are exactly PC closed walks.
struct TransitionDigraph {
  struct Node {
    EdgeId edge;
    Vertex tail;
    Vertex head;
  };
  std::vector<Node> nodes;
  std::vector<std::vector<int>> successors;

  [[nodiscard]] int arc_count() const;
};

[[nodiscard]] TransitionDigraph transition_digraph(const Graph& g);

/// Closed walk traced by a directed cycle of node indices.
[[nodiscard]] Walk unroll_cycle(const TransitionDigraph& t,
                                std::span<const int> node_cycle);

/// Decision by deleting monochromatic vertices to a fixpoint; the witness
/// is a shortest directed cycle of the transition digraph.
[[nodiscard]] Detection has_pc_closed_walk(const Graph& g);

/// Decision by deleting bridges and monochromatic vertices to a fixpoint.
/// The witness is found by exhaustive trail search in the surviving
/// subgraph, refused when that subgraph has more than `max_witness_edges`
/// edges.
[[nodiscard]] Detection has_pc_closed_trail(
    const Graph& g, int max_witness_edges = kDefaultTrailWitnessEdges);

/// Decision by the type-1 recognizer. The witness is found by exhaustive
/// cycle search among the vertices the recognizer could not remove,
/// refused when more than `max_witness_vertices` remain.
[[nodiscard]] Detection has_pc_cycle(
    const Graph& g, int max_witness_vertices = kDefaultCycleWitnessVertices);

}  // namespace ecg
