#pragma once

#include <optional>
#include <vector>

#include "ecg/acyclicity.hpp"
#include "ecg/graph.hpp"
#include "ecg/reductions.hpp"

// Brute-force ground truth. Nothing here calls the polynomial recognizers,
// the deletion fixpoints or the flow code; each answer comes from literal
// enumeration so it can arbitrate the fast algorithms.
namespace ecg::oracle {

inline constexpr int kDefaultOrderingBound = 8;
inline constexpr int kDefaultConnectivityBound = 12;
inline constexpr int kDefaultDeletionBound = 10;

/// Lexicographically smallest ordering satisfying the type-k clause at every
/// position, searched over prefixes (a prefix is abandoned only when the
/// clause already fails at its last vertex). Throws CapacityError above
/// `max_vertices`.
[[nodiscard]] std::optional<VertexOrdering> brute_recognize(
    const Graph& g, int type, int max_vertices = kDefaultOrderingBound);

/// Literal type-k ordering check with its own component and bridge code.
[[nodiscard]] bool literal_ordering_check(const Graph& g,
                                          std::span<const Vertex> ordering, int type);

/// Does G minus `removed_vertices` (and minus `removed_edges`, by edge
/// position) contain a PC path from x to y? Exhaustive simple-path search.
[[nodiscard]] bool pc_path_exists(const Graph& g, Vertex x, Vertex y,
                                  const std::vector<bool>& removed_vertices,
                                  const std::vector<bool>& removed_edges);
[[nodiscard]] bool pc_path_exists(const Graph& g, Vertex x, Vertex y);

/// Every PC path from x to y.
[[nodiscard]] std::vector<Walk> all_pc_paths(const Graph& g, Vertex x, Vertex y);

struct VertexSolution {
  int size = 0;
  VertexSet vertices;
};

struct EdgeSolution {
  int size = 0;
  EdgeSet edges;
};

struct Packing {
  int size = 0;
  std::vector<Walk> paths;
};

/// Smallest S within V - {x, y}, by cardinality then lexicographically,
/// after whose removal no PC x-y path remains. Throws InfeasibleError when
/// x and y are adjacent.
[[nodiscard]] VertexSolution brute_min_separator(
    const Graph& g, Vertex x, Vertex y, int max_vertices = kDefaultConnectivityBound);

/// Largest family of internally vertex-disjoint PC x-y paths.
[[nodiscard]] Packing brute_max_packing(const Graph& g, Vertex x, Vertex y,
                                        int max_vertices = kDefaultConnectivityBound);

/// Fewest edges whose removal leaves no PC x-y path.
[[nodiscard]] EdgeSolution brute_min_edge_separator(
    const Graph& g, Vertex x, Vertex y, int max_vertices = kDefaultConnectivityBound);

/// Largest family of pairwise edge-disjoint PC x-y paths.
[[nodiscard]] Packing brute_max_edge_packing(
    const Graph& g, Vertex x, Vertex y, int max_vertices = kDefaultConnectivityBound);

/// Smallest vertex set whose deletion leaves a type-5 acyclic graph
/// (membership decided by recognize_type5).
[[nodiscard]] VertexSolution brute_min_deletion_to_type5(
    const Graph& g, int max_vertices = kDefaultDeletionBound);

// ---- walk structures by enumeration ----

/// First PC cycle found by enumerating simple cycles.
[[nodiscard]] std::optional<Walk> find_pc_cycle(const Graph& g);
/// First closed PC trail found by enumerating trails.
[[nodiscard]] std::optional<Walk> find_pc_closed_trail(const Graph& g);
/// Directed cycle in the transition digraph.
[[nodiscard]] bool has_pc_closed_walk(const Graph& g);

/// At most two colors at every vertex, and every cycle has a positive even
/// number of cycle-monochromatic vertices (all cycles enumerated).
[[nodiscard]] bool cycle_parity_condition(const Graph& g);

// ---- source problems of the reductions ----

[[nodiscard]] int min_vertex_cover(const PlainGraph& h);
[[nodiscard]] int min_feedback_vertex_set(const Digraph& d);
[[nodiscard]] int min_odd_cycle_transversal(const PlainGraph& h);
[[nodiscard]] bool betweenness_satisfiable(const BetweennessInstance& inst);
/// Perfect matching using at most one edge of each partition class.
[[nodiscard]] bool restricted_perfect_matching_exists(const RbpmInstance& inst);

}  // namespace ecg::oracle
