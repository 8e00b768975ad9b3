#pragma once

#include <span>
#include <vector>

#include "ecg/graph.hpp"

namespace ecg {

/// Components of G[restrict], each sorted, ordered by smallest vertex.
[[nodiscard]] std::vector<VertexSet> connected_components(
    const Graph& g, std::span<const Vertex> restrict);
[[nodiscard]] std::vector<VertexSet> connected_components(const Graph& g);

[[nodiscard]] bool is_connected(const Graph& g);

/// Edges whose removal increases the number of components. Parallel edges
/// are never bridges.
[[nodiscard]] EdgeSet bridges(const Graph& g);

/// Vertices meeting at most one color; isolated vertices included.
[[nodiscard]] VertexSet monochromatic_vertices(const Graph& g);

[[nodiscard]] bool is_bipartite(const Graph& g);

namespace detail {

// Masked views used by the deletion fixpoints: a vertex or edge takes part
// only while its flag is set. Edge flags are indexed by position in
// g.edges().

[[nodiscard]] std::vector<bool> bridge_flags(const Graph& g,
                                             const std::vector<bool>& vertex_alive,
                                             const std::vector<bool>& edge_alive);

[[nodiscard]] bool monochromatic_in(const Graph& g, Vertex v,
                                    const std::vector<bool>& vertex_alive,
                                    const std::vector<bool>& edge_alive);

}  // namespace detail

}  // namespace ecg
