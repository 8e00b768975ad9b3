#pragma once

#include <string_view>
#include <vector>

#include "ecg/graph.hpp"
#include "ecg/oracle.hpp"

namespace ecg {

enum class Method { flow, brute };
[[nodiscard]] std::string_view method_name(Method m);

/// Minimum PC x-y separator against maximum PC x-y path packing. For the
/// vertex problems `separator` holds vertices and the paths are internally
/// vertex-disjoint; for the edge problems `edge_separator` holds edge ids
/// and the paths are pairwise edge-disjoint.
struct SeparatorPackingResult {
  int s = 0;
  VertexSet separator;
  EdgeSet edge_separator;
  int t = 0;
  std::vector<Walk> paths;
  bool menger_equal = false;
  bool edge_variant = false;
  Method method = Method::flow;
};

/// Deletes monochromatic vertices other than x and y until none is left.
/// No internal vertex of a PC x-y path is ever deleted. Edge ids survive.
[[nodiscard]] Subgraph strip_internal_monochromatic(const Graph& g, Vertex x, Vertex y);

/// Polynomial separator and packing for type-4 acyclic graphs by unit
/// vertex-capacity max flow on the stripped graph oriented along its type-5
/// ordering. The structure is checked step by step: after stripping, x and
/// y must be monochromatic, the stripped graph must be type-5 acyclic and
/// x, y must be its unique source and sink. Each failure throws
/// PreconditionError (use menger_gap instead). Throws InfeasibleError when
/// x and y are adjacent.
[[nodiscard]] SeparatorPackingResult solve_type4(const Graph& g, Vertex x, Vertex y);

/// Exact s and t by exhaustive search; works on any graph with at most
/// `bound` vertices. Throws InfeasibleError when x and y are adjacent.
[[nodiscard]] SeparatorPackingResult menger_gap(
    const Graph& g, Vertex x, Vertex y, int bound = oracle::kDefaultConnectivityBound);

/// Edge separator and edge-disjoint packing, computed exhaustively on g.
/// Only red/blue graphs (c <= 2) are accepted; UnsupportedError otherwise.
[[nodiscard]] SeparatorPackingResult edge_disjoint_variant(
    const Graph& g, Vertex x, Vertex y, int bound = oracle::kDefaultConnectivityBound);

}  // namespace ecg
