#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ecg/graph.hpp"

namespace ecg {

/// Loop-free digraph on vertices 0..n-1.
struct Digraph {
  int n = 0;
  std::vector<std::pair<Vertex, Vertex>> arcs;
};

/// Uncolored loop-free graph on vertices 0..n-1.
struct PlainGraph {
  int n = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
};

/// Each triple (x, y, z) asks for y to lie between x and z.
struct BetweennessInstance {
  int universe = 0;
  std::vector<std::array<int, 3>> triples;
};

/// Bipartite graph with sides {0..k-1} and {0..k-1}; `edges` holds
/// (left, right) pairs and `pairs` lists the partition classes of size two
/// as edge indices. Edges outside every pair are singleton classes.
struct RbpmInstance {
  int side = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<int, int>> pairs;
};

/// A generated graph with a name per vertex: original vertices come first,
/// gadget vertices follow in construction order.
struct Reduction {
  Graph graph;
  std::vector<std::string> names;
  std::optional<Vertex> x;
  std::optional<Vertex> y;
};

/// Arc a = (u, v) becomes blue u - w_a and red w_a - v, with w_a = n + a.
/// The blue edge gets id 2a and the red edge id 2a + 1.
[[nodiscard]] Reduction digraph_to_2ecg(const Digraph& d);

/// The PC walk of the image that follows the given arcs of d in order.
[[nodiscard]] Walk lift_directed_walk(const Digraph& d, std::span<const int> arcs);

/// Gadget per triple (x, y, z) with fresh a(x,y), b(x,y), b(z,y), a(z,y).
/// The image is type-4 acyclic iff the instance is satisfiable.
[[nodiscard]] Reduction betweenness_to_type4(const BetweennessInstance& inst);

/// Red copy of H plus blue x-u and u-y for every u. A set S is a vertex
/// cover of H iff G - S has no PC x-y path.
[[nodiscard]] Reduction vertex_cover_to_separator(const PlainGraph& h);

/// Splits pairs whose edges share an endpoint into singletons. Returns the
/// indices (into inst.pairs) of the split pairs.
[[nodiscard]] std::pair<RbpmInstance, std::vector<int>> normalize_rbpm(
    const RbpmInstance& inst);
[[nodiscard]] bool is_normalized(const RbpmInstance& inst);

/// Packing image: a restricted perfect matching exists iff the image has
/// `side` internally disjoint PC x-y paths. Throws GraphError unless the
/// instance is valid and normalized.
[[nodiscard]] Reduction rbpm_to_packing(const RbpmInstance& inst);

/// Blow-up: vertex u becomes sizes[u] independent copies that inherit its
/// colored adjacencies. Copies of u are numbered contiguously.
[[nodiscard]] Reduction extend(const Graph& g, std::span<const int> sizes);

/// v -> v' = v and v'' = n + v with red v'v''; blue u''v' per arc uv.
[[nodiscard]] Reduction fvs_to_type5_deletion(const Digraph& d);

/// Same graph with every edge blue.
[[nodiscard]] Reduction bipartization_to_type5_deletion(const PlainGraph& g);

/// Needs c == 2. v' = v keeps the red edges, v'' = n + v the blue ones, and
/// v0 = 2n + v joins them by blue v'v0 and red v0v''. Throws
/// UnsupportedError otherwise.
[[nodiscard]] Reduction vertex_split_edge_transform(const Graph& g);

}  // namespace ecg
