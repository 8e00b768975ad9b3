#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ecg {

// Vertices are 0-based inside the library. The text format and the CLI
// present them 1-based.
using Vertex = int;
using EdgeId = int;
using Color = int;

using VertexSet = std::vector<Vertex>;  // sorted, duplicate-free
using EdgeSet = std::vector<EdgeId>;    // sorted, duplicate-free

inline constexpr Color kBlue = 1;
inline constexpr Color kRed = 2;

struct ColoredEdge {
  Vertex u;
  Vertex v;
  Color color;
};

struct Edge {
  Vertex u;
  Vertex v;
  Color color;
  EdgeId id;

  [[nodiscard]] Vertex other(Vertex w) const noexcept { return w == u ? v : u; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Loop-free edge-colored multigraph on vertices 0..n-1 with colors 1..c.
///
/// Edge ids are assigned in input order by the public constructor and are
/// carried unchanged into induced subgraphs, so an edge keeps its identity
/// across every derived graph. Values are immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Throws GraphError on loops, out-of-range endpoints or colors < 1.
  /// `colors` overrides c; it must be at least the largest color used.
  Graph(int n, std::span<const ColoredEdge> edges,
        std::optional<int> colors = std::nullopt);
  Graph(int n, std::initializer_list<ColoredEdge> edges,
        std::optional<int> colors = std::nullopt)
      : Graph(n, std::span<const ColoredEdge>(edges.begin(), edges.size()),
              colors) {}

  /// Builds a graph whose edges already carry ids (distinct, non-negative).
  static Graph with_edge_ids(int n, std::vector<Edge> edges, int colors);

  [[nodiscard]] int vertex_count() const noexcept { return n_; }
  [[nodiscard]] int edge_count() const noexcept {
    return static_cast<int>(edges_.size());
  }
  [[nodiscard]] int color_count() const noexcept { return colors_; }

  /// Edges in storage order (input order for freshly built graphs).
  [[nodiscard]] std::span<const Edge> edges() const noexcept { return edges_; }
  [[nodiscard]] std::span<const Edge> incident(Vertex v) const {
    return incidence_[static_cast<std::size_t>(v)];
  }
  [[nodiscard]] int degree(Vertex v) const {
    return static_cast<int>(incident(v).size());
  }

  [[nodiscard]] bool has_edge_id(EdgeId id) const noexcept;
  /// Throws GraphError for unknown ids.
  [[nodiscard]] const Edge& edge(EdgeId id) const;
  /// Position of the edge in edges().
  [[nodiscard]] int edge_index(EdgeId id) const;

  [[nodiscard]] bool adjacent(Vertex a, Vertex b) const;
  /// Distinct colors on edges at v, ascending.
  [[nodiscard]] std::vector<Color> incident_colors(Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.colors_ == b.colors_ && a.edges_ == b.edges_;
  }

 private:
  void index();

  int n_ = 0;
  int colors_ = 1;
  std::vector<Edge> edges_;
  std::vector<std::vector<Edge>> incidence_;
  std::vector<int> position_of_id_;
};

/// Vertex-induced subgraph; `to_parent[i]` is the parent vertex of vertex i.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;
};

[[nodiscard]] Subgraph induced_subgraph(const Graph& g,
                                        std::span<const Vertex> keep);

/// v1 e1 v2 ... e_{p-1} v_p. A walk is closed when v1 == v_p.
struct Walk {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;

  [[nodiscard]] bool closed() const noexcept {
    return !vertices.empty() && vertices.front() == vertices.back();
  }
  [[nodiscard]] std::size_t length() const noexcept { return edges.size(); }

  friend bool operator==(const Walk&, const Walk&) = default;
};

/// Throws GraphError unless every e_i exists and joins v_i and v_{i+1}.
void validate_walk(const Graph& g, const Walk& w);

/// Consecutive edges differ in color, and for closed walks so do the last
/// and first edge. Throws GraphError for structurally invalid walks.
[[nodiscard]] bool is_pc_walk(const Graph& g, const Walk& w);

[[nodiscard]] bool is_trail(const Walk& w);
/// Open walk with pairwise distinct vertices.
[[nodiscard]] bool is_path(const Walk& w);
/// Closed trail of length >= 2 whose vertices, apart from the repeated
/// endpoint, are distinct.
[[nodiscard]] bool is_cycle(const Walk& w);

/// Human-readable warnings for accepted but suspicious input (currently:
/// parallel edges of one color).
[[nodiscard]] std::vector<std::string> lint(const Graph& g);

}  // namespace ecg
