#pragma once

#include <array>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "ecg/graph.hpp"

namespace ecg {

/// A permutation of the vertices, first vertex first.
using VertexOrdering = std::vector<Vertex>;

inline constexpr int kDefaultType4Bound = 24;

/// Checks the type-`type` clause literally at every position. For type 2
/// the bridge test is made in G[{v_i, ..., v_n}]. For type 5 the
/// "different color" requirement only applies when v_i has neighbours on
/// both sides. Throws GraphError if `ordering` is not a permutation or
/// `type` is outside 1..5.
[[nodiscard]] bool verify_ordering(const Graph& g,
                                   std::span<const Vertex> ordering, int type);

/// Type 1: no PC cycle.
[[nodiscard]] std::optional<VertexOrdering> recognize_type1(const Graph& g);
/// Type 2: no PC closed trail.
[[nodiscard]] std::optional<VertexOrdering> recognize_type2(const Graph& g);
/// Type 3: no PC closed walk.
[[nodiscard]] std::optional<VertexOrdering> recognize_type3(const Graph& g);

/// Exact subset search over placed prefixes; exponential in n. Returns the
/// lexicographically smallest type-4 ordering. Throws CapacityError when
/// n > max_vertices (max_vertices is capped at 28).
[[nodiscard]] std::optional<VertexOrdering> recognize_type4(
    const Graph& g, int max_vertices = kDefaultType4Bound);

[[nodiscard]] std::optional<VertexOrdering> recognize_type5(const Graph& g);

// ---- orientation propagation used by the type-5 test ----

enum class ConflictKind {
  two_in_differ,   // arcs of two colors into the vertex
  two_out_differ,  // arcs of two colors out of the vertex
  in_out_same,     // an arc in and an arc out with one color
};

struct Conflict {
  Vertex vertex;
  ConflictKind kind;
  EdgeId existing;  // the arc already present at `vertex`
  EdgeId incoming;  // the arc whose orientation clashed with it
};

struct PrecheckFailure {
  Vertex vertex;
  std::vector<Color> colors;  // three or more
};

struct Orientation {
  /// head[i] is the head of edges()[i], or -1 when the edge lies outside
  /// the oriented component.
  std::vector<Vertex> head;
  std::vector<std::optional<Color>> in_color;
  std::vector<std::optional<Color>> out_color;

  [[nodiscard]] bool oriented(int edge_index) const { return head[edge_index] >= 0; }
};

using OrientResult = std::variant<Orientation, Conflict, PrecheckFailure>;

/// Orients every edge of x's component: edges of `first_color_out` leave x,
/// all other edges at x enter it, and each reached vertex forwards the rule
/// (arcs of its in-color enter, all others leave). Vertices are processed
/// in FIFO order. Stops at the first conflict. `first_color_out` must be a
/// color at x when x meets two colors; otherwise any color is accepted and
/// a color different from x's one color orients everything into x.
[[nodiscard]] OrientResult procedure1_orient(const Graph& g, Vertex x,
                                             Color first_color_out);

/// Topological order of the oriented digraph restricted to `vertices`
/// (smallest available vertex first), or nullopt if it has a cycle.
[[nodiscard]] std::optional<VertexOrdering> topological_order(
    const Graph& g, const Orientation& orientation,
    std::span<const Vertex> vertices);

/// Number of vertices whose two cycle edges share a color. Throws
/// GraphError unless `cycle` is a cycle of g.
[[nodiscard]] int count_cycle_monochromatic(const Graph& g, const Walk& cycle);

struct Classification {
  /// Highest k with types 1..k all satisfied (0 when not even type 1).
  int level = 0;
  /// membership[k-1]; type 4 may be unknown when the graph exceeds the
  /// type-4 bound.
  std::array<std::optional<bool>, 5> membership;
  std::array<std::optional<VertexOrdering>, 5> certificate;

  [[nodiscard]] bool type4_unknown() const { return !membership[3].has_value(); }
};

/// Runs every recognizer. When type 4 exceeds its bound the level stops at
/// 3 and membership[3] stays empty; the other verdicts are still reported.
[[nodiscard]] Classification classify(const Graph& g,
                                      int type4_bound = kDefaultType4Bound);

namespace detail {

/// Vertices left when the type-1 peeling gets stuck (empty iff type 1).
/// Every PC cycle of g lies inside this set.
[[nodiscard]] VertexSet type1_residue(const Graph& g);

struct TrailCore {
  std::vector<bool> vertex_alive;
  std::vector<bool> edge_alive;  // by position in g.edges()
  [[nodiscard]] bool empty() const;
};

/// Fixpoint of deleting bridges and monochromatic vertices. Every PC closed
/// trail of g survives in it.
[[nodiscard]] TrailCore closed_trail_core(const Graph& g);

/// Fixpoint of deleting monochromatic vertices.
[[nodiscard]] VertexSet closed_walk_core(const Graph& g);

}  // namespace detail

}  // namespace ecg
