#include "ecg/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "ecg/errors.hpp"

namespace ecg {

Graph::Graph(int n, std::span<const ColoredEdge> edges, std::optional<int> colors)
    : n_(n) {
  if (n < 0) {
    throw GraphError("vertex count must be non-negative");
  }
  int max_color = 1;
  edges_.reserve(edges.size());
  for (const auto& [u, v, color] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw GraphError("edge endpoint out of range");
    }
    if (u == v) {
      throw GraphError("loop at vertex " + std::to_string(u + 1));
    }
    if (color < 1) {
      throw GraphError("colors start at 1");
    }
    max_color = std::max(max_color, color);
    edges_.push_back(Edge{u, v, color, static_cast<EdgeId>(edges_.size())});
  }
  if (colors) {
    if (*colors < max_color) {
      throw GraphError("color count " + std::to_string(*colors) +
                       " is below the largest color used (" +
                       std::to_string(max_color) + ")");
    }
    colors_ = *colors;
  } else {
    colors_ = max_color;
  }
  index();
}

Graph Graph::with_edge_ids(int n, std::vector<Edge> edges, int colors) {
  Graph g;
  g.n_ = n;
  g.colors_ = colors;
  if (n < 0 || colors < 1) {
    throw GraphError("invalid vertex or color count");
  }
  std::set<EdgeId> seen;
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n || e.u == e.v ||
        e.color < 1 || e.color > colors || e.id < 0 ||
        !seen.insert(e.id).second) {
      throw GraphError("invalid edge in subgraph construction");
    }
  }
  g.edges_ = std::move(edges);
  g.index();
  return g;
}

void Graph::index() {
  incidence_.assign(static_cast<std::size_t>(n_), {});
  EdgeId max_id = -1;
  for (const Edge& e : edges_) {
    incidence_[e.u].push_back(e);
    incidence_[e.v].push_back(e);
    max_id = std::max(max_id, e.id);
  }
  position_of_id_.assign(static_cast<std::size_t>(max_id + 1), -1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    position_of_id_[edges_[i].id] = static_cast<int>(i);
  }
}

bool Graph::has_edge_id(EdgeId id) const noexcept {
  return id >= 0 && id < static_cast<EdgeId>(position_of_id_.size()) &&
         position_of_id_[id] >= 0;
}

const Edge& Graph::edge(EdgeId id) const {
  return edges_[static_cast<std::size_t>(edge_index(id))];
}

int Graph::edge_index(EdgeId id) const {
  if (!has_edge_id(id)) {
    throw GraphError("unknown edge id " + std::to_string(id));
  }
  return position_of_id_[id];
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  for (const Edge& e : incident(a)) {
    if (e.other(a) == b) {
      return true;
    }
  }
  return false;
}

std::vector<Color> Graph::incident_colors(Vertex v) const {
  std::vector<Color> colors;
  for (const Edge& e : incident(v)) {
    colors.push_back(e.color);
  }
  std::sort(colors.begin(), colors.end());
  colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
  return colors;
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<Vertex> to_child(static_cast<std::size_t>(g.vertex_count()), -1);
  Subgraph sub;
  for (Vertex v : keep) {
    if (v < 0 || v >= g.vertex_count() || to_child[v] != -1) {
      throw GraphError("induced subgraph: invalid or repeated vertex");
    }
    to_child[v] = static_cast<Vertex>(sub.to_parent.size());
    sub.to_parent.push_back(v);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (to_child[e.u] >= 0 && to_child[e.v] >= 0) {
      edges.push_back(Edge{to_child[e.u], to_child[e.v], e.color, e.id});
    }
  }
  sub.graph = Graph::with_edge_ids(static_cast<int>(keep.size()),
                                   std::move(edges), g.color_count());
  return sub;
}

void validate_walk(const Graph& g, const Walk& w) {
  if (w.vertices.empty() || w.vertices.size() != w.edges.size() + 1) {
    throw GraphError("walk must alternate vertices and edges");
  }
  for (Vertex v : w.vertices) {
    if (v < 0 || v >= g.vertex_count()) {
      throw GraphError("walk vertex out of range");
    }
  }
  for (std::size_t i = 0; i < w.edges.size(); ++i) {
    const Edge& e = g.edge(w.edges[i]);
    const Vertex a = w.vertices[i];
    const Vertex b = w.vertices[i + 1];
    if (!((e.u == a && e.v == b) || (e.u == b && e.v == a))) {
      throw GraphError("walk edge " + std::to_string(e.id) +
                       " does not join its neighbouring vertices");
    }
  }
}

bool is_pc_walk(const Graph& g, const Walk& w) {
  validate_walk(g, w);
  const std::size_t len = w.edges.size();
  for (std::size_t i = 0; i + 1 < len; ++i) {
    if (g.edge(w.edges[i]).color == g.edge(w.edges[i + 1]).color) {
      return false;
    }
  }
  if (w.closed() && len >= 2 &&
      g.edge(w.edges.back()).color == g.edge(w.edges.front()).color) {
    return false;
  }
  return true;
}

bool is_trail(const Walk& w) {
  std::set<EdgeId> seen(w.edges.begin(), w.edges.end());
  return seen.size() == w.edges.size();
}

bool is_path(const Walk& w) {
  if (w.closed()) {
    return false;
  }
  std::set<Vertex> seen(w.vertices.begin(), w.vertices.end());
  return seen.size() == w.vertices.size();
}

bool is_cycle(const Walk& w) {
  if (!w.closed() || w.edges.size() < 2 || !is_trail(w)) {
    return false;
  }
  std::set<Vertex> seen(w.vertices.begin(), w.vertices.end() - 1);
  return seen.size() == w.vertices.size() - 1;
}

std::vector<std::string> lint(const Graph& g) {
  std::map<std::tuple<Vertex, Vertex, Color>, int> multiplicity;
  for (const Edge& e : g.edges()) {
    ++multiplicity[{std::min(e.u, e.v), std::max(e.u, e.v), e.color}];
  }
  std::vector<std::string> warnings;
  for (const auto& [key, count] : multiplicity) {
    if (count > 1) {
      const auto& [u, v, color] = key;
      warnings.push_back(std::to_string(count) + " parallel edges of color " +
                         std::to_string(color) + " between " +
                         std::to_string(u + 1) + " and " +
                         std::to_string(v + 1));
    }
  }
  return warnings;
}

}  // namespace ecg
