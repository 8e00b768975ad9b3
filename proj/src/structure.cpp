#include "ecg/structure.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "ecg/errors.hpp"

namespace ecg {

std::vector<VertexSet> connected_components(const Graph& g,
                                             std::span<const Vertex> restrict) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<bool> member(n, false);
  for (Vertex v : restrict) {
    if (v < 0 || v >= g.vertex_count()) {
      throw GraphError("component restriction outside the vertex set");
    }
    member[v] = true;
  }
  std::vector<bool> seen(n, false);
  std::vector<VertexSet> components;
  for (Vertex start = 0; start < g.vertex_count(); ++start) {
    if (!member[start] || seen[start]) {
      continue;
    }
    VertexSet component;
    std::vector<Vertex> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      component.push_back(v);
      for (const Edge& e : g.incident(v)) {
        const Vertex w = e.other(v);
        if (member[w] && !seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<Vertex> all(static_cast<std::size_t>(g.vertex_count()));
  std::iota(all.begin(), all.end(), 0);
  return connected_components(g, all);
}

bool is_connected(const Graph& g) {
  return connected_components(g).size() <= 1;
}

namespace detail {

std::vector<bool> bridge_flags(const Graph& g,
                               const std::vector<bool>& vertex_alive,
                               const std::vector<bool>& edge_alive) {
  const int n = g.vertex_count();
  std::vector<bool> is_bridge(static_cast<std::size_t>(g.edge_count()), false);
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  int timer = 0;

  // Iterative low-link DFS. The parent is skipped by edge id, not by vertex,
  // so a parallel edge back to the parent counts as a back edge.
  struct Frame {
    Vertex v;
    EdgeId via;
    std::size_t next;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (!vertex_alive[root] || disc[root] != -1) {
      continue;
    }
    std::vector<Frame> stack{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& top = stack.back();
      const auto incident = g.incident(top.v);
      if (top.next < incident.size()) {
        const Edge& e = incident[top.next++];
        const int pos = g.edge_index(e.id);
        const Vertex w = e.other(top.v);
        if (!edge_alive[pos] || !vertex_alive[w] || e.id == top.via) {
          continue;
        }
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, e.id, 0});
        } else {
          low[top.v] = std::min(low[top.v], disc[w]);
        }
        continue;
      }
      const Frame done = top;
      stack.pop_back();
      if (!stack.empty()) {
        const Vertex parent = stack.back().v;
        low[parent] = std::min(low[parent], low[done.v]);
        if (low[done.v] > disc[parent]) {
          is_bridge[g.edge_index(done.via)] = true;
        }
      }
    }
  }
  return is_bridge;
}

bool monochromatic_in(const Graph& g, Vertex v,
                      const std::vector<bool>& vertex_alive,
                      const std::vector<bool>& edge_alive) {
  Color seen = 0;
  for (const Edge& e : g.incident(v)) {
    if (!edge_alive[g.edge_index(e.id)] || !vertex_alive[e.other(v)]) {
      continue;
    }
    if (seen == 0) {
      seen = e.color;
    } else if (seen != e.color) {
      return false;
    }
  }
  return true;
}

}  // namespace detail

EdgeSet bridges(const Graph& g) {
  const std::vector<bool> vertex_alive(static_cast<std::size_t>(g.vertex_count()), true);
  const std::vector<bool> edge_alive(static_cast<std::size_t>(g.edge_count()), true);
  const auto flags = detail::bridge_flags(g, vertex_alive, edge_alive);
  EdgeSet result;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (flags[i]) {
      result.push_back(g.edges()[i].id);
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

VertexSet monochromatic_vertices(const Graph& g) {
  VertexSet result;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.incident_colors(v).size() <= 1) {
      result.push_back(v);
    }
  }
  return result;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.vertex_count()), -1);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (side[s] != -1) {
      continue;
    }
    side[s] = 0;
    std::queue<Vertex> queue;
    queue.push(s);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop();
      for (const Edge& e : g.incident(v)) {
        const Vertex w = e.other(v);
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          queue.push(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace ecg
