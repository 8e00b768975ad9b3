#include "ecg/pc_structures.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "ecg/acyclicity.hpp"
#include "ecg/errors.hpp"

namespace ecg {

int TransitionDigraph::arc_count() const {
  int count = 0;
  for (const auto& out : successors) {
    count += static_cast<int>(out.size());
  }
  return count;
}

TransitionDigraph transition_digraph(const Graph& g) {
  TransitionDigraph t;
  const auto edges = g.edges();
  t.nodes.reserve(edges.size() * 2);
  for (const Edge& e : edges) {
    t.nodes.push_back({e.id, e.u, e.v});
    t.nodes.push_back({e.id, e.v, e.u});
  }
  // Nodes leaving each vertex, for successor lookup.
  std::vector<std::vector<int>> leaving(static_cast<std::size_t>(g.vertex_count()));
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    leaving[t.nodes[i].tail].push_back(static_cast<int>(i));
  }
  t.successors.resize(t.nodes.size());
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const Color color = g.edge(t.nodes[i].edge).color;
    for (int next : leaving[t.nodes[i].head]) {
      if (g.edge(t.nodes[next].edge).color != color) {
        t.successors[i].push_back(next);
      }
    }
  }
  return t;
}

Walk unroll_cycle(const TransitionDigraph& t, std::span<const int> node_cycle) {
  Walk walk;
  if (node_cycle.empty()) {
    return walk;
  }
  walk.vertices.push_back(t.nodes[node_cycle.front()].tail);
  for (int node : node_cycle) {
    walk.edges.push_back(t.nodes[node].edge);
    walk.vertices.push_back(t.nodes[node].head);
  }
  return walk;
}

Detection has_pc_closed_walk(const Graph& g) {
  Detection result;
  result.present = !detail::closed_walk_core(g).empty();
  if (!result.present) {
    return result;
  }
  // Shortest directed cycle: BFS from every node back to itself.
  const TransitionDigraph t = transition_digraph(g);
  const int count = static_cast<int>(t.nodes.size());
  std::vector<int> best;
  std::vector<int> parent(static_cast<std::size_t>(count));
  std::vector<int> dist(static_cast<std::size_t>(count));
  for (int source = 0; source < count; ++source) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<int> queue;
    queue.push(source);
    dist[source] = 0;
    int closing = -1;
    while (!queue.empty() && closing < 0) {
      const int node = queue.front();
      queue.pop();
      if (!best.empty() && dist[node] + 1 >= static_cast<int>(best.size())) {
        break;
      }
      for (int next : t.successors[node]) {
        if (next == source) {
          closing = node;
          break;
        }
        if (dist[next] < 0) {
          dist[next] = dist[node] + 1;
          parent[next] = node;
          queue.push(next);
        }
      }
    }
    if (closing < 0) {
      continue;
    }
    std::vector<int> cycle;
    for (int node = closing; node != source; node = parent[node]) {
      cycle.push_back(node);
    }
    cycle.push_back(source);
    std::reverse(cycle.begin(), cycle.end());
    if (best.empty() || cycle.size() < best.size()) {
      best = std::move(cycle);
    }
  }
  if (best.empty()) {
    throw InternalError("closed-walk core is non-empty but the transition "
                        "digraph is acyclic");
  }
  Walk walk = unroll_cycle(t, best);
  if (!is_pc_walk(g, walk) || !walk.closed()) {
    throw InternalError("closed-walk witness failed verification");
  }
  result.witness = std::move(walk);
  return result;
}

namespace {

// Depth-first search for a closed PC trail using only `usable` edges.
class TrailSearch {
 public:
  TrailSearch(const Graph& g, std::vector<bool> usable)
      : g_(g), usable_(std::move(usable)), used_(usable_.size(), false) {}

  std::optional<Walk> run() {
    for (std::size_t i = 0; i < usable_.size(); ++i) {
      if (!usable_[i]) {
        continue;
      }
      const Edge& first = g_.edges()[i];
      for (Vertex start : {first.u, first.v}) {
        start_ = start;
        first_color_ = first.color;
        walk_ = Walk{{start, first.other(start)}, {first.id}};
        used_[i] = true;
        const bool found = extend(first.other(start), first.color);
        used_[i] = false;
        if (found) {
          return walk_;
        }
      }
    }
    return std::nullopt;
  }

 private:
  bool extend(Vertex at, Color last) {
    for (const Edge& e : g_.incident(at)) {
      const int pos = g_.edge_index(e.id);
      if (!usable_[pos] || used_[pos] || e.color == last) {
        continue;
      }
      const Vertex next = e.other(at);
      used_[pos] = true;
      walk_.edges.push_back(e.id);
      walk_.vertices.push_back(next);
      if (next == start_ && e.color != first_color_) {
        return true;
      }
      if (extend(next, e.color)) {
        return true;
      }
      walk_.edges.pop_back();
      walk_.vertices.pop_back();
      used_[pos] = false;
    }
    return false;
  }

  const Graph& g_;
  std::vector<bool> usable_;
  std::vector<bool> used_;
  Vertex start_ = 0;
  Color first_color_ = 0;
  Walk walk_;
};

// Simple cycles through `allowed` vertices whose smallest vertex is the
// start, searched in increasing start order.
class CycleSearch {
 public:
  CycleSearch(const Graph& g, std::vector<bool> allowed)
      : g_(g), allowed_(std::move(allowed)), on_path_(allowed_.size(), false) {}

  std::optional<Walk> run() {
    for (Vertex s = 0; s < g_.vertex_count(); ++s) {
      if (!allowed_[s]) {
        continue;
      }
      start_ = s;
      for (const Edge& first : g_.incident(s)) {
        const Vertex w = first.other(s);
        if (!allowed_[w] || w < s) {
          continue;
        }
        first_ = first;
        walk_ = Walk{{s, w}, {first.id}};
        on_path_[s] = on_path_[w] = true;
        const bool found = extend(w, first.color);
        on_path_[s] = on_path_[w] = false;
        if (found) {
          return walk_;
        }
      }
    }
    return std::nullopt;
  }

 private:
  bool extend(Vertex at, Color last) {
    for (const Edge& e : g_.incident(at)) {
      if (e.color == last || e.id == first_.id) {
        continue;
      }
      const Vertex next = e.other(at);
      if (next == start_) {
        if (e.color != first_.color) {
          walk_.edges.push_back(e.id);
          walk_.vertices.push_back(next);
          return true;
        }
        continue;
      }
      if (!allowed_[next] || next < start_ || on_path_[next]) {
        continue;
      }
      on_path_[next] = true;
      walk_.edges.push_back(e.id);
      walk_.vertices.push_back(next);
      if (extend(next, e.color)) {
        return true;
      }
      walk_.edges.pop_back();
      walk_.vertices.pop_back();
      on_path_[next] = false;
    }
    return false;
  }

  const Graph& g_;
  std::vector<bool> allowed_;
  std::vector<bool> on_path_;
  Vertex start_ = 0;
  Edge first_{};
  Walk walk_;
};

}  // namespace

Detection has_pc_closed_trail(const Graph& g, int max_witness_edges) {
  Detection result;
  const auto core = detail::closed_trail_core(g);
  result.present = !core.empty();
  if (!result.present) {
    return result;
  }
  const auto core_edges =
      static_cast<int>(std::count(core.edge_alive.begin(), core.edge_alive.end(), true));
  if (core_edges > max_witness_edges) {
    result.witness_refused = CapacityError("closed-trail witness search", core_edges,
                                           max_witness_edges)
                                 .what();
    return result;
  }
  auto trail = TrailSearch(g, core.edge_alive).run();
  if (!trail || !is_pc_walk(g, *trail) || !is_trail(*trail) || !trail->closed()) {
    throw InternalError("closed-trail core is non-empty but no valid witness found");
  }
  result.witness = std::move(trail);
  return result;
}

Detection has_pc_cycle(const Graph& g, int max_witness_vertices) {
  Detection result;
  const VertexSet residue = detail::type1_residue(g);
  result.present = !residue.empty();
  if (!result.present) {
    return result;
  }
  const auto size = static_cast<int>(residue.size());
  if (size > max_witness_vertices) {
    result.witness_refused =
        CapacityError("PC cycle witness search", size, max_witness_vertices).what();
    return result;
  }
  std::vector<bool> allowed(static_cast<std::size_t>(g.vertex_count()), false);
  for (Vertex v : residue) {
    allowed[v] = true;
  }
  auto cycle = CycleSearch(g, std::move(allowed)).run();
  if (!cycle || !is_pc_walk(g, *cycle) || !is_cycle(*cycle)) {
    throw InternalError("type-1 residue is non-empty but no PC cycle was found");
  }
  result.witness = std::move(cycle);
  return result;
}

}  // namespace ecg
