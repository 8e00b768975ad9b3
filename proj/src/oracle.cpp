#include "ecg/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <queue>

#include "ecg/errors.hpp"
#include "ecg/pc_structures.hpp"

namespace ecg::oracle {

namespace {

struct ColorSeen {
  Color color = 0;
  bool single = true;
  void add(Color c) {
    if (color == 0) {
      color = c;
    } else if (c != color) {
      single = false;
    }
  }
};

// Vertices reachable from `from` inside `alive`, never crossing `skip_edge`.
std::vector<bool> reach(const Graph& g, Vertex from, const std::vector<bool>& alive,
                        EdgeId skip_edge) {
  std::vector<bool> seen(alive.size(), false);
  std::queue<Vertex> queue;
  seen[from] = true;
  queue.push(from);
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop();
    for (const Edge& e : g.incident(v)) {
      const Vertex w = e.other(v);
      if (e.id != skip_edge && alive[w] && !seen[w]) {
        seen[w] = true;
        queue.push(w);
      }
    }
  }
  return seen;
}

// Definition clause for vertex v when `placed` lists the earlier vertices.
bool clause_holds(const Graph& g, const std::vector<bool>& placed, Vertex v, int type) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<bool> later(n, false);
  for (Vertex w = 0; w < g.vertex_count(); ++w) {
    later[w] = !placed[w] && w != v;
  }

  if (type == 1) {
    // Label the components of G[later] touched by v, one color each.
    std::vector<int> label(n, -1);
    std::vector<ColorSeen> seen;
    for (const Edge& e : g.incident(v)) {
      const Vertex w = e.other(v);
      if (!later[w]) {
        continue;
      }
      if (label[w] == -1) {
        const auto component = reach(g, w, later, -1);
        for (Vertex u = 0; u < g.vertex_count(); ++u) {
          if (component[u]) {
            label[u] = static_cast<int>(seen.size());
          }
        }
        seen.emplace_back();
      }
      seen[label[w]].add(e.color);
    }
    return std::all_of(seen.begin(), seen.end(), [](const ColorSeen& s) { return s.single; });
  }

  if (type == 2) {
    std::vector<bool> suffix = later;
    suffix[v] = true;
    ColorSeen after;
    for (const Edge& e : g.incident(v)) {
      const Vertex w = e.other(v);
      if (!later[w]) {
        continue;
      }
      // Bridge in G[suffix] iff w is unreachable from v once e is gone.
      const bool bridge = !reach(g, v, suffix, e.id)[w];
      if (!bridge) {
        after.add(e.color);
      }
    }
    return after.single;
  }

  ColorSeen after;
  ColorSeen before;
  for (const Edge& e : g.incident(v)) {
    if (later[e.other(v)]) {
      after.add(e.color);
    } else {
      before.add(e.color);
    }
  }
  if (!after.single) {
    return false;
  }
  if (type >= 4 && !before.single) {
    return false;
  }
  if (type == 5 && after.color != 0 && before.color != 0 && after.color == before.color) {
    return false;
  }
  return true;
}

void require_bound(const char* what, int size, int bound) {
  if (size > bound) {
    throw CapacityError(what, size, bound);
  }
}

// Calls visit(subset) for subsets of `items` by size, then lexicographically,
// until visit returns true. Returns the accepted subset.
std::optional<std::vector<int>> first_subset(const std::vector<int>& items,
                                             const std::function<bool(const std::vector<int>&)>& visit) {
  const auto total = static_cast<int>(items.size());
  std::vector<int> chosen;
  std::function<bool(int, int)> choose = [&](int from, int remaining) -> bool {
    if (remaining == 0) {
      return visit(chosen);
    }
    for (int i = from; i <= total - remaining; ++i) {
      chosen.push_back(items[i]);
      if (choose(i + 1, remaining - 1)) {
        return true;
      }
      chosen.pop_back();
    }
    return false;
  };
  for (int size = 0; size <= total; ++size) {
    if (choose(0, size)) {
      return chosen;
    }
  }
  return std::nullopt;
}

// Maximum number of pairwise disjoint masks (exhaustive with a simple bound).
std::vector<int> max_disjoint_family(const std::vector<std::uint64_t>& masks) {
  std::vector<int> best;
  std::vector<int> current;
  std::function<void(std::size_t, std::uint64_t)> search = [&](std::size_t from,
                                                               std::uint64_t used) {
    if (current.size() > best.size()) {
      best = current;
    }
    int compatible = 0;
    for (std::size_t j = from; j < masks.size(); ++j) {
      compatible += (masks[j] & used) == 0;
    }
    if (current.size() + static_cast<std::size_t>(compatible) <= best.size()) {
      return;
    }
    for (std::size_t j = from; j < masks.size(); ++j) {
      if ((masks[j] & used) == 0) {
        current.push_back(static_cast<int>(j));
        search(j + 1, used | masks[j]);
        current.pop_back();
      }
    }
  };
  search(0, 0);
  return best;
}

// Keeps one representative per mask and drops masks that strictly contain
// another; returns indices into `masks`, smallest masks first.
std::vector<int> minimal_masks(const std::vector<std::uint64_t>& masks) {
  std::vector<int> order(masks.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const int pa = std::popcount(masks[a]);
    const int pb = std::popcount(masks[b]);
    return pa != pb ? pa < pb : masks[a] < masks[b];
  });
  std::vector<int> kept;
  for (int i : order) {
    bool dominated = false;
    for (int k : kept) {
      if ((masks[k] & masks[i]) == masks[k]) {
        dominated = true;
        break;
      }
    }
    if (!dominated) {
      kept.push_back(i);
    }
  }
  return kept;
}

void check_terminals(const Graph& g, Vertex x, Vertex y) {
  if (x < 0 || y < 0 || x >= g.vertex_count() || y >= g.vertex_count() || x == y) {
    throw GraphError("terminals must be distinct vertices of the graph");
  }
}

}  // namespace

bool literal_ordering_check(const Graph& g, std::span<const Vertex> ordering, int type) {
  if (type < 1 || type > 5) {
    throw GraphError("acyclicity type must be in 1..5");
  }
  const auto n = static_cast<std::size_t>(g.vertex_count());
  if (ordering.size() != n) {
    throw GraphError("ordering length differs from vertex count");
  }
  std::vector<bool> placed(n, false);
  std::vector<bool> used(n, false);
  for (Vertex v : ordering) {
    if (v < 0 || v >= g.vertex_count() || used[v]) {
      throw GraphError("ordering is not a permutation of the vertices");
    }
    used[v] = true;
  }
  for (Vertex v : ordering) {
    if (!clause_holds(g, placed, v, type)) {
      return false;
    }
    placed[v] = true;
  }
  return true;
}

std::optional<VertexOrdering> brute_recognize(const Graph& g, int type, int max_vertices) {
  if (type < 1 || type > 5) {
    throw GraphError("acyclicity type must be in 1..5");
  }
  const int n = g.vertex_count();
  require_bound("brute-force ordering search", n, std::min(max_vertices, 20));
  // Prefix sets proven not to extend to a full ordering.
  std::vector<bool> dead(std::size_t{1} << n, false);
  std::vector<bool> placed(static_cast<std::size_t>(n), false);
  VertexOrdering ordering;
  std::function<bool(std::uint32_t)> extend = [&](std::uint32_t mask) -> bool {
    if (static_cast<int>(ordering.size()) == n) {
      return true;
    }
    for (Vertex v = 0; v < n; ++v) {
      const std::uint32_t bit = std::uint32_t{1} << v;
      if ((mask & bit) || dead[mask | bit] || !clause_holds(g, placed, v, type)) {
        continue;
      }
      placed[v] = true;
      ordering.push_back(v);
      if (extend(mask | bit)) {
        return true;
      }
      ordering.pop_back();
      placed[v] = false;
    }
    dead[mask] = true;
    return false;
  };
  if (extend(0)) {
    return ordering;
  }
  return std::nullopt;
}

bool pc_path_exists(const Graph& g, Vertex x, Vertex y,
                    const std::vector<bool>& removed_vertices,
                    const std::vector<bool>& removed_edges) {
  check_terminals(g, x, y);
  std::vector<bool> on_path(static_cast<std::size_t>(g.vertex_count()), false);
  std::function<bool(Vertex, Color)> walk = [&](Vertex at, Color last) -> bool {
    for (const Edge& e : g.incident(at)) {
      const Vertex w = e.other(at);
      if (e.color == last || on_path[w] || removed_vertices[w] ||
          removed_edges[g.edge_index(e.id)]) {
        continue;
      }
      if (w == y) {
        return true;
      }
      on_path[w] = true;
      const bool found = walk(w, e.color);
      on_path[w] = false;
      if (found) {
        return true;
      }
    }
    return false;
  };
  on_path[x] = true;
  return walk(x, 0);
}

bool pc_path_exists(const Graph& g, Vertex x, Vertex y) {
  return pc_path_exists(g, x, y, std::vector<bool>(static_cast<std::size_t>(g.vertex_count()), false),
                        std::vector<bool>(static_cast<std::size_t>(g.edge_count()), false));
}

std::vector<Walk> all_pc_paths(const Graph& g, Vertex x, Vertex y) {
  check_terminals(g, x, y);
  std::vector<Walk> paths;
  std::vector<bool> on_path(static_cast<std::size_t>(g.vertex_count()), false);
  Walk current{{x}, {}};
  std::function<void(Vertex, Color)> walk = [&](Vertex at, Color last) {
    for (const Edge& e : g.incident(at)) {
      const Vertex w = e.other(at);
      if (e.color == last || on_path[w]) {
        continue;
      }
      current.vertices.push_back(w);
      current.edges.push_back(e.id);
      if (w == y) {
        paths.push_back(current);
      } else {
        on_path[w] = true;
        walk(w, e.color);
        on_path[w] = false;
      }
      current.vertices.pop_back();
      current.edges.pop_back();
    }
  };
  on_path[x] = true;
  walk(x, 0);
  return paths;
}

VertexSolution brute_min_separator(const Graph& g, Vertex x, Vertex y, int max_vertices) {
  check_terminals(g, x, y);
  require_bound("brute-force separator", g.vertex_count(), max_vertices);
  if (g.adjacent(x, y)) {
    throw InfeasibleError("x and y are adjacent; no vertex set separates them");
  }
  std::vector<int> candidates;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (v != x && v != y) {
      candidates.push_back(v);
    }
  }
  const std::vector<bool> no_edges(static_cast<std::size_t>(g.edge_count()), false);
  auto separates = [&](const std::vector<int>& subset) {
    std::vector<bool> removed(static_cast<std::size_t>(g.vertex_count()), false);
    for (int v : subset) {
      removed[v] = true;
    }
    return !pc_path_exists(g, x, y, removed, no_edges);
  };
  auto found = first_subset(candidates, separates);
  // Removing every candidate always separates non-adjacent terminals.
  VertexSolution solution;
  solution.vertices.assign(found->begin(), found->end());
  solution.size = static_cast<int>(solution.vertices.size());
  return solution;
}

Packing brute_max_packing(const Graph& g, Vertex x, Vertex y, int max_vertices) {
  check_terminals(g, x, y);
  require_bound("brute-force packing", g.vertex_count(), std::min(max_vertices, 64));
  const auto paths = all_pc_paths(g, x, y);
  Packing packing;
  std::vector<std::uint64_t> masks;
  std::vector<int> owner;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    std::uint64_t mask = 0;
    for (std::size_t k = 1; k + 1 < paths[i].vertices.size(); ++k) {
      mask |= std::uint64_t{1} << paths[i].vertices[k];
    }
    if (mask == 0) {
      // A single x-y edge has no internal vertex and clashes with nothing.
      packing.paths.push_back(paths[i]);
      continue;
    }
    masks.push_back(mask);
    owner.push_back(static_cast<int>(i));
  }
  const auto kept = minimal_masks(masks);
  std::vector<std::uint64_t> kept_masks;
  for (int k : kept) {
    kept_masks.push_back(masks[k]);
  }
  for (int j : max_disjoint_family(kept_masks)) {
    packing.paths.push_back(paths[owner[kept[j]]]);
  }
  packing.size = static_cast<int>(packing.paths.size());
  return packing;
}

EdgeSolution brute_min_edge_separator(const Graph& g, Vertex x, Vertex y, int max_vertices) {
  check_terminals(g, x, y);
  require_bound("brute-force edge separator", g.vertex_count(), max_vertices);
  const std::vector<bool> no_vertices(static_cast<std::size_t>(g.vertex_count()), false);
  // Only edges on some PC x-y path can matter.
  std::vector<bool> relevant(static_cast<std::size_t>(g.edge_count()), false);
  for (const Walk& p : all_pc_paths(g, x, y)) {
    for (EdgeId id : p.edges) {
      relevant[g.edge_index(id)] = true;
    }
  }
  std::vector<int> candidates;
  for (int i = 0; i < g.edge_count(); ++i) {
    if (relevant[i]) {
      candidates.push_back(i);
    }
  }
  auto separates = [&](const std::vector<int>& subset) {
    std::vector<bool> removed(static_cast<std::size_t>(g.edge_count()), false);
    for (int i : subset) {
      removed[i] = true;
    }
    return !pc_path_exists(g, x, y, no_vertices, removed);
  };
  auto found = first_subset(candidates, separates);
  EdgeSolution solution;
  for (int i : *found) {
    solution.edges.push_back(g.edges()[i].id);
  }
  std::sort(solution.edges.begin(), solution.edges.end());
  solution.size = static_cast<int>(solution.edges.size());
  return solution;
}

Packing brute_max_edge_packing(const Graph& g, Vertex x, Vertex y, int max_vertices) {
  check_terminals(g, x, y);
  require_bound("brute-force edge packing", g.vertex_count(), max_vertices);
  if (g.edge_count() > 64) {
    throw CapacityError("brute-force edge packing", g.edge_count(), 64);
  }
  const auto paths = all_pc_paths(g, x, y);
  std::vector<std::uint64_t> masks;
  for (const Walk& p : paths) {
    std::uint64_t mask = 0;
    for (EdgeId id : p.edges) {
      mask |= std::uint64_t{1} << g.edge_index(id);
    }
    masks.push_back(mask);
  }
  const auto kept = minimal_masks(masks);
  std::vector<std::uint64_t> kept_masks;
  for (int k : kept) {
    kept_masks.push_back(masks[k]);
  }
  Packing packing;
  for (int j : max_disjoint_family(kept_masks)) {
    packing.paths.push_back(paths[kept[j]]);
  }
  packing.size = static_cast<int>(packing.paths.size());
  return packing;
}

VertexSolution brute_min_deletion_to_type5(const Graph& g, int max_vertices) {
  require_bound("brute-force type-5 deletion", g.vertex_count(), max_vertices);
  std::vector<int> all(static_cast<std::size_t>(g.vertex_count()));
  std::iota(all.begin(), all.end(), 0);
  auto acyclic_after = [&](const std::vector<int>& subset) {
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (std::find(subset.begin(), subset.end(), v) == subset.end()) {
        keep.push_back(v);
      }
    }
    return recognize_type5(induced_subgraph(g, keep).graph).has_value();
  };
  auto found = first_subset(all, acyclic_after);
  VertexSolution solution;
  solution.vertices.assign(found->begin(), found->end());
  solution.size = static_cast<int>(solution.vertices.size());
  return solution;
}

namespace {

// Enumerates simple cycles (each in both directions) with the smallest
// vertex first; stops when visit returns true.
bool for_each_cycle(const Graph& g, const std::function<bool(const Walk&)>& visit) {
  const int n = g.vertex_count();
  std::vector<bool> on_path(static_cast<std::size_t>(n), false);
  Walk current;
  Vertex start = 0;
  std::function<bool(Vertex)> grow = [&](Vertex at) -> bool {
    for (const Edge& e : g.incident(at)) {
      const Vertex w = e.other(at);
      if (w == start && current.edges.size() >= 1 && e.id != current.edges.front()) {
        current.edges.push_back(e.id);
        current.vertices.push_back(w);
        const bool stop = visit(current);
        current.edges.pop_back();
        current.vertices.pop_back();
        if (stop) {
          return true;
        }
        continue;
      }
      if (w <= start || on_path[w]) {
        continue;
      }
      on_path[w] = true;
      current.edges.push_back(e.id);
      current.vertices.push_back(w);
      if (grow(w)) {
        return true;
      }
      current.edges.pop_back();
      current.vertices.pop_back();
      on_path[w] = false;
    }
    return false;
  };
  for (start = 0; start < n; ++start) {
    current = Walk{{start}, {}};
    on_path.assign(static_cast<std::size_t>(n), false);
    on_path[start] = true;
    if (grow(start)) {
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<Walk> find_pc_cycle(const Graph& g) {
  std::optional<Walk> found;
  for_each_cycle(g, [&](const Walk& c) {
    const std::size_t len = c.edges.size();
    for (std::size_t i = 0; i < len; ++i) {
      if (g.edge(c.edges[i]).color == g.edge(c.edges[(i + 1) % len]).color) {
        return false;
      }
    }
    found = c;
    return true;
  });
  return found;
}

std::optional<Walk> find_pc_closed_trail(const Graph& g) {
  const int m = g.edge_count();
  std::vector<bool> used(static_cast<std::size_t>(m), false);
  Walk current;
  std::function<bool(Vertex, Color)> grow = [&](Vertex at, Color last) -> bool {
    const Vertex start = current.vertices.front();
    const Color first = g.edge(current.edges.front()).color;
    for (const Edge& e : g.incident(at)) {
      const int pos = g.edge_index(e.id);
      if (used[pos] || e.color == last) {
        continue;
      }
      const Vertex w = e.other(at);
      used[pos] = true;
      current.edges.push_back(e.id);
      current.vertices.push_back(w);
      if ((w == start && e.color != first) || grow(w, e.color)) {
        return true;
      }
      current.edges.pop_back();
      current.vertices.pop_back();
      used[pos] = false;
    }
    return false;
  };
  for (int i = 0; i < m; ++i) {
    const Edge& e = g.edges()[i];
    for (Vertex s : {e.u, e.v}) {
      current = Walk{{s, e.other(s)}, {e.id}};
      used[i] = true;
      if (grow(e.other(s), e.color)) {
        return current;
      }
      used[i] = false;
    }
  }
  return std::nullopt;
}

bool has_pc_closed_walk(const Graph& g) {
  const TransitionDigraph t = transition_digraph(g);
  const auto count = t.nodes.size();
  // 0 = unvisited, 1 = on stack, 2 = finished.
  std::vector<int> state(count, 0);
  std::function<bool(int)> dfs = [&](int node) -> bool {
    state[node] = 1;
    for (int next : t.successors[node]) {
      if (state[next] == 1 || (state[next] == 0 && dfs(next))) {
        return true;
      }
    }
    state[node] = 2;
    return false;
  };
  for (std::size_t i = 0; i < count; ++i) {
    if (state[i] == 0 && dfs(static_cast<int>(i))) {
      return true;
    }
  }
  return false;
}

bool cycle_parity_condition(const Graph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.incident_colors(v).size() > 2) {
      return false;
    }
  }
  const bool violated = for_each_cycle(g, [&](const Walk& c) {
    const std::size_t len = c.edges.size();
    int mono = 0;
    for (std::size_t i = 0; i < len; ++i) {
      mono += g.edge(c.edges[i]).color == g.edge(c.edges[(i + 1) % len]).color;
    }
    return mono == 0 || mono % 2 == 1;
  });
  return !violated;
}

int min_vertex_cover(const PlainGraph& h) {
  std::vector<int> all(static_cast<std::size_t>(h.n));
  std::iota(all.begin(), all.end(), 0);
  auto covers = [&](const std::vector<int>& s) {
    return std::all_of(h.edges.begin(), h.edges.end(), [&](const auto& e) {
      return std::find(s.begin(), s.end(), e.first) != s.end() ||
             std::find(s.begin(), s.end(), e.second) != s.end();
    });
  };
  return static_cast<int>(first_subset(all, covers)->size());
}

int min_feedback_vertex_set(const Digraph& d) {
  std::vector<int> all(static_cast<std::size_t>(d.n));
  std::iota(all.begin(), all.end(), 0);
  auto breaks_all_cycles = [&](const std::vector<int>& s) {
    std::vector<bool> gone(static_cast<std::size_t>(d.n), false);
    for (int v : s) {
      gone[v] = true;
    }
    std::vector<int> indegree(static_cast<std::size_t>(d.n), 0);
    for (const auto& [u, v] : d.arcs) {
      if (!gone[u] && !gone[v]) {
        ++indegree[v];
      }
    }
    std::vector<int> ready;
    int remaining = 0;
    for (int v = 0; v < d.n; ++v) {
      if (!gone[v]) {
        ++remaining;
        if (indegree[v] == 0) {
          ready.push_back(v);
        }
      }
    }
    while (!ready.empty()) {
      const int v = ready.back();
      ready.pop_back();
      --remaining;
      for (const auto& [a, b] : d.arcs) {
        if (a == v && !gone[b] && --indegree[b] == 0) {
          ready.push_back(b);
        }
      }
    }
    return remaining == 0;
  };
  return static_cast<int>(first_subset(all, breaks_all_cycles)->size());
}

int min_odd_cycle_transversal(const PlainGraph& h) {
  std::vector<int> all(static_cast<std::size_t>(h.n));
  std::iota(all.begin(), all.end(), 0);
  auto leaves_bipartite = [&](const std::vector<int>& s) {
    std::vector<int> side(static_cast<std::size_t>(h.n), -1);
    for (int v : s) {
      side[v] = 2;
    }
    // Propagate two-colorings until stable; a clash means an odd cycle.
    for (int root = 0; root < h.n; ++root) {
      if (side[root] != -1) {
        continue;
      }
      side[root] = 0;
      bool changed = true;
      while (changed) {
        changed = false;
        for (const auto& [u, v] : h.edges) {
          if (side[u] == 2 || side[v] == 2) {
            continue;
          }
          if (side[u] >= 0 && side[v] >= 0) {
            if (side[u] == side[v]) {
              return false;
            }
          } else if (side[u] >= 0) {
            side[v] = 1 - side[u];
            changed = true;
          } else if (side[v] >= 0) {
            side[u] = 1 - side[v];
            changed = true;
          }
        }
      }
    }
    return true;
  };
  return static_cast<int>(first_subset(all, leaves_bipartite)->size());
}

bool betweenness_satisfiable(const BetweennessInstance& inst) {
  std::vector<int> order(static_cast<std::size_t>(inst.universe));
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> pos(order.size());
  do {
    for (std::size_t i = 0; i < order.size(); ++i) {
      pos[order[i]] = static_cast<int>(i);
    }
    const bool ok = std::all_of(inst.triples.begin(), inst.triples.end(), [&](const auto& t) {
      const int px = pos[t[0]];
      const int py = pos[t[1]];
      const int pz = pos[t[2]];
      return (px < py && py < pz) || (pz < py && py < px);
    });
    if (ok) {
      return true;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

bool restricted_perfect_matching_exists(const RbpmInstance& inst) {
  const auto m = inst.edges.size();
  std::vector<int> class_of(m);
  std::iota(class_of.begin(), class_of.end(), 0);
  for (const auto& [a, b] : inst.pairs) {
    class_of[b] = class_of[a];
  }
  std::vector<bool> right_used(static_cast<std::size_t>(inst.side), false);
  std::vector<bool> class_used(m, false);
  std::function<bool(int)> match = [&](int left) -> bool {
    if (left == inst.side) {
      return true;
    }
    for (std::size_t e = 0; e < m; ++e) {
      const auto [u, v] = inst.edges[e];
      if (u != left || right_used[v] || class_used[class_of[e]]) {
        continue;
      }
      right_used[v] = true;
      class_used[class_of[e]] = true;
      if (match(left + 1)) {
        return true;
      }
      right_used[v] = false;
      class_used[class_of[e]] = false;
    }
    return false;
  };
  return match(0);
}

}  // namespace ecg::oracle
