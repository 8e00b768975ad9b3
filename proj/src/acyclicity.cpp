#include "ecg/acyclicity.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <queue>

#include "ecg/errors.hpp"
#include "ecg/structure.hpp"

namespace ecg {

namespace {

std::vector<int> positions_of(const Graph& g, std::span<const Vertex> ordering) {
  const int n = g.vertex_count();
  if (static_cast<int>(ordering.size()) != n) {
    throw GraphError("ordering length differs from vertex count");
  }
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < ordering.size(); ++i) {
    const Vertex v = ordering[i];
    if (v < 0 || v >= n || pos[v] != -1) {
      throw GraphError("ordering is not a permutation of the vertices");
    }
    pos[v] = static_cast<int>(i);
  }
  return pos;
}

// Tracks whether a stream of colors contains at most one distinct value.
struct OneColor {
  Color color = 0;
  bool ok = true;

  void add(Color c) {
    if (color == 0) {
      color = c;
    } else if (color != c) {
      ok = false;
    }
  }
};

}  // namespace

bool verify_ordering(const Graph& g, std::span<const Vertex> ordering, int type) {
  if (type < 1 || type > 5) {
    throw GraphError("acyclicity type must be in 1..5");
  }
  const std::vector<int> pos = positions_of(g, ordering);
  const int n = g.vertex_count();
  const std::vector<bool> all_edges(static_cast<std::size_t>(g.edge_count()), true);

  for (int i = 0; i < n; ++i) {
    const Vertex v = ordering[i];
    if (type == 1) {
      VertexSet after(ordering.begin() + i + 1, ordering.end());
      std::vector<int> component_of(static_cast<std::size_t>(n), -1);
      const auto components = connected_components(g, after);
      for (std::size_t c = 0; c < components.size(); ++c) {
        for (Vertex w : components[c]) {
          component_of[w] = static_cast<int>(c);
        }
      }
      std::vector<OneColor> per_component(components.size());
      for (const Edge& e : g.incident(v)) {
        const Vertex w = e.other(v);
        if (pos[w] > i) {
          per_component[component_of[w]].add(e.color);
        }
      }
      for (const auto& seen : per_component) {
        if (!seen.ok) {
          return false;
        }
      }
      continue;
    }

    OneColor after;
    OneColor before;
    if (type == 2) {
      std::vector<bool> alive(static_cast<std::size_t>(n), false);
      for (Vertex w = 0; w < n; ++w) {
        alive[w] = pos[w] >= i;
      }
      const auto is_bridge = detail::bridge_flags(g, alive, all_edges);
      for (const Edge& e : g.incident(v)) {
        if (pos[e.other(v)] > i && !is_bridge[g.edge_index(e.id)]) {
          after.add(e.color);
        }
      }
      if (!after.ok) {
        return false;
      }
      continue;
    }

    for (const Edge& e : g.incident(v)) {
      (pos[e.other(v)] > i ? after : before).add(e.color);
    }
    if (!after.ok) {
      return false;
    }
    if (type >= 4 && !before.ok) {
      return false;
    }
    if (type == 5 && before.color != 0 && after.color != 0 &&
        before.color == after.color) {
      return false;
    }
  }
  return true;
}

namespace {

struct Peeling {
  VertexOrdering removed;
  VertexSet residue;
};

Peeling peel_type1(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<bool> alive(static_cast<std::size_t>(n), true);
  const std::vector<bool> all_edges(static_cast<std::size_t>(g.edge_count()), true);
  VertexOrdering ordering;
  std::vector<int> component_of(static_cast<std::size_t>(n));

  // z qualifies when every component of the remainder minus z receives
  // edges of a single color from z.
  auto qualifies = [&](Vertex z) {
    std::fill(component_of.begin(), component_of.end(), -1);
    int label = 0;
    for (const Edge& start : g.incident(z)) {
      const Vertex s = start.other(z);
      if (!alive[s] || component_of[s] != -1) {
        continue;
      }
      std::vector<Vertex> stack{s};
      component_of[s] = label;
      while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (const Edge& e : g.incident(v)) {
          const Vertex w = e.other(v);
          if (w != z && alive[w] && component_of[w] == -1) {
            component_of[w] = label;
            stack.push_back(w);
          }
        }
      }
      ++label;
    }
    std::vector<OneColor> seen(static_cast<std::size_t>(label));
    for (const Edge& e : g.incident(z)) {
      const Vertex w = e.other(z);
      if (alive[w]) {
        seen[component_of[w]].add(e.color);
      }
    }
    return std::all_of(seen.begin(), seen.end(),
                       [](const OneColor& c) { return c.ok; });
  };

  for (int round = 0; round < n; ++round) {
    Vertex chosen = -1;
    // Monochromatic vertices always qualify and cost O(deg) to spot.
    for (Vertex z = 0; z < n && chosen < 0; ++z) {
      if (alive[z] && detail::monochromatic_in(g, z, alive, all_edges)) {
        chosen = z;
      }
    }
    for (Vertex z = 0; z < n && chosen < 0; ++z) {
      if (alive[z] && qualifies(z)) {
        chosen = z;
      }
    }
    if (chosen < 0) {
      break;
    }
    ordering.push_back(chosen);
    alive[chosen] = false;
  }
  Peeling result{std::move(ordering), {}};
  for (Vertex v = 0; v < n; ++v) {
    if (alive[v]) {
      result.residue.push_back(v);
    }
  }
  return result;
}

}  // namespace

std::optional<VertexOrdering> recognize_type1(const Graph& g) {
  auto peeling = peel_type1(g);
  if (!peeling.residue.empty()) {
    return std::nullopt;
  }
  return std::move(peeling.removed);
}

namespace detail {

VertexSet type1_residue(const Graph& g) { return peel_type1(g).residue; }

bool TrailCore::empty() const {
  return std::find(vertex_alive.begin(), vertex_alive.end(), true) ==
         vertex_alive.end();
}

TrailCore closed_trail_core(const Graph& g) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  TrailCore core{std::vector<bool>(static_cast<std::size_t>(n), true),
                 std::vector<bool>(static_cast<std::size_t>(m), true)};
  bool changed = true;
  while (changed) {
    changed = false;
    const auto is_bridge = bridge_flags(g, core.vertex_alive, core.edge_alive);
    for (int i = 0; i < m; ++i) {
      if (core.edge_alive[i] && is_bridge[i]) {
        core.edge_alive[i] = false;
        changed = true;
      }
    }
    for (Vertex v = 0; v < n; ++v) {
      if (core.vertex_alive[v] &&
          monochromatic_in(g, v, core.vertex_alive, core.edge_alive)) {
        core.vertex_alive[v] = false;
        changed = true;
      }
    }
  }
  for (int i = 0; i < m; ++i) {
    const Edge& e = g.edges()[i];
    if (!core.vertex_alive[e.u] || !core.vertex_alive[e.v]) {
      core.edge_alive[i] = false;
    }
  }
  return core;
}

VertexSet closed_walk_core(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<bool> alive(static_cast<std::size_t>(n), true);
  const std::vector<bool> all_edges(static_cast<std::size_t>(g.edge_count()), true);
  std::vector<Vertex> queue;
  auto check = [&](Vertex v) {
    if (alive[v] && monochromatic_in(g, v, alive, all_edges)) {
      alive[v] = false;
      queue.push_back(v);
    }
  };
  for (Vertex v = 0; v < n; ++v) {
    check(v);
  }
  while (!queue.empty()) {
    const Vertex v = queue.back();
    queue.pop_back();
    for (const Edge& e : g.incident(v)) {
      check(e.other(v));
    }
  }
  VertexSet core;
  for (Vertex v = 0; v < n; ++v) {
    if (alive[v]) {
      core.push_back(v);
    }
  }
  return core;
}

}  // namespace detail

std::optional<VertexOrdering> recognize_type2(const Graph& g) {
  const int n = g.vertex_count();
  const int m = g.edge_count();

  if (!detail::closed_trail_core(g).empty()) {
    return std::nullopt;
  }

  // Certificate: emit a vertex whose non-bridge edges in the remainder share
  // one color.
  std::vector<bool> alive(static_cast<std::size_t>(n), true);
  const std::vector<bool> all_edges(static_cast<std::size_t>(m), true);
  VertexOrdering ordering;
  for (int round = 0; round < n; ++round) {
    const auto is_bridge = detail::bridge_flags(g, alive, all_edges);
    Vertex chosen = -1;
    for (Vertex v = 0; v < n && chosen < 0; ++v) {
      if (!alive[v]) {
        continue;
      }
      OneColor colors;
      for (const Edge& e : g.incident(v)) {
        if (alive[e.other(v)] && !is_bridge[g.edge_index(e.id)]) {
          colors.add(e.color);
        }
      }
      if (colors.ok) {
        chosen = v;
      }
    }
    if (chosen < 0) {
      throw InternalError("type-2 certificate construction stalled on a graph "
                          "without PC closed trail");
    }
    ordering.push_back(chosen);
    alive[chosen] = false;
  }
  if (!verify_ordering(g, ordering, 2)) {
    throw InternalError("type-2 certificate failed verification");
  }
  return ordering;
}

std::optional<VertexOrdering> recognize_type3(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<bool> alive(static_cast<std::size_t>(n), true);
  const std::vector<bool> all_edges(static_cast<std::size_t>(g.edge_count()), true);
  VertexOrdering ordering;
  for (int round = 0; round < n; ++round) {
    Vertex chosen = -1;
    for (Vertex v = 0; v < n && chosen < 0; ++v) {
      if (alive[v] && detail::monochromatic_in(g, v, alive, all_edges)) {
        chosen = v;
      }
    }
    if (chosen < 0) {
      return std::nullopt;
    }
    ordering.push_back(chosen);
    alive[chosen] = false;
  }
  return ordering;
}

std::optional<VertexOrdering> recognize_type4(const Graph& g, int max_vertices) {
  constexpr int kHardCap = 28;
  const int n = g.vertex_count();
  const int bound = std::min(max_vertices, kHardCap);
  if (n > bound) {
    throw CapacityError("type-4 subset search", n, bound);
  }
  using Mask = std::uint32_t;
  const Mask full = n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n) - 1);

  // Per vertex: one neighbour mask per incident color.
  struct ColorMask {
    Color color;
    Mask neighbours;
  };
  std::vector<std::vector<ColorMask>> masks(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    for (const Edge& e : g.incident(v)) {
      auto& list = masks[v];
      auto it = std::find_if(list.begin(), list.end(),
                             [&](const ColorMask& cm) { return cm.color == e.color; });
      if (it == list.end()) {
        list.push_back({e.color, 0});
        it = list.end() - 1;
      }
      it->neighbours |= Mask{1} << e.other(v);
    }
  }

  auto fits = [&](Mask placed, Vertex v) {
    const Mask later = full & ~placed & ~(Mask{1} << v);
    int colors_before = 0;
    int colors_after = 0;
    for (const ColorMask& cm : masks[v]) {
      colors_before += (cm.neighbours & placed) != 0;
      colors_after += (cm.neighbours & later) != 0;
    }
    return colors_before <= 1 && colors_after <= 1;
  };

  // Depth-first over placed-prefix sets, smallest vertex first, remembering
  // sets that cannot be completed.
  std::vector<std::uint64_t> dead((std::size_t{1} << n) / 64 + 1, 0);
  auto is_dead = [&](Mask s) { return (dead[s >> 6] >> (s & 63)) & 1U; };
  auto mark_dead = [&](Mask s) { dead[s >> 6] |= std::uint64_t{1} << (s & 63); };

  VertexOrdering ordering;
  ordering.reserve(static_cast<std::size_t>(n));
  struct Frame {
    Mask placed;
    Vertex next;
  };
  std::vector<Frame> stack{{0, 0}};
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.placed == full) {
      return ordering;
    }
    bool descended = false;
    while (top.next < n) {
      const Vertex v = top.next++;
      const Mask bit = Mask{1} << v;
      if ((top.placed & bit) || is_dead(top.placed | bit) || !fits(top.placed, v)) {
        continue;
      }
      ordering.push_back(v);
      stack.push_back({top.placed | bit, 0});
      descended = true;
      break;
    }
    if (!descended) {
      mark_dead(stack.back().placed);
      stack.pop_back();
      if (!ordering.empty() && !stack.empty()) {
        ordering.pop_back();
      }
    }
  }
  return std::nullopt;
}

OrientResult procedure1_orient(const Graph& g, Vertex x, Color first_color_out) {
  const int n = g.vertex_count();
  if (x < 0 || x >= n) {
    throw GraphError("start vertex out of range");
  }
  std::vector<Vertex> component;
  for (const auto& c : connected_components(g)) {
    if (std::binary_search(c.begin(), c.end(), x)) {
      component = c;
    }
  }
  for (Vertex v : component) {
    auto colors = g.incident_colors(v);
    if (colors.size() > 2) {
      return PrecheckFailure{v, std::move(colors)};
    }
  }
  const auto x_colors = g.incident_colors(x);
  if (x_colors.size() == 2 &&
      std::find(x_colors.begin(), x_colors.end(), first_color_out) == x_colors.end()) {
    throw GraphError("first_color_out must be one of the two colors at x");
  }

  Orientation result;
  result.head.assign(static_cast<std::size_t>(g.edge_count()), -1);
  result.in_color.assign(static_cast<std::size_t>(n), std::nullopt);
  result.out_color.assign(static_cast<std::size_t>(n), std::nullopt);
  std::vector<EdgeId> in_edge(static_cast<std::size_t>(n), -1);
  std::vector<EdgeId> out_edge(static_cast<std::size_t>(n), -1);
  std::vector<bool> queued(static_cast<std::size_t>(n), false);
  std::deque<Vertex> queue{x};
  queued[x] = true;

  // Orients e as tail -> head and records colors at both ends.
  auto orient = [&](const Edge& e, Vertex tail, Vertex head) -> std::optional<Conflict> {
    const int pos = g.edge_index(e.id);
    if (result.head[pos] >= 0) {
      if (result.head[pos] != head) {
        throw InternalError("procedure 1 tried to reverse an oriented edge");
      }
      return std::nullopt;
    }
    result.head[pos] = head;
    if (result.out_color[head] == e.color) {
      return Conflict{head, ConflictKind::in_out_same, out_edge[head], e.id};
    }
    if (result.in_color[head] && *result.in_color[head] != e.color) {
      return Conflict{head, ConflictKind::two_in_differ, in_edge[head], e.id};
    }
    if (result.in_color[tail] == e.color) {
      return Conflict{tail, ConflictKind::in_out_same, in_edge[tail], e.id};
    }
    if (result.out_color[tail] && *result.out_color[tail] != e.color) {
      return Conflict{tail, ConflictKind::two_out_differ, out_edge[tail], e.id};
    }
    if (!result.in_color[head]) {
      result.in_color[head] = e.color;
      in_edge[head] = e.id;
    }
    if (!result.out_color[tail]) {
      result.out_color[tail] = e.color;
      out_edge[tail] = e.id;
    }
    for (Vertex w : {head, tail}) {
      if (!queued[w]) {
        queued[w] = true;
        queue.push_back(w);
      }
    }
    return std::nullopt;
  };

  bool first = true;
  while (!queue.empty()) {
    const Vertex y = queue.front();
    queue.pop_front();
    // Edges of `rule_color` go out when `rule_out`, in otherwise; every
    // other edge goes the opposite way.
    Color rule_color = first_color_out;
    bool rule_out = true;
    if (!first) {
      if (result.in_color[y]) {
        rule_color = *result.in_color[y];
        rule_out = false;
      } else if (result.out_color[y]) {
        rule_color = *result.out_color[y];
      } else {
        throw InternalError("procedure 1 reached a vertex without arcs");
      }
    }
    first = false;
    for (const Edge& e : g.incident(y)) {
      const Vertex w = e.other(y);
      const bool out = (e.color == rule_color) == rule_out;
      auto conflict = out ? orient(e, y, w) : orient(e, w, y);
      if (conflict) {
        return *conflict;
      }
    }
  }
  return result;
}

std::optional<VertexOrdering> topological_order(const Graph& g,
                                                const Orientation& orientation,
                                                std::span<const Vertex> vertices) {
  const int n = g.vertex_count();
  std::vector<bool> member(static_cast<std::size_t>(n), false);
  for (Vertex v : vertices) {
    member[v] = true;
  }
  std::vector<int> indegree(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<Vertex>> successors(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    const Vertex head = orientation.head[i];
    if (head < 0 || !member[e.u] || !member[e.v]) {
      continue;
    }
    const Vertex tail = e.other(head);
    successors[tail].push_back(head);
    ++indegree[head];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (Vertex v : vertices) {
    if (indegree[v] == 0) {
      ready.push(v);
    }
  }
  VertexOrdering order;
  while (!ready.empty()) {
    const Vertex v = ready.top();
    ready.pop();
    order.push_back(v);
    for (Vertex w : successors[v]) {
      if (--indegree[w] == 0) {
        ready.push(w);
      }
    }
  }
  if (order.size() != vertices.size()) {
    return std::nullopt;
  }
  return order;
}

std::optional<VertexOrdering> recognize_type5(const Graph& g) {
  VertexOrdering ordering;
  VertexOrdering isolated;
  for (const auto& component : connected_components(g)) {
    if (component.size() == 1) {
      isolated.push_back(component.front());
      continue;
    }
    const Vertex x = component.front();
    const Color out = g.incident_colors(x).front();
    auto result = procedure1_orient(g, x, out);
    const auto* orientation = std::get_if<Orientation>(&result);
    if (orientation == nullptr) {
      return std::nullopt;
    }
    auto order = topological_order(g, *orientation, component);
    if (!order) {
      return std::nullopt;
    }
    ordering.insert(ordering.end(), order->begin(), order->end());
  }
  ordering.insert(ordering.end(), isolated.begin(), isolated.end());
  if (!verify_ordering(g, ordering, 5)) {
    throw InternalError("type-5 certificate failed verification");
  }
  return ordering;
}

int count_cycle_monochromatic(const Graph& g, const Walk& cycle) {
  validate_walk(g, cycle);
  if (!is_cycle(cycle)) {
    throw GraphError("walk is not a cycle");
  }
  const std::size_t len = cycle.edges.size();
  int count = 0;
  for (std::size_t i = 0; i < len; ++i) {
    const Color previous = g.edge(cycle.edges[(i + len - 1) % len]).color;
    if (previous == g.edge(cycle.edges[i]).color) {
      ++count;
    }
  }
  return count;
}

Classification classify(const Graph& g, int type4_bound) {
  Classification result;
  auto record = [&](int type, std::optional<VertexOrdering> ordering) {
    result.membership[type - 1] = ordering.has_value();
    result.certificate[type - 1] = std::move(ordering);
  };
  record(1, recognize_type1(g));
  record(2, recognize_type2(g));
  record(3, recognize_type3(g));
  record(5, recognize_type5(g));
  if (*result.membership[4]) {
    // A type-5 ordering is in particular of type 4.
    record(4, result.certificate[4]);
  } else if (!*result.membership[2]) {
    record(4, std::nullopt);
  } else {
    try {
      record(4, recognize_type4(g, type4_bound));
    } catch (const CapacityError&) {
      result.membership[3].reset();
    }
  }
  result.level = 0;
  for (int k = 1; k <= 5; ++k) {
    if (!result.membership[k - 1].value_or(false)) {
      break;
    }
    result.level = k;
  }
  return result;
}

}  // namespace ecg
