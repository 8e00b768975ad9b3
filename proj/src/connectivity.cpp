#include "ecg/connectivity.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "ecg/acyclicity.hpp"
#include "ecg/errors.hpp"
#include "ecg/structure.hpp"

namespace ecg {

std::string_view method_name(Method m) {
  return m == Method::flow ? "flow" : "brute";
}

namespace {

void check_terminals(const Graph& g, Vertex x, Vertex y) {
  if (x < 0 || y < 0 || x >= g.vertex_count() || y >= g.vertex_count()) {
    throw GraphError("terminal out of range");
  }
  if (x == y) {
    throw GraphError("terminals must be distinct");
  }
}

// Split network: vertex v becomes in-node 2v and out-node 2v + 1.
class FlowNetwork {
 public:
  static constexpr int kUnbounded = std::numeric_limits<int>::max() / 2;

  explicit FlowNetwork(int nodes) : out_(static_cast<std::size_t>(nodes)) {}

  // Returns the index of the forward arc.
  int add_arc(int from, int to, int capacity, EdgeId edge) {
    const int forward = static_cast<int>(arcs_.size());
    arcs_.push_back({to, capacity, 0, edge});
    arcs_.push_back({from, 0, 0, edge});
    out_[from].push_back(forward);
    out_[to].push_back(forward + 1);
    return forward;
  }

  // Edmonds-Karp; arcs are scanned in insertion order.
  int max_flow(int source, int sink) {
    int total = 0;
    std::vector<int> via(out_.size());
    while (true) {
      std::fill(via.begin(), via.end(), -1);
      std::queue<int> queue;
      queue.push(source);
      via[source] = -2;
      while (!queue.empty() && via[sink] == -1) {
        const int node = queue.front();
        queue.pop();
        for (int a : out_[node]) {
          const Arc& arc = arcs_[a];
          if (via[arc.to] == -1 && arc.flow < arc.capacity) {
            via[arc.to] = a;
            queue.push(arc.to);
          }
        }
      }
      if (via[sink] == -1) {
        return total;
      }
      int push = kUnbounded;
      for (int node = sink; node != source; node = arcs_[via[node] ^ 1].to) {
        push = std::min(push, arcs_[via[node]].capacity - arcs_[via[node]].flow);
      }
      for (int node = sink; node != source; node = arcs_[via[node] ^ 1].to) {
        arcs_[via[node]].flow += push;
        arcs_[via[node] ^ 1].flow -= push;
      }
      total += push;
    }
  }

  std::vector<bool> residual_reachable(int source) const {
    std::vector<bool> seen(out_.size(), false);
    std::queue<int> queue;
    queue.push(source);
    seen[source] = true;
    while (!queue.empty()) {
      const int node = queue.front();
      queue.pop();
      for (int a : out_[node]) {
        const Arc& arc = arcs_[a];
        if (!seen[arc.to] && arc.flow < arc.capacity) {
          seen[arc.to] = true;
          queue.push(arc.to);
        }
      }
    }
    return seen;
  }

  // Splits the flow into unit source-sink routes, each given by the edge
  // ids of the edge arcs it crosses. The network must be acyclic.
  std::vector<std::vector<EdgeId>> decompose(int source, int sink) {
    std::vector<std::vector<EdgeId>> routes;
    while (true) {
      std::vector<EdgeId> route;
      int node = source;
      while (node != sink) {
        int next = -1;
        for (int a : out_[node]) {
          if ((a & 1) == 0 && arcs_[a].flow > 0) {
            next = a;
            break;
          }
        }
        if (next < 0) {
          break;
        }
        --arcs_[next].flow;
        if (arcs_[next].edge >= 0) {
          route.push_back(arcs_[next].edge);
        }
        node = arcs_[next].to;
      }
      if (node != sink) {
        if (node != source) {
          throw InternalError("flow decomposition stalled away from the source");
        }
        return routes;
      }
      routes.push_back(std::move(route));
    }
  }

  [[nodiscard]] int capacity(int arc) const { return arcs_[arc].capacity; }
  [[nodiscard]] int head(int arc) const { return arcs_[arc].to; }

 private:
  struct Arc {
    int to;
    int capacity;
    int flow;
    EdgeId edge;  // -1 for the split arcs
  };
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
};

[[noreturn]] void not_type4(const std::string& why) {
  throw PreconditionError(why + "; the graph is not type-4 acyclic for these "
                                "terminals, use menger_gap instead");
}

}  // namespace

Subgraph strip_internal_monochromatic(const Graph& g, Vertex x, Vertex y) {
  check_terminals(g, x, y);
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<bool> alive(n, true);
  const std::vector<bool> edge_alive(static_cast<std::size_t>(g.edge_count()), true);
  std::vector<Vertex> pending;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    pending.push_back(v);
  }
  while (!pending.empty()) {
    const Vertex v = pending.back();
    pending.pop_back();
    if (!alive[v] || v == x || v == y || !detail::monochromatic_in(g, v, alive, edge_alive)) {
      continue;
    }
    alive[v] = false;
    for (const Edge& e : g.incident(v)) {
      if (alive[e.other(v)]) {
        pending.push_back(e.other(v));
      }
    }
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (alive[v]) {
      keep.push_back(v);
    }
  }
  return induced_subgraph(g, keep);
}

SeparatorPackingResult solve_type4(const Graph& g, Vertex x, Vertex y) {
  check_terminals(g, x, y);
  if (g.adjacent(x, y)) {
    throw InfeasibleError("x and y are adjacent; no vertex set separates them");
  }
  const Subgraph stripped = strip_internal_monochromatic(g, x, y);
  const Graph& h = stripped.graph;
  const auto local = [&](Vertex v) {
    return static_cast<Vertex>(
        std::find(stripped.to_parent.begin(), stripped.to_parent.end(), v) -
        stripped.to_parent.begin());
  };
  const Vertex hx = local(x);
  const Vertex hy = local(y);

  for (Vertex terminal : {hx, hy}) {
    if (h.incident_colors(terminal).size() > 1) {
      not_type4("terminal " + std::to_string(stripped.to_parent[terminal] + 1) +
                " meets two colors after stripping");
    }
  }

  SeparatorPackingResult result;
  result.method = Method::flow;
  result.menger_equal = true;
  if (h.edge_count() == 0) {
    return result;
  }
  if (h.degree(hx) == 0 || h.degree(hy) == 0) {
    not_type4("the stripped graph has edges but a terminal is isolated");
  }

  const auto oriented = procedure1_orient(h, hx, h.incident_colors(hx).front());
  if (!std::holds_alternative<Orientation>(oriented)) {
    not_type4("the stripped graph is not type-5 acyclic (orientation conflict)");
  }
  const Orientation& orientation = std::get<Orientation>(oriented);
  for (int i = 0; i < h.edge_count(); ++i) {
    if (!orientation.oriented(i)) {
      not_type4("the stripped graph is disconnected");
    }
  }
  std::vector<Vertex> everything(static_cast<std::size_t>(h.vertex_count()));
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    everything[v] = v;
  }
  const auto order = topological_order(h, orientation, everything);
  if (!order) {
    not_type4("the stripped graph is not type-5 acyclic (directed cycle)");
  }
  if (order->front() != hx || order->back() != hy) {
    not_type4("x and y are not the two ends of the type-5 ordering");
  }
  for (const Edge& e : h.incident(hy)) {
    if (orientation.head[h.edge_index(e.id)] != hy) {
      not_type4("y is not the sink of the orientation");
    }
  }
  if (!verify_ordering(h, *order, 5)) {
    throw InternalError("orientation order of the stripped graph is not type 5");
  }

  FlowNetwork network(2 * h.vertex_count());
  std::vector<int> split_arc(static_cast<std::size_t>(h.vertex_count()));
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    const int cap = (v == hx || v == hy) ? FlowNetwork::kUnbounded : 1;
    split_arc[v] = network.add_arc(2 * v, 2 * v + 1, cap, -1);
  }
  for (const Edge& e : h.edges()) {
    const Vertex head = orientation.head[h.edge_index(e.id)];
    const Vertex tail = e.other(head);
    network.add_arc(2 * tail + 1, 2 * head, FlowNetwork::kUnbounded, e.id);
  }
  const int source = 2 * hx + 1;
  const int sink = 2 * hy;
  result.t = network.max_flow(source, sink);

  const auto reachable = network.residual_reachable(source);
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    if (reachable[2 * v] && !reachable[2 * v + 1]) {
      if (network.capacity(split_arc[v]) != 1) {
        throw InternalError("minimum cut crosses an unbounded arc");
      }
      result.separator.push_back(stripped.to_parent[v]);
    }
  }
  std::sort(result.separator.begin(), result.separator.end());
  result.s = static_cast<int>(result.separator.size());

  for (const auto& route : network.decompose(source, sink)) {
    Walk walk{{x}, {}};
    for (EdgeId id : route) {
      walk.edges.push_back(id);
      walk.vertices.push_back(g.edge(id).other(walk.vertices.back()));
    }
    if (!is_pc_walk(g, walk) || !is_path(walk) || walk.vertices.back() != y) {
      throw InternalError("flow path is not a PC x-y path");
    }
    result.paths.push_back(std::move(walk));
  }
  if (result.s != result.t || static_cast<int>(result.paths.size()) != result.t) {
    throw InternalError("max flow and min cut disagree");
  }
  return result;
}

SeparatorPackingResult menger_gap(const Graph& g, Vertex x, Vertex y, int bound) {
  check_terminals(g, x, y);
  SeparatorPackingResult result;
  result.method = Method::brute;
  const auto separator = oracle::brute_min_separator(g, x, y, bound);
  const auto packing = oracle::brute_max_packing(g, x, y, bound);
  result.s = separator.size;
  result.separator = separator.vertices;
  result.t = packing.size;
  result.paths = packing.paths;
  result.menger_equal = result.s == result.t;
  return result;
}

SeparatorPackingResult edge_disjoint_variant(const Graph& g, Vertex x, Vertex y, int bound) {
  check_terminals(g, x, y);
  if (g.color_count() > 2) {
    throw UnsupportedError("edge-disjoint variant needs a red/blue graph, got " +
                           std::to_string(g.color_count()) + " colors");
  }
  SeparatorPackingResult result;
  result.method = Method::brute;
  result.edge_variant = true;
  const auto separator = oracle::brute_min_edge_separator(g, x, y, bound);
  const auto packing = oracle::brute_max_edge_packing(g, x, y, bound);
  result.s = separator.size;
  result.edge_separator = separator.edges;
  result.t = packing.size;
  result.paths = packing.paths;
  result.menger_equal = result.s == result.t;
  return result;
}

}  // namespace ecg
