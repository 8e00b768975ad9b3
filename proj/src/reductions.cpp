#include "ecg/reductions.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "ecg/errors.hpp"

namespace ecg {

namespace {

std::string vname(Vertex v) { return "v" + std::to_string(v + 1); }

void check_vertex(int n, Vertex v, const char* what) {
  if (v < 0 || v >= n) {
    throw GraphError(std::string(what) + ": vertex out of range");
  }
}

}  // namespace

Reduction digraph_to_2ecg(const Digraph& d) {
  Reduction r;
  std::vector<ColoredEdge> edges;
  for (Vertex v = 0; v < d.n; ++v) {
    r.names.push_back(vname(v));
  }
  for (std::size_t a = 0; a < d.arcs.size(); ++a) {
    const auto [u, v] = d.arcs[a];
    check_vertex(d.n, u, "digraph");
    check_vertex(d.n, v, "digraph");
    if (u == v) {
      throw GraphError("digraph: loops are not allowed");
    }
    const Vertex w = d.n + static_cast<Vertex>(a);
    r.names.push_back("w(" + std::to_string(u + 1) + "," + std::to_string(v + 1) + ")#" +
                      std::to_string(a + 1));
    edges.push_back({u, w, kBlue});
    edges.push_back({w, v, kRed});
  }
  r.graph = Graph(d.n + static_cast<int>(d.arcs.size()), edges, 2);
  return r;
}

Walk lift_directed_walk(const Digraph& d, std::span<const int> arcs) {
  Walk walk;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const int a = arcs[i];
    if (a < 0 || a >= static_cast<int>(d.arcs.size())) {
      throw GraphError("arc index out of range");
    }
    const auto [u, v] = d.arcs[a];
    if (i == 0) {
      walk.vertices.push_back(u);
    } else if (walk.vertices.back() != u) {
      throw GraphError("arcs do not form a directed walk");
    }
    walk.edges.push_back(2 * a);
    walk.vertices.push_back(d.n + a);
    walk.edges.push_back(2 * a + 1);
    walk.vertices.push_back(v);
  }
  return walk;
}

Reduction betweenness_to_type4(const BetweennessInstance& inst) {
  Reduction r;
  for (int e = 0; e < inst.universe; ++e) {
    r.names.push_back("e" + std::to_string(e + 1));
  }
  std::vector<ColoredEdge> edges;
  int next = inst.universe;
  for (std::size_t t = 0; t < inst.triples.size(); ++t) {
    const auto [x, y, z] = inst.triples[t];
    for (int e : {x, y, z}) {
      check_vertex(inst.universe, e, "betweenness triple");
    }
    if (x == y || y == z || x == z) {
      throw GraphError("betweenness triple entries must be distinct");
    }
    const std::string xs = std::to_string(x + 1);
    const std::string ys = std::to_string(y + 1);
    const std::string zs = std::to_string(z + 1);
    const std::string tag = "#" + std::to_string(t + 1);
    const Vertex axy = next++;
    const Vertex bxy = next++;
    const Vertex bzy = next++;
    const Vertex azy = next++;
    r.names.push_back("a(" + xs + "," + ys + ")" + tag);
    r.names.push_back("b(" + xs + "," + ys + ")" + tag);
    r.names.push_back("b(" + zs + "," + ys + ")" + tag);
    r.names.push_back("a(" + zs + "," + ys + ")" + tag);
    edges.push_back({x, axy, kBlue});
    edges.push_back({bxy, bzy, kBlue});
    edges.push_back({z, azy, kBlue});
    edges.push_back({y, bxy, kBlue});
    edges.push_back({y, bzy, kBlue});
    edges.push_back({axy, bxy, kRed});
    edges.push_back({bzy, azy, kRed});
  }
  r.graph = Graph(next, edges, 2);
  return r;
}

Reduction vertex_cover_to_separator(const PlainGraph& h) {
  Reduction r;
  std::vector<ColoredEdge> edges;
  for (Vertex v = 0; v < h.n; ++v) {
    r.names.push_back(vname(v));
  }
  const Vertex x = h.n;
  const Vertex y = h.n + 1;
  r.names.push_back("x");
  r.names.push_back("y");
  for (const auto& [u, v] : h.edges) {
    check_vertex(h.n, u, "vertex cover graph");
    check_vertex(h.n, v, "vertex cover graph");
    edges.push_back({u, v, kRed});
  }
  for (Vertex u = 0; u < h.n; ++u) {
    edges.push_back({x, u, kBlue});
  }
  for (Vertex u = 0; u < h.n; ++u) {
    edges.push_back({u, y, kBlue});
  }
  r.graph = Graph(h.n + 2, edges, 2);
  r.x = x;
  r.y = y;
  return r;
}

namespace {

void validate_rbpm(const RbpmInstance& inst) {
  if (inst.side < 0) {
    throw GraphError("rbpm: negative side size");
  }
  for (const auto& [u, v] : inst.edges) {
    check_vertex(inst.side, u, "rbpm edge");
    check_vertex(inst.side, v, "rbpm edge");
  }
  std::set<int> seen;
  const auto m = static_cast<int>(inst.edges.size());
  for (const auto& [a, b] : inst.pairs) {
    if (a < 0 || a >= m || b < 0 || b >= m || a == b) {
      throw GraphError("rbpm: pair refers to invalid edges");
    }
    if (!seen.insert(a).second || !seen.insert(b).second) {
      throw GraphError("rbpm: an edge belongs to two partition classes");
    }
  }
}

bool pair_disjoint(const RbpmInstance& inst, const std::pair<int, int>& p) {
  const auto& e = inst.edges[p.first];
  const auto& f = inst.edges[p.second];
  return e.first != f.first && e.second != f.second;
}

}  // namespace

std::pair<RbpmInstance, std::vector<int>> normalize_rbpm(const RbpmInstance& inst) {
  validate_rbpm(inst);
  RbpmInstance out{inst.side, inst.edges, {}};
  std::vector<int> split;
  for (std::size_t i = 0; i < inst.pairs.size(); ++i) {
    if (pair_disjoint(inst, inst.pairs[i])) {
      out.pairs.push_back(inst.pairs[i]);
    } else {
      split.push_back(static_cast<int>(i));
    }
  }
  return {std::move(out), std::move(split)};
}

bool is_normalized(const RbpmInstance& inst) {
  return std::all_of(inst.pairs.begin(), inst.pairs.end(),
                     [&](const auto& p) { return pair_disjoint(inst, p); });
}

Reduction rbpm_to_packing(const RbpmInstance& inst) {
  validate_rbpm(inst);
  if (!is_normalized(inst)) {
    throw GraphError("rbpm: instance has a pair of adjacent edges; normalize first");
  }
  const int k = inst.side;
  Reduction r;
  for (int i = 0; i < k; ++i) {
    r.names.push_back("u" + std::to_string(i + 1));
  }
  for (int j = 0; j < k; ++j) {
    r.names.push_back("w" + std::to_string(j + 1));
  }
  const Vertex x = 2 * k;
  const Vertex y = 2 * k + 1;
  r.names.push_back("x");
  r.names.push_back("y");
  auto left = [](int i) { return static_cast<Vertex>(i); };
  auto right = [k](int j) { return static_cast<Vertex>(k + j); };

  std::vector<ColoredEdge> edges;
  for (int i = 0; i < k; ++i) {
    edges.push_back({x, left(i), kBlue});
  }
  for (int j = 0; j < k; ++j) {
    edges.push_back({right(j), y, kBlue});
  }
  std::vector<bool> paired(inst.edges.size(), false);
  for (const auto& [a, b] : inst.pairs) {
    paired[a] = paired[b] = true;
  }
  for (std::size_t e = 0; e < inst.edges.size(); ++e) {
    if (!paired[e]) {
      edges.push_back({left(inst.edges[e].first), right(inst.edges[e].second), kRed});
    }
  }
  Vertex next = 2 * k + 2;
  for (std::size_t s = 0; s < inst.pairs.size(); ++s) {
    // S = {u_i v_j, u_k v_l}: red u_i p, v_l p, u_k q, v_j q; blue p q.
    const auto [ui, vj] = inst.edges[inst.pairs[s].first];
    const auto [uk, vl] = inst.edges[inst.pairs[s].second];
    const Vertex p = next++;
    const Vertex q = next++;
    r.names.push_back("p" + std::to_string(s + 1));
    r.names.push_back("q" + std::to_string(s + 1));
    edges.push_back({left(ui), p, kRed});
    edges.push_back({right(vl), p, kRed});
    edges.push_back({left(uk), q, kRed});
    edges.push_back({right(vj), q, kRed});
    edges.push_back({p, q, kBlue});
  }
  r.graph = Graph(next, edges, 2);
  r.x = x;
  r.y = y;
  return r;
}

Reduction extend(const Graph& g, std::span<const int> sizes) {
  const int n = g.vertex_count();
  if (static_cast<int>(sizes.size()) != n) {
    throw GraphError("extend: one size per vertex required");
  }
  std::vector<Vertex> first(static_cast<std::size_t>(n) + 1, 0);
  Reduction r;
  for (Vertex v = 0; v < n; ++v) {
    if (sizes[v] < 1) {
      throw GraphError("extend: sizes must be at least 1");
    }
    first[v + 1] = first[v] + sizes[v];
    for (int c = 0; c < sizes[v]; ++c) {
      r.names.push_back(sizes[v] == 1 ? vname(v)
                                      : vname(v) + "." + std::to_string(c + 1));
    }
  }
  std::vector<ColoredEdge> edges;
  for (const Edge& e : g.edges()) {
    for (Vertex a = first[e.u]; a < first[e.u + 1]; ++a) {
      for (Vertex b = first[e.v]; b < first[e.v + 1]; ++b) {
        edges.push_back({a, b, e.color});
      }
    }
  }
  r.graph = Graph(first[n], edges, g.color_count());
  return r;
}

Reduction fvs_to_type5_deletion(const Digraph& d) {
  Reduction r;
  for (Vertex v = 0; v < d.n; ++v) {
    r.names.push_back(vname(v) + "'");
  }
  for (Vertex v = 0; v < d.n; ++v) {
    r.names.push_back(vname(v) + "''");
  }
  std::vector<ColoredEdge> edges;
  for (Vertex v = 0; v < d.n; ++v) {
    edges.push_back({v, d.n + v, kRed});
  }
  for (const auto& [u, v] : d.arcs) {
    check_vertex(d.n, u, "digraph");
    check_vertex(d.n, v, "digraph");
    if (u == v) {
      throw GraphError("digraph: loops are not allowed");
    }
    edges.push_back({d.n + u, v, kBlue});
  }
  r.graph = Graph(2 * d.n, edges, 2);
  return r;
}

Reduction bipartization_to_type5_deletion(const PlainGraph& g) {
  Reduction r;
  std::vector<ColoredEdge> edges;
  for (Vertex v = 0; v < g.n; ++v) {
    r.names.push_back(vname(v));
  }
  for (const auto& [u, v] : g.edges) {
    check_vertex(g.n, u, "graph");
    check_vertex(g.n, v, "graph");
    edges.push_back({u, v, kBlue});
  }
  r.graph = Graph(g.n, edges, 2);
  return r;
}

Reduction vertex_split_edge_transform(const Graph& g) {
  if (g.color_count() != 2) {
    throw UnsupportedError("vertex split transform needs a 2-edge-colored graph");
  }
  const int n = g.vertex_count();
  Reduction r;
  for (Vertex v = 0; v < n; ++v) {
    r.names.push_back(vname(v) + "'");
  }
  for (Vertex v = 0; v < n; ++v) {
    r.names.push_back(vname(v) + "''");
  }
  for (Vertex v = 0; v < n; ++v) {
    r.names.push_back(vname(v) + "0");
  }
  std::vector<ColoredEdge> edges;
  for (const Edge& e : g.edges()) {
    if (e.color == kRed) {
      edges.push_back({e.u, e.v, kRed});
    } else {
      edges.push_back({n + e.u, n + e.v, kBlue});
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    edges.push_back({v, 2 * n + v, kBlue});
    edges.push_back({2 * n + v, n + v, kRed});
  }
  r.graph = Graph(3 * n, edges, 2);
  return r;
}

}  // namespace ecg
