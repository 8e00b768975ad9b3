#pragma once

// Independent re-verification of everything the library emits.

#include <set>
#include <vector>

#include "ecg/acyclicity.hpp"
#include "ecg/connectivity.hpp"
#include "ecg/graph.hpp"
#include "ecg/oracle.hpp"
#include "ecg/pc_structures.hpp"

namespace certify {

inline bool ordering(const ecg::Graph& g, const ecg::VertexOrdering& order, int type) {
  return ecg::oracle::literal_ordering_check(g, order, type);
}

inline bool pc_xy_path(const ecg::Graph& g, const ecg::Walk& w, ecg::Vertex x, ecg::Vertex y) {
  return ecg::is_pc_walk(g, w) && ecg::is_path(w) && w.vertices.front() == x &&
         w.vertices.back() == y;
}

inline bool internally_disjoint(const std::vector<ecg::Walk>& paths) {
  std::set<ecg::Vertex> seen;
  for (const auto& p : paths) {
    for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) {
      if (!seen.insert(p.vertices[i]).second) {
        return false;
      }
    }
  }
  return true;
}

inline bool edge_disjoint(const std::vector<ecg::Walk>& paths) {
  std::set<ecg::EdgeId> seen;
  for (const auto& p : paths) {
    for (ecg::EdgeId e : p.edges) {
      if (!seen.insert(e).second) {
        return false;
      }
    }
  }
  return true;
}

inline bool separates(const ecg::Graph& g, const ecg::VertexSet& s, ecg::Vertex x, ecg::Vertex y) {
  std::vector<bool> removed(static_cast<std::size_t>(g.vertex_count()), false);
  for (ecg::Vertex v : s) {
    if (v == x || v == y) {
      return false;
    }
    removed[v] = true;
  }
  return !ecg::oracle::pc_path_exists(
      g, x, y, removed, std::vector<bool>(static_cast<std::size_t>(g.edge_count()), false));
}

inline bool edge_separates(const ecg::Graph& g, const ecg::EdgeSet& s, ecg::Vertex x,
                           ecg::Vertex y) {
  std::vector<bool> removed(static_cast<std::size_t>(g.edge_count()), false);
  for (ecg::EdgeId e : s) {
    removed[g.edge_index(e)] = true;
  }
  return !ecg::oracle::pc_path_exists(
      g, x, y, std::vector<bool>(static_cast<std::size_t>(g.vertex_count()), false), removed);
}

/// Separator, paths and sizes of a connectivity result.
inline bool connectivity(const ecg::Graph& g, const ecg::SeparatorPackingResult& r,
                         ecg::Vertex x, ecg::Vertex y) {
  if (r.t != static_cast<int>(r.paths.size()) || r.s < r.t) {
    return false;
  }
  for (const auto& p : r.paths) {
    if (!pc_xy_path(g, p, x, y)) {
      return false;
    }
  }
  if (r.edge_variant) {
    return r.s == static_cast<int>(r.edge_separator.size()) && edge_disjoint(r.paths) &&
           edge_separates(g, r.edge_separator, x, y);
  }
  return r.s == static_cast<int>(r.separator.size()) && internally_disjoint(r.paths) &&
         separates(g, r.separator, x, y);
}

inline bool pc_cycle(const ecg::Graph& g, const ecg::Walk& w) {
  return ecg::is_pc_walk(g, w) && ecg::is_cycle(w);
}

inline bool pc_closed_trail(const ecg::Graph& g, const ecg::Walk& w) {
  return ecg::is_pc_walk(g, w) && ecg::is_trail(w) && w.closed() && w.length() >= 2;
}

inline bool pc_closed_walk(const ecg::Graph& g, const ecg::Walk& w) {
  return ecg::is_pc_walk(g, w) && w.closed() && w.length() >= 2;
}

}  // namespace certify
