#include <random>

#include "doctest.h"
#include "ecg/errors.hpp"
#include "ecg/fixtures.hpp"
#include "ecg/graph.hpp"

using namespace ecg;

TEST_CASE("build: triangle with two blue edges and one red edge") {
  const Graph g(3, {{0, 1, kBlue}, {1, 2, kBlue}, {0, 2, kRed}});
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.color_count() == 2);
  for (int i = 0; i < 3; ++i) {
    CHECK(g.edges()[i].id == i);  // ids follow input order
  }
  CHECK(g.edge(2).color == kRed);
  CHECK(g.incident_colors(1) == std::vector<Color>{kBlue});
  CHECK(g.incident_colors(0) == std::vector<Color>{kBlue, kRed});
}

TEST_CASE("build: single isolated vertex defaults to one color") {
  const Graph g(1, {});
  CHECK(g.vertex_count() == 1);
  CHECK(g.edge_count() == 0);
  CHECK(g.color_count() == 1);
  CHECK(g.degree(0) == 0);
}

TEST_CASE("build: parallel blue/red pair is a valid multigraph") {
  const Graph g(2, {{0, 1, kBlue}, {0, 1, kRed}});
  CHECK(g.edge_count() == 2);
  CHECK(g.degree(0) == 2);
  CHECK(g.adjacent(0, 1));
  CHECK(lint(g).empty());
}

TEST_CASE("build: rejections") {
  CHECK_THROWS_AS(Graph(2, {{0, 0, kBlue}}), GraphError);
  CHECK_THROWS_AS(Graph(2, {{0, 2, kBlue}}), GraphError);
  CHECK_THROWS_AS(Graph(2, {{-1, 1, kBlue}}), GraphError);
  CHECK_THROWS_AS(Graph(2, {{0, 1, 0}}), GraphError);
  CHECK_THROWS_AS(Graph(2, {{0, 1, 3}}, 2), GraphError);
  CHECK(Graph(2, {{0, 1, 1}}, 3).color_count() == 3);
}

TEST_CASE("lint warns about parallel edges of one color") {
  const Graph g(2, {{0, 1, kBlue}, {0, 1, kBlue}});
  CHECK(lint(g).size() == 1);
}

TEST_CASE("induced subgraph keeps edge ids") {
  const Graph g(4, {{0, 1, kBlue}, {1, 2, kRed}, {2, 3, kBlue}, {3, 0, kRed}});
  const std::vector<Vertex> keep{1, 2, 3};
  const Subgraph s = induced_subgraph(g, keep);
  CHECK(s.graph.vertex_count() == 3);
  CHECK(s.to_parent == std::vector<Vertex>{1, 2, 3});
  REQUIRE(s.graph.edge_count() == 2);
  CHECK(s.graph.has_edge_id(1));
  CHECK(s.graph.has_edge_id(2));
  CHECK_FALSE(s.graph.has_edge_id(0));
  CHECK(s.graph.edge(2).u == 1);  // vertex 2 of g is vertex 1 of the subgraph
  CHECK_THROWS_AS((void)s.graph.edge(0), GraphError);
}

TEST_CASE("is_pc_walk: closed walk of the bridge fixture") {
  const Fixture f = fixture("ab-trail");
  // a1 a2 b2 b3 a3 b2 a2 b1 a1
  const Walk w{{0, 1, 4, 5, 2, 4, 1, 3, 0}, {3, 1, 6, 2, 5, 1, 4, 0}};
  CHECK(w.closed());
  CHECK(is_pc_walk(f.graph, w));
  CHECK_FALSE(is_trail(w));  // a2b2 is used twice
}

TEST_CASE("is_pc_walk: basic cases") {
  const Graph tri(3, {{0, 1, kBlue}, {1, 2, kBlue}, {0, 2, kBlue}});
  CHECK(is_pc_walk(tri, Walk{{0, 1}, {0}}));
  CHECK(is_pc_walk(tri, Walk{{0}, {}}));
  CHECK_FALSE(is_pc_walk(tri, Walk{{0, 1, 2, 0}, {0, 1, 2}}));

  const Graph c4 = fixture("c4-alt").graph;
  const Walk cycle{{0, 1, 2, 3, 0}, {0, 1, 2, 3}};
  CHECK(is_pc_walk(c4, cycle));
  CHECK(is_cycle(cycle));
  // Closing pair must differ too: blue-red-blue ending where it started.
  const Graph brb(3, {{0, 1, kBlue}, {1, 2, kRed}, {2, 0, kBlue}});
  CHECK_FALSE(is_pc_walk(brb, Walk{{0, 1, 2, 0}, {0, 1, 2}}));
  CHECK(is_pc_walk(brb, Walk{{0, 1, 2}, {0, 1}}));
  const Graph pair(2, {{0, 1, kBlue}, {0, 1, kRed}, {0, 1, kBlue}});
  CHECK(is_pc_walk(pair, Walk{{0, 1, 0, 1, 0}, {0, 1, 2, 1}}));
  CHECK_FALSE(is_pc_walk(pair, Walk{{0, 1, 0}, {0, 2}}));
}

TEST_CASE("walk validation is distinct from a false verdict") {
  const Graph g(3, {{0, 1, kBlue}, {1, 2, kRed}});
  CHECK_THROWS_AS((void)is_pc_walk(g, Walk{{0, 2}, {0}}), GraphError);
  CHECK_THROWS_AS((void)is_pc_walk(g, Walk{{0, 1}, {7}}), GraphError);
  CHECK_THROWS_AS((void)is_pc_walk(g, Walk{{0, 1, 2}, {0}}), GraphError);
  CHECK_THROWS_AS(validate_walk(g, Walk{{}, {}}), GraphError);
}

TEST_CASE("path, trail and cycle predicates") {
  CHECK(is_path(Walk{{0, 1, 2}, {0, 1}}));
  CHECK_FALSE(is_path(Walk{{0, 1, 0}, {0, 0}}));
  CHECK(is_trail(Walk{{0, 1, 0}, {0, 1}}));
  CHECK(is_cycle(Walk{{0, 1, 0}, {0, 1}}));     // two parallel edges
  CHECK_FALSE(is_cycle(Walk{{0, 1, 0}, {0, 0}}));  // same edge twice
  CHECK_FALSE(is_cycle(Walk{{0, 1, 2, 1, 0}, {0, 1, 2, 3}}));
}

TEST_CASE("is_pc_walk is invariant under reversal and rotation") {
  std::mt19937_64 rng(11);
  int closed_seen = 0;
  for (int round = 0; round < 3000; ++round) {
    const int n = 2 + static_cast<int>(rng() % 4);
    std::vector<ColoredEdge> edges;
    const int m = 1 + static_cast<int>(rng() % 8);
    for (int i = 0; i < m; ++i) {
      const Vertex u = static_cast<Vertex>(rng() % n);
      const Vertex v = static_cast<Vertex>((u + 1 + rng() % (n - 1)) % n);
      edges.push_back({u, v, 1 + static_cast<Color>(rng() % 3)});
    }
    const Graph g(n, edges);
    // Random walk of random length.
    Walk w{{static_cast<Vertex>(rng() % n)}, {}};
    const int len = 1 + static_cast<int>(rng() % 6);
    for (int s = 0; s < len; ++s) {
      const auto inc = g.incident(w.vertices.back());
      if (inc.empty()) {
        break;
      }
      const Edge& e = inc[rng() % inc.size()];
      w.edges.push_back(e.id);
      w.vertices.push_back(e.other(w.vertices.back()));
    }
    const bool verdict = is_pc_walk(g, w);
    if (!w.closed()) {
      Walk r{{w.vertices.rbegin(), w.vertices.rend()}, {w.edges.rbegin(), w.edges.rend()}};
      CHECK(is_pc_walk(g, r) == verdict);
    } else if (w.length() >= 2) {
      ++closed_seen;
      Walk rot{{w.vertices.begin() + 1, w.vertices.end()}, {w.edges.begin() + 1, w.edges.end()}};
      rot.vertices.push_back(w.vertices[1]);
      rot.edges.push_back(w.edges[0]);
      CHECK(is_pc_walk(g, rot) == verdict);
    }
  }
  CHECK(closed_seen > 50);
}
