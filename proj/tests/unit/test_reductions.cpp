#include <algorithm>

#include "doctest.h"
#include "ecg/acyclicity.hpp"
#include "ecg/corpus.hpp"
#include "ecg/errors.hpp"
#include "ecg/fixtures.hpp"
#include "ecg/oracle.hpp"
#include "ecg/pc_structures.hpp"
#include "ecg/reductions.hpp"

using namespace ecg;

namespace {

int count_color(const Graph& g, Color c) {
  return static_cast<int>(std::count_if(g.edges().begin(), g.edges().end(),
                                        [c](const Edge& e) { return e.color == c; }));
}

bool has_directed_cycle(const Digraph& d) {
  std::vector<int> indegree(static_cast<std::size_t>(d.n), 0);
  for (const auto& arc : d.arcs) {
    ++indegree[arc.second];
  }
  std::vector<Vertex> ready;
  for (Vertex v = 0; v < d.n; ++v) {
    if (indegree[v] == 0) {
      ready.push_back(v);
    }
  }
  int removed = 0;
  while (!ready.empty()) {
    const Vertex v = ready.back();
    ready.pop_back();
    ++removed;
    for (const auto& arc : d.arcs) {
      if (arc.first == v && --indegree[arc.second] == 0) {
        ready.push_back(arc.second);
      }
    }
  }
  return removed < d.n;
}

}  // namespace

TEST_CASE("digraph image layout") {
  const Digraph d{2, {{0, 1}}};
  const Reduction r = digraph_to_2ecg(d);
  CHECK(r.graph.vertex_count() == 3);
  CHECK(r.graph.edge(0).color == kBlue);
  CHECK(r.graph.edge(1).color == kRed);
  CHECK(r.graph.edge(1).v == 1);
  const int arcs[] = {0};
  const Walk w = lift_directed_walk(d, arcs);
  CHECK(w.vertices == std::vector<Vertex>{0, 2, 1});
  CHECK(is_pc_walk(r.graph, w));
  CHECK_THROWS_AS((void)digraph_to_2ecg(Digraph{2, {{1, 1}}}), GraphError);
}

TEST_CASE("directed cycles match PC cycles of the image") {
  for (int n = 1; n <= 4; ++n) {
    for (const Digraph& d : corpus::all_digraphs(n)) {
      const Graph g = digraph_to_2ecg(d).graph;
      const bool cyclic = has_directed_cycle(d);
      CHECK(has_pc_cycle(g).present == cyclic);
      CHECK(recognize_type1(g).has_value() == !cyclic);
    }
  }
}

TEST_CASE("betweenness gadget for one triple") {
  const Reduction r = betweenness_to_type4(BetweennessInstance{3, {{0, 1, 2}}});
  CHECK(r.graph.vertex_count() == 7);
  CHECK(count_color(r.graph, kBlue) == 5);
  CHECK(count_color(r.graph, kRed) == 2);
  CHECK(r.names[3] == "a(1,2)#1");
  CHECK(recognize_type4(r.graph).has_value());
}

TEST_CASE("unsatisfiable betweenness gives a graph that is not type 4") {
  const BetweennessInstance inst{3, {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}}};
  CHECK_FALSE(oracle::betweenness_satisfiable(inst));
  const Reduction r = betweenness_to_type4(inst);
  CHECK(r.graph.vertex_count() == 15);
  CHECK_FALSE(recognize_type4(r.graph).has_value());
  CHECK(recognize_type3(r.graph).has_value());
}

TEST_CASE("betweenness equivalence on random instances") {
  corpus::Rng rng(404);
  for (int i = 0; i < 60; ++i) {
    const BetweennessInstance inst = corpus::random_betweenness(rng, 5, 3);
    const Graph g = betweenness_to_type4(inst).graph;
    CHECK(recognize_type4(g).has_value() == oracle::betweenness_satisfiable(inst));
  }
}

TEST_CASE("vertex cover image") {
  const Reduction k2 = vertex_cover_to_separator(PlainGraph{2, {{0, 1}}});
  CHECK(k2.graph.vertex_count() == 4);
  REQUIRE(k2.x);
  REQUIRE(k2.y);
  CHECK(oracle::brute_min_separator(k2.graph, *k2.x, *k2.y).size == 1);

  const PlainGraph k3{3, {{0, 1}, {1, 2}, {0, 2}}};
  const Reduction r = vertex_cover_to_separator(k3);
  CHECK(oracle::min_vertex_cover(k3) == 2);
  CHECK(oracle::brute_min_separator(r.graph, *r.x, *r.y).size == 2);
}

TEST_CASE("vertex cover equivalence on all graphs with four vertices") {
  for (const PlainGraph& h : corpus::all_plain_graphs(4)) {
    const Reduction r = vertex_cover_to_separator(h);
    CHECK(oracle::brute_min_separator(r.graph, *r.x, *r.y).size == oracle::min_vertex_cover(h));
  }
}

TEST_CASE("rbpm normalization and image") {
  // Pair of the two crossing edges 00 and 11; the other matching is free.
  const RbpmInstance free_side{2, {{0, 0}, {1, 1}, {0, 1}, {1, 0}}, {{0, 1}}};
  CHECK(is_normalized(free_side));
  CHECK(oracle::restricted_perfect_matching_exists(free_side));
  const Reduction yes = rbpm_to_packing(free_side);
  CHECK(oracle::brute_max_packing(yes.graph, *yes.x, *yes.y).size == 2);

  const RbpmInstance forced{2, {{0, 0}, {1, 1}}, {{0, 1}}};
  CHECK_FALSE(oracle::restricted_perfect_matching_exists(forced));
  const Reduction no = rbpm_to_packing(forced);
  CHECK(no.graph.vertex_count() == 8);
  CHECK(oracle::brute_max_packing(no.graph, *no.x, *no.y).size < 2);

  const RbpmInstance adjacent{2, {{0, 0}, {0, 1}, {1, 1}}, {{0, 1}}};
  CHECK_FALSE(is_normalized(adjacent));
  CHECK_THROWS_AS((void)rbpm_to_packing(adjacent), GraphError);
  const auto [normal, split] = normalize_rbpm(adjacent);
  CHECK(normal.pairs.empty());
  CHECK(split == std::vector<int>{0});
  CHECK(oracle::restricted_perfect_matching_exists(normal) ==
        oracle::restricted_perfect_matching_exists(adjacent));

  CHECK_THROWS_AS((void)normalize_rbpm(RbpmInstance{2, {{0, 0}, {1, 1}}, {{0, 0}}}), GraphError);
  CHECK_THROWS_AS((void)normalize_rbpm(RbpmInstance{1, {{0, 3}}, {}}), GraphError);
}

TEST_CASE("rbpm equivalence on random instances") {
  corpus::Rng rng(405);
  for (int i = 0; i < 150; ++i) {
    const RbpmInstance inst = normalize_rbpm(corpus::random_rbpm(rng, 3, 2)).first;
    const Reduction r = rbpm_to_packing(inst);
    const int t = oracle::brute_max_packing(r.graph, *r.x, *r.y).size;
    CHECK((t == inst.side) == oracle::restricted_perfect_matching_exists(inst));
  }
}

TEST_CASE("extend") {
  const Graph path(3, {{0, 1, kBlue}, {1, 2, kRed}});
  const int ones[] = {1, 1, 1};
  CHECK(extend(path, ones).graph == path);

  const int sizes[] = {1, 2, 1};
  const Reduction r = extend(path, sizes);
  CHECK(r.graph.vertex_count() == 4);
  CHECK(r.graph.edge_count() == 4);
  CHECK(r.names == std::vector<std::string>{"v1", "v2.1", "v2.2", "v3"});
  const int bad[] = {1, 0, 1};
  CHECK_THROWS_AS((void)extend(path, bad), GraphError);
  const int short_sizes[] = {1, 1};
  CHECK_THROWS_AS((void)extend(path, short_sizes), GraphError);
}

TEST_CASE("blow-ups turn PC closed walks into PC cycles") {
  const Graph ab = fixture("ab-trail").graph;
  const std::vector<int> sevens(6, 7);
  CHECK_FALSE(has_pc_cycle(ab).present);
  CHECK(has_pc_cycle(extend(ab, sevens).graph).present);

  corpus::Rng rng(406);
  corpus::RandomGraphOptions opts;
  opts.max_n = 4;
  for (int i = 0; i < 300; ++i) {
    const Graph g = corpus::random_graph(rng, opts);
    const std::vector<int> sizes(static_cast<std::size_t>(g.vertex_count()),
                                 g.vertex_count() + 1);
    CHECK(has_pc_cycle(extend(g, sizes).graph).present == has_pc_closed_walk(g).present);
  }
}

TEST_CASE("deletion images") {
  const Reduction two_cycle = fvs_to_type5_deletion(Digraph{2, {{0, 1}, {1, 0}}});
  CHECK(two_cycle.graph.vertex_count() == 4);
  CHECK(oracle::brute_min_deletion_to_type5(two_cycle.graph).size == 1);

  const PlainGraph c5{5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}};
  const PlainGraph c4{4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
  CHECK(oracle::brute_min_deletion_to_type5(bipartization_to_type5_deletion(c5).graph).size == 1);
  CHECK(oracle::brute_min_deletion_to_type5(bipartization_to_type5_deletion(c4).graph).size == 0);
  CHECK(bipartization_to_type5_deletion(c4).graph.color_count() == 2);
}

TEST_CASE("deletion equivalences on small instances") {
  for (int n = 1; n <= 3; ++n) {
    for (const Digraph& d : corpus::all_digraphs(n)) {
      CHECK(oracle::brute_min_deletion_to_type5(fvs_to_type5_deletion(d).graph).size ==
            oracle::min_feedback_vertex_set(d));
    }
  }
  for (int n = 1; n <= 5; ++n) {
    for (const PlainGraph& h : corpus::all_plain_graphs(n)) {
      CHECK(oracle::brute_min_deletion_to_type5(bipartization_to_type5_deletion(h).graph).size ==
            oracle::min_odd_cycle_transversal(h));
    }
  }
}

TEST_CASE("vertex split transform") {
  const Reduction r = vertex_split_edge_transform(Graph(2, {}, 2));
  CHECK(r.graph.vertex_count() == 6);
  CHECK(count_color(r.graph, kBlue) == 2);
  CHECK(count_color(r.graph, kRed) == 2);
  CHECK(r.names[2] == "v1''");
  CHECK_THROWS_AS((void)vertex_split_edge_transform(Graph(2, {{0, 1, 3}})), UnsupportedError);
  CHECK_THROWS_AS((void)vertex_split_edge_transform(Graph(2, {{0, 1, 1}})), UnsupportedError);
}
