#include "doctest.h"
#include "ecg/corpus.hpp"
#include "ecg/fixtures.hpp"
#include "ecg/oracle.hpp"
#include "ecg/pc_structures.hpp"
#include "ecg/reductions.hpp"
#include "../support/certify.hpp"

using namespace ecg;

namespace {

const Graph kParallel(2, {{0, 1, kBlue}, {0, 1, kRed}});

}  // namespace

TEST_CASE("closed walk through the ab-trail graph") {
  const Graph g = fixture("ab-trail").graph;
  const Detection walk = has_pc_closed_walk(g);
  CHECK(walk.present);
  REQUIRE(walk.witness);
  CHECK(walk.witness->length() == 8);
  CHECK(certify::pc_closed_walk(g, *walk.witness));

  CHECK_FALSE(has_pc_closed_trail(g).present);
  CHECK_FALSE(has_pc_cycle(g).present);
}

TEST_CASE("blue-red parallel pair is a PC cycle of length 2") {
  const Detection cycle = has_pc_cycle(kParallel);
  CHECK(cycle.present);
  REQUIRE(cycle.witness);
  CHECK(cycle.witness->length() == 2);
  CHECK(certify::pc_cycle(kParallel, *cycle.witness));
  CHECK(has_pc_closed_trail(kParallel).present);
  CHECK(has_pc_closed_walk(kParallel).witness->length() == 2);
}

TEST_CASE("transition digraph sizes") {
  const TransitionDigraph one = transition_digraph(Graph(2, {{0, 1, kBlue}}));
  CHECK(one.nodes.size() == 2);
  CHECK(one.arc_count() == 0);

  const TransitionDigraph pair = transition_digraph(kParallel);
  CHECK(pair.nodes.size() == 4);
  CHECK(pair.arc_count() == 4);

  const TransitionDigraph blue = transition_digraph(fixture("allblue-k3").graph);
  CHECK(blue.nodes.size() == 6);
  CHECK(blue.arc_count() == 0);
  CHECK_FALSE(has_pc_closed_walk(fixture("allblue-k3").graph).present);
}

TEST_CASE("node numbering of the transition digraph") {
  const TransitionDigraph t = transition_digraph(Graph(3, {{0, 1, kBlue}, {1, 2, kRed}}));
  REQUIRE(t.nodes.size() == 4);
  CHECK(t.nodes[0].tail == 0);
  CHECK(t.nodes[0].head == 1);
  CHECK(t.nodes[1].tail == 1);
  CHECK(t.nodes[1].head == 0);
  CHECK(t.successors[0] == std::vector<int>{2});
  CHECK(t.successors[3] == std::vector<int>{1});
}

TEST_CASE("directed 3-cycle lifts to a PC cycle") {
  const Digraph d{3, {{0, 1}, {1, 2}, {2, 0}}};
  const Reduction r = digraph_to_2ecg(d);
  const Detection cycle = has_pc_cycle(r.graph);
  CHECK(cycle.present);
  REQUIRE(cycle.witness);
  CHECK(cycle.witness->length() == 6);
  CHECK(certify::pc_cycle(r.graph, *cycle.witness));
}

TEST_CASE("witness search is refused above its bound") {
  // A long alternating even cycle: one PC cycle, 20 vertices.
  std::vector<ColoredEdge> edges;
  for (int v = 0; v < 20; ++v) {
    edges.push_back({v, (v + 1) % 20, v % 2 + 1});
  }
  const Graph g(20, edges);
  const Detection cycle = has_pc_cycle(g, 12);
  CHECK(cycle.present);
  CHECK_FALSE(cycle.witness);
  CHECK(cycle.witness_refused);
  const Detection trail = has_pc_closed_trail(g, 16);
  CHECK(trail.present);
  CHECK_FALSE(trail.witness);
  CHECK(trail.witness_refused);
  CHECK(has_pc_cycle(g, 20).witness);
  // The closed-walk witness comes from a shortest cycle search and is never refused.
  CHECK(has_pc_closed_walk(g).witness);
}

TEST_CASE("detection matches enumeration and witnesses check out") {
  corpus::Rng rng(202);
  for (int i = 0; i < 3000; ++i) {
    const Graph g = corpus::random_graph(rng);
    const Detection cycle = has_pc_cycle(g);
    const Detection trail = has_pc_closed_trail(g);
    const Detection walk = has_pc_closed_walk(g);
    CHECK(cycle.present == oracle::find_pc_cycle(g).has_value());
    CHECK(trail.present == oracle::find_pc_closed_trail(g).has_value());
    CHECK(walk.present == oracle::has_pc_closed_walk(g));
    if (cycle.witness) {
      CHECK(certify::pc_cycle(g, *cycle.witness));
    }
    if (trail.witness) {
      CHECK(certify::pc_closed_trail(g, *trail.witness));
    }
    if (walk.witness) {
      CHECK(certify::pc_closed_walk(g, *walk.witness));
    }
    CHECK((!cycle.present || trail.present));
    CHECK((!trail.present || walk.present));
  }
}
