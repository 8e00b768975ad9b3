#include <algorithm>

#include "doctest.h"
#include "ecg/acyclicity.hpp"
#include "ecg/corpus.hpp"
#include "ecg/errors.hpp"
#include "ecg/fixtures.hpp"
#include "ecg/oracle.hpp"
#include "ecg/structure.hpp"

using namespace ecg;

namespace {

const Graph kPathBR(3, {{0, 1, kBlue}, {1, 2, kRed}});

VertexOrdering identity(int n) {
  VertexOrdering o(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    o[i] = i;
  }
  return o;
}

}  // namespace

TEST_CASE("verify_ordering on the Menger-failure graph") {
  const Graph g = fixture("fig3").graph;
  const VertexOrdering ord{7, 6, 5, 0, 1, 2, 3, 4};  // v8 v7 v6 v1 v2 v3 v4 v5
  CHECK(verify_ordering(g, ord, 3));
  CHECK_FALSE(verify_ordering(g, ord, 4));
  CHECK(verify_ordering(g, ord, 1));
  CHECK(verify_ordering(g, ord, 2));
}

TEST_CASE("verify_ordering: edgeless graphs and rejections") {
  const Graph g(4, {});
  for (int k = 1; k <= 5; ++k) {
    CHECK(verify_ordering(g, VertexOrdering{2, 0, 3, 1}, k));
  }
  CHECK_THROWS_AS((void)verify_ordering(g, VertexOrdering{0, 1, 2}, 1), GraphError);
  CHECK_THROWS_AS((void)verify_ordering(g, VertexOrdering{0, 1, 2, 2}, 1), GraphError);
  CHECK_THROWS_AS((void)verify_ordering(g, VertexOrdering{0, 1, 2, 4}, 1), GraphError);
  CHECK_THROWS_AS((void)verify_ordering(g, identity(4), 0), GraphError);
  CHECK_THROWS_AS((void)verify_ordering(g, identity(4), 6), GraphError);
}

TEST_CASE("type 1") {
  const Graph k3k3 = fixture("k3k3").graph;
  const auto ord = recognize_type1(k3k3);
  REQUIRE(ord);
  CHECK(oracle::literal_ordering_check(k3k3, *ord, 1));
  CHECK_FALSE(recognize_type1(fixture("c4-alt").graph));
  CHECK(recognize_type1(fixture("allblue-k3").graph));
}

TEST_CASE("type 2") {
  CHECK_FALSE(recognize_type2(fixture("k3k3").graph));
  const Graph ab = fixture("ab-trail").graph;
  const auto ord = recognize_type2(ab);
  REQUIRE(ord);
  CHECK(oracle::literal_ordering_check(ab, *ord, 2));
  CHECK(recognize_type2(Graph(2, {{0, 1, kRed}})));
}

TEST_CASE("type 3") {
  CHECK_FALSE(recognize_type3(fixture("ab-trail").graph));
  const Graph tri = fixture("triangle-2b1r").graph;
  const auto ord = recognize_type3(tri);
  REQUIRE(ord);
  CHECK(oracle::literal_ordering_check(tri, *ord, 3));
  CHECK(recognize_type3(Graph(3, {})) == identity(3));
}

TEST_CASE("type 4") {
  CHECK_FALSE(recognize_type4(fixture("triangle-2b1r").graph));
  CHECK(recognize_type4(kPathBR));

  const Fixture gadget = fixture("fig1-gadget");
  const auto ord = recognize_type4(gadget.graph);
  REQUIRE(ord);
  CHECK(oracle::literal_ordering_check(gadget.graph, *ord, 4));
  // x=0, y=1, z=2, a(x,y)=3, b(x,y)=4, b(z,y)=5, a(z,y)=6
  const VertexOrdering chain{0, 3, 4, 1, 5, 6, 2};
  const VertexOrdering reversed(chain.rbegin(), chain.rend());
  CHECK(verify_ordering(gadget.graph, chain, 4));
  CHECK(verify_ordering(gadget.graph, reversed, 4));
  // The satisfied triple is visible in the certificate: y sits between x and z.
  const auto pos = [&](Vertex v) { return std::find(ord->begin(), ord->end(), v) - ord->begin(); };
  CHECK(((pos(0) < pos(1) && pos(1) < pos(2)) || (pos(2) < pos(1) && pos(1) < pos(0))));
}

TEST_CASE("type 4 capacity bound") {
  std::vector<ColoredEdge> edges;
  for (int v = 0; v + 1 < 26; ++v) {
    edges.push_back({v, v + 1, v % 2 + 1});
  }
  const Graph long_path(26, edges);
  CHECK_THROWS_AS((void)recognize_type4(long_path), CapacityError);
  CHECK(recognize_type4(long_path, 26));
  const Graph huge(29, {});
  CHECK_THROWS_AS((void)recognize_type4(huge, 40), CapacityError);
}

TEST_CASE("procedure 1: blue-red path") {
  const auto r = procedure1_orient(kPathBR, 0, kBlue);
  const auto* o = std::get_if<Orientation>(&r);
  REQUIRE(o);
  CHECK(o->head == std::vector<Vertex>{1, 2});
  CHECK(topological_order(kPathBR, *o, identity(3)) == VertexOrdering{0, 1, 2});
  // Pulling everything into u reverses the arcs.
  const auto back = procedure1_orient(kPathBR, 0, kRed);
  REQUIRE(std::holds_alternative<Orientation>(back));
  CHECK(std::get<Orientation>(back).head == std::vector<Vertex>{0, 1});
}

TEST_CASE("procedure 1: all-blue triangle conflicts") {
  const auto r = procedure1_orient(fixture("allblue-k3").graph, 0, kBlue);
  CHECK(std::holds_alternative<Conflict>(r));
}

TEST_CASE("procedure 1: 4-cycle with two monochromatic corners completes acyclic") {
  // blue v1v2, blue v2v3, red v3v4, red v4v1
  const Graph g(4, {{0, 1, kBlue}, {1, 2, kBlue}, {2, 3, kRed}, {3, 0, kRed}});
  for (Color c : {kBlue, kRed}) {
    const auto r = procedure1_orient(g, 0, c);
    const auto* o = std::get_if<Orientation>(&r);
    REQUIRE(o);
    const auto order = topological_order(g, *o, identity(4));
    REQUIRE(order);
    CHECK(verify_ordering(g, *order, 5));
  }
}

TEST_CASE("procedure 1: precheck and argument errors") {
  const Graph star(4, {{0, 1, 1}, {0, 2, 2}, {0, 3, 3}});
  const auto r = procedure1_orient(star, 1, 1);
  const auto* f = std::get_if<PrecheckFailure>(&r);
  REQUIRE(f);
  CHECK(f->vertex == 0);
  CHECK(f->colors == std::vector<Color>{1, 2, 3});
  CHECK_THROWS_AS((void)procedure1_orient(kPathBR, 1, 3), GraphError);
  CHECK_THROWS_AS((void)procedure1_orient(kPathBR, 5, kBlue), GraphError);
}

TEST_CASE("type 5") {
  CHECK_FALSE(recognize_type5(fixture("allblue-k3").graph));
  CHECK_FALSE(recognize_type5(fixture("c4-alt").graph));
  const auto ord = recognize_type5(kPathBR);
  REQUIRE(ord);
  CHECK(verify_ordering(kPathBR, *ord, 5));
  // Components are ordered independently; isolated vertices go last.
  const Graph two(5, {{3, 4, kBlue}, {0, 1, kRed}});
  const auto split = recognize_type5(two);
  REQUIRE(split);
  CHECK(split->back() == 2);
  CHECK(verify_ordering(two, *split, 5));
}

TEST_CASE("count_cycle_monochromatic") {
  CHECK(count_cycle_monochromatic(fixture("c4-alt").graph, Walk{{0, 1, 2, 3, 0}, {0, 1, 2, 3}}) == 0);
  CHECK(count_cycle_monochromatic(fixture("allblue-k3").graph, Walk{{0, 1, 2, 0}, {0, 1, 2}}) == 3);
  const Graph bbrr(4, {{0, 1, kBlue}, {1, 2, kBlue}, {2, 3, kRed}, {3, 0, kRed}});
  CHECK(count_cycle_monochromatic(bbrr, Walk{{0, 1, 2, 3, 0}, {0, 1, 2, 3}}) == 2);
  CHECK_THROWS_AS((void)count_cycle_monochromatic(bbrr, Walk{{0, 1, 2}, {0, 1}}), GraphError);
}

TEST_CASE("classify") {
  CHECK(classify(fixture("k3k3").graph).level == 1);
  CHECK(classify(fixture("triangle-2b1r").graph).level == 3);
  CHECK(classify(fixture("c4-alt").graph).level == 0);
  CHECK(classify(kPathBR).level == 5);
}

TEST_CASE("classify reports type 4 as unknown above the bound") {
  // Ten disjoint 2-blue-1-red triangles: type 3, not bipartite.
  std::vector<ColoredEdge> edges;
  for (int t = 0; t < 10; ++t) {
    edges.push_back({3 * t, 3 * t + 1, kBlue});
    edges.push_back({3 * t + 1, 3 * t + 2, kBlue});
    edges.push_back({3 * t, 3 * t + 2, kRed});
  }
  const Graph g(30, edges);
  const Classification c = classify(g);
  CHECK(c.type4_unknown());
  CHECK(c.level == 3);
  CHECK(*c.membership[2]);
  CHECK_FALSE(*c.membership[4]);
}

TEST_CASE("recognizers agree with exhaustive ordering search on small graphs") {
  corpus::Rng rng(101);
  corpus::RandomGraphOptions opts;
  opts.max_n = 6;
  for (int i = 0; i < 1500; ++i) {
    const Graph g = corpus::random_graph(rng, opts);
    const std::optional<VertexOrdering> fast[5] = {recognize_type1(g), recognize_type2(g),
                                                   recognize_type3(g), recognize_type4(g),
                                                   recognize_type5(g)};
    for (int k = 1; k <= 5; ++k) {
      const auto brute = oracle::brute_recognize(g, k);
      CHECK(fast[k - 1].has_value() == brute.has_value());
      if (fast[k - 1]) {
        CHECK(oracle::literal_ordering_check(g, *fast[k - 1], k));
      }
    }
    // Both searches return the lexicographically smallest type-4 ordering.
    CHECK(fast[3] == oracle::brute_recognize(g, 4));
    for (int k = 1; k <= 4; ++k) {
      CHECK((!fast[k].has_value() || fast[k - 1].has_value()));
    }
  }
}

TEST_CASE("type 5 three ways, and the two-color corollary") {
  corpus::Rng rng(102);
  for (int i = 0; i < 2000; ++i) {
    const Graph g = corpus::random_graph(rng);
    const bool t5 = recognize_type5(g).has_value();
    CHECK(t5 == oracle::cycle_parity_condition(g));
    if (g.color_count() <= 2) {
      CHECK(t5 == (is_bipartite(g) && recognize_type1(g).has_value()));
    }
  }
}
