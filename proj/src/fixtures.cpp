#include "ecg/fixtures.hpp"

#include "ecg/errors.hpp"
#include "ecg/reductions.hpp"

namespace ecg {

namespace {

Fixture make(std::string name, std::string description, int n,
             std::initializer_list<ColoredEdge> edges, std::vector<std::string> names,
             int level) {
  return Fixture{std::move(name), std::move(description), Graph(n, edges, 2),
                 std::move(names), level, std::nullopt, std::nullopt,
                 std::nullopt, std::nullopt};
}

}  // namespace

std::vector<Fixture> canonical_fixtures() {
  std::vector<Fixture> all;

  // Two triangles through x; every closed trail passes x twice.
  all.push_back(make("k3k3", "two triangles sharing x: PC closed trail but no PC cycle", 5,
                     {{0, 1, kRed}, {0, 2, kBlue}, {1, 2, kBlue},
                      {3, 4, kBlue}, {3, 2, kRed}, {4, 2, kRed}},
                     {"v1", "v2", "x", "u1", "u2"}, 1));

  // a2b2 is a bridge that a closed walk crosses twice.
  all.push_back(make("ab-trail", "PC closed walk through a bridge, no PC closed trail", 6,
                     {{0, 3, kBlue}, {1, 4, kBlue}, {2, 5, kBlue},
                      {0, 1, kRed}, {3, 1, kRed}, {2, 4, kRed}, {5, 4, kRed}},
                     {"a1", "a2", "a3", "b1", "b2", "b3"}, 2));

  all.push_back(make("triangle-2b1r", "triangle with two blue edges and one red edge", 3,
                     {{0, 1, kBlue}, {1, 2, kBlue}, {0, 2, kRed}}, {"v1", "v2", "v3"}, 3));

  all.push_back(make("allblue-k3", "all-blue triangle: non-bipartite", 3,
                     {{0, 1, kBlue}, {1, 2, kBlue}, {0, 2, kBlue}}, {"v1", "v2", "v3"}, 4));

  all.push_back(make("path-br", "blue-red path x-w-y", 3, {{0, 1, kBlue}, {1, 2, kRed}},
                     {"x", "w", "y"}, 5));

  all.push_back(make("c4-alt", "alternating 4-cycle", 4,
                     {{0, 1, kBlue}, {1, 2, kRed}, {2, 3, kBlue}, {3, 0, kRed}},
                     {"v1", "v2", "v3", "v4"}, 0));

  {
    const Reduction r = betweenness_to_type4(BetweennessInstance{3, {{0, 1, 2}}});
    all.push_back(Fixture{"fig1-gadget", "betweenness gadget for the triple (1,2,3)",
                          r.graph, r.names, 4, std::nullopt, std::nullopt,
                          std::nullopt, std::nullopt});
  }
  {
    // One pair {u1w1, u2w2}: exactly the p/q fragment with its terminals.
    const Reduction r = rbpm_to_packing(RbpmInstance{2, {{0, 0}, {1, 1}}, {{0, 1}}});
    all.push_back(Fixture{"fig2-fragment", "packing construction for one pair of edges",
                          r.graph, r.names, 3, r.x, r.y, std::nullopt, std::nullopt});
  }
  {
    Fixture f = make("fig3", "type-3 graph on which s = 2 > t = 1", 8,
                     {{1, 2, kBlue}, {3, 4, kBlue}, {5, 6, kBlue},
                      {0, 1, kRed}, {0, 2, kRed}, {0, 4, kRed}, {1, 5, kRed},
                      {2, 3, kRed}, {3, 5, kRed}, {4, 7, kRed}, {6, 7, kRed}},
                     {"v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8"}, 3);
    f.x = 0;
    f.y = 7;
    f.expected_s = 2;
    f.expected_t = 1;
    all.push_back(std::move(f));
  }
  return all;
}

Fixture fixture(const std::string& name) {
  for (Fixture& f : canonical_fixtures()) {
    if (f.name == name) {
      return std::move(f);
    }
  }
  throw GraphError("unknown fixture '" + name + "'");
}

}  // namespace ecg
