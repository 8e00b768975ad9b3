#include "ecg/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "ecg/structure.hpp"

namespace ecg::corpus {

namespace {

int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

std::vector<std::pair<Vertex, Vertex>> all_pairs(int n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      pairs.emplace_back(u, v);
    }
  }
  return pairs;
}

}  // namespace

std::vector<Graph> connected_two_colored(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    const auto pairs = all_pairs(n);
    // Base-3 counter: 0 absent, 1 blue, 2 red.
    std::vector<int> digit(pairs.size(), 0);
    while (true) {
      std::vector<ColoredEdge> edges;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (digit[i] != 0) {
          edges.push_back({pairs[i].first, pairs[i].second, digit[i]});
        }
      }
      Graph g(n, edges, 2);
      if (is_connected(g)) {
        out.push_back(std::move(g));
      }
      std::size_t i = 0;
      while (i < digit.size() && digit[i] == 2) {
        digit[i++] = 0;
      }
      if (i == digit.size()) {
        break;
      }
      ++digit[i];
    }
  }
  return out;
}

Graph random_graph(Rng& rng, const RandomGraphOptions& options) {
  const int n = uniform(rng, 1, options.max_n);
  const int c = uniform(rng, 1, options.max_colors);
  std::vector<ColoredEdge> edges;
  if (n >= 2) {
    const int m = uniform(rng, 0, options.max_edges_per_vertex * n);
    std::set<std::pair<Vertex, Vertex>> used;
    for (int attempt = 0; static_cast<int>(edges.size()) < m && attempt < 20 * m; ++attempt) {
      Vertex u = uniform(rng, 0, n - 1);
      Vertex v = uniform(rng, 0, n - 2);
      if (v >= u) {
        ++v;
      }
      if (!options.multigraph && !used.insert(std::minmax(u, v)).second) {
        continue;
      }
      edges.push_back({u, v, uniform(rng, 1, c)});
    }
  }
  return Graph(n, edges, c);
}

Type4Instance random_type4(Rng& rng, int min_n, int max_n, int colors) {
  while (true) {
    const int n = uniform(rng, min_n, max_n);
    std::vector<Color> before(static_cast<std::size_t>(n));
    std::vector<Color> after(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      before[i] = uniform(rng, 1, colors);
      after[i] = uniform(rng, 1, colors);
      // Mostly switch color, otherwise the vertex is monochromatic and
      // carries no PC path through it.
      if (after[i] == before[i] && colors > 1 && uniform(rng, 1, 5) > 1) {
        after[i] = before[i] % colors + 1;
      }
    }
    // Terminal positions: the two ends three times out of four.
    int px = 0;
    int py = n - 1;
    if (uniform(rng, 1, 4) == 1) {
      px = uniform(rng, 0, n - 2);
      py = uniform(rng, px + 1, n - 1);
    }
    std::vector<Vertex> label(static_cast<std::size_t>(n));
    std::iota(label.begin(), label.end(), 0);
    std::shuffle(label.begin(), label.end(), rng);
    // Position i of the planted ordering is vertex label[i].
    const int density = uniform(rng, 50, 100);
    std::vector<ColoredEdge> edges;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if ((i == px && j == py) || after[i] != before[j] || uniform(rng, 1, 100) > density) {
          continue;
        }
        edges.push_back({label[i], label[j], after[i]});
        if (uniform(rng, 1, 10) == 1) {
          edges.push_back({label[i], label[j], after[i]});
        }
      }
    }
    if (edges.empty()) {
      continue;
    }
    Vertex x = label[px];
    Vertex y = label[py];
    if (uniform(rng, 0, 1) == 1) {
      std::swap(x, y);
    }
    return Type4Instance{Graph(n, edges, colors), x, y, label};
  }
}

std::vector<PlainGraph> all_plain_graphs(int n) {
  const auto pairs = all_pairs(n);
  std::vector<PlainGraph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    PlainGraph h{n, {}};
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask >> i & 1) {
        h.edges.push_back(pairs[i]);
      }
    }
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<Digraph> all_digraphs(int n) {
  std::vector<std::pair<Vertex, Vertex>> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v) {
        arcs.emplace_back(u, v);
      }
    }
  }
  std::vector<Digraph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << arcs.size()); ++mask) {
    Digraph d{n, {}};
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      if (mask >> i & 1) {
        d.arcs.push_back(arcs[i]);
      }
    }
    out.push_back(std::move(d));
  }
  return out;
}

RbpmInstance random_rbpm(Rng& rng, int max_side, int max_pairs) {
  RbpmInstance inst;
  inst.side = uniform(rng, 1, max_side);
  for (int u = 0; u < inst.side; ++u) {
    for (int v = 0; v < inst.side; ++v) {
      if (uniform(rng, 0, 1) == 1) {
        inst.edges.emplace_back(u, v);
      }
    }
  }
  std::vector<int> free(inst.edges.size());
  std::iota(free.begin(), free.end(), 0);
  std::shuffle(free.begin(), free.end(), rng);
  const int pairs = uniform(rng, 0, max_pairs);
  for (int p = 0; p < pairs && free.size() >= 2; ++p) {
    const int a = free.back();
    free.pop_back();
    const int b = free.back();
    free.pop_back();
    inst.pairs.emplace_back(std::min(a, b), std::max(a, b));
  }
  return inst;
}

BetweennessInstance random_betweenness(Rng& rng, int max_universe, int max_triples) {
  BetweennessInstance inst;
  inst.universe = uniform(rng, 3, max_universe);
  const int count = uniform(rng, 1, max_triples);
  std::set<std::array<int, 3>> seen;
  while (static_cast<int>(inst.triples.size()) < count) {
    std::vector<int> elements(static_cast<std::size_t>(inst.universe));
    std::iota(elements.begin(), elements.end(), 0);
    std::shuffle(elements.begin(), elements.end(), rng);
    const std::array<int, 3> t{elements[0], elements[1], elements[2]};
    if (seen.insert(t).second) {
      inst.triples.push_back(t);
    }
  }
  return inst;
}

}  // namespace ecg::corpus
