#include <filesystem>
#include <random>

#include "doctest.h"
#include "ecg/corpus.hpp"
#include "ecg/errors.hpp"
#include "ecg/io.hpp"

using namespace ecg;

TEST_CASE("parse: header, edges, comments") {
  const Graph g = parse_graph(
      "# triangle\n"
      "p ecg 3 3 2\n"
      "e 1 2 1   # blue\n"
      "\n"
      "e 2 3 1\n"
      "e 1 3 2\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.color_count() == 2);
  CHECK(g.edge(2).u == 0);
  CHECK(g.edge(2).v == 2);
  CHECK(g.edge(2).color == 2);
}

TEST_CASE("parse: header color count may exceed the colors used") {
  CHECK(parse_graph("p ecg 2 1 3\ne 1 2 1\n").color_count() == 3);
}

namespace {
int error_line(const std::string& text) {
  try {
    (void)parse_graph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}
}  // namespace

TEST_CASE("parse errors carry line numbers") {
  CHECK(error_line("e 1 2 1\n") == 1);                          // edge before header
  CHECK(error_line("p ecg 2 1 2\np ecg 2 1 2\n") == 2);         // duplicate header
  CHECK(error_line("p ecg 2 1 2\ne 1 3 1\n") == 2);             // vertex out of range
  CHECK(error_line("p ecg 2 1 2\ne 1 1 1\n") == 2);             // loop
  CHECK(error_line("p ecg 2 1 2\ne 1 2 3\n") == 2);             // color above c
  CHECK(error_line("p ecg 2 1 2\ne 1 2 0\n") == 2);             // color below 1
  CHECK(error_line("p ecg 2 1 2\nx 1 2\n") == 2);               // unknown tag
  CHECK(error_line("p ecg 2 1 2\ne 1 2 1 9\n") == 2);           // trailing field
  CHECK(error_line("p ecg 2 1 2\ne 1 two 1\n") == 2);           // not an integer
  CHECK(error_line("p graph 2 1 2\n") == 1);                    // wrong format tag
  CHECK(error_line("p ecg 2 2 2\ne 1 2 1\n") > 0);              // edge count mismatch
  CHECK(error_line("# nothing\n") > 0);                         // no header
  CHECK(error_line("p ecg -1 0 1\n") == 1);
}

TEST_CASE("serialize then parse is the identity") {
  corpus::Rng rng(5);
  for (int i = 0; i < 500; ++i) {
    const Graph g = corpus::random_graph(rng);
    CHECK(parse_graph(serialize(g)) == g);
  }
}

TEST_CASE("file round trip with a comment block") {
  const auto path = std::filesystem::temp_directory_path() / "ecg_io_roundtrip.ecg";
  const Graph g(4, {{0, 1, 1}, {1, 2, 2}, {2, 3, 3}});
  write_graph_file(path, g, "first line\nsecond line");
  CHECK(read_graph_file(path) == g);
  std::filesystem::remove(path);
  CHECK_THROWS_AS((void)read_graph_file(path), GraphError);
}
