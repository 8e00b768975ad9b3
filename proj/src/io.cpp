#include "ecg/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "ecg/errors.hpp"

namespace ecg {

namespace {

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

long read_int(std::istringstream& fields, int line, const char* what) {
  long value = 0;
  if (!(fields >> value)) {
    throw ParseError(line, std::string("expected integer ") + what);
  }
  return value;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::string raw;
  int line = 0;
  bool have_header = false;
  long n = 0;
  long m = 0;
  long c = 0;
  std::vector<ColoredEdge> edges;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream fields(strip_comment(raw));
    std::string tag;
    if (!(fields >> tag)) {
      continue;
    }
    if (tag == "p") {
      if (have_header) {
        throw ParseError(line, "duplicate problem line");
      }
      std::string format;
      if (!(fields >> format) || format != "ecg") {
        throw ParseError(line, "expected 'p ecg <n> <m> <c>'");
      }
      n = read_int(fields, line, "vertex count");
      m = read_int(fields, line, "edge count");
      c = read_int(fields, line, "color count");
      if (n < 0 || m < 0 || c < 1) {
        throw ParseError(line, "counts must be n >= 0, m >= 0, c >= 1");
      }
      have_header = true;
    } else if (tag == "e") {
      if (!have_header) {
        throw ParseError(line, "edge before problem line");
      }
      const long u = read_int(fields, line, "endpoint");
      const long v = read_int(fields, line, "endpoint");
      const long color = read_int(fields, line, "color");
      if (u < 1 || u > n || v < 1 || v > n) {
        throw ParseError(line, "endpoint outside 1.." + std::to_string(n));
      }
      if (u == v) {
        throw ParseError(line, "loops are not allowed");
      }
      if (color < 1 || color > c) {
        throw ParseError(line, "color outside 1.." + std::to_string(c));
      }
      edges.push_back(ColoredEdge{static_cast<Vertex>(u - 1),
                                  static_cast<Vertex>(v - 1),
                                  static_cast<Color>(color)});
    } else {
      throw ParseError(line, "unknown line type '" + tag + "'");
    }
    std::string trailing;
    if (fields >> trailing) {
      throw ParseError(line, "unexpected trailing field '" + trailing + "'");
    }
  }
  if (!have_header) {
    throw ParseError(line, "missing problem line");
  }
  if (static_cast<long>(edges.size()) != m) {
    throw ParseError(line, "header announces " + std::to_string(m) +
                               " edges, found " + std::to_string(edges.size()));
  }
  return Graph(static_cast<int>(n), edges, static_cast<int>(c));
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

Graph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw GraphError("cannot open " + path.string());
  }
  return parse_graph(in);
}

std::string serialize(const Graph& g) {
  std::ostringstream out;
  out << "p ecg " << g.vertex_count() << ' ' << g.edge_count() << ' '
      << g.color_count() << '\n';
  for (const Edge& e : g.edges()) {
    out << "e " << e.u + 1 << ' ' << e.v + 1 << ' ' << e.color << '\n';
  }
  return out.str();
}

void write_graph_file(const std::filesystem::path& path, const Graph& g,
                      std::string_view comment) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  if (!comment.empty()) {
    std::istringstream lines{std::string(comment)};
    std::string line;
    while (std::getline(lines, line)) {
      out << "# " << line << '\n';
    }
  }
  out << serialize(g);
}

}  // namespace ecg
