#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "ecg/graph.hpp"

namespace ecg {

// Text graph format, one graph per file:
//
//   # comment
//   p ecg <n> <m> <c>
//   e <u> <v> <color>      (m lines, vertices 1-based)
//
// Anything after '#' on a line is ignored.

/// Throws ParseError carrying the offending line number.
[[nodiscard]] Graph parse_graph(std::istream& in);
[[nodiscard]] Graph parse_graph(std::string_view text);
[[nodiscard]] Graph read_graph_file(const std::filesystem::path& path);

/// Edges are written in storage order; edge ids are not preserved for
/// graphs whose ids are not 0..m-1.
[[nodiscard]] std::string serialize(const Graph& g);
void write_graph_file(const std::filesystem::path& path, const Graph& g,
                      std::string_view comment = {});

}  // namespace ecg
