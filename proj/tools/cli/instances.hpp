#pragma once

#include <string>
#include <string_view>

#include "ecg/reductions.hpp"

// Source-problem files for `ecg reduce`. Same conventions as the graph
// format: '#' comments, one 'p' line, 1-based numbering.
//
//   p digraph <n> <m>        a <u> <v>
//   p graph <n> <m>          e <u> <v>
//   p betweenness <U> <t>    t <x> <y> <z>
//   p rbpm <k> <m>           e <u> <v>     (u on the left, v on the right)
//                            s <i> <j>     (edges i and j, by line order)
namespace ecg::cli {

[[nodiscard]] Digraph parse_digraph(std::string_view text);
[[nodiscard]] PlainGraph parse_plain_graph(std::string_view text);
[[nodiscard]] BetweennessInstance parse_betweenness(std::string_view text);
[[nodiscard]] RbpmInstance parse_rbpm(std::string_view text);

/// 64-bit FNV-1a of the bytes, as 16 hex digits.
[[nodiscard]] std::string fnv1a_hex(std::string_view bytes);

}  // namespace ecg::cli
