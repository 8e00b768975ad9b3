#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ecg/graph.hpp"

namespace ecg {

struct Fixture {
  std::string name;  // file stem, e.g. "k3k3"
  std::string description;
  Graph graph;
  std::vector<std::string> vertex_names;
  int expected_level = 0;
  // Terminals for the connectivity fixtures, with the expected s and t.
  std::optional<Vertex> x;
  std::optional<Vertex> y;
  std::optional<int> expected_s;
  std::optional<int> expected_t;
};

/// The nine canonical example graphs in a fixed order.
[[nodiscard]] std::vector<Fixture> canonical_fixtures();

/// Looks a fixture up by name; throws GraphError if unknown.
[[nodiscard]] Fixture fixture(const std::string& name);

}  // namespace ecg
