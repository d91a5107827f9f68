#pragma once

#include <map>
#include <optional>
#include <string>

#include "grotzsch/validity.hpp"

namespace grotzsch {

// Text format:
//   pg 1
//   n <N>
//   r <v> <d> <u1> ... <ud>    clockwise rotation, one line per vertex
//   outer <u> <v>
//   color <v> <c>              optional, must cover exactly the outer cycle
// Lines starting with '#' and blank lines are ignored.
struct ParsedFile {
  RotationGraph graph;
  std::optional<BoundaryColoring> boundary;
};

ParsedFile parse_graph_text(const std::string& text);
ParsedFile load_graph_file(const std::string& path);

// canonical form: rotations start at the smallest neighbor, colors sorted
std::string serialize_graph(const RotationGraph& g,
                            const BoundaryColoring* boundary = nullptr,
                            const std::string& comment = "");

// "c <v> <color>" lines
std::map<int, int> parse_coloring_text(const std::string& text);
std::string serialize_coloring(const Coloring& col);

}  // namespace grotzsch
