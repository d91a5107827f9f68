#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "grotzsch/validity.hpp"

namespace grotzsch {

// Deterministic backtracking 3-colorer: vertices in id order, colors 1..3 in
// order, honoring the partial assignment. Reference oracle for everything.
std::optional<Coloring> brute_force_3color(const RotationGraph& g,
                                           const std::map<int, int>& partial = {});

long long count_extensions(const RotationGraph& g, const BoundaryColoring& b);

enum class Family { Cycle, Prism, Grid, HexPatch, Cube, Dodecahedron, RandomInsertion };

struct GenSpec {
  Family family = Family::Cycle;
  int n = 0;  // cycle/prism length, random target size, grid rows, hex radius
  int m = 0;  // grid columns
  std::uint64_t seed = 0;

  std::string manifest_line() const;  // "gen <family> <params> <seed>"
};

Family family_from_name(const std::string& name);
const char* family_name(Family f);

RotationGraph generate(const GenSpec& spec);

}  // namespace grotzsch
