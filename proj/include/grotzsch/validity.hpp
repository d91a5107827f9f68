#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grotzsch/planar.hpp"

namespace grotzsch {

// colors are 1..3, 0 = unassigned
struct Coloring {
  std::vector<int> c;

  Coloring() = default;
  explicit Coloring(int n) : c(n, 0) {}
  int& operator[](int v) { return c[v]; }
  int operator[](int v) const { return c[v]; }
  int size() const { return (int)c.size(); }
  bool total() const;
};

// coloring of a cycle, colors aligned with the canonical vertex order
struct BoundaryColoring {
  CycleRef cycle;
  std::vector<int> colors;

  BoundaryColoring() = default;
  // seq and cols in matching walk order, any rotation/direction
  BoundaryColoring(const std::vector<int>& seq, const std::vector<int>& cols);

  int color_of(int v) const;  // -1 if v not on cycle
  bool proper() const;
};

// A graph is properly colored when every edge sees two distinct colors.
bool is_proper(const RotationGraph& g, const Coloring& col);
std::optional<std::pair<int, int>> first_improper_edge(const RotationGraph& g,
                                                       const Coloring& col);

// Boundary colorings that every triangle-free plane interior can extend:
// proper, and for 6-cycles some opposite pair gets two distinct colors.
// Improper input is an error.
bool is_valid_boundary(const BoundaryColoring& b);

struct PairCheck {
  bool ok = false;
  std::string reason;
};

struct ValidPair {
  RotationGraph graph;
  BoundaryColoring boundary;
};

// outer face must be a simple cycle
CycleRef outer_cycle(const RotationGraph& g);

PairCheck check_valid_pair(const RotationGraph& g, const BoundaryColoring& b);
ValidPair make_valid_pair(RotationGraph g, BoundaryColoring b);  // throws on failure

// well-order for the induction: fewer vertices first, then MORE edges first
bool pair_less(int v1, int e1, int v2, int e2);
bool pair_less(const ValidPair& a, const ValidPair& b);

}  // namespace grotzsch
