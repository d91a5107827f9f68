#pragma once

#include <string>
#include <utility>
#include <vector>

#include "grotzsch/reductions.hpp"

namespace grotzsch {

struct SolverConfig {
  bool use_brute_base = true;
  int brute_base_max_vertices = 9;
  bool emit_trace = true;
};

struct TraceStep {
  int depth = 0;
  ReductionKind kind;
  std::vector<int> verts;                         // parameters in parent ids
  std::vector<std::pair<int, int>> child_sizes;  // (V, E) per child
};

struct Trace {
  std::vector<TraceStep> steps;

  std::string to_text() const;  // "step <k> depth <d> kind <R?> verts <ids>"
};

// Color the interior of a valid pair, never touching the boundary colors.
std::pair<Coloring, Trace> extend(const ValidPair& p, const SolverConfig& cfg = {});

// Full driver: peel low-degree vertices, split into blocks, root each block at
// a short face, extend, merge at cut vertices, unwind the peel.
std::pair<Coloring, Trace> three_color(const RotationGraph& g,
                                       const SolverConfig& cfg = {});

}  // namespace grotzsch
