#pragma once

#include <array>
#include <optional>
#include <variant>

#include "grotzsch/validity.hpp"

namespace grotzsch {

enum class ReductionKind {
  R1_InteriorLowDegree,
  R2_SeparatingShortCycle,
  R3_CutRepair,
  R4_InducedSixCycle,
  R5_FourCycle,
  R5t_Terminal,
  R6_Pentagon,
};

const char* kind_tag(ReductionKind k);  // "R1".."R6", "R5t"

// ---- detection (color-blind: only graph + boundary cycle are consulted) ----

struct R1Hit {
  int v;  // interior vertex of degree <= 2
};
struct R2Hit {
  CycleRef k;  // non-facial cycle of length 4 or 5
};
struct R3Hit {
  std::optional<int> cut;  // empty when the graph is disconnected
  std::vector<int> side;   // vertices of the piece without boundary vertices (incl. cut)
};
struct R4Hit {
  CycleRef k;
  std::array<int, 6> labels;  // walk order, labels[0] off the boundary
};
struct R5Hit {
  CycleRef k;
  std::array<int, 4> labels;  // walk order, labels[2] off the boundary
};
struct R6Hit {
  std::array<int, 5> ring;     // facial 5-cycle, ring[0..3] of degree 3 off boundary
  std::array<int, 4> outside;  // their neighbors off the ring
};

std::optional<R1Hit> detect_r1(const ValidPair& p);
std::optional<R2Hit> detect_r2(const ValidPair& p);
std::optional<R3Hit> detect_r3(const ValidPair& p);
std::optional<R4Hit> detect_r4(const ValidPair& p);
std::optional<R5Hit> detect_r5(const ValidPair& p);
std::optional<R6Hit> detect_r6(const ValidPair& p);

// ---- applied reductions, carrying what the lift needs ----

struct AppliedR1 {
  int v;
  std::vector<int> neighbors;  // in parent ids
  VertexMap map;
  ValidPair child;
};
struct AppliedR2 {
  CycleRef k;
  ValidPair outside;
  RotationGraph inside;  // boundary colors known only after the outside solve
  VertexMap out_map, in_map;
};
struct AppliedR3 {
  int v1, v2;
  ValidPair child;  // same ids, one extra edge
};
struct AppliedR4 {
  std::array<int, 6> labels;
  bool k_facial;
  ValidPair outside;  // includes the added chord labels[0]-labels[3]
  RotationGraph inside;
  VertexMap out_map, in_map;
};
struct AppliedR5 {
  std::array<int, 4> labels;
  VertexMap map;  // labels[0] and labels[2] map to the merged vertex
  ValidPair child;
};
struct AppliedR5t {
  std::array<int, 4> labels;
  int interior;  // the single vertex off the boundary
};
struct AppliedR6 {
  std::array<int, 5> ring;
  std::array<int, 4> outside;
  VertexMap map;  // composed: parent -> child; ring[0..3] removed
  ValidPair child;
};

AppliedR1 apply_r1(const ValidPair& p, const R1Hit& h);
AppliedR2 apply_r2(const ValidPair& p, const R2Hit& h);
AppliedR3 apply_r3(const ValidPair& p, const R3Hit& h);
AppliedR4 apply_r4(const ValidPair& p, const R4Hit& h);
std::variant<AppliedR5, AppliedR5t> apply_r5(const ValidPair& p, const R5Hit& h);
AppliedR6 apply_r6(const ValidPair& p, const R6Hit& h);

// ---- lifts: child coloring(s) -> parent coloring ----

Coloring lift_r1(const ValidPair& p, const AppliedR1& a, const Coloring& child);
BoundaryColoring inside_boundary_r2(const AppliedR2& a, const Coloring& psi_outside);
Coloring lift_r2(const ValidPair& p, const AppliedR2& a, const Coloring& psi_outside,
                 const Coloring& psi_inside);
Coloring lift_r3(const ValidPair& p, const AppliedR3& a, const Coloring& child);
BoundaryColoring inside_boundary_r4(const AppliedR4& a, const Coloring& psi_outside);
Coloring lift_r4(const ValidPair& p, const AppliedR4& a, const Coloring& psi_outside,
                 const Coloring& psi_inside);
Coloring lift_r5(const ValidPair& p, const AppliedR5& a, const Coloring& child);
Coloring lift_r5t(const ValidPair& p, const AppliedR5t& a);
Coloring lift_r6(const ValidPair& p, const AppliedR6& a, const Coloring& child);

}  // namespace grotzsch
