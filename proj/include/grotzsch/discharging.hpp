#pragma once

#include <string>
#include <vector>

#include "grotzsch/validity.hpp"

namespace grotzsch {

// all charges in thirds: a stored value t means t/3
struct ChargeLedger {
  std::vector<int> vertex_thirds;
  std::vector<int> face_thirds;  // indexed like RotationGraph::faces()

  long long total_thirds() const;
};

// deg(v) - 4 and |f| - 4, in thirds; sums to -24 on a connected sphere graph
ChargeLedger initial_charges(const RotationGraph& g);

// 5-faces tied to the boundary vertex z: z off the face but adjacent to one of
// its interior degree-3 vertices
std::vector<int> tied_faces(const RotationGraph& g, const CycleRef& outer, int z);

// every non-outer face pays 1/3 to each incident vertex of degree 2, or of
// degree 3 off the boundary; every boundary vertex pays 1/3 to each tied 5-face
ChargeLedger redistribute(const RotationGraph& g, const CycleRef& outer);

struct AuditReport {
  ChargeLedger initial;
  ChargeLedger final_;
  std::string text;
  std::vector<int> negative_interior_vertices;
  std::vector<int> negative_inner_faces;
};

AuditReport audit(const RotationGraph& g, const CycleRef& outer);

}  // namespace grotzsch
