#pragma once

#include <array>
#include <optional>
#include <vector>

#include "grotzsch/error.hpp"

namespace grotzsch {

// Half-edge of an embedded graph. Rotations are clockwise; the face successor
// of (u,v) is (v, w) where w follows u in the rotation of v.
struct Dart {
  int tail = -1;
  int head = -1;

  Dart() = default;
  Dart(int t, int h) : tail(t), head(h) {}
  Dart reversed() const { return Dart(head, tail); }

  bool operator==(const Dart& o) const { return tail == o.tail && head == o.head; }
  bool operator!=(const Dart& o) const { return !(*this == o); }
  bool operator<(const Dart& o) const {
    return tail != o.tail ? tail < o.tail : head < o.head;
  }
};

// Cycle as a vertex sequence, stored canonically: smallest vertex first,
// second vertex smaller than the last (fixes rotation and direction).
struct CycleRef {
  std::vector<int> verts;

  static CycleRef canonical(std::vector<int> seq);

  int size() const { return (int)verts.size(); }
  bool contains(int v) const;
  // darts of the cycle in stored direction
  std::vector<Dart> darts() const;

  bool operator==(const CycleRef& o) const { return verts == o.verts; }
  bool operator!=(const CycleRef& o) const { return !(*this == o); }
  bool operator<(const CycleRef& o) const {
    if (verts.size() != o.verts.size()) return verts.size() < o.verts.size();
    return verts < o.verts;
  }
};

// Closed orbit of the face successor map, starting at its smallest dart.
struct FaceWalk {
  std::vector<Dart> darts;

  int length() const { return (int)darts.size(); }
  std::vector<int> vertices() const;           // tails in walk order
  std::vector<int> distinct_vertices() const;  // sorted, deduplicated
  bool is_simple_cycle() const;
  bool touches(int v) const;
};

// Immutable embedded multigraph-free graph: dense vertex ids, clockwise
// rotations, a designated outer dart. Faces are traced eagerly at build time
// and the sphere condition (per-component Euler formula) is enforced.
class RotationGraph {
 public:
  static RotationGraph build(std::vector<std::vector<int>> rotations, Dart outer);

  int vertex_count() const { return (int)rot_.size(); }
  int edge_count() const { return edges_; }
  int degree(int v) const { return (int)rot_[v].size(); }
  const std::vector<int>& rotation(int v) const { return rot_[v]; }
  bool adjacent(int u, int v) const;
  int neighbor_index(int v, int nb) const;  // position of nb in rotation(v), -1 if absent
  int cyclic_succ(int v, int nb) const;
  int cyclic_pred(int v, int nb) const;

  Dart outer_dart() const { return outer_; }
  RotationGraph with_outer(Dart d) const;  // re-root, O(1)

  Dart face_next(Dart d) const;
  const std::vector<FaceWalk>& faces() const { return faces_; }
  int face_index_of(Dart d) const;
  int outer_face_index() const { return outer_face_; }
  const FaceWalk& outer_face() const { return faces_[outer_face_]; }

  bool contains_triangle() const { return find_triangle().has_value(); }
  std::optional<std::array<int, 3>> find_triangle() const;
  bool is_connected() const;
  std::vector<int> component_ids() const;  // per vertex

  // cycle must be a cycle of the graph; true iff its darts form one face orbit
  bool is_facial(const CycleRef& k) const;
  // dart of k whose orbit equals k, if any
  std::optional<Dart> facial_dart(const CycleRef& k) const;
  bool is_induced(const CycleRef& k) const;
  bool is_cycle_of(const CycleRef& k) const;

 private:
  RotationGraph() = default;
  void init();

  std::vector<std::vector<int>> rot_;
  std::vector<std::vector<int>> pos_of_slot_face_;  // face id per dart slot
  Dart outer_;
  int edges_ = 0;
  int outer_face_ = -1;
  std::vector<FaceWalk> faces_;
};

// All cycles of length in [3, max_len], canonical, sorted by (length, verts).
std::vector<CycleRef> find_short_cycles(const RotationGraph& g, int max_len);

struct VertexMap {
  std::vector<int> old_to_new;  // -1 for removed vertices

  int map(int v) const { return old_to_new[v]; }
  int size() const { return (int)old_to_new.size(); }
};

struct SurgeryResult {
  RotationGraph graph;
  VertexMap vmap;
};

// Remove vertices in s (ids compacted). The outer dart must survive.
SurgeryResult delete_vertices(const RotationGraph& g, const std::vector<int>& s);

// Insert edge u-w inside the face holding both given corners. The corner of a
// vertex is named by the rotation neighbor it follows: the new edge lands
// between after_u and its successor in rotation(u).
RotationGraph add_edge_at_corners(const RotationGraph& g, int u, int after_u, int w,
                                  int after_w);
// Same, picking the first corner of u and of w on face walk f.
RotationGraph add_edge_in_face(const RotationGraph& g, int u, int w, const FaceWalk& f);

// Merge non-adjacent u and w across a shared face into one vertex (keeps id
// slot of u; ids compacted). Strict: common neighbors are an error.
SurgeryResult identify_in_face(const RotationGraph& g, int u, int w, const FaceWalk& f);
// Corner-precise variant; merge_bigons collapses parallel edges that arise as
// empty bigons (cyclically adjacent duplicates), as reductions require.
SurgeryResult identify_at_corners(const RotationGraph& g, int u, int after_u, int w,
                                  int after_w, bool merge_bigons);

struct SplitResult {
  RotationGraph outside;  // closed disk on the outer-face side of k, outer dart kept
  VertexMap out_map;
  RotationGraph inside;  // closed disk on the other side, k becomes the outer face
  VertexMap in_map;
};

// Cut the sphere along a non-facial cycle k. Components not containing k go
// to the outside part.
SplitResult split_at_cycle(const RotationGraph& g, const CycleRef& k);

}  // namespace grotzsch
