#include "grotzsch/validity.hpp"

#include <algorithm>

namespace grotzsch {

bool Coloring::total() const {
  for (int x : c)
    if (x < 1 || x > 3) return false;
  return true;
}

BoundaryColoring::BoundaryColoring(const std::vector<int>& seq,
                                   const std::vector<int>& cols) {
  if (seq.size() != cols.size()) fail(Err::Internal, "boundary size mismatch");
  cycle = CycleRef::canonical(seq);
  colors.resize(seq.size());
  for (size_t i = 0; i < seq.size(); i++) {
    auto it = std::find(cycle.verts.begin(), cycle.verts.end(), seq[i]);
    colors[it - cycle.verts.begin()] = cols[i];
  }
}

int BoundaryColoring::color_of(int v) const {
  for (size_t i = 0; i < cycle.verts.size(); i++)
    if (cycle.verts[i] == v) return colors[i];
  return -1;
}

bool BoundaryColoring::proper() const {
  int m = cycle.size();
  for (int i = 0; i < m; i++) {
    if (colors[i] < 1 || colors[i] > 3) return false;
    if (colors[i] == colors[(i + 1) % m]) return false;
  }
  return true;
}

bool is_proper(const RotationGraph& g, const Coloring& col) {
  return !first_improper_edge(g, col).has_value();
}

std::optional<std::pair<int, int>> first_improper_edge(const RotationGraph& g,
                                                       const Coloring& col) {
  for (int v = 0; v < g.vertex_count(); v++)
    for (int u : g.rotation(v))
      if (u > v && col[v] != 0 && col[v] == col[u]) return std::make_pair(v, u);
  return std::nullopt;
}

bool is_valid_boundary(const BoundaryColoring& b) {
  if (!b.proper()) fail(Err::NotProper, "boundary coloring is not proper");
  int m = b.cycle.size();
  if (m <= 5) return true;
  if (m == 6) {
    for (int i = 0; i < 3; i++)
      if (b.colors[i] != b.colors[i + 3]) return true;
    return false;
  }
  fail(Err::Internal, "boundary cycle longer than 6");
}

CycleRef outer_cycle(const RotationGraph& g) {
  const FaceWalk& f = g.outer_face();
  if (!f.is_simple_cycle())
    fail(Err::BoundaryNotOuterCycle, "outer face walk is not a simple cycle");
  return CycleRef::canonical(f.vertices());
}

PairCheck check_valid_pair(const RotationGraph& g, const BoundaryColoring& b) {
  auto bad = [](std::string r) { return PairCheck{false, std::move(r)}; };
  if (auto t = g.find_triangle())
    return bad("triangle " + std::to_string((*t)[0]) + " " + std::to_string((*t)[1]) +
               " " + std::to_string((*t)[2]));
  const FaceWalk& f = g.outer_face();
  if (!f.is_simple_cycle()) return bad("outer face walk is not a simple cycle");
  CycleRef c = CycleRef::canonical(f.vertices());
  if (c.size() < 4 || c.size() > 6)
    return bad("outer cycle length " + std::to_string(c.size()));
  if (!g.is_induced(c)) return bad("outer cycle has a chord");
  if (!(c == b.cycle)) return bad("boundary coloring does not match the outer cycle");
  if (!b.proper()) return bad("boundary coloring is not proper");
  if (!is_valid_boundary(b))
    return bad("6-cycle boundary coloring with all opposite pairs equal");
  return PairCheck{true, ""};
}

ValidPair make_valid_pair(RotationGraph g, BoundaryColoring b) {
  PairCheck pc = check_valid_pair(g, b);
  if (!pc.ok) fail(Err::Internal, "not a valid pair: " + pc.reason);
  return ValidPair{std::move(g), std::move(b)};
}

bool pair_less(int v1, int e1, int v2, int e2) {
  if (v1 != v2) return v1 < v2;
  return e1 > e2;
}

bool pair_less(const ValidPair& a, const ValidPair& b) {
  return pair_less(a.graph.vertex_count(), a.graph.edge_count(),
                   b.graph.vertex_count(), b.graph.edge_count());
}

}  // namespace grotzsch
