#include "grotzsch/discharging.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace grotzsch {

long long ChargeLedger::total_thirds() const {
  return std::accumulate(vertex_thirds.begin(), vertex_thirds.end(), 0LL) +
         std::accumulate(face_thirds.begin(), face_thirds.end(), 0LL);
}

ChargeLedger initial_charges(const RotationGraph& g) {
  ChargeLedger l;
  l.vertex_thirds.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); v++)
    l.vertex_thirds[v] = 3 * (g.degree(v) - 4);
  l.face_thirds.resize(g.faces().size());
  for (size_t f = 0; f < g.faces().size(); f++)
    l.face_thirds[f] = 3 * (g.faces()[f].length() - 4);
  return l;
}

std::vector<int> tied_faces(const RotationGraph& g, const CycleRef& outer, int z) {
  std::vector<int> out;
  if (!outer.contains(z)) return out;
  for (int f = 0; f < (int)g.faces().size(); f++) {
    if (f == g.outer_face_index()) continue;
    const FaceWalk& w = g.faces()[f];
    if (w.length() != 5 || w.touches(z)) continue;
    bool tied = false;
    for (int u : g.rotation(z))
      if (w.touches(u) && !outer.contains(u) && g.degree(u) == 3) tied = true;
    if (tied) out.push_back(f);
  }
  return out;
}

ChargeLedger redistribute(const RotationGraph& g, const CycleRef& outer) {
  ChargeLedger l = initial_charges(g);
  for (int f = 0; f < (int)g.faces().size(); f++) {
    if (f == g.outer_face_index()) continue;
    for (int v : g.faces()[f].distinct_vertices()) {
      bool recipient =
          g.degree(v) == 2 || (g.degree(v) == 3 && !outer.contains(v));
      if (recipient) {
        l.face_thirds[f] -= 1;
        l.vertex_thirds[v] += 1;
      }
    }
  }
  for (int z : outer.verts)
    for (int f : tied_faces(g, outer, z)) {
      l.vertex_thirds[z] -= 1;
      l.face_thirds[f] += 1;
    }
  return l;
}

namespace {

std::string thirds(long long t) { return std::to_string(t) + "/3"; }

}  // namespace

AuditReport audit(const RotationGraph& g, const CycleRef& outer) {
  AuditReport r;
  r.initial = initial_charges(g);
  r.final_ = redistribute(g, outer);

  std::ostringstream os;
  for (int v = 0; v < g.vertex_count(); v++) {
    os << "V " << v << " init " << thirds(r.initial.vertex_thirds[v]) << " final "
       << thirds(r.final_.vertex_thirds[v]) << "\n";
    if (!outer.contains(v) && r.final_.vertex_thirds[v] < 0)
      r.negative_interior_vertices.push_back(v);
  }
  for (int f = 0; f < (int)g.faces().size(); f++) {
    os << "F " << f << " len " << g.faces()[f].length() << " init "
       << thirds(r.initial.face_thirds[f]) << " final "
       << thirds(r.final_.face_thirds[f]) << "\n";
    if (f != g.outer_face_index() && r.final_.face_thirds[f] < 0)
      r.negative_inner_faces.push_back(f);
  }

  for (int v : r.negative_interior_vertices)
    os << "NEGV " << v << " deg " << g.degree(v) << " final "
       << thirds(r.final_.vertex_thirds[v])
       << " expect R1 (interior vertex of degree <= 2)\n";
  for (int f : r.negative_inner_faces) {
    const FaceWalk& w = g.faces()[f];
    int len = w.length();
    os << "NEGF " << f << " len " << len << " final "
       << thirds(r.final_.face_thirds[f]);
    if (len == 4) {
      os << " expect R5 (4-cycle distinct from the boundary)";
    } else if (len == 5) {
      int senders = 0;
      for (int v : w.distinct_vertices())
        if (g.degree(v) == 3 && !outer.contains(v)) senders++;
      os << " senders " << senders << " expect R6 (pentagon with " << senders
         << " interior degree-3 vertices, too few ties)";
    } else {
      os << " unexpected (length >= 6 faces never go negative)";
    }
    os << "\n";
  }

  // bounds the proof promises for a reduction-free pair: inner faces at least
  // 2|f|/3 - 4, boundary vertices at least -5/3 (degree 2) or 2d/3 - 10/3
  long long boundary_sum = 0;
  for (int z : outer.verts) boundary_sum += r.final_.vertex_thirds[z];
  long long boundary_bound = 0;
  for (int z : outer.verts)
    boundary_bound += g.degree(z) == 2 ? -5 : 2 * g.degree(z) - 10;
  os << "CBOUND sum " << thirds(boundary_sum) << " proof_min "
     << thirds(boundary_bound) << "\n";
  os << "OUTER F " << g.outer_face_index() << " len " << g.outer_face().length()
     << " final " << thirds(r.final_.face_thirds[g.outer_face_index()]) << "\n";
  os << "TOTAL " << thirds(r.final_.total_thirds()) << "\n";
  r.text = os.str();
  return r;
}

}  // namespace grotzsch
