#include "grotzsch/reductions.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace grotzsch {

const char* kind_tag(ReductionKind k) {
  switch (k) {
    case ReductionKind::R1_InteriorLowDegree: return "R1";
    case ReductionKind::R2_SeparatingShortCycle: return "R2";
    case ReductionKind::R3_CutRepair: return "R3";
    case ReductionKind::R4_InducedSixCycle: return "R4";
    case ReductionKind::R5_FourCycle: return "R5";
    case ReductionKind::R5t_Terminal: return "R5t";
    case ReductionKind::R6_Pentagon: return "R6";
  }
  return "?";
}

namespace {

ValidPair checked_child(RotationGraph g, BoundaryColoring b, const char* who) {
  PairCheck pc = check_valid_pair(g, b);
  if (!pc.ok)
    fail(Err::ProofOrderViolation,
         std::string(who) + ": child pair invalid: " + pc.reason);
  return ValidPair{std::move(g), std::move(b)};
}

BoundaryColoring mapped_boundary(const BoundaryColoring& b, const VertexMap& m) {
  std::vector<int> seq;
  for (int v : b.cycle.verts) {
    if (m.map(v) < 0) fail(Err::Internal, "boundary vertex dropped by surgery");
    seq.push_back(m.map(v));
  }
  return BoundaryColoring(seq, b.colors);
}

VertexMap identity_map(int n) {
  VertexMap m;
  m.old_to_new.resize(n);
  std::iota(m.old_to_new.begin(), m.old_to_new.end(), 0);
  return m;
}

}  // namespace

std::optional<R1Hit> detect_r1(const ValidPair& p) {
  for (int v = 0; v < p.graph.vertex_count(); v++)
    if (p.graph.degree(v) <= 2 && !p.boundary.cycle.contains(v)) return R1Hit{v};
  return std::nullopt;
}

AppliedR1 apply_r1(const ValidPair& p, const R1Hit& h) {
  if (p.boundary.cycle.contains(h.v) || p.graph.degree(h.v) > 2)
    fail(Err::Internal, "R1 target must be an interior vertex of degree <= 2");
  std::vector<int> nbr = p.graph.rotation(h.v);
  SurgeryResult sr = delete_vertices(p.graph, {h.v});
  ValidPair child =
      checked_child(std::move(sr.graph), mapped_boundary(p.boundary, sr.vmap), "R1");
  return AppliedR1{h.v, std::move(nbr), std::move(sr.vmap), std::move(child)};
}

Coloring lift_r1(const ValidPair& p, const AppliedR1& a, const Coloring& child) {
  Coloring out(p.graph.vertex_count());
  for (int v = 0; v < p.graph.vertex_count(); v++)
    if (a.map.map(v) >= 0) out[v] = child[a.map.map(v)];
  for (int c = 1; c <= 3 && out[a.v] == 0; c++) {
    bool used = false;
    for (int nb : a.neighbors) used = used || out[nb] == c;
    if (!used) out[a.v] = c;
  }
  return out;
}

std::optional<R2Hit> detect_r2(const ValidPair& p) {
  for (const CycleRef& k : find_short_cycles(p.graph, 5))
    if (!p.graph.is_facial(k)) return R2Hit{k};
  return std::nullopt;
}

AppliedR2 apply_r2(const ValidPair& p, const R2Hit& h) {
  SplitResult sp = split_at_cycle(p.graph, h.k);
  ValidPair outside = checked_child(std::move(sp.outside),
                                    mapped_boundary(p.boundary, sp.out_map), "R2");
  return AppliedR2{h.k, std::move(outside), std::move(sp.inside),
                   std::move(sp.out_map), std::move(sp.in_map)};
}

BoundaryColoring inside_boundary_r2(const AppliedR2& a, const Coloring& psi_outside) {
  std::vector<int> seq, cols;
  for (int v : a.k.verts) {
    seq.push_back(a.in_map.map(v));
    cols.push_back(psi_outside[a.out_map.map(v)]);
  }
  return BoundaryColoring(seq, cols);
}

Coloring lift_r2(const ValidPair& p, const AppliedR2& a, const Coloring& psi_outside,
                 const Coloring& psi_inside) {
  Coloring out(p.graph.vertex_count());
  for (int v = 0; v < p.graph.vertex_count(); v++) {
    if (a.out_map.map(v) >= 0)
      out[v] = psi_outside[a.out_map.map(v)];
    else if (a.in_map.map(v) >= 0)
      out[v] = psi_inside[a.in_map.map(v)];
  }
  return out;
}

std::optional<R3Hit> detect_r3(const ValidPair& p) {
  const RotationGraph& g = p.graph;
  int n = g.vertex_count();
  std::vector<char> on_c(n, 0);
  for (int v : p.boundary.cycle.verts) on_c[v] = 1;

  std::vector<int> comp = g.component_ids();
  int ccomp = comp[p.boundary.cycle.verts[0]];
  // a loose component holding edges (isolated vertices are left to R1)
  for (int v = 0; v < n; v++) {
    if (comp[v] == ccomp || g.degree(v) == 0) continue;
    std::vector<int> side;
    for (int u = 0; u < n; u++)
      if (comp[u] == comp[v]) side.push_back(u);
    return R3Hit{std::nullopt, std::move(side)};
  }

  // articulation vertices of the boundary's component whose removal detaches
  // a boundary-free subtree
  int root = p.boundary.cycle.verts[0];
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), size(n, 1), order;
  std::vector<char> has_c(n, 0);
  std::vector<std::pair<int, int>> st{{root, 0}};
  int timer = 0;
  disc[root] = low[root] = timer++;
  order.push_back(root);
  while (!st.empty()) {
    int v = st.back().first;
    if (st.back().second < g.degree(v)) {
      int u = g.rotation(v)[st.back().second++];
      if (disc[u] < 0) {
        parent[u] = v;
        disc[u] = low[u] = timer++;
        order.push_back(u);
        st.push_back({u, 0});
      } else if (u != parent[v]) {
        low[v] = std::min(low[v], disc[u]);
      }
    } else {
      st.pop_back();
      if (!st.empty()) {
        int pv = st.back().first;
        low[pv] = std::min(low[pv], low[v]);
      }
    }
  }
  for (int i = (int)order.size() - 1; i >= 0; i--) {
    int v = order[i];
    has_c[v] |= on_c[v];
    if (parent[v] >= 0) {
      size[parent[v]] += size[v];
      has_c[parent[v]] |= has_c[v];
    }
  }
  int best_cut = -1, best_top = -1;
  for (int v : order) {
    if (v == root) continue;
    int c = parent[v];
    bool detaches = c == root || low[v] >= disc[c];
    if (detaches && !has_c[v] &&
        (best_cut < 0 || c < best_cut || (c == best_cut && disc[v] < disc[best_top]))) {
      best_cut = c;
      best_top = v;
    }
  }
  if (best_cut < 0) return std::nullopt;
  std::vector<int> side{best_cut};
  for (int u = 0; u < n; u++)
    if (disc[u] >= disc[best_top] && disc[u] < disc[best_top] + size[best_top])
      side.push_back(u);
  std::sort(side.begin(), side.end());
  return R3Hit{best_cut, std::move(side)};
}

AppliedR3 apply_r3(const ValidPair& p, const R3Hit& h) {
  const RotationGraph& g = p.graph;
  int n = g.vertex_count();
  std::vector<char> in_h(n, 0), near_cut(n, 0);
  for (int v : h.side) in_h[v] = 1;
  if (h.cut) {
    in_h[*h.cut] = 0;
    near_cut[*h.cut] = 1;
    for (int u : g.rotation(*h.cut)) near_cut[u] = 1;
  }

  int v1 = -1, v2 = -1;
  std::optional<RotationGraph> repaired;
  if (h.cut) {
    // a face showing both shores, with a pick at distance >= 2 from the cut
    // on each; distance >= 2 is what keeps the new edge off any triangle
    for (int f = 0; f < (int)g.faces().size() && v1 < 0; f++) {
      if (f == g.outer_face_index()) continue;
      int a = -1, b = -1;
      for (int u : g.faces()[f].distinct_vertices()) {
        if (near_cut[u]) continue;
        if (in_h[u]) {
          if (b < 0) b = u;
        } else if (a < 0) {
          a = u;
        }
      }
      if (a >= 0 && b >= 0) {
        v1 = a;
        v2 = b;
        repaired = add_edge_in_face(g, v1, v2, g.faces()[f]);
      }
    }
  } else {
    // the loose piece may be re-nested into any face; splice its first face
    // orbit into the first non-outer orbit elsewhere
    int f1 = -1, f2 = -1;
    for (int f = 0; f < (int)g.faces().size(); f++) {
      bool hside = in_h[g.faces()[f].darts[0].tail];
      if (!hside && f != g.outer_face_index() && f1 < 0) f1 = f;
      if (hside && f2 < 0) f2 = f;
    }
    if (f1 >= 0 && f2 >= 0) {
      std::vector<int> f1v = g.faces()[f1].vertices();
      std::vector<int> f2v = g.faces()[f2].vertices();
      v1 = *std::min_element(f1v.begin(), f1v.end());
      v2 = *std::min_element(f2v.begin(), f2v.end());
      int after1 = -1, after2 = -1;
      for (const Dart& d : g.faces()[f1].darts)
        if (d.head == v1 && after1 < 0) after1 = d.tail;
      for (const Dart& d : g.faces()[f2].darts)
        if (d.head == v2 && after2 < 0) after2 = d.tail;
      repaired = add_edge_at_corners(g, v1, after1, v2, after2);
    }
  }
  if (!repaired)
    fail(Err::NoEligibleVertexPair, "no joinable vertex pair across the cut");

  ValidPair child = checked_child(std::move(*repaired), p.boundary, "R3");
  return AppliedR3{v1, v2, std::move(child)};
}

Coloring lift_r3(const ValidPair&, const AppliedR3&, const Coloring& child) {
  return child;
}

std::optional<R4Hit> detect_r4(const ValidPair& p) {
  const RotationGraph& g = p.graph;
  const CycleRef& c = p.boundary.cycle;
  for (const CycleRef& k : find_short_cycles(g, 6)) {
    if (k.size() != 6 || k == c || !g.is_induced(k)) continue;
    // degree is measured in the part drawn outside k, where the chord goes
    std::vector<int> deg_out(g.vertex_count(), -1);
    if (g.is_facial(k)) {
      for (int v : k.verts) deg_out[v] = g.degree(v);
    } else {
      SplitResult sp = split_at_cycle(g, k);
      for (int v : k.verts) deg_out[v] = sp.outside.degree(sp.out_map.map(v));
    }
    int v1 = -1;
    for (int v : k.verts)
      if (!c.contains(v) &&
          (v1 < 0 || deg_out[v] < deg_out[v1] ||
           (deg_out[v] == deg_out[v1] && v < v1)))
        v1 = v;
    if (v1 < 0) continue;
    int pos = (int)(std::find(k.verts.begin(), k.verts.end(), v1) - k.verts.begin());
    int dir = k.verts[(pos + 1) % 6] < k.verts[(pos + 5) % 6] ? 1 : -1;
    std::array<int, 6> lab;
    for (int i = 0; i < 6; i++) lab[i] = k.verts[((pos + dir * i) % 6 + 6) % 6];
    return R4Hit{k, lab};
  }
  return std::nullopt;
}

AppliedR4 apply_r4(const ValidPair& p, const R4Hit& h) {
  const RotationGraph& g = p.graph;
  bool facial = g.is_facial(h.k);

  std::optional<RotationGraph> outg, ing;
  VertexMap out_map, in_map;
  if (facial) {
    outg = g;
    out_map = identity_map(g.vertex_count());
    std::vector<std::vector<int>> rot(6);
    for (int i = 0; i < 6; i++) rot[i] = {(i + 1) % 6, (i + 5) % 6};
    ing = RotationGraph::build(std::move(rot), Dart(0, 1));
    in_map.old_to_new.assign(g.vertex_count(), -1);
    for (int i = 0; i < 6; i++) in_map.old_to_new[h.labels[i]] = i;
  } else {
    SplitResult sp = split_at_cycle(g, h.k);
    outg = std::move(sp.outside);
    ing = std::move(sp.inside);
    out_map = std::move(sp.out_map);
    in_map = std::move(sp.in_map);
  }

  // the chord goes into the face of the outside part bounded by the cycle
  std::vector<int> kin;
  for (int v : h.k.verts) kin.push_back(out_map.map(v));
  std::optional<Dart> fd = outg->facial_dart(CycleRef::canonical(kin));
  if (!fd)
    fail(Err::ProofOrderViolation, "R4: cycle is not a face of the outside part");
  try {
    outg = add_edge_in_face(*outg, out_map.map(h.labels[0]), out_map.map(h.labels[3]),
                            outg->faces()[outg->face_index_of(*fd)]);
  } catch (const Error& e) {
    fail(Err::ProofOrderViolation, std::string("R4: chord: ") + e.what());
  }

  ValidPair outside = checked_child(std::move(*outg),
                                    mapped_boundary(p.boundary, out_map), "R4");
  return AppliedR4{h.labels, facial,         std::move(outside),
                   std::move(*ing), std::move(out_map), std::move(in_map)};
}

BoundaryColoring inside_boundary_r4(const AppliedR4& a, const Coloring& psi_outside) {
  std::vector<int> seq, cols;
  for (int v : a.labels) {
    seq.push_back(a.in_map.map(v));
    cols.push_back(psi_outside[a.out_map.map(v)]);
  }
  return BoundaryColoring(seq, cols);
}

Coloring lift_r4(const ValidPair& p, const AppliedR4& a, const Coloring& psi_outside,
                 const Coloring& psi_inside) {
  Coloring out(p.graph.vertex_count());
  for (int v = 0; v < p.graph.vertex_count(); v++) {
    if (a.out_map.map(v) >= 0)
      out[v] = psi_outside[a.out_map.map(v)];
    else if (a.in_map.map(v) >= 0)
      out[v] = psi_inside[a.in_map.map(v)];
  }
  return out;
}

std::optional<R5Hit> detect_r5(const ValidPair& p) {
  const CycleRef& c = p.boundary.cycle;
  for (const CycleRef& k : find_short_cycles(p.graph, 4)) {
    if (k.size() != 4 || k == c) continue;
    int v3 = -1;
    for (int v : k.verts)
      if (!c.contains(v) && (v3 < 0 || v < v3)) v3 = v;
    if (v3 < 0) continue;
    int pos = (int)(std::find(k.verts.begin(), k.verts.end(), v3) - k.verts.begin());
    int v1 = k.verts[(pos + 2) % 4];
    int s1 = k.verts[(pos + 1) % 4], s2 = k.verts[(pos + 3) % 4];
    return R5Hit{k, {v1, std::min(s1, s2), v3, std::max(s1, s2)}};
  }
  return std::nullopt;
}

namespace {

AppliedR5t verified_terminal(const ValidPair& p, const R5Hit& h) {
  const RotationGraph& g = p.graph;
  const CycleRef& c = p.boundary.cycle;
  int hub = h.labels[2];
  if (c.size() != 6 || g.vertex_count() != 7)
    fail(Err::ProofOrderViolation, "R5: terminal shape needs a 6-boundary and 7 vertices");
  for (int v = 0; v < g.vertex_count(); v++)
    if (v != hub && !c.contains(v))
      fail(Err::ProofOrderViolation, "R5: terminal shape has a second interior vertex");
  if (g.degree(hub) != 3)
    fail(Err::ProofOrderViolation, "R5: terminal hub degree is not 3");
  std::vector<int> pos;
  for (int u : g.rotation(hub)) {
    for (int i = 0; i < 6; i++)
      if (c.verts[i] == u) pos.push_back(i);
  }
  std::sort(pos.begin(), pos.end());
  if (pos.size() != 3 || pos[1] - pos[0] != 2 || pos[2] - pos[1] != 2)
    fail(Err::ProofOrderViolation, "R5: terminal hub does not alternate on the boundary");
  return AppliedR5t{h.labels, hub};
}

}  // namespace

std::variant<AppliedR5, AppliedR5t> apply_r5(const ValidPair& p, const R5Hit& h) {
  const RotationGraph& g = p.graph;
  const std::array<int, 4>& l = h.labels;
  std::optional<Dart> fd = g.facial_dart(h.k);
  if (!fd) fail(Err::ProofOrderViolation, "R5: 4-cycle does not bound a face");
  int f = g.face_index_of(*fd);
  int after1 = -1, after3 = -1;
  for (const Dart& d : g.faces()[f].darts) {
    if (d.head == l[0]) after1 = d.tail;
    if (d.head == l[2]) after3 = d.tail;
  }

  std::optional<SurgeryResult> sr;
  try {
    sr = identify_at_corners(g, l[0], after1, l[2], after3, true);
  } catch (const Error& e) {
    fail(Err::ProofOrderViolation, std::string("R5: identification: ") + e.what());
  }
  if (sr->graph.contains_triangle())
    fail(Err::ProofOrderViolation, "R5: identification created a triangle");

  // a new chord of the boundary is the terminal wheel shape, nothing else
  // survives the triangle check
  CycleRef outer = outer_cycle(sr->graph);
  if (!sr->graph.is_induced(outer)) return verified_terminal(p, h);

  sr->vmap.old_to_new[l[2]] = sr->vmap.map(l[0]);
  ValidPair child =
      checked_child(std::move(sr->graph), mapped_boundary(p.boundary, sr->vmap), "R5");
  return AppliedR5{h.labels, std::move(sr->vmap), std::move(child)};
}

Coloring lift_r5(const ValidPair& p, const AppliedR5& a, const Coloring& child) {
  Coloring out(p.graph.vertex_count());
  for (int v = 0; v < p.graph.vertex_count(); v++) out[v] = child[a.map.map(v)];
  return out;
}

Coloring lift_r5t(const ValidPair& p, const AppliedR5t& a) {
  const CycleRef& c = p.boundary.cycle;
  Coloring out(p.graph.vertex_count());
  for (int i = 0; i < 6; i++) out[c.verts[i]] = p.boundary.colors[i];
  for (int i = 0; i < 3; i++) {
    if (p.boundary.colors[i] == p.boundary.colors[i + 3]) continue;
    bool near = p.graph.adjacent(a.interior, c.verts[i]);
    bool far = p.graph.adjacent(a.interior, c.verts[i + 3]);
    if (near == far) continue;
    out[a.interior] = near ? p.boundary.colors[i + 3] : p.boundary.colors[i];
    return out;
  }
  fail(Err::Internal, "terminal lift found no usable opposite pair");
}

std::optional<R6Hit> detect_r6(const ValidPair& p) {
  const RotationGraph& g = p.graph;
  const CycleRef& c = p.boundary.cycle;
  for (int f = 0; f < (int)g.faces().size(); f++) {
    if (f == g.outer_face_index()) continue;
    const FaceWalk& w = g.faces()[f];
    if (w.length() != 5 || !w.is_simple_cycle()) continue;
    std::vector<int> ws = w.vertices();
    for (int r = 0; r < 5; r++)
      for (int dir : {1, -1}) {
        std::array<int, 5> v;
        for (int i = 0; i < 5; i++) v[i] = ws[((r + dir * i) % 5 + 5) % 5];
        std::array<int, 4> x{};
        bool ok = true;
        for (int i = 0; i < 4 && ok; i++) {
          if (c.contains(v[i]) || g.degree(v[i]) != 3) {
            ok = false;
            break;
          }
          int xi = -1;
          for (int nb : g.rotation(v[i]))
            if (nb != v[(i + 1) % 5] && nb != v[(i + 4) % 5]) xi = nb;
          if (xi < 0 || c.contains(xi))
            ok = false;
          else
            x[i] = xi;
        }
        if (ok) return R6Hit{v, x};
      }
  }
  return std::nullopt;
}

AppliedR6 apply_r6(const ValidPair& p, const R6Hit& h) {
  const RotationGraph& g = p.graph;
  const std::array<int, 5>& v = h.ring;
  const std::array<int, 4>& x = h.outside;
  if (std::set<int>(x.begin(), x.end()).size() != 4)
    fail(Err::ProofOrderViolation, "R6: outside neighbors are not distinct");

  // remember each corner before the ring goes away: the gap left in the
  // rotation of x[i] opens just past the predecessor of v[i]
  std::array<int, 4> anchor;
  for (int i = 0; i < 4; i++) anchor[i] = g.cyclic_pred(x[i], v[i]);

  SurgeryResult del = delete_vertices(g, {v[0], v[1], v[2], v[3]});
  auto dm = [&](int q) { return del.vmap.map(q); };

  RotationGraph g1 = std::move(del.graph);
  if (!g1.adjacent(dm(x[0]), dm(x[3]))) {
    try {
      g1 = add_edge_at_corners(g1, dm(x[0]), dm(anchor[0]), dm(x[3]), dm(anchor[3]));
    } catch (const Error& e) {
      fail(Err::ProofOrderViolation, std::string("R6: edge: ") + e.what());
    }
  }

  std::optional<SurgeryResult> idr;
  try {
    idr = identify_at_corners(g1, dm(x[1]), dm(anchor[1]), dm(x[2]), dm(anchor[2]), true);
  } catch (const Error& e) {
    fail(Err::ProofOrderViolation, std::string("R6: identification: ") + e.what());
  }

  VertexMap total;
  total.old_to_new.assign(g.vertex_count(), -1);
  for (int q = 0; q < g.vertex_count(); q++)
    if (dm(q) >= 0) total.old_to_new[q] = idr->vmap.map(dm(q));
  total.old_to_new[x[2]] = total.old_to_new[x[1]];

  ValidPair child =
      checked_child(std::move(idr->graph), mapped_boundary(p.boundary, total), "R6");
  return AppliedR6{h.ring, h.outside, std::move(total), std::move(child)};
}

Coloring lift_r6(const ValidPair& p, const AppliedR6& a, const Coloring& child) {
  Coloring out(p.graph.vertex_count());
  for (int q = 0; q < p.graph.vertex_count(); q++)
    if (a.map.map(q) >= 0) out[q] = child[a.map.map(q)];

  const std::array<int, 5>& v = a.ring;
  const std::array<int, 4>& x = a.outside;
  // smallest-color search over the four removed vertices; the new edge keeps
  // out[x[0]] != out[x[3]] and the identification keeps out[x[1]] == out[x[2]],
  // which together make this always solvable
  for (int c1 = 1; c1 <= 3; c1++) {
    if (c1 == out[x[0]] || c1 == out[v[4]]) continue;
    for (int c4 = 1; c4 <= 3; c4++) {
      if (c4 == out[x[3]] || c4 == out[v[4]]) continue;
      for (int c2 = 1; c2 <= 3; c2++) {
        if (c2 == c1 || c2 == out[x[1]]) continue;
        for (int c3 = 1; c3 <= 3; c3++) {
          if (c3 == c2 || c3 == c4 || c3 == out[x[2]]) continue;
          out[v[0]] = c1;
          out[v[1]] = c2;
          out[v[2]] = c3;
          out[v[3]] = c4;
          return out;
        }
      }
    }
  }
  fail(Err::Internal, "ring recoloring impossible");
}

}  // namespace grotzsch
