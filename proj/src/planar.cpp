#include "grotzsch/planar.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace grotzsch {

const char* err_name(Err e) {
  switch (e) {
    case Err::Loop: return "Loop";
    case Err::MultiEdge: return "MultiEdge";
    case Err::Asymmetric: return "Asymmetric";
    case Err::NotSphere: return "NotSphere";
    case Err::BadOuterDart: return "BadOuterDart";
    case Err::NotOnFace: return "NotOnFace";
    case Err::AlreadyAdjacent: return "AlreadyAdjacent";
    case Err::WouldCreateMultiEdge: return "WouldCreateMultiEdge";
    case Err::FacialCycle: return "FacialCycle";
    case Err::NotProper: return "NotProper";
    case Err::NotInduced: return "NotInduced";
    case Err::TriangleFound: return "TriangleFound";
    case Err::BoundaryNotOuterCycle: return "BoundaryNotOuterCycle";
    case Err::Syntax: return "Syntax";
    case Err::SpecOutOfRange: return "SpecOutOfRange";
    case Err::NoEligibleVertexPair: return "NoEligibleVertexPair";
    case Err::ProofOrderViolation: return "ProofOrderViolation";
    case Err::NoReductionFound: return "NoReductionFound";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

CycleRef CycleRef::canonical(std::vector<int> seq) {
  if (seq.size() < 3) fail(Err::Internal, "cycle shorter than 3");
  auto mn = std::min_element(seq.begin(), seq.end());
  std::rotate(seq.begin(), mn, seq.end());
  if (seq[1] > seq.back()) std::reverse(seq.begin() + 1, seq.end());
  CycleRef k;
  k.verts = std::move(seq);
  return k;
}

bool CycleRef::contains(int v) const {
  return std::find(verts.begin(), verts.end(), v) != verts.end();
}

std::vector<Dart> CycleRef::darts() const {
  std::vector<Dart> d;
  for (size_t i = 0; i < verts.size(); i++)
    d.emplace_back(verts[i], verts[(i + 1) % verts.size()]);
  return d;
}

std::vector<int> FaceWalk::vertices() const {
  std::vector<int> v;
  for (const Dart& d : darts) v.push_back(d.tail);
  return v;
}

std::vector<int> FaceWalk::distinct_vertices() const {
  std::vector<int> v = vertices();
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool FaceWalk::is_simple_cycle() const {
  return (int)distinct_vertices().size() == length() && length() >= 3;
}

bool FaceWalk::touches(int v) const {
  for (const Dart& d : darts)
    if (d.tail == v) return true;
  return false;
}

RotationGraph RotationGraph::build(std::vector<std::vector<int>> rotations, Dart outer) {
  RotationGraph g;
  g.rot_ = std::move(rotations);
  g.outer_ = outer;
  g.init();
  return g;
}

void RotationGraph::init() {
  int n = (int)rot_.size();
  int dart_total = 0;
  for (int v = 0; v < n; v++) {
    std::vector<int> seen;
    for (int u : rot_[v]) {
      if (u < 0 || u >= n)
        fail(Err::Asymmetric, "neighbor " + std::to_string(u) + " out of range");
      if (u == v) fail(Err::Loop, "vertex " + std::to_string(v));
      seen.push_back(u);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
      fail(Err::MultiEdge, "repeated neighbor at vertex " + std::to_string(v));
    dart_total += (int)rot_[v].size();
  }
  for (int v = 0; v < n; v++)
    for (int u : rot_[v])
      if (neighbor_index(u, v) < 0)
        fail(Err::Asymmetric,
             "(" + std::to_string(v) + "," + std::to_string(u) + ")");
  edges_ = dart_total / 2;

  if (n > 0) {
    if (outer_.tail < 0 || outer_.tail >= n || neighbor_index(outer_.tail, outer_.head) < 0)
      fail(Err::BadOuterDart, "(" + std::to_string(outer_.tail) + "," +
                                  std::to_string(outer_.head) + ")");
  }

  // trace all face orbits; iteration order makes each walk start at its
  // lexicographically smallest dart
  pos_of_slot_face_.assign(n, {});
  for (int v = 0; v < n; v++) pos_of_slot_face_[v].assign(rot_[v].size(), -1);
  faces_.clear();
  for (int u = 0; u < n; u++) {
    std::vector<int> nbrs = rot_[u];
    std::sort(nbrs.begin(), nbrs.end());
    for (int v : nbrs) {
      if (pos_of_slot_face_[u][neighbor_index(u, v)] >= 0) continue;
      int fid = (int)faces_.size();
      FaceWalk w;
      Dart d(u, v);
      do {
        pos_of_slot_face_[d.tail][neighbor_index(d.tail, d.head)] = fid;
        w.darts.push_back(d);
        d = face_next(d);
      } while (!(d == Dart(u, v)));
      faces_.push_back(std::move(w));
    }
  }

  // sphere check: V - E + F = 2 on every component with an edge
  std::vector<int> comp = component_ids();
  int ncomp = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<int> cv(ncomp, 0), ce(ncomp, 0), cf(ncomp, 0);
  for (int v = 0; v < n; v++) {
    cv[comp[v]]++;
    ce[comp[v]] += degree(v);
  }
  for (const FaceWalk& f : faces_) cf[comp[f.darts[0].tail]]++;
  for (int c = 0; c < ncomp; c++) {
    ce[c] /= 2;
    if (ce[c] == 0) continue;  // isolated vertex
    if (cv[c] - ce[c] + cf[c] != 2)
      fail(Err::NotSphere, "component Euler count " +
                               std::to_string(cv[c] - ce[c] + cf[c]));
  }

  outer_face_ = n > 0 ? face_index_of(outer_) : -1;
}

bool RotationGraph::adjacent(int u, int v) const { return neighbor_index(u, v) >= 0; }

int RotationGraph::neighbor_index(int v, int nb) const {
  const std::vector<int>& r = rot_[v];
  for (int i = 0; i < (int)r.size(); i++)
    if (r[i] == nb) return i;
  return -1;
}

int RotationGraph::cyclic_succ(int v, int nb) const {
  int i = neighbor_index(v, nb);
  if (i < 0) fail(Err::Internal, "cyclic_succ of non-neighbor");
  return rot_[v][(i + 1) % rot_[v].size()];
}

int RotationGraph::cyclic_pred(int v, int nb) const {
  int i = neighbor_index(v, nb);
  if (i < 0) fail(Err::Internal, "cyclic_pred of non-neighbor");
  return rot_[v][(i + rot_[v].size() - 1) % rot_[v].size()];
}

RotationGraph RotationGraph::with_outer(Dart d) const {
  if (d.tail < 0 || d.tail >= vertex_count() || neighbor_index(d.tail, d.head) < 0)
    fail(Err::BadOuterDart,
         "(" + std::to_string(d.tail) + "," + std::to_string(d.head) + ")");
  RotationGraph g = *this;
  g.outer_ = d;
  g.outer_face_ = g.face_index_of(d);
  return g;
}

Dart RotationGraph::face_next(Dart d) const {
  return Dart(d.head, cyclic_succ(d.head, d.tail));
}

int RotationGraph::face_index_of(Dart d) const {
  int i = neighbor_index(d.tail, d.head);
  if (i < 0) fail(Err::Internal, "face_index_of non-dart");
  return pos_of_slot_face_[d.tail][i];
}

std::optional<std::array<int, 3>> RotationGraph::find_triangle() const {
  for (int u = 0; u < vertex_count(); u++)
    for (int v : rot_[u]) {
      if (v < u) continue;
      for (int w : rot_[v])
        if (w > v && adjacent(w, u)) return std::array<int, 3>{u, v, w};
    }
  return std::nullopt;
}

std::vector<int> RotationGraph::component_ids() const {
  int n = vertex_count();
  std::vector<int> comp(n, -1);
  int c = 0;
  for (int s = 0; s < n; s++) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : rot_[v])
        if (comp[u] < 0) {
          comp[u] = c;
          stack.push_back(u);
        }
    }
    c++;
  }
  return comp;
}

bool RotationGraph::is_connected() const {
  std::vector<int> comp = component_ids();
  return comp.empty() || *std::max_element(comp.begin(), comp.end()) == 0;
}

bool RotationGraph::is_cycle_of(const CycleRef& k) const {
  for (size_t i = 0; i < k.verts.size(); i++)
    if (!adjacent(k.verts[i], k.verts[(i + 1) % k.verts.size()])) return false;
  std::set<int> s(k.verts.begin(), k.verts.end());
  return s.size() == k.verts.size();
}

std::optional<Dart> RotationGraph::facial_dart(const CycleRef& k) const {
  for (int dir = 0; dir < 2; dir++) {
    std::vector<int> seq = k.verts;
    if (dir == 1) std::reverse(seq.begin() + 1, seq.end());
    Dart d0(seq[0], seq[1]);
    int f = face_index_of(d0);
    if (faces_[f].length() != k.size()) continue;
    bool all = true;
    for (size_t i = 0; i < seq.size() && all; i++)
      all = face_index_of(Dart(seq[i], seq[(i + 1) % seq.size()])) == f;
    if (all) return d0;
  }
  return std::nullopt;
}

bool RotationGraph::is_facial(const CycleRef& k) const {
  return facial_dart(k).has_value();
}

bool RotationGraph::is_induced(const CycleRef& k) const {
  int m = k.size();
  for (int i = 0; i < m; i++)
    for (int j = i + 2; j < m; j++) {
      if (i == 0 && j == m - 1) continue;
      if (adjacent(k.verts[i], k.verts[j])) return false;
    }
  return true;
}

std::vector<CycleRef> find_short_cycles(const RotationGraph& g, int max_len) {
  std::vector<CycleRef> out;
  int n = g.vertex_count();
  std::vector<int> path;
  std::vector<char> used(n, 0);

  // paths start at the cycle's smallest vertex; direction fixed by
  // path[1] < path.back()
  auto dfs = [&](auto&& self, int v, int s) -> void {
    for (int w : g.rotation(v)) {
      if (w == s && (int)path.size() >= 3) {
        if (path[1] < path.back()) {
          CycleRef k;
          k.verts = path;
          out.push_back(std::move(k));
        }
      } else if (w > s && !used[w] && (int)path.size() < max_len) {
        used[w] = 1;
        path.push_back(w);
        self(self, w, s);
        path.pop_back();
        used[w] = 0;
      }
    }
  };
  for (int s = 0; s < n; s++) {
    path = {s};
    used[s] = 1;
    dfs(dfs, s, s);
    used[s] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// rebuild rotations after renaming/removing vertices; idmap[v] < 0 drops v
std::pair<std::vector<std::vector<int>>, VertexMap> compact(
    const std::vector<std::vector<int>>& rot, const std::vector<int>& alive) {
  VertexMap m;
  m.old_to_new.assign(rot.size(), -1);
  int next = 0;
  for (size_t v = 0; v < rot.size(); v++)
    if (alive[v]) m.old_to_new[v] = next++;
  std::vector<std::vector<int>> out(next);
  for (size_t v = 0; v < rot.size(); v++) {
    if (!alive[v]) continue;
    std::vector<int>& r = out[m.old_to_new[v]];
    for (int u : rot[v])
      if (alive[u]) r.push_back(m.old_to_new[u]);
  }
  return {std::move(out), std::move(m)};
}

}  // namespace

SurgeryResult delete_vertices(const RotationGraph& g, const std::vector<int>& s) {
  std::vector<int> alive(g.vertex_count(), 1);
  for (int v : s) {
    if (v < 0 || v >= g.vertex_count()) fail(Err::Internal, "delete of bad vertex");
    alive[v] = 0;
  }
  Dart o = g.outer_dart();
  if (!alive[o.tail] || !alive[o.head])
    fail(Err::BadOuterDart, "outer dart deleted");
  auto [rot, m] = compact(
      [&] {
        std::vector<std::vector<int>> r(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); v++) r[v] = g.rotation(v);
        return r;
      }(),
      alive);
  RotationGraph out =
      RotationGraph::build(std::move(rot), Dart(m.map(o.tail), m.map(o.head)));
  return {std::move(out), std::move(m)};
}

RotationGraph add_edge_at_corners(const RotationGraph& g, int u, int after_u, int w,
                                  int after_w) {
  if (u == w) fail(Err::Internal, "edge endpoints equal");
  if (g.adjacent(u, w))
    fail(Err::AlreadyAdjacent, std::to_string(u) + "," + std::to_string(w));
  if (g.neighbor_index(u, after_u) < 0 || g.neighbor_index(w, after_w) < 0)
    fail(Err::NotOnFace, "corner anchor is not a neighbor");
  // corners in one component must share a face; across components any two
  // corners work (the insertion splices the two face orbits into one)
  std::vector<int> comp = g.component_ids();
  if (comp[u] == comp[w] &&
      g.face_index_of(Dart(after_u, u)) != g.face_index_of(Dart(after_w, w)))
    fail(Err::NotOnFace, "corners on different faces");

  std::vector<std::vector<int>> rot(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); v++) rot[v] = g.rotation(v);
  rot[u].insert(rot[u].begin() + g.neighbor_index(u, after_u) + 1, w);
  rot[w].insert(rot[w].begin() + g.neighbor_index(w, after_w) + 1, u);
  return RotationGraph::build(std::move(rot), g.outer_dart());
}

RotationGraph add_edge_in_face(const RotationGraph& g, int u, int w, const FaceWalk& f) {
  int after_u = -1, after_w = -1;
  for (const Dart& d : f.darts) {
    if (d.head == u && after_u < 0) after_u = d.tail;
    if (d.head == w && after_w < 0) after_w = d.tail;
  }
  if (after_u < 0 || after_w < 0) fail(Err::NotOnFace, "endpoint not on face");
  return add_edge_at_corners(g, u, after_u, w, after_w);
}

SurgeryResult identify_at_corners(const RotationGraph& g, int u, int after_u, int w,
                                  int after_w, bool merge_bigons) {
  if (u == w) fail(Err::Internal, "identify of equal vertices");
  if (g.adjacent(u, w))
    fail(Err::AlreadyAdjacent, std::to_string(u) + "," + std::to_string(w));
  if (g.neighbor_index(u, after_u) < 0 || g.neighbor_index(w, after_w) < 0)
    fail(Err::NotOnFace, "corner anchor is not a neighbor");
  if (g.face_index_of(Dart(after_u, u)) != g.face_index_of(Dart(after_w, w)))
    fail(Err::NotOnFace, "corners on different faces");

  int n = g.vertex_count();
  std::vector<std::vector<int>> rot(n);
  for (int v = 0; v < n; v++) rot[v] = g.rotation(v);

  // rotation of the merged vertex: u's rotation entered just past the corner,
  // then w's the same way (contracting a virtual edge drawn across the face)
  auto arc = [&](int v, int after) {
    std::vector<int> r = g.rotation(v);
    int i = g.neighbor_index(v, after);
    std::rotate(r.begin(), r.begin() + (i + 1) % r.size(), r.end());
    return r;
  };
  std::vector<int> merged = arc(u, after_u);
  std::vector<int> tail = arc(w, after_w);
  merged.insert(merged.end(), tail.begin(), tail.end());
  rot[u] = merged;
  rot[w].clear();
  for (int v = 0; v < n; v++)
    if (v != u)
      for (int& x : rot[v])
        if (x == w) x = u;

  // parallel edges show up as cyclically adjacent duplicates (empty bigons);
  // collapse them pairwise on both endpoints
  auto adjacent_dup = [](const std::vector<int>& r) -> int {
    for (int i = 0; i < (int)r.size(); i++)
      if (r[i] == r[(i + 1) % r.size()] && r.size() >= 2) return i;
    return -1;
  };
  if (merge_bigons) {
    for (;;) {
      int i = adjacent_dup(rot[u]);
      if (i < 0) break;
      int x = rot[u][i];
      rot[u].erase(rot[u].begin() + i);
      int j = -1;
      for (int p = 0; p < (int)rot[x].size(); p++)
        if (rot[x][p] == u && rot[x][(p + 1) % rot[x].size()] == u) j = p;
      if (j < 0)
        fail(Err::WouldCreateMultiEdge,
             "non-bigon parallel edge at vertex " + std::to_string(x));
      rot[x].erase(rot[x].begin() + j);
    }
  }
  {
    std::vector<int> srt = rot[u];
    std::sort(srt.begin(), srt.end());
    if (std::adjacent_find(srt.begin(), srt.end()) != srt.end())
      fail(Err::WouldCreateMultiEdge,
           "identification of vertices with a common neighbor");
  }

  std::vector<int> alive(n, 1);
  alive[w] = 0;
  auto [crot, m] = compact(rot, alive);
  Dart o = g.outer_dart();
  Dart no(o.tail == w ? m.map(u) : m.map(o.tail), o.head == w ? m.map(u) : m.map(o.head));
  RotationGraph out = RotationGraph::build(std::move(crot), no);
  return {std::move(out), std::move(m)};
}

SurgeryResult identify_in_face(const RotationGraph& g, int u, int w, const FaceWalk& f) {
  for (int v : g.rotation(u))
    if (g.adjacent(w, v))
      fail(Err::WouldCreateMultiEdge, "common neighbor " + std::to_string(v));
  int after_u = -1, after_w = -1;
  for (const Dart& d : f.darts) {
    if (d.head == u && after_u < 0) after_u = d.tail;
    if (d.head == w && after_w < 0) after_w = d.tail;
  }
  if (after_u < 0 || after_w < 0) fail(Err::NotOnFace, "endpoint not on face");
  return identify_at_corners(g, u, after_u, w, after_w, false);
}

SplitResult split_at_cycle(const RotationGraph& g, const CycleRef& k) {
  if (!g.is_cycle_of(k)) fail(Err::Internal, "split at non-cycle");
  if (g.is_facial(k)) fail(Err::FacialCycle, "cycle bounds a face");

  std::set<std::pair<int, int>> kedges;
  for (const Dart& d : k.darts())
    kedges.insert({std::min(d.tail, d.head), std::max(d.tail, d.head)});

  // union faces across every edge not on k; k's component splits in two
  int nf = (int)g.faces().size();
  std::vector<int> uf(nf);
  for (int i = 0; i < nf; i++) uf[i] = i;
  auto find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  for (int v = 0; v < g.vertex_count(); v++)
    for (int u : g.rotation(v)) {
      if (u < v) continue;
      if (kedges.count({v, u})) continue;
      int a = find(g.face_index_of(Dart(v, u)));
      int b = find(g.face_index_of(Dart(u, v)));
      uf[a] = b;
    }

  std::vector<int> comp = g.component_ids();
  int kcomp = comp[k.verts[0]];
  std::set<int> groups;
  for (int f = 0; f < nf; f++)
    if (comp[g.faces()[f].darts[0].tail] == kcomp) groups.insert(find(f));
  if (groups.size() != 2)
    fail(Err::Internal, "cycle does not separate its component in two");

  int outside_group;
  if (comp[g.outer_dart().tail] == kcomp) {
    outside_group = find(g.outer_face_index());
  } else {
    outside_group = *groups.begin();  // smallest face id, deterministic
  }

  auto face_outside = [&](int f) {
    return comp[g.faces()[f].darts[0].tail] != kcomp || find(f) == outside_group;
  };
  // a dart survives on a side iff its face is on that side or its edge is on k
  auto build_side = [&](bool outside) -> std::pair<RotationGraph, VertexMap> {
    std::vector<std::vector<int>> rot(g.vertex_count());
    std::vector<int> alive(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); v++) {
      for (int u : g.rotation(v)) {
        bool keep;
        if (kedges.count({std::min(u, v), std::max(u, v)})) {
          keep = true;
        } else {
          keep = face_outside(g.face_index_of(Dart(v, u))) == outside;
        }
        if (keep) {
          rot[v].push_back(u);
          alive[v] = 1;
        }
      }
      if (outside && g.degree(v) == 0) alive[v] = 1;
    }
    auto [crot, m] = compact(rot, alive);
    Dart o;
    if (outside) {
      o = Dart(m.map(g.outer_dart().tail), m.map(g.outer_dart().head));
    } else {
      o = Dart(m.map(k.verts[0]), m.map(k.verts[1]));
    }
    return {RotationGraph::build(std::move(crot), o), std::move(m)};
  };

  auto [gout, mout] = build_side(true);
  auto [gin, min_] = build_side(false);

  // orient the inside outer dart so its orbit is exactly k
  std::vector<int> kin;
  for (int v : k.verts) kin.push_back(min_.map(v));
  CycleRef kc = CycleRef::canonical(kin);
  std::optional<Dart> d = gin.facial_dart(kc);
  if (!d) fail(Err::Internal, "split inside: cycle not a face");
  gin = gin.with_outer(*d);

  return {std::move(gout), std::move(mout), std::move(gin), std::move(min_)};
}

}  // namespace grotzsch
