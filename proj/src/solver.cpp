#include "grotzsch/solver.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "grotzsch/discharging.hpp"
#include "grotzsch/oracle.hpp"

namespace grotzsch {

std::string Trace::to_text() const {
  std::ostringstream os;
  for (size_t i = 0; i < steps.size(); i++) {
    os << "step " << i << " depth " << steps[i].depth << " kind "
       << kind_tag(steps[i].kind) << " verts";
    for (int v : steps[i].verts) os << " " << v;
    os << "\n";
  }
  return os.str();
}

namespace {

void note(Trace& tr, const SolverConfig& cfg, int depth, ReductionKind k,
          std::vector<int> verts, std::vector<std::pair<int, int>> child_sizes) {
  if (!cfg.emit_trace) return;
  tr.steps.push_back(TraceStep{depth, k, std::move(verts), std::move(child_sizes)});
}

std::pair<int, int> size_of(const RotationGraph& g) {
  return {g.vertex_count(), g.edge_count()};
}

void verify_lift(const ValidPair& p, const Coloring& out, const char* who) {
  if (out.size() != p.graph.vertex_count() || !out.total())
    fail(Err::Internal, std::string(who) + ": lift left a vertex uncolored");
  if (auto e = first_improper_edge(p.graph, out))
    fail(Err::Internal, std::string(who) + ": lift is improper at edge " +
                            std::to_string(e->first) + "-" + std::to_string(e->second));
  for (int i = 0; i < p.boundary.cycle.size(); i++)
    if (out[p.boundary.cycle.verts[i]] != p.boundary.colors[i])
      fail(Err::Internal, std::string(who) + ": lift changed a boundary color");
}

Coloring extend_rec(const ValidPair& p, const SolverConfig& cfg, Trace& tr, int depth) {
  const RotationGraph& g = p.graph;
  int n = g.vertex_count();

  if (n == p.boundary.cycle.size()) {
    // the whole graph is the boundary cycle
    Coloring out(n);
    for (int i = 0; i < n; i++) out[p.boundary.cycle.verts[i]] = p.boundary.colors[i];
    return out;
  }
  if (cfg.use_brute_base && n <= cfg.brute_base_max_vertices) {
    std::map<int, int> pre;
    for (int i = 0; i < p.boundary.cycle.size(); i++)
      pre[p.boundary.cycle.verts[i]] = p.boundary.colors[i];
    std::optional<Coloring> out = brute_force_3color(g, pre);
    if (!out) fail(Err::Internal, "small valid pair has no extension");
    return *out;
  }

  if (auto h = detect_r1(p)) {
    AppliedR1 a = apply_r1(p, *h);
    note(tr, cfg, depth, ReductionKind::R1_InteriorLowDegree, {h->v},
         {size_of(a.child.graph)});
    Coloring sub = extend_rec(a.child, cfg, tr, depth + 1);
    Coloring out = lift_r1(p, a, sub);
    verify_lift(p, out, "R1");
    return out;
  }
  if (auto h = detect_r2(p)) {
    AppliedR2 a = apply_r2(p, *h);
    note(tr, cfg, depth, ReductionKind::R2_SeparatingShortCycle, h->k.verts,
         {size_of(a.outside.graph), size_of(a.inside)});
    Coloring po = extend_rec(a.outside, cfg, tr, depth + 1);
    ValidPair inside = make_valid_pair(a.inside, inside_boundary_r2(a, po));
    Coloring pi = extend_rec(inside, cfg, tr, depth + 1);
    Coloring out = lift_r2(p, a, po, pi);
    verify_lift(p, out, "R2");
    return out;
  }
  if (auto h = detect_r3(p)) {
    AppliedR3 a = apply_r3(p, *h);
    note(tr, cfg, depth, ReductionKind::R3_CutRepair, {a.v1, a.v2},
         {size_of(a.child.graph)});
    Coloring sub = extend_rec(a.child, cfg, tr, depth + 1);
    Coloring out = lift_r3(p, a, sub);
    verify_lift(p, out, "R3");
    return out;
  }
  if (auto h = detect_r4(p)) {
    AppliedR4 a = apply_r4(p, *h);
    note(tr, cfg, depth, ReductionKind::R4_InducedSixCycle,
         {h->labels.begin(), h->labels.end()},
         {size_of(a.outside.graph), size_of(a.inside)});
    Coloring po = extend_rec(a.outside, cfg, tr, depth + 1);
    ValidPair inside = make_valid_pair(a.inside, inside_boundary_r4(a, po));
    Coloring pi = extend_rec(inside, cfg, tr, depth + 1);
    Coloring out = lift_r4(p, a, po, pi);
    verify_lift(p, out, "R4");
    return out;
  }
  if (auto h = detect_r5(p)) {
    auto a = apply_r5(p, *h);
    if (const AppliedR5t* t = std::get_if<AppliedR5t>(&a)) {
      note(tr, cfg, depth, ReductionKind::R5t_Terminal,
           {t->labels.begin(), t->labels.end()}, {});
      Coloring out = lift_r5t(p, *t);
      verify_lift(p, out, "R5t");
      return out;
    }
    const AppliedR5& r = std::get<AppliedR5>(a);
    note(tr, cfg, depth, ReductionKind::R5_FourCycle,
         {r.labels.begin(), r.labels.end()}, {size_of(r.child.graph)});
    Coloring sub = extend_rec(r.child, cfg, tr, depth + 1);
    Coloring out = lift_r5(p, r, sub);
    verify_lift(p, out, "R5");
    return out;
  }
  if (auto h = detect_r6(p)) {
    AppliedR6 a = apply_r6(p, *h);
    std::vector<int> verts(h->ring.begin(), h->ring.end());
    verts.insert(verts.end(), h->outside.begin(), h->outside.end());
    note(tr, cfg, depth, ReductionKind::R6_Pentagon, std::move(verts),
         {size_of(a.child.graph)});
    Coloring sub = extend_rec(a.child, cfg, tr, depth + 1);
    Coloring out = lift_r6(p, a, sub);
    verify_lift(p, out, "R6");
    return out;
  }

  fail(Err::NoReductionFound,
       "no reduction applies; discharging audit:\n" + audit(g, p.boundary.cycle).text);
}

// peel vertices of degree <= 2 within the alive set; returns removal order
// with the neighbors each vertex still had
std::vector<std::pair<int, std::vector<int>>> peel(const RotationGraph& g,
                                                   std::vector<char>& alive) {
  int n = g.vertex_count();
  std::vector<int> deg(n, 0);
  std::vector<int> todo;
  for (int v = 0; v < n; v++) {
    if (!alive[v]) continue;
    for (int u : g.rotation(v))
      if (alive[u]) deg[v]++;
    if (deg[v] <= 2) todo.push_back(v);
  }
  std::vector<std::pair<int, std::vector<int>>> removed;
  while (!todo.empty()) {
    int v = todo.back();
    todo.pop_back();
    if (!alive[v] || deg[v] > 2) continue;
    std::vector<int> nbrs;
    for (int u : g.rotation(v))
      if (alive[u]) nbrs.push_back(u);
    alive[v] = 0;
    removed.push_back({v, std::move(nbrs)});
    for (int u : removed.back().second)
      if (--deg[u] == 2) todo.push_back(u);
  }
  return removed;
}

void color_connected(const RotationGraph& g, const std::vector<int>& comp_verts,
                     const SolverConfig& cfg, Trace& tr, Coloring& out);

// a maximal 2-connected piece of the peeled remainder, as its own graph
void solve_block(const RotationGraph& g, const std::vector<std::pair<int, int>>& edges,
                 const SolverConfig& cfg, Trace& tr, std::map<int, int>& block_colors) {
  std::vector<int> verts;
  for (auto& [u, v] : edges) {
    verts.push_back(u);
    verts.push_back(v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

  if (verts.size() == 2) {
    block_colors[verts[0]] = 1;
    block_colors[verts[1]] = 2;
    return;
  }

  std::map<int, int> local;
  for (int i = 0; i < (int)verts.size(); i++) local[verts[i]] = i;
  std::set<std::pair<int, int>> es;
  for (auto& [u, v] : edges) es.insert({std::min(u, v), std::max(u, v)});
  std::vector<std::vector<int>> rot(verts.size());
  for (int v : verts)
    for (int u : g.rotation(v))
      if (es.count({std::min(u, v), std::max(u, v)})) rot[local[v]].push_back(local[u]);
  RotationGraph b = RotationGraph::build(
      std::move(rot), Dart(local[edges[0].first], local[edges[0].second]));

  Coloring bc((int)verts.size());
  int mindeg = b.degree(0);
  for (int v = 0; v < b.vertex_count(); v++) mindeg = std::min(mindeg, b.degree(v));
  if (mindeg < 3) {
    // cut vertices can leave low degrees inside a block; peel again
    std::vector<int> all(b.vertex_count());
    for (int i = 0; i < b.vertex_count(); i++) all[i] = i;
    color_connected(b, all, cfg, tr, bc);
  } else {
    // Euler forces a face of length <= 5; 2-connectivity makes it a cycle and
    // triangle-freeness makes it chordless, so it can serve as the boundary
    int best = 0;
    for (int f = 1; f < (int)b.faces().size(); f++)
      if (b.faces()[f].length() < b.faces()[best].length()) best = f;
    const FaceWalk& fw = b.faces()[best];
    if (fw.length() > 5 || !fw.is_simple_cycle())
      fail(Err::Internal, "no short facial cycle in a min-degree-3 block");
    RotationGraph rooted = b.with_outer(fw.darts[0]);
    std::vector<int> walk = fw.vertices();
    std::vector<int> cols(walk.size());
    for (size_t i = 0; i < walk.size(); i++) cols[i] = i % 2 ? 2 : 1;
    if (walk.size() % 2) cols.back() = 3;
    ValidPair p = make_valid_pair(std::move(rooted), BoundaryColoring(walk, cols));
    bc = extend_rec(p, cfg, tr, 0);
  }
  for (int v : verts) block_colors[v] = bc[local[v]];
}

void color_connected(const RotationGraph& g, const std::vector<int>& comp_verts,
                     const SolverConfig& cfg, Trace& tr, Coloring& out) {
  std::vector<char> alive(g.vertex_count(), 0);
  for (int v : comp_verts) alive[v] = 1;
  auto peeled = peel(g, alive);

  std::vector<int> rest;
  for (int v : comp_verts)
    if (alive[v]) rest.push_back(v);

  if (!rest.empty()) {
    // 2-connected blocks of the remainder, by lowpoint DFS with an edge stack
    int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<std::pair<int, int>> estack;
    std::vector<std::vector<std::pair<int, int>>> blocks;
    int timer = 0;
    auto dfs = [&](auto&& self, int v, int parent) -> void {
      disc[v] = low[v] = timer++;
      for (int u : g.rotation(v)) {
        if (!alive[u] || u == parent) continue;
        if (disc[u] < 0) {
          estack.push_back({v, u});
          self(self, u, v);
          low[v] = std::min(low[v], low[u]);
          if (low[u] >= disc[v]) {
            std::vector<std::pair<int, int>> blk;
            while (!(estack.back() == std::pair<int, int>{v, u})) {
              blk.push_back(estack.back());
              estack.pop_back();
            }
            blk.push_back(estack.back());
            estack.pop_back();
            blocks.push_back(std::move(blk));
          }
        } else if (disc[u] < disc[v]) {
          estack.push_back({v, u});
          low[v] = std::min(low[v], disc[u]);
        }
      }
    };
    dfs(dfs, rest[0], -1);

    // solve each block, then align colors at the shared cut vertices by
    // swapping two colors blockwise
    std::vector<char> done(blocks.size(), 0);
    std::vector<std::map<int, int>> bcol(blocks.size());
    std::map<int, std::vector<int>> vblocks;
    for (int b = 0; b < (int)blocks.size(); b++) {
      solve_block(g, blocks[b], cfg, tr, bcol[b]);
      for (auto& [v, c] : bcol[b]) vblocks[v].push_back(b);
    }
    std::vector<int> order{0};
    done[0] = 1;
    for (size_t qi = 0; qi < order.size(); qi++) {
      int b = order[qi];
      for (auto& [v, c] : bcol[b])
        for (int nb : vblocks[v])
          if (!done[nb]) {
            done[nb] = 1;
            order.push_back(nb);
          }
    }
    for (int b : order) {
      int from = 0, to = 0;
      for (auto& [v, c] : bcol[b])
        if (out[v] != 0) {
          from = c;
          to = out[v];
        }
      for (auto& [v, c] : bcol[b]) {
        int cc = c == from ? to : c == to ? from : c;
        if (out[v] != 0 && out[v] != cc)
          fail(Err::Internal, "block colorings disagree at a cut vertex");
        out[v] = cc;
      }
    }
  }

  for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
    for (int c = 1; c <= 3 && out[it->first] == 0; c++) {
      bool used = false;
      for (int u : it->second) used = used || out[u] == c;
      if (!used) out[it->first] = c;
    }
    if (out[it->first] == 0) fail(Err::Internal, "peel unwind ran out of colors");
  }
}

}  // namespace

std::pair<Coloring, Trace> extend(const ValidPair& p, const SolverConfig& cfg) {
  PairCheck pc = check_valid_pair(p.graph, p.boundary);
  if (!pc.ok) fail(Err::Internal, "extend needs a valid pair: " + pc.reason);
  Trace tr;
  Coloring out = extend_rec(p, cfg, tr, 0);
  return {std::move(out), std::move(tr)};
}

std::pair<Coloring, Trace> three_color(const RotationGraph& g, const SolverConfig& cfg) {
  if (auto t = g.find_triangle())
    fail(Err::TriangleFound, "triangle " + std::to_string((*t)[0]) + "-" +
                                 std::to_string((*t)[1]) + "-" +
                                 std::to_string((*t)[2]));
  Coloring out(g.vertex_count());
  Trace tr;

  std::vector<int> comp = g.component_ids();
  int ncomp = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  for (int c = 0; c < ncomp; c++) {
    std::vector<int> verts;
    for (int v = 0; v < g.vertex_count(); v++)
      if (comp[v] == c) verts.push_back(v);
    color_connected(g, verts, cfg, tr, out);
  }

  if (!out.total()) fail(Err::Internal, "driver left a vertex uncolored");
  if (auto e = first_improper_edge(g, out))
    fail(Err::Internal, "driver coloring improper at edge " +
                            std::to_string(e->first) + "-" + std::to_string(e->second));
  return {std::move(out), std::move(tr)};
}

}  // namespace grotzsch
