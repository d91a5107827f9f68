#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "grotzsch/planar.hpp"

using namespace grotzsch;
using fixtures::gen;

namespace {

// reference cycle enumeration: every k-subset in every cyclic order
std::vector<CycleRef> cycles_by_subsets(const RotationGraph& g, int max_len) {
  int n = g.vertex_count();
  std::set<std::vector<int>> found;
  std::vector<int> idx;
  auto consider = [&](const std::vector<int>& seq) {
    for (size_t i = 0; i < seq.size(); i++)
      if (!g.adjacent(seq[i], seq[(i + 1) % seq.size()])) return;
    found.insert(CycleRef::canonical(seq).verts);
  };
  auto subsets = [&](auto&& self, int start, int want, std::vector<int>& acc) -> void {
    if (want == 0) {
      std::vector<int> perm(acc.begin() + 1, acc.end());
      std::sort(perm.begin(), perm.end());
      do {
        std::vector<int> seq{acc[0]};
        seq.insert(seq.end(), perm.begin(), perm.end());
        consider(seq);
      } while (std::next_permutation(perm.begin(), perm.end()));
      return;
    }
    for (int v = start; v < n; v++) {
      acc.push_back(v);
      self(self, v + 1, want - 1, acc);
      acc.pop_back();
    }
  };
  for (int k = 3; k <= max_len; k++) {
    std::vector<int> acc;
    subsets(subsets, 0, k, acc);
  }
  std::vector<CycleRef> out;
  for (auto& verts : found) out.push_back(CycleRef{verts});
  std::sort(out.begin(), out.end());
  return out;
}

// reference face tracing: walk predecessor orbits backwards and compare
std::set<std::multiset<std::pair<int, int>>> faces_as_dart_sets(const RotationGraph& g) {
  std::set<std::multiset<std::pair<int, int>>> out;
  for (const FaceWalk& f : g.faces()) {
    std::multiset<std::pair<int, int>> s;
    for (const Dart& d : f.darts) s.insert({d.tail, d.head});
    out.insert(std::move(s));
  }
  return out;
}

std::set<std::multiset<std::pair<int, int>>> faces_by_reverse_walk(const RotationGraph& g) {
  std::set<std::pair<int, int>> seen;
  std::set<std::multiset<std::pair<int, int>>> out;
  for (int u = 0; u < g.vertex_count(); u++)
    for (int v : g.rotation(u)) {
      if (seen.count({u, v})) continue;
      // previous dart of (a,b) is (c,a) with c = cyclic_pred of b at a
      std::multiset<std::pair<int, int>> s;
      int a = u, b = v;
      do {
        s.insert({a, b});
        seen.insert({a, b});
        int c = g.cyclic_pred(a, b);
        b = a;
        a = c;
      } while (!(a == u && b == v));
      out.insert(std::move(s));
    }
  return out;
}

}  // namespace

TEST_CASE("build rejects malformed rotation systems") {
  CHECK_THROWS_WITH_AS(RotationGraph::build({{0}}, Dart(0, 0)), doctest::Contains("Loop"),
                       Error);
  CHECK_THROWS_AS(RotationGraph::build({{1, 1}, {0, 0}}, Dart(0, 1)), Error);
  CHECK_THROWS_AS(RotationGraph::build({{1}, {}}, Dart(0, 1)), Error);    // asymmetric
  CHECK_THROWS_AS(RotationGraph::build({{2}, {}}, Dart(0, 2)), Error);    // range
  CHECK_THROWS_AS(RotationGraph::build({{1}, {0}}, Dart(0, 0)), Error);   // bad outer
  CHECK_THROWS_AS(RotationGraph::build({{1}, {0}}, Dart(1, 0)).with_outer(Dart(0, 0)),
                  Error);
}

TEST_CASE("build rejects nonplanar rotation systems") {
  // K5: every rotation system has positive genus
  std::vector<std::vector<int>> k5(5);
  for (int v = 0; v < 5; v++)
    for (int u = 0; u < 5; u++)
      if (u != v) k5[v].push_back(u);
  CHECK_THROWS_WITH_AS(RotationGraph::build(std::move(k5), Dart(0, 1)),
                       doctest::Contains("NotSphere"), Error);
}

TEST_CASE("per-component Euler check allows isolated vertices") {
  RotationGraph g = RotationGraph::build({{1}, {0}, {}}, Dart(0, 1));
  CHECK(g.vertex_count() == 3);
  CHECK(g.degree(2) == 0);
  CHECK_FALSE(g.is_connected());
  CHECK(g.component_ids() == std::vector<int>{0, 0, 1});
}

TEST_CASE("cube faces") {
  RotationGraph g = gen(Family::Cube);
  CHECK(g.vertex_count() == 8);
  CHECK(g.edge_count() == 12);
  REQUIRE(g.faces().size() == 6);
  for (const FaceWalk& f : g.faces()) {
    CHECK(f.length() == 4);
    CHECK(f.is_simple_cycle());
  }
  CHECK(g.outer_face().touches(0));
  CHECK(g.face_index_of(g.outer_dart()) == g.outer_face_index());
}

TEST_CASE("face orbits partition the darts and match a reverse walk") {
  for (const RotationGraph& g :
       {gen(Family::Cube), gen(Family::Dodecahedron), gen(Family::Grid, 3, 4),
        gen(Family::HexPatch, 2), gen(Family::RandomInsertion, 13, 0, 7),
        fixtures::tower(5, 4), fixtures::bridge14()}) {
    int total = 0;
    for (const FaceWalk& f : g.faces()) total += f.length();
    CHECK(total == 2 * g.edge_count());
    CHECK(faces_as_dart_sets(g) == faces_by_reverse_walk(g));
    std::vector<int> cids = g.component_ids();
    int comps = *std::max_element(cids.begin(), cids.end()) + 1;
    CHECK(g.vertex_count() - g.edge_count() + (int)g.faces().size() == 1 + comps);
  }
}

TEST_CASE("short cycle enumeration matches subset enumeration") {
  for (const RotationGraph& g :
       {gen(Family::Cube), gen(Family::Cycle, 9), gen(Family::Grid, 3, 3),
        gen(Family::RandomInsertion, 11, 0, 3), fixtures::wheel7(),
        fixtures::two_chords8()}) {
    for (int len : {4, 5, 6}) {
      auto got = find_short_cycles(g, len);
      auto want = cycles_by_subsets(g, len);
      CHECK(got.size() == want.size());
      CHECK(std::is_sorted(got.begin(), got.end()));
      CHECK(std::set<CycleRef>(got.begin(), got.end()) ==
            std::set<CycleRef>(want.begin(), want.end()));
    }
  }
}

TEST_CASE("cube cycle counts") {
  RotationGraph g = gen(Family::Cube);
  CHECK(find_short_cycles(g, 4).size() == 6);
  CHECK(find_short_cycles(g, 5).size() == 6);
  CHECK(find_short_cycles(g, 6).size() == 6 + 16);
}

TEST_CASE("dodecahedron has exactly its twelve pentagon faces as short cycles") {
  RotationGraph g = gen(Family::Dodecahedron);
  auto cycles = find_short_cycles(g, 5);
  REQUIRE(cycles.size() == 12);
  for (const CycleRef& k : cycles) {
    CHECK(k.size() == 5);
    CHECK(g.is_facial(k));
    CHECK(g.is_induced(k));
    CHECK(g.facial_dart(k).has_value());
  }
}

TEST_CASE("facial and induced classification") {
  RotationGraph g = gen(Family::Cube);
  for (const CycleRef& k : find_short_cycles(g, 4)) CHECK(g.is_facial(k));
  int induced = 0;
  for (const CycleRef& k : find_short_cycles(g, 6))
    if (k.size() == 6) {
      CHECK_FALSE(g.is_facial(k));
      CHECK_FALSE(g.facial_dart(k).has_value());
      induced += g.is_induced(k);
    }
  // induced hexagons of the cube avoid one antipodal vertex pair
  CHECK(induced == 4);
  RotationGraph t = fixtures::tower(4, 3);
  CycleRef mid = CycleRef::canonical({4, 5, 6, 7});
  CHECK(t.is_cycle_of(mid));
  CHECK_FALSE(t.is_facial(mid));
}

TEST_CASE("re-rooting keeps the embedding") {
  RotationGraph g = gen(Family::Dodecahedron);
  Dart d = g.faces()[3].darts[0];
  RotationGraph h = g.with_outer(d);
  CHECK(h.outer_face_index() == g.face_index_of(d));
  CHECK(faces_as_dart_sets(g) == faces_as_dart_sets(h));
}

TEST_CASE("delete_vertices compacts ids and preserves rotation order") {
  RotationGraph g = gen(Family::Cube);
  SurgeryResult r = delete_vertices(g, {6});
  CHECK(r.graph.vertex_count() == 7);
  CHECK(r.graph.edge_count() == 9);
  CHECK(r.vmap.map(6) == -1);
  CHECK(r.vmap.map(7) == 6);
  // rotation of 5 was {1,4,6}; 6 disappears, cyclic order survives
  CHECK(r.graph.degree(r.vmap.map(5)) == 2);
  CHECK(r.graph.adjacent(r.vmap.map(5), r.vmap.map(1)));
  CHECK(r.graph.adjacent(r.vmap.map(5), r.vmap.map(4)));
  CHECK_THROWS_AS(delete_vertices(g, {0, 1}), Error);  // outer dart dies
}

TEST_CASE("add_edge_in_face splits one face into two") {
  RotationGraph g = gen(Family::Cycle, 6);
  int inner = 1 - g.outer_face_index();
  RotationGraph h = add_edge_in_face(g, 0, 3, g.faces()[inner]);
  CHECK(h.edge_count() == 7);
  CHECK(h.faces().size() == 3);
  CHECK(h.adjacent(0, 3));
  CHECK(h.outer_face().length() == 6);
  CHECK_THROWS_AS(add_edge_in_face(g, 0, 1, g.faces()[inner]), Error);  // adjacent
  // corners on different faces
  CHECK_THROWS_AS(add_edge_at_corners(gen(Family::Cube), 0, 1, 6, 5), Error);
}

TEST_CASE("add_edge_at_corners joins two components") {
  RotationGraph g = fixtures::floating12();
  CHECK_FALSE(g.is_connected());
  RotationGraph h = add_edge_at_corners(g, 0, g.rotation(0)[0], 4, g.rotation(4)[0]);
  CHECK(h.is_connected());
  CHECK(h.edge_count() == g.edge_count() + 1);
  CHECK(h.adjacent(0, 4));
}

TEST_CASE("identify_at_corners merges across a face") {
  // hexagon: identify opposite vertices 0 and 3 across the inner face
  RotationGraph g = gen(Family::Cycle, 6);
  int inner = 1 - g.outer_face_index();
  const FaceWalk& f = g.faces()[inner];
  SurgeryResult r = identify_in_face(g, 0, 3, f);
  CHECK(r.graph.vertex_count() == 5);
  CHECK(r.graph.edge_count() == 6);
  CHECK(r.vmap.map(3) == -1);
  int merged = r.vmap.map(0);
  CHECK(r.graph.degree(merged) == 4);
  CHECK(r.graph.faces().size() == 3);
}

TEST_CASE("identify_at_corners with bigon merging collapses parallel edges") {
  // square: 0 and 2 share neighbors 1 and 3; strict merge refuses, bigon
  // merge yields a path
  RotationGraph g = gen(Family::Cycle, 4);
  int inner = 1 - g.outer_face_index();
  const FaceWalk& f = g.faces()[inner];
  CHECK_THROWS_AS(identify_in_face(g, 0, 2, f), Error);
  int after0 = -1, after2 = -1;
  for (const Dart& d : f.darts) {
    if (d.head == 0) after0 = d.tail;
    if (d.head == 2) after2 = d.tail;
  }
  SurgeryResult r = identify_at_corners(g, 0, after0, 2, after2, true);
  CHECK(r.graph.vertex_count() == 3);
  CHECK(r.graph.edge_count() == 2);
  CHECK(r.graph.degree(r.vmap.map(0)) == 2);
}

TEST_CASE("split_at_cycle separates the sphere along a non-facial cycle") {
  RotationGraph g = gen(Family::Cube);
  CycleRef k;
  for (const CycleRef& c : find_short_cycles(g, 6))
    if (c.size() == 6 && g.is_induced(c)) {
      k = c;
      break;
    }
  REQUIRE(k.size() == 6);
  SplitResult s = split_at_cycle(g, k);
  CHECK(s.outside.vertex_count() == 7);
  CHECK(s.inside.vertex_count() == 7);
  CHECK(s.outside.edge_count() + s.inside.edge_count() == g.edge_count() + 6);
  std::vector<int> outer_imgs;
  for (int v : g.outer_face().vertices()) outer_imgs.push_back(s.out_map.map(v));
  CHECK(outer_cycle(s.outside) == CycleRef::canonical(outer_imgs));
  // the cut cycle becomes the inside boundary
  std::vector<int> want;
  for (int v : k.verts) want.push_back(s.in_map.map(v));
  CHECK(outer_cycle(s.inside) == CycleRef::canonical(want));
  CHECK_THROWS_AS(split_at_cycle(g, find_short_cycles(g, 4)[0]), Error);  // facial
}

TEST_CASE("split_at_cycle sends other components outside") {
  RotationGraph g = fixtures::tower(4, 3);
  // make it float next to a 4-cycle boundary component
  std::vector<std::vector<int>> rot = {{1, 3}, {2, 0}, {3, 1}, {0, 2}};
  for (int v = 0; v < g.vertex_count(); v++) {
    rot.push_back(g.rotation(v));
    for (int& x : rot.back()) x += 4;
  }
  RotationGraph fl = RotationGraph::build(std::move(rot), Dart(0, 1));
  CycleRef mid = CycleRef::canonical({8, 9, 10, 11});
  SplitResult s = split_at_cycle(fl, mid);
  CHECK(s.outside.vertex_count() == 4 + 8);
  CHECK(s.inside.vertex_count() == 8);
  CHECK(s.out_map.map(0) == 0);
  CHECK(s.in_map.map(0) == -1);
}
