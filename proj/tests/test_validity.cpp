#include <doctest.h>

#include "fixtures.hpp"
#include "grotzsch/validity.hpp"

using namespace grotzsch;
using fixtures::gen;

namespace {

// literal transcription of the rule: proper, and a 6-cycle needs two
// opposite vertices colored differently
bool valid_by_definition(const std::vector<int>& cols) {
  int n = (int)cols.size();
  for (int i = 0; i < n; i++)
    if (cols[i] == cols[(i + 1) % n]) return false;
  if (n != 6) return true;
  for (int i = 0; i < 3; i++)
    if (cols[i] != cols[i + 3]) return true;
  return false;
}

int count_over_tuples(int n, int which) {  // 0 proper, 1 valid, 2 proper-invalid
  int proper = 0, valid = 0;
  std::vector<int> cols(n, 1);
  for (;;) {
    bool p = true;
    for (int i = 0; i < n; i++) p = p && cols[i] != cols[(i + 1) % n];
    proper += p;
    valid += valid_by_definition(cols);
    int i = 0;
    while (i < n && cols[i] == 3) cols[i++] = 1;
    if (i == n) break;
    cols[i]++;
  }
  return which == 0 ? proper : which == 1 ? valid : proper - valid;
}

}  // namespace

TEST_CASE("proper and valid counts on small cycles") {
  CHECK(count_over_tuples(4, 0) == 18);
  CHECK(count_over_tuples(4, 1) == 18);
  CHECK(count_over_tuples(5, 0) == 30);
  CHECK(count_over_tuples(5, 1) == 30);
  CHECK(count_over_tuples(6, 0) == 66);
  CHECK(count_over_tuples(6, 1) == 60);
  CHECK(count_over_tuples(6, 2) == 6);
}

TEST_CASE("is_valid_boundary matches the definition on every proper tuple") {
  for (int n : {4, 5, 6}) {
    RotationGraph g = gen(Family::Cycle, n);
    CycleRef c = outer_cycle(g);
    std::vector<int> cols(n, 1);
    for (;;) {
      bool p = true;
      for (int i = 0; i < n; i++) p = p && cols[i] != cols[(i + 1) % n];
      if (p) {
        BoundaryColoring b(c.verts, cols);
        CHECK(b.proper());
        CHECK(is_valid_boundary(b) == valid_by_definition(cols));
      } else {
        CHECK_THROWS_AS(is_valid_boundary(BoundaryColoring(c.verts, cols)), Error);
      }
      int i = 0;
      while (i < n && cols[i] == 3) cols[i++] = 1;
      if (i == n) break;
      cols[i]++;
    }
  }
}

TEST_CASE("boundary coloring is independent of walk rotation and direction") {
  std::vector<int> seq = {2, 3, 4, 5, 0, 1};
  std::vector<int> cols = {1, 2, 1, 3, 1, 2};
  BoundaryColoring a(seq, cols);
  std::vector<int> rev(seq.rbegin(), seq.rend()), revc(cols.rbegin(), cols.rend());
  BoundaryColoring b(rev, revc);
  for (int i = 0; i < 6; i++) CHECK(a.color_of(i) == b.color_of(i));
  CHECK(a.color_of(2) == 1);
  CHECK(a.color_of(1) == 2);
  CHECK(a.color_of(7) == -1);
}

TEST_CASE("first_improper_edge finds the smallest offending edge") {
  RotationGraph g = gen(Family::Cube);
  Coloring col(8);
  for (int v = 0; v < 4; v++) {
    col[v] = 1 + (v % 2);
    col[4 + v] = 2 - (v % 2);
  }
  CHECK(is_proper(g, col));
  CHECK_FALSE(first_improper_edge(g, col).has_value());
  col[1] = 1;
  auto e = first_improper_edge(g, col);
  REQUIRE(e.has_value());
  CHECK(*e == std::pair<int, int>{0, 1});
  CHECK_FALSE(is_proper(g, col));
}

TEST_CASE("check_valid_pair accepts the basic pairs") {
  for (auto& [g, cols] :
       std::vector<std::pair<RotationGraph, std::vector<int>>>{
           {gen(Family::Cube), {1, 2, 1, 2}},
           {gen(Family::Dodecahedron), {1, 2, 1, 2, 3}},
           {fixtures::wheel7(), {1, 2, 1, 2, 1, 3}},
           {fixtures::tower(5, 3), {1, 2, 1, 2, 3}},
       }) {
    CycleRef c = outer_cycle(g);
    PairCheck pc = check_valid_pair(g, BoundaryColoring(c.verts, cols));
    CHECK(pc.ok);
    CHECK(pc.reason.empty());
  }
}

TEST_CASE("check_valid_pair rejects bad pairs with reasons") {
  RotationGraph g = gen(Family::Cube);
  CycleRef c = outer_cycle(g);

  // coloring on a cycle that is not the outer face
  CycleRef other;
  for (const CycleRef& k : find_short_cycles(g, 4))
    if (k != c) {
      other = k;
      break;
    }
  PairCheck pc = check_valid_pair(g, BoundaryColoring(other.verts, {1, 2, 1, 2}));
  CHECK_FALSE(pc.ok);
  CHECK(!pc.reason.empty());

  // outer face too long
  RotationGraph c7 = gen(Family::Cycle, 7);
  pc = check_valid_pair(c7, BoundaryColoring(outer_cycle(c7).verts,
                                             {1, 2, 1, 2, 1, 2, 3}));
  CHECK_FALSE(pc.ok);

  // 6-cycle coloring with all opposite pairs equal
  RotationGraph c6 = gen(Family::Cycle, 6);
  pc = check_valid_pair(c6, BoundaryColoring(outer_cycle(c6).verts,
                                             {1, 2, 3, 1, 2, 3}));
  CHECK_FALSE(pc.ok);

  // triangle inside: square with vertex 4 joined to the ends of edge 0-3
  RotationGraph tri = RotationGraph::build(
      {{3, 1, 4}, {2, 0}, {3, 1}, {2, 0, 4}, {0, 3}}, Dart(0, 1));
  pc = check_valid_pair(tri, BoundaryColoring(outer_cycle(tri).verts, {1, 2, 1, 2}));
  CHECK_FALSE(pc.ok);

  // outer cycle not induced: hexagon with a long chord drawn inside
  RotationGraph chorded =
      add_edge_in_face(c6, 0, 3, c6.faces()[1 - c6.outer_face_index()]);
  pc = check_valid_pair(chorded, BoundaryColoring(outer_cycle(chorded).verts,
                                                  {1, 2, 1, 2, 1, 3}));
  CHECK_FALSE(pc.ok);

  CHECK(make_valid_pair(gen(Family::Cube), BoundaryColoring(c.verts, {1, 2, 1, 2}))
            .boundary.proper());
  CHECK_THROWS_AS(make_valid_pair(c6, BoundaryColoring(outer_cycle(c6).verts,
                                                       {1, 2, 3, 1, 2, 3})),
                  Error);
}

TEST_CASE("outer cycle of a non-simple outer face is an error") {
  RotationGraph path = RotationGraph::build({{1}, {0, 2}, {1}}, Dart(0, 1));
  CHECK_THROWS_AS(outer_cycle(path), Error);
}

TEST_CASE("pair order prefers fewer vertices then more edges") {
  CHECK(pair_less(5, 7, 6, 1));
  CHECK(pair_less(5, 7, 5, 6));
  CHECK_FALSE(pair_less(5, 6, 5, 7));
  CHECK_FALSE(pair_less(5, 7, 5, 7));
  RotationGraph cube = gen(Family::Cube);
  ValidPair a = fixtures::pair_of(cube, {1, 2, 1, 2});
  RotationGraph c6 = gen(Family::Cycle, 6);
  ValidPair b = fixtures::pair_of(c6, {1, 2, 1, 2, 1, 3});
  CHECK(pair_less(b, a));
  CHECK_FALSE(pair_less(a, b));
}
