#pragma once

#include <vector>

#include "grotzsch/oracle.hpp"
#include "grotzsch/validity.hpp"

namespace fixtures {

using namespace grotzsch;

inline RotationGraph gen(Family f, int n = 0, int m = 0, std::uint64_t seed = 0) {
  GenSpec s;
  s.family = f;
  s.n = n;
  s.m = m;
  s.seed = seed;
  return generate(s);
}

// h concentric q-gon rings, consecutive rings joined by all q spokes; every
// vertex has degree 3 or 4, every middle ring is a separating q-cycle
inline RotationGraph tower(int q, int h) {
  auto vid = [&](int j, int i) { return j * q + ((i % q + q) % q); };
  std::vector<std::vector<int>> rot(q * h);
  for (int j = 0; j < h; j++)
    for (int i = 0; i < q; i++) {
      int nxt = vid(j, i + 1), prv = vid(j, i - 1);
      if (j == 0)
        rot[vid(j, i)] = {nxt, prv, vid(j + 1, i)};
      else if (j == h - 1)
        rot[vid(j, i)] = {prv, nxt, vid(j - 1, i)};
      else
        rot[vid(j, i)] = {nxt, vid(j - 1, i), prv, vid(j + 1, i)};
    }
  return RotationGraph::build(std::move(rot), Dart(1, 0));
}

// 6-cycle with a degree-3 hub adjacent to alternating boundary vertices;
// the unique graph the 4-cycle reduction cannot shrink
inline RotationGraph wheel7() {
  return RotationGraph::build(
      {{1, 6, 5}, {2, 0}, {3, 6, 1}, {4, 2}, {5, 6, 3}, {0, 4}, {0, 2, 4}},
      Dart(0, 1));
}

inline std::vector<std::vector<int>> cube_rotations(int shift) {
  std::vector<std::vector<int>> r = {{1, 3, 4}, {0, 5, 2}, {1, 6, 3}, {0, 2, 7},
                                     {0, 7, 5}, {1, 4, 6}, {2, 5, 7}, {3, 6, 4}};
  for (auto& row : r)
    for (int& x : row) x += shift;
  return r;
}

// 6-cycle with a cube hanging inside on a bridge from vertex 0: vertex 0 is a
// cut vertex whose far side avoids the boundary
inline RotationGraph bridge14() {
  std::vector<std::vector<int>> rot = {{1, 6, 5}, {2, 0}, {3, 1}, {4, 2}, {5, 3}, {0, 4}};
  for (auto& row : cube_rotations(6)) rot.push_back(row);
  rot[6].push_back(0);
  return RotationGraph::build(std::move(rot), Dart(0, 1));
}

// 4-cycle boundary plus a detached cube
inline RotationGraph floating12() {
  std::vector<std::vector<int>> rot = {{1, 3}, {2, 0}, {3, 1}, {0, 2}};
  for (auto& row : cube_rotations(4)) rot.push_back(row);
  return RotationGraph::build(std::move(rot), Dart(0, 1));
}

// 6-cycle with two interior degree-2 vertices, both joined to 0 and 3
inline RotationGraph two_chords8() {
  return RotationGraph::build({{1, 7, 6, 5},
                               {2, 0},
                               {3, 1},
                               {4, 6, 7, 2},
                               {5, 3},
                               {0, 4},
                               {0, 3},
                               {3, 0}},
                              Dart(0, 1));
}

inline ValidPair pair_of(const RotationGraph& g, const std::vector<int>& colors) {
  CycleRef c = outer_cycle(g);
  return make_valid_pair(g, BoundaryColoring(c.verts, colors));
}

// every proper coloring of the outer cycle that forms a valid pair,
// as color vectors aligned with the canonical outer cycle order
inline std::vector<std::vector<int>> valid_boundary_colorings(const RotationGraph& g) {
  CycleRef c = outer_cycle(g);
  std::vector<std::vector<int>> out;
  std::vector<int> cols(c.size(), 1);
  for (;;) {
    BoundaryColoring b(c.verts, cols);
    if (b.proper() && is_valid_boundary(b)) out.push_back(cols);
    int i = 0;
    while (i < (int)cols.size() && cols[i] == 3) cols[i++] = 1;
    if (i == (int)cols.size()) break;
    cols[i]++;
  }
  return out;
}

}  // namespace fixtures
