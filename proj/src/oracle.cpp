#include "grotzsch/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace grotzsch {

namespace {

// count proper completions; stop early after `cap` when cap >= 0
long long color_search(const RotationGraph& g, Coloring& col, int v, long long cap,
                       Coloring* first) {
  int n = g.vertex_count();
  while (v < n && col[v] != 0) v++;
  if (v == n) {
    if (first && first->size() == 0) *first = col;
    return 1;
  }
  long long total = 0;
  for (int c = 1; c <= 3; c++) {
    bool ok = true;
    for (int u : g.rotation(v))
      if (col[u] == c) {
        ok = false;
        break;
      }
    if (!ok) continue;
    col[v] = c;
    total += color_search(g, col, v + 1, cap, first);
    col[v] = 0;
    if (cap >= 0 && total >= cap) return total;
  }
  return total;
}

}  // namespace

std::optional<Coloring> brute_force_3color(const RotationGraph& g,
                                           const std::map<int, int>& partial) {
  Coloring col(g.vertex_count());
  for (auto [v, c] : partial) {
    if (v < 0 || v >= g.vertex_count() || c < 1 || c > 3)
      fail(Err::Internal, "bad precoloring entry");
    col[v] = c;
  }
  if (first_improper_edge(g, col)) return std::nullopt;
  Coloring out;
  if (color_search(g, col, 0, 1, &out) == 0) return std::nullopt;
  return out;
}

long long count_extensions(const RotationGraph& g, const BoundaryColoring& b) {
  Coloring col(g.vertex_count());
  for (size_t i = 0; i < b.cycle.verts.size(); i++) col[b.cycle.verts[i]] = b.colors[i];
  if (first_improper_edge(g, col)) return 0;
  return color_search(g, col, 0, -1, nullptr);
}

const char* family_name(Family f) {
  switch (f) {
    case Family::Cycle: return "cycle";
    case Family::Prism: return "prism";
    case Family::Grid: return "grid";
    case Family::HexPatch: return "hexpatch";
    case Family::Cube: return "cube";
    case Family::Dodecahedron: return "dodecahedron";
    case Family::RandomInsertion: return "random_insertion";
  }
  return "?";
}

Family family_from_name(const std::string& name) {
  for (Family f : {Family::Cycle, Family::Prism, Family::Grid, Family::HexPatch,
                   Family::Cube, Family::Dodecahedron, Family::RandomInsertion})
    if (name == family_name(f)) return f;
  fail(Err::SpecOutOfRange, "unknown family " + name);
}

std::string GenSpec::manifest_line() const {
  std::string s = "gen ";
  s += family_name(family);
  switch (family) {
    case Family::Cycle:
    case Family::Prism:
    case Family::HexPatch:
    case Family::RandomInsertion: s += " " + std::to_string(n); break;
    case Family::Grid: s += " " + std::to_string(n) + " " + std::to_string(m); break;
    case Family::Cube:
    case Family::Dodecahedron: break;
  }
  s += " " + std::to_string(seed);
  return s;
}

namespace {

RotationGraph gen_cycle(int n) {
  if (n < 4) fail(Err::SpecOutOfRange, "cycle length must be >= 4");
  std::vector<std::vector<int>> rot(n);
  for (int i = 0; i < n; i++) rot[i] = {(i + 1) % n, (i + n - 1) % n};
  return RotationGraph::build(std::move(rot), Dart(0, 1));
}

RotationGraph gen_prism(int n) {
  if (n < 4) fail(Err::SpecOutOfRange, "prism length must be >= 4");
  std::vector<std::vector<int>> rot(2 * n);
  for (int i = 0; i < n; i++) {
    rot[i] = {(i + 1) % n, (i + n - 1) % n, n + i};
    rot[n + i] = {n + (i + n - 1) % n, n + (i + 1) % n, i};
  }
  // orbit of (1,0) is the ring 0..n-1
  return RotationGraph::build(std::move(rot), Dart(1, 0));
}

RotationGraph gen_grid(int a, int b) {
  if (a < 2 || b < 2) fail(Err::SpecOutOfRange, "grid sides must be >= 2");
  auto id = [&](int r, int c) { return r * b + c; };
  std::vector<std::vector<int>> rot(a * b);
  for (int r = 0; r < a; r++)
    for (int c = 0; c < b; c++) {
      std::vector<int>& x = rot[id(r, c)];
      if (r > 0) x.push_back(id(r - 1, c));      // up
      if (c + 1 < b) x.push_back(id(r, c + 1));  // right
      if (r + 1 < a) x.push_back(id(r + 1, c));  // down
      if (c > 0) x.push_back(id(r, c - 1));      // left
    }
  return RotationGraph::build(std::move(rot), Dart(0, 1));
}

RotationGraph gen_dodecahedron() {
  // four concentric rings of five: outer cycle, two middle rings, inner cycle
  auto A = [](int i) { return (i % 5 + 5) % 5; };
  std::vector<std::vector<int>> rot(20);
  for (int i = 0; i < 5; i++) {
    int a = i, b = 5 + i, c = 10 + i, d = 15 + i;
    rot[a] = {A(i + 1), A(i - 1), b};
    rot[b] = {10 + A(i - 1), c, a};
    rot[c] = {5 + A(i + 1), b, d};
    rot[d] = {15 + A(i - 1), 15 + A(i + 1), c};
  }
  return RotationGraph::build(std::move(rot), Dart(1, 0));
}

RotationGraph gen_hexpatch(int r) {
  if (r < 1 || r > 6) fail(Err::SpecOutOfRange, "hexpatch radius must be in 1..6");
  // honeycomb disk: all hexagons whose center has hex-distance < r from origin
  struct P {
    double x, y;
  };
  auto key = [](double x, double y) {
    return std::make_pair((long long)std::llround(x * 1e4), (long long)std::llround(y * 1e4));
  };
  std::map<std::pair<long long, long long>, int> ids;
  std::vector<P> pts;
  std::vector<std::set<int>> adj;
  auto vertex = [&](double x, double y) {
    auto k = key(x, y);
    auto it = ids.find(k);
    if (it != ids.end()) return it->second;
    int id = (int)pts.size();
    ids.emplace(k, id);
    pts.push_back({x, y});
    adj.emplace_back();
    return id;
  };
  const double S3 = std::sqrt(3.0);
  const double PI = std::acos(-1.0);
  for (int q = -r + 1; q <= r - 1; q++)
    for (int s = -r + 1; s <= r - 1; s++) {
      if (std::abs(q + s) > r - 1) continue;
      double cx = S3 * (q + s / 2.0), cy = 1.5 * s;
      int prev = -1, first = -1;
      for (int k = 0; k < 6; k++) {
        double ang = PI / 6 + k * PI / 3;
        int v = vertex(cx + std::cos(ang), cy + std::sin(ang));
        if (k == 0) first = v;
        if (prev >= 0) {
          adj[prev].insert(v);
          adj[v].insert(prev);
        }
        prev = v;
      }
      adj[prev].insert(first);
      adj[first].insert(prev);
    }
  int n = (int)pts.size();
  std::vector<std::vector<int>> rot(n);
  for (int v = 0; v < n; v++) {
    rot[v].assign(adj[v].begin(), adj[v].end());
    std::sort(rot[v].begin(), rot[v].end(), [&](int a, int b) {
      return std::atan2(pts[a].y - pts[v].y, pts[a].x - pts[v].x) >
             std::atan2(pts[b].y - pts[v].y, pts[b].x - pts[v].x);
    });
  }
  int nb0 = rot[0][0];
  RotationGraph g = RotationGraph::build(std::move(rot), Dart(0, nb0));
  // the boundary is the unique longest face (ties cannot happen for r >= 2;
  // for r = 1 both faces are hexagons and either choice is the same graph)
  int best = 0;
  for (int f = 1; f < (int)g.faces().size(); f++)
    if (g.faces()[f].length() > g.faces()[best].length()) best = f;
  return g.with_outer(g.faces()[best].darts[0]);
}

RotationGraph gen_random_insertion(int n, std::uint64_t seed) {
  if (n < 5) fail(Err::SpecOutOfRange, "random_insertion needs n >= 5");
  std::mt19937_64 rng(seed);
  RotationGraph g = gen_cycle(5);
  auto pick = [&](int m) { return (int)(rng() % (std::uint64_t)m); };
  while (g.vertex_count() < n) {
    int want = n - g.vertex_count();
    // path length 2 or 3 adds 1 or 2 vertices between two face vertices
    int plen = (want == 1) ? 2 : 2 + pick(2);
    const FaceWalk& f = g.faces()[pick((int)g.faces().size())];
    int L = f.length();
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < L; i++)
      for (int j = i + 2; j < L; j++) {
        if (i == 0 && j == L - 1) continue;
        int u = f.darts[i].tail, w = f.darts[j].tail;
        if (u == w || g.adjacent(u, w)) continue;
        pairs.emplace_back(i, j);
      }
    if (pairs.empty()) continue;
    auto [i, j] = pairs[pick((int)pairs.size())];
    int u = f.darts[i].tail, w = f.darts[j].tail;
    int base = g.vertex_count();
    std::vector<std::vector<int>> rot(base + plen - 1);
    for (int v = 0; v < base; v++) rot[v] = g.rotation(v);
    // chain u - base - [base+1] - w spliced into the face corners
    int au = f.darts[(i + L - 1) % L].tail, aw = f.darts[(j + L - 1) % L].tail;
    rot[u].insert(rot[u].begin() + g.neighbor_index(u, au) + 1, base);
    rot[w].insert(rot[w].begin() + g.neighbor_index(w, aw) + 1, base + plen - 2);
    if (plen == 2) {
      rot[base] = {u, w};
    } else {
      rot[base] = {u, base + 1};
      rot[base + 1] = {base, w};
    }
    g = RotationGraph::build(std::move(rot), g.outer_dart());
  }
  return g;
}

}  // namespace

RotationGraph generate(const GenSpec& spec) {
  switch (spec.family) {
    case Family::Cycle: return gen_cycle(spec.n);
    case Family::Prism: return gen_prism(spec.n);
    case Family::Grid: return gen_grid(spec.n, spec.m);
    case Family::HexPatch: return gen_hexpatch(spec.n);
    case Family::Cube: return gen_prism(4);
    case Family::Dodecahedron: return gen_dodecahedron();
    case Family::RandomInsertion: return gen_random_insertion(spec.n, spec.seed);
  }
  fail(Err::SpecOutOfRange, "unknown family");
}

}  // namespace grotzsch
