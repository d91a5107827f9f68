#include "grotzsch/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace grotzsch {

namespace {

[[noreturn]] void bad_line(int lineno, const std::string& msg) {
  fail(Err::Syntax, "line " + std::to_string(lineno) + ": " + msg);
}

int want_int(std::istringstream& iss, int lineno, const char* what) {
  long long x;
  if (!(iss >> x)) bad_line(lineno, std::string("expected ") + what);
  if (x < -1000000000LL || x > 1000000000LL)
    bad_line(lineno, std::string(what) + " out of range");
  return (int)x;
}

void want_end(std::istringstream& iss, int lineno) {
  std::string rest;
  if (iss >> rest) bad_line(lineno, "trailing tokens: '" + rest + "'");
}

int want_vertex(std::istringstream& iss, int lineno, int n) {
  int v = want_int(iss, lineno, "vertex id");
  if (v < 0 || v >= n) bad_line(lineno, "vertex id " + std::to_string(v) + " not in [0, " + std::to_string(n) + ")");
  return v;
}

}  // namespace

ParsedFile parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  bool saw_header = false;
  int n = -1;
  std::vector<std::vector<int>> rot;
  std::vector<bool> seen_r;
  bool saw_outer = false;
  Dart outer;
  std::vector<std::pair<int, int>> color_lines;

  while (std::getline(in, line)) {
    lineno++;
    std::istringstream iss(line);
    std::string key;
    if (!(iss >> key) || key[0] == '#') continue;

    if (!saw_header) {
      if (key != "pg") bad_line(lineno, "expected header 'pg 1'");
      int ver = want_int(iss, lineno, "format version");
      if (ver != 1) bad_line(lineno, "unsupported format version " + std::to_string(ver));
      want_end(iss, lineno);
      saw_header = true;
    } else if (key == "n") {
      if (n >= 0) bad_line(lineno, "duplicate 'n' line");
      n = want_int(iss, lineno, "vertex count");
      if (n < 1) bad_line(lineno, "vertex count must be positive");
      want_end(iss, lineno);
      rot.assign(n, {});
      seen_r.assign(n, false);
    } else if (key == "r") {
      if (n < 0) bad_line(lineno, "'r' before 'n'");
      int v = want_vertex(iss, lineno, n);
      if (seen_r[v]) bad_line(lineno, "duplicate rotation for vertex " + std::to_string(v));
      seen_r[v] = true;
      int d = want_int(iss, lineno, "degree");
      if (d < 0) bad_line(lineno, "negative degree");
      for (int i = 0; i < d; i++) {
        int u = want_vertex(iss, lineno, n);
        if (u == v) fail(Err::Loop, "line " + std::to_string(lineno) + ": self-loop at vertex " + std::to_string(v));
        if (std::find(rot[v].begin(), rot[v].end(), u) != rot[v].end())
          fail(Err::MultiEdge, "line " + std::to_string(lineno) + ": neighbor " + std::to_string(u) + " repeated");
        rot[v].push_back(u);
      }
      want_end(iss, lineno);
    } else if (key == "outer") {
      if (n < 0) bad_line(lineno, "'outer' before 'n'");
      if (saw_outer) bad_line(lineno, "duplicate 'outer' line");
      saw_outer = true;
      outer.tail = want_vertex(iss, lineno, n);
      outer.head = want_vertex(iss, lineno, n);
      want_end(iss, lineno);
    } else if (key == "color") {
      if (n < 0) bad_line(lineno, "'color' before 'n'");
      int v = want_vertex(iss, lineno, n);
      int c = want_int(iss, lineno, "color");
      if (c < 1 || c > 3) bad_line(lineno, "color must be 1, 2 or 3");
      for (auto& [pv, pc] : color_lines)
        if (pv == v) bad_line(lineno, "duplicate color for vertex " + std::to_string(v));
      color_lines.push_back({v, c});
      want_end(iss, lineno);
    } else {
      bad_line(lineno, "unknown keyword '" + key + "'");
    }
  }

  if (!saw_header) fail(Err::Syntax, "empty input, expected 'pg 1' header");
  if (n < 0) fail(Err::Syntax, "missing 'n' line");
  if (!saw_outer) fail(Err::Syntax, "missing 'outer' line");

  ParsedFile pf{RotationGraph::build(std::move(rot), outer), std::nullopt};

  if (!color_lines.empty()) {
    CycleRef c = outer_cycle(pf.graph);
    if ((int)color_lines.size() != c.size())
      fail(Err::BoundaryNotOuterCycle, "color lines must cover the outer cycle exactly (" +
                                           std::to_string(c.size()) + " vertices)");
    std::vector<int> cols(c.size());
    for (auto& [v, col] : color_lines) {
      int i = -1;
      for (int j = 0; j < c.size(); j++)
        if (c.verts[j] == v) i = j;
      if (i < 0)
        fail(Err::BoundaryNotOuterCycle,
             "colored vertex " + std::to_string(v) + " is not on the outer cycle");
      cols[i] = col;
    }
    pf.boundary = BoundaryColoring(c.verts, cols);
    if (!pf.boundary->proper())
      fail(Err::NotProper, "color lines are not a proper cycle coloring");
  }
  return pf;
}

ParsedFile load_graph_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(Err::Syntax, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_graph_text(ss.str());
}

std::string serialize_graph(const RotationGraph& g, const BoundaryColoring* boundary,
                            const std::string& comment) {
  std::ostringstream os;
  if (!comment.empty()) {
    std::istringstream cs(comment);
    std::string cl;
    while (std::getline(cs, cl)) os << "# " << cl << "\n";
  }
  os << "pg 1\n";
  os << "n " << g.vertex_count() << "\n";
  for (int v = 0; v < g.vertex_count(); v++) {
    const std::vector<int>& r = g.rotation(v);
    os << "r " << v << " " << r.size();
    if (!r.empty()) {
      size_t start = std::min_element(r.begin(), r.end()) - r.begin();
      for (size_t i = 0; i < r.size(); i++) os << " " << r[(start + i) % r.size()];
    }
    os << "\n";
  }
  os << "outer " << g.outer_dart().tail << " " << g.outer_dart().head << "\n";
  if (boundary) {
    std::vector<std::pair<int, int>> lines;
    for (int i = 0; i < boundary->cycle.size(); i++)
      lines.push_back({boundary->cycle.verts[i], boundary->colors[i]});
    std::sort(lines.begin(), lines.end());
    for (auto& [v, c] : lines) os << "color " << v << " " << c << "\n";
  }
  return os.str();
}

std::map<int, int> parse_coloring_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::map<int, int> out;
  while (std::getline(in, line)) {
    lineno++;
    std::istringstream iss(line);
    std::string key;
    if (!(iss >> key) || key[0] == '#') continue;
    if (key != "c") bad_line(lineno, "expected 'c <vertex> <color>'");
    int v = want_int(iss, lineno, "vertex id");
    int c = want_int(iss, lineno, "color");
    if (v < 0) bad_line(lineno, "negative vertex id");
    if (c < 1 || c > 3) bad_line(lineno, "color must be 1, 2 or 3");
    if (out.count(v)) bad_line(lineno, "duplicate color for vertex " + std::to_string(v));
    out[v] = c;
    want_end(iss, lineno);
  }
  return out;
}

std::string serialize_coloring(const Coloring& col) {
  std::ostringstream os;
  for (int v = 0; v < col.size(); v++)
    if (col[v] != 0) os << "c " << v << " " << col[v] << "\n";
  return os.str();
}

}  // namespace grotzsch
