#include "grotzsch/cli.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "grotzsch/discharging.hpp"
#include "grotzsch/io.hpp"
#include "grotzsch/oracle.hpp"
#include "grotzsch/solver.hpp"

namespace grotzsch {

namespace {

int code_of(const Error& e) {
  switch (e.code()) {
    case Err::NotSphere:
    case Err::TriangleFound:
      return 2;
    case Err::NoEligibleVertexPair:
    case Err::ProofOrderViolation:
    case Err::NoReductionFound:
    case Err::Internal:
      return 4;
    default:
      return 1;
  }
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(Err::Syntax, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) fail(Err::Syntax, "cannot open '" + path + "' for writing");
  f << text;
}

int cmd_color(const std::string& file, bool no_base, const std::string& trace_path,
              std::ostream& out) {
  ParsedFile pf = load_graph_file(file);
  SolverConfig cfg;
  cfg.use_brute_base = !no_base;
  auto [col, tr] = three_color(pf.graph, cfg);
  if (!trace_path.empty()) spill(trace_path, tr.to_text());
  out << serialize_coloring(col);
  return 0;
}

int cmd_extend(const std::string& file, std::ostream& out, std::ostream& err) {
  ParsedFile pf = load_graph_file(file);
  if (!pf.boundary) {
    err << "extend needs color lines in the input file\n";
    return 3;
  }
  PairCheck pc = check_valid_pair(pf.graph, *pf.boundary);
  if (!pc.ok) {
    err << "invalid pair: " << pc.reason << "\n";
    return 3;
  }
  auto [col, tr] = extend(ValidPair{std::move(pf.graph), std::move(*pf.boundary)});
  out << serialize_coloring(col);
  return 0;
}

int cmd_verify(const std::string& file, const std::string& coloring_file,
               std::ostream& out, std::ostream& err) {
  ParsedFile pf = load_graph_file(file);
  std::map<int, int> lines = parse_coloring_text(slurp(coloring_file));
  Coloring col(pf.graph.vertex_count());
  for (auto& [v, c] : lines) {
    if (v < 0 || v >= pf.graph.vertex_count()) {
      err << "coloring names unknown vertex " << v << "\n";
      return 1;
    }
    if (c < 1 || c > 3) {
      err << "vertex " << v << " has color " << c << ", want 1..3\n";
      return 1;
    }
    col[v] = c;
  }
  for (int v = 0; v < pf.graph.vertex_count(); v++)
    if (col[v] == 0) {
      err << "vertex " << v << " is uncolored\n";
      return 1;
    }
  if (auto e = first_improper_edge(pf.graph, col)) {
    out << "edge " << e->first << " " << e->second << "\n";
    return 1;
  }
  if (pf.boundary)
    for (int i = 0; i < pf.boundary->cycle.size(); i++) {
      int v = pf.boundary->cycle.verts[i];
      if (col[v] != pf.boundary->colors[i]) {
        out << "vertex " << v << "\n";
        err << "coloring disagrees with the file's boundary colors at vertex " << v
            << "\n";
        return 1;
      }
    }
  return 0;
}

int cmd_audit(const std::string& file, std::ostream& out) {
  ParsedFile pf = load_graph_file(file);
  AuditReport rep = audit(pf.graph, outer_cycle(pf.graph));
  out << rep.text;
  return 0;
}

int cmd_gen(const GenSpec& spec, const std::string& out_path) {
  RotationGraph g = generate(spec);
  spill(out_path, serialize_graph(g, nullptr, spec.manifest_line()));
  return 0;
}

int cmd_oracle(const std::string& file, std::ostream& out) {
  ParsedFile pf = load_graph_file(file);
  std::map<int, int> pre;
  if (pf.boundary)
    for (int i = 0; i < pf.boundary->cycle.size(); i++)
      pre[pf.boundary->cycle.verts[i]] = pf.boundary->colors[i];
  std::optional<Coloring> col = brute_force_3color(pf.graph, pre);
  if (!col) {
    out << "UNCOLORABLE\n";
    return 0;
  }
  out << serialize_coloring(*col);
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"3-coloring toolkit for triangle-free plane graphs"};
  app.require_subcommand(1);

  std::string file, coloring_file, out_path, trace_path, family;
  bool no_base = false;
  int n = 0, m = 0;
  std::uint64_t seed = 0;

  CLI::App* color = app.add_subcommand("color", "3-color a graph file");
  color->add_option("file", file)->required();
  color->add_flag("--no-base-shortcut", no_base,
                  "reduce all the way down instead of brute-forcing small cases");
  color->add_option("--trace", trace_path, "write the reduction trace here");

  CLI::App* extend = app.add_subcommand(
      "extend", "extend the file's boundary colors to the interior");
  extend->add_option("file", file)->required();

  CLI::App* verify =
      app.add_subcommand("verify", "check a coloring file against a graph file");
  verify->add_option("file", file)->required();
  verify->add_option("coloring", coloring_file)->required();

  CLI::App* audit_cmd = app.add_subcommand("audit", "print the discharging report");
  audit_cmd->add_option("file", file)->required();

  CLI::App* gen = app.add_subcommand("gen", "write a generated graph file");
  gen->add_option("--family", family, "cycle prism grid hexpatch cube dodecahedron random_insertion")
      ->required();
  gen->add_option("--n", n, "size parameter");
  gen->add_option("--m", m, "grid columns (defaults to --n)");
  gen->add_option("--seed", seed, "PRNG seed");
  gen->add_option("-o,--output", out_path)->required();

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force 3-color a graph file");
  oracle->add_option("file", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*color) return cmd_color(file, no_base, trace_path, out);
    if (*extend) return cmd_extend(file, out, err);
    if (*verify) return cmd_verify(file, coloring_file, out, err);
    if (*audit_cmd) return cmd_audit(file, out);
    if (*gen) {
      GenSpec spec;
      spec.family = family_from_name(family);
      spec.n = n;
      spec.m = m == 0 ? n : m;
      spec.seed = seed;
      return cmd_gen(spec, out_path);
    }
    if (*oracle) return cmd_oracle(file, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return code_of(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  }
  return 1;
}

}  // namespace grotzsch
