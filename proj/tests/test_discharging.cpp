#include <doctest.h>

#include "fixtures.hpp"
#include "grotzsch/discharging.hpp"

using namespace grotzsch;
using fixtures::gen;

TEST_CASE("initial charges come from degrees and face lengths") {
  RotationGraph cube = gen(Family::Cube);
  ChargeLedger l = initial_charges(cube);
  CHECK(l.vertex_thirds == std::vector<int>(8, -3));
  CHECK(l.face_thirds == std::vector<int>(6, 0));

  RotationGraph dod = gen(Family::Dodecahedron);
  l = initial_charges(dod);
  CHECK(l.vertex_thirds == std::vector<int>(20, -3));
  CHECK(l.face_thirds == std::vector<int>(12, 3));
}

TEST_CASE("initial total is fixed by the Euler relation") {
  for (const RotationGraph& g :
       {gen(Family::Cycle, 6), gen(Family::Prism, 7), gen(Family::Grid, 3, 4),
        gen(Family::HexPatch, 2), gen(Family::RandomInsertion, 13, 0, 3),
        fixtures::wheel7(), fixtures::tower(5, 3), fixtures::two_chords8()})
    CHECK(initial_charges(g).total_thirds() == -24);
  // two components, each with its own face orbit set: -24 apiece
  CHECK(initial_charges(fixtures::floating12()).total_thirds() == -48);
}

TEST_CASE("redistribution conserves the total") {
  for (const RotationGraph& g :
       {gen(Family::Cube), gen(Family::Dodecahedron), gen(Family::Grid, 4, 4),
        gen(Family::HexPatch, 2), gen(Family::RandomInsertion, 16, 0, 9),
        fixtures::wheel7(), fixtures::tower(4, 4), fixtures::two_chords8()}) {
    ChargeLedger after = redistribute(g, outer_cycle(g));
    CHECK(after.total_thirds() == initial_charges(g).total_thirds());
    CHECK(after.total_thirds() == -24);
  }
}

TEST_CASE("hexagon ledger, golden text") {
  AuditReport r = audit(gen(Family::Cycle, 6), outer_cycle(gen(Family::Cycle, 6)));
  CHECK(r.text ==
        "V 0 init -6/3 final -5/3\n"
        "V 1 init -6/3 final -5/3\n"
        "V 2 init -6/3 final -5/3\n"
        "V 3 init -6/3 final -5/3\n"
        "V 4 init -6/3 final -5/3\n"
        "V 5 init -6/3 final -5/3\n"
        "F 0 len 6 init 6/3 final 6/3\n"
        "F 1 len 6 init 6/3 final 0/3\n"
        "CBOUND sum -30/3 proof_min -30/3\n"
        "OUTER F 0 len 6 final 6/3\n"
        "TOTAL -24/3\n");
  CHECK(r.negative_interior_vertices.empty());
  CHECK(r.negative_inner_faces.empty());
}

TEST_CASE("cube audit points every deficit at R5") {
  RotationGraph g = gen(Family::Cube);
  AuditReport r = audit(g, outer_cycle(g));
  CHECK(r.negative_interior_vertices.empty());
  CHECK(r.negative_inner_faces.size() == 5);
  for (int f : r.negative_inner_faces) {
    CHECK(g.faces()[f].length() == 4);
    CHECK(f != g.outer_face_index());
  }
  for (int v = 0; v < 8; v++)
    CHECK(r.final_.vertex_thirds[v] == (outer_cycle(g).contains(v) ? -3 : 0));
  CHECK(r.text.find("expect R5 (4-cycle distinct from the boundary)") != std::string::npos);
  CHECK(r.text.find("expect R6") == std::string::npos);
  CHECK(r.final_.total_thirds() == -24);
}

TEST_CASE("dodecahedron audit points every deficit at R6") {
  RotationGraph g = gen(Family::Dodecahedron);
  CycleRef c = outer_cycle(g);
  AuditReport r = audit(g, c);

  for (int z : c.verts) {
    std::vector<int> ties = tied_faces(g, c, z);
    CHECK(ties.size() == 1);
    CHECK(g.faces()[ties[0]].length() == 5);
    CHECK_FALSE(g.faces()[ties[0]].touches(z));
  }
  CHECK(tied_faces(g, c, 19).empty());  // off-boundary vertex never ties

  CHECK(r.negative_interior_vertices.empty());
  CHECK(r.negative_inner_faces.size() == 6);
  for (int z : c.verts) CHECK(r.final_.vertex_thirds[z] == -4);
  for (int v = 0; v < 20; v++)
    if (!c.contains(v)) CHECK(r.final_.vertex_thirds[v] == 0);
  CHECK(r.text.find("senders 5 expect R6") != std::string::npos);
  CHECK(r.text.find("expect R5") == std::string::npos);
  CHECK(r.text.find("CBOUND sum -20/3 proof_min -20/3") != std::string::npos);
  CHECK(r.final_.total_thirds() == -24);
}

TEST_CASE("wheel audit flags the three inner quads") {
  RotationGraph g = fixtures::wheel7();
  AuditReport r = audit(g, outer_cycle(g));
  CHECK(r.negative_inner_faces.size() == 3);
  for (int f : r.negative_inner_faces) {
    CHECK(g.faces()[f].length() == 4);
    CHECK(r.final_.face_thirds[f] == -2);
  }
  CHECK(r.final_.vertex_thirds[6] == 0);  // hub: interior, degree 3, fed thrice
  for (int v : {1, 3, 5}) CHECK(r.final_.vertex_thirds[v] == -5);
  for (int v : {0, 2, 4}) CHECK(r.final_.vertex_thirds[v] == -3);
  CHECK(r.final_.total_thirds() == -24);
}

TEST_CASE("tower audit, quads and a starved pentagon, no ties") {
  RotationGraph g = fixtures::tower(5, 3);
  CycleRef c = outer_cycle(g);
  for (int z : c.verts) CHECK(tied_faces(g, c, z).empty());
  AuditReport r = audit(g, c);
  CHECK(r.negative_interior_vertices.empty());
  int quads = 0, pents = 0;
  for (int f : r.negative_inner_faces) {
    int len = g.faces()[f].length();
    if (len == 4) quads++;
    if (len == 5) pents++;
    CHECK(r.final_.face_thirds[f] == -2);
  }
  CHECK(quads == 5);
  CHECK(pents == 1);
  CHECK(r.text.find("senders 5 expect R6") != std::string::npos);
  CHECK(r.final_.total_thirds() == -24);
}
