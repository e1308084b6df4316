#include "doctest.h"

#include "snc/divisor.hpp"
#include "snc/lattice.hpp"

#include <fstream>
#include <sstream>

using namespace snc;

namespace {
std::string fixture(const std::string& name) { return std::string(SNC_FIXTURE_DIR) + "/" + name; }

const char* two_points = R"(curve L degree=1
curve M degree=1
curve N degree=1
blowup P at L,M
blowup R at L,N
)";
}  // namespace

TEST_SUITE("lattice") {
  TEST_CASE("basis and canonical class") {
    SurfaceLattice l(3);
    CHECK(l.rank() == 4);
    CHECK(l.pair(l.hyperplane(), l.hyperplane()) == 1);
    CHECK(l.pair(l.exceptional(2), l.exceptional(2)) == -1);
    CHECK(l.pair(l.hyperplane(), l.exceptional(1)) == 0);
    CHECK(l.pair(l.canonical(), l.canonical()) == 6);
    CHECK(format_class(l.canonical()) == "-3H+e1+e2+e3");
  }

  TEST_CASE("program classes") {
    SurfaceLattice l = run_program(parse_program(two_points));
    CHECK(l.rank() == 3);
    CHECK(format_class(l.class_of("L")) == "H-e1-e2");
    CHECK(format_class(l.class_of("M")) == "H-e1");
    CHECK(l.pair("L", "L") == -1);
    CHECK(l.pair("P", "L") == 1);
    CHECK(l.pair("M", "N") == 1);
    IntVector k = l.class_of_expression("K");
    CHECK(k == l.canonical());
    for (const auto& n : l.names()) {
      const IntVector& v = l.class_of(n);
      CHECK(l.pair(v, v) + l.pair(v, k) == -2);
    }
  }

  TEST_CASE("adjunction is enforced") {
    SurfaceLattice l(1);
    IntVector conic = l.zero();
    conic[0] = 2;
    CHECK_NOTHROW(l.add_class("C", conic));
    IntVector cubic = l.zero();
    cubic[0] = 3;
    CHECK_THROWS_AS(l.add_class("D", cubic), DomainError);
  }

  TEST_CASE("program parse errors") {
    CHECK_THROWS_AS(parse_program("curve L degree=1\nblowup P at L,Q\n"), ParseError);
    CHECK_THROWS_AS(parse_program("curve L degree=x\n"), ParseError);
    CHECK_THROWS_AS(parse_program("curve L degree=1\ncurve L degree=1\n"), ParseError);
    CHECK_THROWS_AS(parse_program("explode L\n"), ParseError);
    CHECK_THROWS_AS(load_program_file("/nonexistent.arr"), IoError);
  }

  TEST_CASE("boundary graph and homology of the fixtures") {
    SurfaceLattice l = run_program(load_program_file(fixture("y244.arr")));
    CHECK(l.rank() == 9);
    CHECK(l.pair(l.canonical(), l.canonical()) == 1);
    std::vector<std::string> d{"T3_1", "T3_2", "T3_3", "T2_1", "T2_2", "T2_3", "T1", "B"};
    DualGraph g = extract_boundary_graph(l, d);
    CHECK(g.is_tree());
    CHECK(discriminant(g) == -32);
    CHECK(h1_order(l, d).order() == 4);
    EulerNumbers e = euler_numbers(l, d, {"E"});
    CHECK(e.surface == 11);
    CHECK(e.boundary == 9);
    CHECK(e.open == 0);
    for (const auto& x : k_plus_sharp_class(l, d)) CHECK(x == 0);

    SurfaceLattice m = run_program(load_program_file(fixture("y333.arr")));
    std::vector<std::string> d3{"T1_1", "T1_2", "T2_1", "T2_2", "T3_1", "T3_2", "B"};
    CHECK(discriminant(extract_boundary_graph(m, d3)) == -27);
    CHECK(h1_order(m, d3).order() == 3);
  }

  TEST_CASE("curve classes from intersection numbers") {
    SurfaceLattice l = run_program(parse_program(two_points));
    std::vector<ClassConstraint> cs{{l.exceptional(1), BigInt(1)}, {l.exceptional(2), BigInt(1)}};
    auto sols = solve_curve_class(l, cs, -1);
    REQUIRE(sols.size() == 1);
    CHECK(format_class(sols[0]) == "H-e1-e2");
  }

  TEST_CASE("ruling decomposition") {
    SurfaceLattice l = run_program(parse_program(two_points));
    // lines through the first point
    IntVector f = l.class_of("M");
    RulingDecomposition r = ruling_decompose(l, f, l.names(), {"L", "N"});
    CHECK(l.pair(r.fiber_class, r.fiber_class) == 0);
    bool found = false;
    for (const auto& fr : r.fibers)
      if (fr.complete && fr.components.size() == 2) found = true;
    CHECK(found);
  }
}
