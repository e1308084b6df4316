#include "doctest.h"

#include "snc/graph.hpp"

using namespace snc;

namespace {
const char* fork_text = R"(# fork
vertex B w=-1
vertex T1 w=-2
vertex T2_1 w=-2
vertex T2_2 w=-2
vertex T3_1 w=-3
edge B T1
edge B T2_2
edge T2_2 T2_1
edge B T3_1
)";
}

TEST_SUITE("graph") {
  TEST_CASE("parse and serialize round trip") {
    DualGraph g = parse_graph(fork_text);
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 4);
    CHECK(g.is_tree());
    CHECK_FALSE(g.is_chain());
    CHECK(g.weight(g.index_of("T3_1")) == -3);
    DualGraph h = parse_graph(serialize_graph(g));
    CHECK(h == g);
    CHECK(branching_number(g, "B") == 3);
    CHECK(branching_number(g, "T2_2") == 2);
  }

  TEST_CASE("intersection matrix") {
    DualGraph g = parse_graph(fork_text);
    IntMatrix q = g.intersection_matrix();
    std::size_t b = g.index_of("B"), t = g.index_of("T1"), u = g.index_of("T2_1");
    CHECK(q(b, b) == -1);
    CHECK(q(b, t) == 1);
    CHECK(q(b, u) == 0);
    CHECK(q.symmetric());
  }

  TEST_CASE("maximal twigs") {
    DualGraph g = parse_graph(fork_text);
    auto tw = maximal_twigs(g);
    REQUIRE(tw.size() == 3);
    std::size_t total = 0;
    for (const auto& c : tw) total += c.size();
    CHECK(total == 4);
  }

  TEST_CASE("chains") {
    Chain c = chain_from_bracket({2, 3, 2});
    CHECK(c.admissible());
    CHECK(c.bracket() == "[2,3,2]");
    CHECK(c.reversed().bracket() == "[2,3,2]");
    DualGraph g = graph_of_chain(c);
    CHECK(g.is_chain());
    CHECK(g.vertex_count() == 3);
    CHECK_FALSE(chain_from_bracket({2, 1}).admissible());
  }

  TEST_CASE("components and induced subgraphs") {
    DualGraph g = parse_graph(fork_text);
    DualGraph h = g.without({g.index_of("B")});
    CHECK(h.components().size() == 3);
    CHECK(h.is_forest());
    CHECK_FALSE(h.connected());
  }

  TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_graph("vertex A w=-2\nvertex A w=-3\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("vertex A w=-2\nedge A B\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("vertex A w=-2\nedge A A\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("vertex A w=x\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("vertex A\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("frob A\n"), ParseError);
    try {
      parse_graph("vertex A w=-2\n\nvertex A w=1\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
  }

  TEST_CASE("missing file") { CHECK_THROWS_AS(load_graph_file("/nonexistent/x.graph"), IoError); }

  TEST_CASE("dot output") {
    std::string dot = emit_dot(parse_graph(fork_text));
    CHECK(dot.find("graph") != std::string::npos);
    CHECK(dot.find("T3_1") != std::string::npos);
  }

  TEST_CASE("divisors") {
    DualGraph g = parse_graph(fork_text);
    QDivisor d(g);
    d.set("B", Rational(1, 2));
    CHECK(d.coefficient("B") == Rational(1, 2));
    CHECK(d.coefficient("T1") == 0);
    CHECK_FALSE(d.zero());
  }
}
