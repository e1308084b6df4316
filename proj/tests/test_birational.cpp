#include "doctest.h"

#include "properties.hpp"
#include "snc/birational.hpp"

using namespace snc;

namespace {
DualGraph chain(std::initializer_list<Weight> negated) { return graph_of_chain(chain_from_bracket(negated, "C")); }
}  // namespace

TEST_SUITE("birational") {
  TEST_CASE("blow-up and contraction") {
    DualGraph g = chain({2, 2});
    DualGraph s = blowup_graph(g, Center::vertex(g.id(0)), "N");
    CHECK(s.vertex_count() == 3);
    CHECK(s.weight(s.index_of("N")) == -1);
    CHECK(s.weight(s.index_of(g.id(0))) == -3);
    DualGraph e = blowup_graph(g, Center::edge(g.id(0), g.id(1)), "N");
    CHECK_FALSE(e.adjacent(e.index_of(g.id(0)), e.index_of(g.id(1))));
    CHECK(canonical_tree_form(contract_minus_one(e, "N")) == canonical_tree_form(g));
    CHECK(canonical_tree_form(contract_minus_one(s, "N")) == canonical_tree_form(g));
    CHECK_THROWS_AS(contract_minus_one(g, g.id(0)), DomainError);
    CHECK_THROWS_AS(blowup_graph(g, Center::edge(g.id(0), "nope")), DomainError);
  }

  TEST_CASE("canonical forms ignore ids") {
    DualGraph a = chain({3, 1, 2});
    DualGraph b = chain({2, 1, 3});
    CHECK(canonical_tree_form(a) == canonical_tree_form(b));
    CHECK(canonical_tree_form(a) != canonical_tree_form(chain({3, 1, 3})));
  }

  TEST_CASE("[0] is a fiber") {
    DualGraph g;
    g.add_vertex("F", 0);
    CHECK(is_valid_fiber(g).valid);
    CHECK(fiber_multiplicities(g).multiplicity("F") == 1);
  }

  TEST_CASE("[2,1,2] is a fiber with multiplicities 1,2,1") {
    DualGraph g = chain({2, 1, 2});
    FiberSearch fs = is_valid_fiber(g);
    CHECK(fs.valid);
    CHECK(fs.trace.size() == 2);
    FiberGraph f = fiber_multiplicities(g);
    CHECK(f.multiplicity(g.id(0)) == 1);
    CHECK(f.multiplicity(g.id(1)) == 2);
    CHECK(f.multiplicity(g.id(2)) == 1);
    UniqueMinusOneReport u = unique_minus_one_checks(f);
    CHECK(u.minus_one == g.id(1));
    CHECK(u.passes());
  }

  TEST_CASE("[1,1] and [1,2,1] are fibers") {
    CHECK(is_valid_fiber(chain({1, 1})).valid);
    FiberGraph f = fiber_multiplicities(chain({1, 2, 1}));
    for (const auto& m : f.multiplicities) CHECK(m == 1);
  }

  TEST_CASE("non-fibers") {
    CHECK_FALSE(is_valid_fiber(chain({3, 1, 3})).valid);
    CHECK_FALSE(is_valid_fiber(chain({2, 2, 1})).valid);
    CHECK_FALSE(is_valid_fiber(chain({2, 2})).valid);
    CHECK_THROWS_AS(fiber_multiplicities(chain({3, 1, 3})), DomainError);
  }

  TEST_CASE("branched fiber") {
    DualGraph g = blowup_graph(chain({2, 1, 2}), Center::vertex("C2"), "N");
    FiberSearch fs = is_valid_fiber(g);
    CHECK(fs.valid);
    FiberGraph f = fiber_multiplicities(g);
    CHECK(f.multiplicity("N") == 2);
    CHECK(f.multiplicity("C2") == 2);
    CHECK(f.multiplicity("C1") == 1);
    CHECK(unique_minus_one_checks(f).passes());

    DualGraph h;
    h.add_vertex("C", -1);
    for (const char* t : {"A", "B", "D"}) {
      h.add_vertex(t, -2);
      h.add_edge("C", t);
    }
    CHECK_FALSE(is_valid_fiber(h).valid);
  }

  TEST_CASE("ruling bookkeeping identity") {
    CHECK(fujita_check({2, 1, 1, 9, 9}));
    CHECK(fujita_check({2, 1, 2, 9, 8}));
    CHECK_FALSE(fujita_check({2, 1, 1, 9, 8}));
  }
}

TEST_SUITE("properties") {
  TEST_CASE("exhaustive fiber oracle, trees up to six vertices") {
    auto r = testing::fiber_oracle_suite(6, -4, 1);
    CHECK(r.graphs == 306114);
    CHECK(r.valid == 177);
    INFO(r.kernel_criterion_with_genus.first_failure);
    CHECK(r.kernel_criterion_with_genus.ok());
    INFO(r.multiplicity_replay.first_failure);
    CHECK(r.multiplicity_replay.ok());
    // semidefinite with a positive rank-one kernel and a (-1)-vertex is not enough on its own
    CHECK(r.kernel_criterion.failures == 127);
  }

  TEST_CASE("semidefinite kernel without K.F = -2") {
    DualGraph g;
    g.add_vertex("C", -1);
    g.add_vertex("A", -2);
    g.add_vertex("B", -4);
    g.add_vertex("D", -4);
    g.add_edge("C", "A");
    g.add_edge("C", "B");
    g.add_edge("C", "D");
    IntMatrix q = g.intersection_matrix();
    CHECK(testing::oracle_negative_semidefinite(q));
    CHECK(testing::oracle_det(q) == 0);
    CHECK_FALSE(is_valid_fiber(g).valid);
  }

  TEST_CASE("tree shape counts") {
    CHECK(testing::tree_shapes(4).size() == 2);
    CHECK(testing::tree_shapes(5).size() == 3);
    CHECK(testing::tree_shapes(6).size() == 6);
  }
}
