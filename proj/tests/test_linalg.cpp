#include "doctest.h"

#include "properties.hpp"
#include "snc/matrix.hpp"

#include <random>

using namespace snc;

TEST_SUITE("linalg") {
  TEST_CASE("determinants") {
    IntMatrix a{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
    CHECK(det_exact(a) == 4);
    IntMatrix s{{1, 2}, {2, 4}};
    CHECK(det_exact(s) == 0);
    CHECK(det_exact(IntMatrix(0, 0)) == 1);
    RatMatrix r = to_rational(a);
    CHECK(det_exact(r) == 4);
  }

  TEST_CASE("determinant against elimination oracle") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coef(-9, 9);
    for (int t = 0; t < 300; ++t) {
      std::size_t n = 1 + t % 7;
      IntMatrix m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = coef(rng);
      CHECK(Rational(det_exact(m)) == testing::oracle_det(m));
    }
  }

  TEST_CASE("solve and nullspace") {
    RatMatrix m = to_rational(IntMatrix{{2, 1}, {1, 1}});
    RatVector x = solve_rational(m, {Rational(3), Rational(2)});
    CHECK(x[0] == 1);
    CHECK(x[1] == 1);
    RatMatrix sing = to_rational(IntMatrix{{1, 1}, {1, 1}});
    CHECK_THROWS_AS(solve_rational(sing, {Rational(1), Rational(0)}), SingularMatrixError);
    CHECK(rank(sing) == 1);
    auto ns = nullspace(sing);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0][0] + ns[0][1] == 0);
  }

  TEST_CASE("definiteness") {
    CHECK(is_negative_definite(IntMatrix{{-2, 1}, {1, -2}}));
    CHECK_FALSE(is_negative_definite(IntMatrix{{-1, 1}, {1, -1}}));
    CHECK_FALSE(is_negative_definite(IntMatrix{{-1, 2}, {2, -1}}));
    CHECK(testing::oracle_negative_semidefinite(IntMatrix{{-1, 1}, {1, -1}}));
    CHECK_FALSE(testing::oracle_negative_semidefinite(IntMatrix{{-1, 2}, {2, -1}}));
  }

  TEST_CASE("smith normal form") {
    IntMatrix m{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
    SmithForm sf = smith_normal_form(m);
    CHECK(sf.u * m * sf.v == sf.s);
    auto d = sf.diagonal();
    REQUIRE(d.size() == 3);
    CHECK(d[0] == 2);
    CHECK(d[1] == 6);
    CHECK(d[2] == 12);
    CHECK(torsion_of_cokernel(IntMatrix{{2, 0}, {0, 3}}).order() == 6);
    CHECK(torsion_of_cokernel(IntMatrix{{2, 0}, {0, 3}}).factors().size() == 1);
    CHECK(torsion_of_cokernel(IntMatrix{{1, 0}, {0, 1}}).trivial());
  }

  TEST_CASE("integer solutions") {
    auto s = solve_integer(IntMatrix{{2, 4}}, {BigInt(6)});
    REQUIRE(s.has_value());
    CHECK(2 * s->particular[0] + 4 * s->particular[1] == 6);
    CHECK(s->kernel.size() == 1);
    CHECK_FALSE(solve_integer(IntMatrix{{2, 4}}, {BigInt(3)}).has_value());
  }
}

TEST_SUITE("properties") {
  TEST_CASE("smith normal form on random matrices") {
    auto r = testing::smith_suite(4, 1000);
    INFO(r.first_failure);
    CHECK(r.cases == 1000);
    CHECK(r.ok());
  }
}
