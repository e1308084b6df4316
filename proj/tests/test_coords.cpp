#include "doctest.h"

#include "snc/coords.hpp"

#include <random>

using namespace snc;

namespace {
QuadExt random_element(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-12, 12), den(1, 7);
  return QuadExt(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
}

QuadExt random_nonzero(std::mt19937_64& rng) {
  QuadExt x;
  do x = random_element(rng);
  while (x.is_zero());
  return x;
}

Point random_point(std::mt19937_64& rng) {
  Point p;
  do p = {random_element(rng), random_element(rng), random_element(rng)};
  while (p[0].is_zero() && p[1].is_zero() && p[2].is_zero());
  return p;
}

bool all_claims_hold(const Configuration& c) {
  for (const auto& r : evaluate_claims(c))
    if (!r.holds) return false;
  return true;
}
}  // namespace

TEST_SUITE("coords") {
  TEST_CASE("field axioms in Q(e)") {
    const QuadExt e = QuadExt::epsilon();
    CHECK((e * e - e + QuadExt(1)).is_zero());
    CHECK(e * e * e == QuadExt(-1));
    std::mt19937_64 rng(5);
    for (int t = 0; t < 1000; ++t) {
      QuadExt a = random_element(rng), b = random_element(rng), c = random_element(rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a - a).is_zero());
      CHECK((a * b).norm() == a.norm() * b.norm());
      CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
      if (!a.is_zero()) {
        CHECK(a * a.inverse() == QuadExt(1));
        CHECK(a.norm() > 0);
      }
    }
    CHECK_THROWS_AS(QuadExt(0).inverse(), DomainError);
  }

  TEST_CASE("parsing") {
    CHECK(parse_scalar("e^2") == QuadExt(-1, 1));
    CHECK(parse_scalar("(1-e)/2") == QuadExt(Rational(1, 2), Rational(-1, 2)));
    Point p = parse_point("[1,e,e-1]");
    CHECK(p[1] == QuadExt::epsilon());
    CHECK(std::holds_alternative<Line>(parse_curve("y=x+z")));
    CHECK(std::holds_alternative<Conic>(parse_curve("2yz=y^2-x^2")));
    CHECK_THROWS_AS(parse_curve("x^3=y^2z"), DomainError);
    CHECK_THROWS(parse_point("[1,2]"));
  }

  TEST_CASE("collinearity is invariant under rescaling") {
    std::mt19937_64 rng(6);
    for (int t = 0; t < 300; ++t) {
      Point a = random_point(rng), b = random_point(rng);
      if (projectively_equal(a, b)) continue;
      QuadExt s = random_element(rng), u = random_element(rng);
      Point c{s * a[0] + u * b[0], s * a[1] + u * b[1], s * a[2] + u * b[2]};
      Point d = random_point(rng);
      bool base = collinear(a, b, d);
      QuadExt k = random_nonzero(rng);
      Point d2{k * d[0], k * d[1], k * d[2]};
      CHECK(collinear(a, b, d2) == base);
      if (!(c[0].is_zero() && c[1].is_zero() && c[2].is_zero())) {
        CHECK(collinear(a, b, c));
        CHECK(eval(join(a, b), c).is_zero());
      }
    }
  }

  TEST_CASE("join and meet") {
    Point a = parse_point("[1,0,0]"), b = parse_point("[0,1,0]");
    Line l = join(a, b);
    CHECK(eval(l, a).is_zero());
    CHECK(eval(l, b).is_zero());
    Line m = std::get<Line>(parse_curve("x=y"));
    CHECK(projectively_equal(meet(l, m), parse_point("[1,1,0]")));
  }

  TEST_CASE("intersection multiplicities and Bezout") {
    Curve c = parse_curve("y^2=xz");
    Curve tangent = parse_curve("x=0");
    Point p = parse_point("[0,0,1]");
    CHECK(intersection_multiplicity(tangent, c, p) == 2);
    BezoutTally t = bezout_tally(c, tangent, {p});
    CHECK(t.total == 2);
    CHECK(t.degree == 2);
    CHECK(t.exhausted);
    Curve secant = parse_curve("y=0");
    BezoutTally s = bezout_tally(c, secant, {p});
    CHECK(s.total == 1);
    CHECK_FALSE(s.exhausted);
    CHECK_THROWS_AS(intersection_multiplicity(tangent, c, parse_point("[1,0,0]")), DomainError);

    Curve t33 = parse_curve("-2yz=y^2-x^2");
    Curve e = parse_curve("1/2(y^2-x^2-2yz)=z^2-yz-xz");
    CHECK(intersection_multiplicity(e, t33, parse_point("[1,1,0]")) == 3);
  }

  TEST_CASE("conic family") {
    ConicFamilySolution s = conic_family_solve();
    CHECK(s.u == -2);
    CHECK(s.v == Rational(1, 2));
    CHECK(family_t33(s.u).smooth());
    CHECK(family_e(s.v).smooth());
  }

  TEST_CASE("configuration claims and Hesse incidences") {
    Configuration c = hesse_configuration();
    auto claims = evaluate_claims(c);
    CHECK(claims.size() == 32);
    CHECK(all_claims_hold(c));
    HesseReport h = dual_hesse_check(c);
    CHECK(h.passes());
    CHECK(h.incidences == 36);
  }

  TEST_CASE("mutated configurations are caught") {
    Configuration base = hesse_configuration();
    int mutations = 0;
    for (std::size_t i = 0; i < base.points.size(); ++i)
      for (std::size_t k = 0; k < 3; ++k) {
        Configuration c = base;
        c.points[i].second[k] += QuadExt(1);
        if (projectively_equal(c.points[i].second, base.points[i].second)) continue;
        ++mutations;
        INFO(base.points[i].first << " coordinate " << k);
        CHECK_FALSE((all_claims_hold(c) && dual_hesse_check(c).passes()));
      }
    for (std::size_t i = 0; i < base.lines.size(); ++i)
      for (std::size_t k = 0; k < 3; ++k) {
        Configuration c = base;
        c.lines[i].second[k] += QuadExt(1);
        if (same_curve(Curve(c.lines[i].second), Curve(base.lines[i].second))) continue;
        ++mutations;
        INFO(base.lines[i].first << " coefficient " << k);
        CHECK_FALSE(all_claims_hold(c));
      }
    CHECK(mutations > 50);
  }

  TEST_CASE("projective transformations") {
    Mat3 z3 = parse_matrix("[[1,-1,0],[0,-e,0],[0,-e,1]]");
    CHECK(projective_order(z3) == 3);
    Mat3 z2 = parse_matrix("[[1,0,0],[0,-1,0],[0,0,1]]");
    CHECK(projective_order(z2) == 2);
    CHECK(projective_order(multiply(z2, z2)) == 1);
    Mat3 g = parse_matrix("[[1,1,0],[0,1,0],[0,0,1]]");
    CHECK(projective_order(g) == 0);
    CHECK_THROWS(projective_order(parse_matrix("[[1,0,0],[0,0,0],[0,0,1]]")));
    CHECK(fixes(z2, parse_point("[0,0,1]")));
    CHECK(maps_to(z2, parse_point("[1,-1,0]"), parse_point("[1,1,0]")));
    Mat3 inv = inverse3(g);
    CHECK(projective_order(multiply(g, inv)) == 1);
    CHECK(same_curve(apply_to_curve(z2, parse_curve("2yz=y^2-x^2")), parse_curve("-2yz=y^2-x^2")));
  }

  TEST_CASE("automorphism claims") {
    for (const auto& c : automorphism_action_check()) {
      INFO(c.name);
      CHECK(c.holds);
    }
  }
}
