#pragma once

#include "snc/quadext.hpp"

#include <array>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace snc {

using Point = std::array<QuadExt, 3>;
using Line = std::array<QuadExt, 3>;  // a x + b y + c z = 0
using Mat3 = std::array<std::array<QuadExt, 3>, 3>;

// Ternary quadratic form x^T m x with m symmetric.
struct Conic {
  Mat3 m{};

  // xx x^2 + yy y^2 + zz z^2 + xy xy + xz xz + yz yz
  static Conic from_coefficients(const QuadExt& xx, const QuadExt& yy, const QuadExt& zz, const QuadExt& xy,
                                 const QuadExt& xz, const QuadExt& yz);
  QuadExt eval(const Point& p) const;
  QuadExt polar(const Point& p, const Point& q) const;  // p^T m q
  QuadExt det() const;
  bool smooth() const { return !det().is_zero(); }
};

using Curve = std::variant<Line, Conic>;

// Homogeneous polynomial in x, y, z over Q(e).
using Monomial = std::array<int, 3>;
using HomPoly = std::map<Monomial, QuadExt>;

// Expressions in x, y, z, e with rational constants, + - * / ^ and parentheses; "lhs=rhs" means lhs - rhs.
// Multiplication may be implicit: "2yz", "(1-e)x".
HomPoly parse_polynomial(std::string_view text);
QuadExt parse_scalar(std::string_view text);
Point parse_point(std::string_view text);  // "[1,e,e-1]"
Curve parse_curve(std::string_view text);  // degree 1 or 2 equation
std::string to_string(const Point& p);

QuadExt eval(const Line& l, const Point& p);
bool incident(const Point& p, const Curve& c);
bool collinear(const Point& a, const Point& b, const Point& c);
Line join(const Point& a, const Point& b);
Point meet(const Line& a, const Line& b);
bool projectively_equal(const Point& a, const Point& b);  // all 2x2 minors vanish
bool same_curve(const Curve& a, const Curve& b);          // proportional coefficients

QuadExt det3(const Mat3& m);
Mat3 inverse3(const Mat3& m);
Point apply(const Mat3& g, const Point& p);
Line apply_to_line(const Mat3& g, const Line& l);
Conic apply_to_conic(const Mat3& g, const Conic& c);
Curve apply_to_curve(const Mat3& g, const Curve& c);
Mat3 multiply(const Mat3& a, const Mat3& b);
Mat3 parse_matrix(std::string_view text);  // "[[1,-1,0],[0,-e,0],[0,-e,1]]", rows
// Smallest k <= max_order with g^k scalar, 0 if none.
int projective_order(const Mat3& g, int max_order = 12);

// Order of vanishing at p of c1 restricted to the line or smooth conic c2, via a rational
// parametrization of c2 based at p. DomainError if p is off either curve, c2 is degenerate or
// singular at p, or the curves share a component.
int intersection_multiplicity(const Curve& c1, const Curve& c2, const Point& p);

// Sum of intersection multiplicities over the given points, and whether they exhaust the
// restricted binary form (no further common points).
struct BezoutTally {
  int total = 0;
  int degree = 0;
  bool exhausted = false;
};
BezoutTally bezout_tally(const Curve& c1, const Curve& c2, const std::vector<Point>& points);

struct ConicFamilySolution {
  Rational u;
  Rational v;
  std::vector<Rational> candidates;  // rational roots of the eliminant before filtering
};

// T33(u) = {u yz = y^2 - x^2}, E(v) = {v(y^2 - x^2 - 2yz) = z^2 - yz - xz}: the unique (u, v) making
// E(v) meet T33(u) with multiplicity three at [1,1,0].
ConicFamilySolution conic_family_solve();
Conic family_t33(const Rational& u);
Conic family_e(const Rational& v);

// Named points, printed lines, lines joined from two named points, and "point lies on line" claims.
struct Configuration {
  std::vector<std::pair<std::string, Point>> points;
  std::vector<std::pair<std::string, Line>> lines;
  std::vector<std::array<std::string, 3>> joins;  // line name, point, point
  std::vector<std::pair<std::string, std::string>> claims;

  const Point& point(const std::string& name) const;
  Line line(const std::string& name) const;
  std::vector<std::string> line_names() const;
};

Configuration hesse_configuration();

struct ClaimResult {
  std::string point;
  std::string line;
  bool holds = false;
};
std::vector<ClaimResult> evaluate_claims(const Configuration& c);

struct HesseReport {
  std::vector<std::pair<std::string, int>> point_degrees;
  std::vector<std::pair<std::string, int>> line_degrees;
  int incidences = 0;
  bool distinct = false;
  bool passes() const;
};
HesseReport dual_hesse_check(const Configuration& c = hesse_configuration());

struct ActionClaim {
  std::string name;
  bool holds = false;
};
std::vector<ActionClaim> automorphism_action_check();

// Generic checks of a transformation: fixed points, swapped pairs, and preservation of a point set.
bool fixes(const Mat3& g, const Point& p);
bool maps_to(const Mat3& g, const Point& from, const Point& to);
bool permutes(const Mat3& g, const std::vector<Point>& set);
bool permutes_lines(const Mat3& g, const std::vector<Line>& set);

}  // namespace snc
