#include "snc/coords.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <optional>

namespace snc {

std::string QuadExt::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  if (a_ != 0) s = snc::to_string(a_);
  if (b_ != 0) {
    Rational mag = b_ < 0 ? Rational(-b_) : b_;
    if (b_ < 0)
      s += "-";
    else if (!s.empty())
      s += "+";
    if (mag != 1) s += snc::to_string(mag);
    s += "e";
  }
  return s;
}

// ---- polynomial parsing ----

namespace {

HomPoly poly_const(const QuadExt& c) {
  HomPoly p;
  if (!c.is_zero()) p[{0, 0, 0}] = c;
  return p;
}

void poly_add_to(HomPoly& a, const HomPoly& b, int sgn) {
  for (const auto& [m, c] : b) {
    QuadExt v = a[m] + (sgn > 0 ? c : -c);
    if (v.is_zero())
      a.erase(m);
    else
      a[m] = v;
  }
}

HomPoly poly_mul(const HomPoly& a, const HomPoly& b) {
  HomPoly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Monomial m{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]};
      poly_add_to(out, HomPoly{{m, ca * cb}}, 1);
    }
  return out;
}

class PolyParser {
public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  HomPoly equation() {
    HomPoly lhs = expr();
    skip();
    if (peek() == '=') {
      ++i_;
      HomPoly rhs = expr();
      poly_add_to(lhs, rhs, -1);
    }
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return lhs;
  }

private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("cannot parse '" + std::string(s_) + "': " + what);
  }

  HomPoly expr() {
    HomPoly out;
    int sgn = 1;
    if (peek() == '+' || peek() == '-') {
      sgn = s_[i_] == '-' ? -1 : 1;
      ++i_;
    }
    poly_add_to(out, term(), sgn);
    while (peek() == '+' || peek() == '-') {
      sgn = s_[i_] == '-' ? -1 : 1;
      ++i_;
      poly_add_to(out, term(), sgn);
    }
    return out;
  }

  bool starts_atom(char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || std::isalpha(static_cast<unsigned char>(c)); }

  HomPoly term() {
    HomPoly out = power();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++i_;
        out = poly_mul(out, power());
      } else if (c == '/') {
        ++i_;
        HomPoly d = power();
        if (d.size() != 1 || d.begin()->first != Monomial{0, 0, 0}) fail("division by a non-constant");
        out = poly_mul(out, poly_const(d.begin()->second.inverse()));
      } else if (starts_atom(c)) {
        out = poly_mul(out, power());
      } else {
        return out;
      }
    }
  }

  HomPoly power() {
    HomPoly base = atom();
    if (peek() == '^') {
      ++i_;
      skip();
      std::size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      if (j == i_) fail("expected exponent");
      int k = std::stoi(std::string(s_.substr(i_, j - i_)));
      i_ = j;
      HomPoly out = poly_const(QuadExt(1));
      for (int t = 0; t < k; ++t) out = poly_mul(out, base);
      return out;
    }
    return base;
  }

  HomPoly atom() {
    char c = peek();
    if (c == '(') {
      ++i_;
      HomPoly inner = expr();
      if (peek() != ')') fail("missing ')'");
      ++i_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      BigInt n(std::string(s_.substr(i_, j - i_)));
      i_ = j;
      return poly_const(QuadExt(Rational(n)));
    }
    ++i_;
    switch (c) {
      case 'x': return HomPoly{{{1, 0, 0}, QuadExt(1)}};
      case 'y': return HomPoly{{{0, 1, 0}, QuadExt(1)}};
      case 'z': return HomPoly{{{0, 0, 1}, QuadExt(1)}};
      case 'e': return poly_const(QuadExt::epsilon());
      default: fail(c ? "unexpected '" + std::string(1, c) + "'" : "unexpected end");
    }
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

QuadExt coefficient(const HomPoly& p, const Monomial& m) {
  auto it = p.find(m);
  return it == p.end() ? QuadExt() : it->second;
}

}  // namespace

HomPoly parse_polynomial(std::string_view text) { return PolyParser(text).equation(); }

QuadExt parse_scalar(std::string_view text) {
  HomPoly p = parse_polynomial(text);
  if (p.empty()) return QuadExt();
  if (p.size() != 1 || p.begin()->first != Monomial{0, 0, 0})
    throw DomainError("'" + std::string(text) + "' is not a constant");
  return p.begin()->second;
}

Point parse_point(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
          s.end());
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw DomainError("point must look like [a,b,c]");
  s = s.substr(1, s.size() - 2);
  Point p;
  std::size_t k = 0, start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ',') {
      if (k >= 3) throw DomainError("point has more than three coordinates");
      p[k++] = parse_scalar(s.substr(start, i - start));
      start = i + 1;
    }
  }
  if (k != 3) throw DomainError("point needs three coordinates");
  if (p[0].is_zero() && p[1].is_zero() && p[2].is_zero()) throw DomainError("point [0,0,0]");
  return p;
}

Curve parse_curve(std::string_view text) {
  HomPoly p = parse_polynomial(text);
  if (p.empty()) throw DomainError("equation is identically zero");
  int deg = -1;
  for (const auto& [m, c] : p) {
    int d = m[0] + m[1] + m[2];
    if (deg >= 0 && d != deg) throw DomainError("equation is not homogeneous");
    deg = d;
  }
  if (deg == 1) return Line{coefficient(p, {1, 0, 0}), coefficient(p, {0, 1, 0}), coefficient(p, {0, 0, 1})};
  if (deg == 2)
    return Conic::from_coefficients(coefficient(p, {2, 0, 0}), coefficient(p, {0, 2, 0}), coefficient(p, {0, 0, 2}),
                                    coefficient(p, {1, 1, 0}), coefficient(p, {1, 0, 1}), coefficient(p, {0, 1, 1}));
  throw DomainError("only lines and conics are supported");
}

std::string to_string(const Point& p) {
  return "[" + p[0].to_string() + "," + p[1].to_string() + "," + p[2].to_string() + "]";
}

// ---- basic geometry ----

Conic Conic::from_coefficients(const QuadExt& xx, const QuadExt& yy, const QuadExt& zz, const QuadExt& xy,
                               const QuadExt& xz, const QuadExt& yz) {
  const QuadExt half(Rational(1, 2));
  Conic c;
  c.m[0][0] = xx;
  c.m[1][1] = yy;
  c.m[2][2] = zz;
  c.m[0][1] = c.m[1][0] = xy * half;
  c.m[0][2] = c.m[2][0] = xz * half;
  c.m[1][2] = c.m[2][1] = yz * half;
  return c;
}

QuadExt Conic::polar(const Point& p, const Point& q) const {
  QuadExt s;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += p[i] * m[i][j] * q[j];
  return s;
}

QuadExt Conic::eval(const Point& p) const { return polar(p, p); }
QuadExt Conic::det() const { return det3(m); }

QuadExt eval(const Line& l, const Point& p) { return l[0] * p[0] + l[1] * p[1] + l[2] * p[2]; }

bool incident(const Point& p, const Curve& c) {
  if (auto l = std::get_if<Line>(&c)) return eval(*l, p).is_zero();
  return std::get<Conic>(c).eval(p).is_zero();
}

namespace {

std::array<QuadExt, 3> cross(const std::array<QuadExt, 3>& a, const std::array<QuadExt, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool is_null(const std::array<QuadExt, 3>& v) { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }

}  // namespace

bool collinear(const Point& a, const Point& b, const Point& c) { return det3(Mat3{a, b, c}).is_zero(); }

Line join(const Point& a, const Point& b) {
  Line l = cross(a, b);
  if (is_null(l)) throw DomainError("join of equal points");
  return l;
}

Point meet(const Line& a, const Line& b) {
  Point p = cross(a, b);
  if (is_null(p)) throw DomainError("meet of equal lines");
  return p;
}

bool projectively_equal(const Point& a, const Point& b) { return is_null(cross(a, b)); }

bool same_curve(const Curve& a, const Curve& b) {
  std::vector<QuadExt> x, y;
  if (a.index() != b.index()) return false;
  if (auto l = std::get_if<Line>(&a)) {
    x.assign(l->begin(), l->end());
    const auto& m = std::get<Line>(b);
    y.assign(m.begin(), m.end());
  } else {
    for (const auto& row : std::get<Conic>(a).m) x.insert(x.end(), row.begin(), row.end());
    for (const auto& row : std::get<Conic>(b).m) y.insert(y.end(), row.begin(), row.end());
  }
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (!(x[i] * y[j] - x[j] * y[i]).is_zero()) return false;
  return true;
}

QuadExt det3(const Mat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat3 inverse3(const Mat3& m) {
  QuadExt d = det3(m);
  if (d.is_zero()) throw SingularMatrixError("singular 3x3 matrix");
  Mat3 inv{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      inv[i][j] = (m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]) / d;
    }
  return inv;
}

Point apply(const Mat3& g, const Point& p) {
  Point q;
  for (int i = 0; i < 3; ++i) q[i] = g[i][0] * p[0] + g[i][1] * p[1] + g[i][2] * p[2];
  return q;
}

// l' = l g^{-1}, so l'(g p) = l(p).
Line apply_to_line(const Mat3& g, const Line& l) {
  Mat3 inv = inverse3(g);
  Line out;
  for (int j = 0; j < 3; ++j) out[j] = l[0] * inv[0][j] + l[1] * inv[1][j] + l[2] * inv[2][j];
  return out;
}

Conic apply_to_conic(const Mat3& g, const Conic& c) {
  Mat3 inv = inverse3(g);
  Conic out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      QuadExt s;
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) s += inv[k][i] * c.m[k][l] * inv[l][j];
      out.m[i][j] = s;
    }
  return out;
}

Curve apply_to_curve(const Mat3& g, const Curve& c) {
  if (auto l = std::get_if<Line>(&c)) return apply_to_line(g, *l);
  return apply_to_conic(g, std::get<Conic>(c));
}

// ---- parametrization and vanishing orders, generic over the coefficient ring ----

namespace {

// Univariate polynomials over Q, lowest degree first.
struct UPoly {
  std::vector<Rational> c;

  UPoly() = default;
  UPoly(int v) : UPoly(Rational(v)) {}
  UPoly(Rational v) {
    if (v != 0) c.push_back(std::move(v));
  }
  static UPoly var() {
    UPoly p;
    p.c = {0, 1};
    return p;
  }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  Rational at(const Rational& x) const {
    Rational r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
    return r;
  }
  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    UPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
  }
  UPoly operator-() const {
    UPoly r = *this;
    for (auto& x : r.c) x = -x;
    return r;
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    UPoly r;
    if (a.c.empty() || b.c.empty()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
  }
  UPoly& operator+=(const UPoly& o) { return *this = *this + o; }
};

bool is_zero(const QuadExt& x) { return x.is_zero(); }
bool is_zero(const UPoly& p) { return p.c.empty(); }

template <class S>
using V3 = std::array<S, 3>;
template <class S>
using M3 = std::array<std::array<S, 3>, 3>;
template <class S>
using BForm = std::vector<S>;  // index k is the coefficient of s^(d-k) t^k

template <class S>
BForm<S> bf_mul(const BForm<S>& a, const BForm<S>& b) {
  BForm<S> r(a.size() + b.size() - 1, S(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

template <class S>
void bf_add_scaled(BForm<S>& acc, const BForm<S>& f, const S& k) {
  if (acc.empty()) acc.assign(f.size(), S(0));
  for (std::size_t i = 0; i < f.size(); ++i) acc[i] += k * f[i];
}

template <class S>
struct Param {
  V3<BForm<S>> r;
  S s0, t0;  // parameter of the base point
};

// r(s,t) = q(q) p - B(p,q) q with q = s a + t b on the chart line x_i = 0, i the first nonzero
// coordinate of p; B is the polarization 2 p^T m q.
template <class S>
Param<S> param_conic(const M3<S>& m, const V3<S>& p) {
  int i0 = 0;
  while (i0 < 3 && is_zero(p[i0])) ++i0;
  if (i0 == 3) throw DomainError("zero point");
  const int j = (i0 + 1) % 3 < (i0 + 2) % 3 ? (i0 + 1) % 3 : (i0 + 2) % 3;
  const int k = 3 - i0 - j;
  auto bp = [&](int col) {
    S s(0);
    for (int t = 0; t < 3; ++t) s += p[t] * m[t][col];
    return S(2) * s;
  };
  const S qa = m[j][j], qb = m[k][k], bab = S(2) * m[j][k], bpa = bp(j), bpb = bp(k);
  if (is_zero(bpa) && is_zero(bpb)) throw DomainError("conic is singular at the base point");
  Param<S> out;
  for (int i = 0; i < 3; ++i) {
    S ai = i == j ? S(1) : S(0), bi = i == k ? S(1) : S(0);
    out.r[i] = {qa * p[i] - bpa * ai, bab * p[i] - bpa * bi - bpb * ai, qb * p[i] - bpb * bi};
  }
  out.s0 = bpb;
  out.t0 = -bpa;
  return out;
}

template <class S>
BForm<S> restrict_conic(const M3<S>& n, const V3<BForm<S>>& r) {
  BForm<S> f;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!is_zero(n[i][j])) bf_add_scaled(f, bf_mul(r[i], r[j]), n[i][j]);
  if (f.empty()) f.assign(2 * r[0].size() - 1, S(0));
  return f;
}

template <class S>
BForm<S> restrict_line(const V3<S>& l, const V3<BForm<S>>& r) {
  BForm<S> f;
  for (int i = 0; i < 3; ++i) bf_add_scaled(f, r[i], l[i]);
  return f;
}

// Coefficients of f(s0 X + w0 Y, t0 X + w1 Y); the vanishing order at (s0:t0) is the index of
// the first nonzero entry.
template <class S>
BForm<S> recenter(const BForm<S>& f, const S& s0, const S& t0) {
  const std::size_t d = f.size() - 1;
  const bool use_s = !is_zero(t0);
  BForm<S> l1{s0, use_s ? S(1) : S(0)};
  BForm<S> l2{t0, use_s ? S(0) : S(1)};
  BForm<S> out(d + 1, S(0));
  for (std::size_t k = 0; k <= d; ++k) {
    if (is_zero(f[k])) continue;
    BForm<S> term{S(1)};
    for (std::size_t a = 0; a < d - k; ++a) term = bf_mul(term, l1);
    for (std::size_t b = 0; b < k; ++b) term = bf_mul(term, l2);
    bf_add_scaled(out, term, f[k]);
  }
  return out;
}

template <class S>
int vanishing_order(const BForm<S>& f, const S& s0, const S& t0) {
  BForm<S> g = recenter(f, s0, t0);
  for (std::size_t k = 0; k < g.size(); ++k)
    if (!is_zero(g[k])) return static_cast<int>(k);
  throw DomainError("curves share a component");
}

V3<QuadExt> as_v3(const std::array<QuadExt, 3>& a) { return {a[0], a[1], a[2]}; }

struct Restricted {
  BForm<QuadExt> form;
  std::function<std::pair<QuadExt, QuadExt>(const Point&)> parameter;
};

// Pull c1 back along a parametrization of c2 based at p.
Restricted restrict_curve(const Curve& c1, const Curve& c2, const Point& p) {
  if (!incident(p, c1) || !incident(p, c2)) throw DomainError("point is not on both curves");
  Restricted out;
  V3<BForm<QuadExt>> r;
  if (auto l2 = std::get_if<Line>(&c2)) {
    if (is_null(*l2)) throw DomainError("degenerate line");
    Point w;
    bool found = false;
    for (int k = 0; k < 3 && !found; ++k) {
      Line axis{QuadExt(k == 0 ? 1 : 0), QuadExt(k == 1 ? 1 : 0), QuadExt(k == 2 ? 1 : 0)};
      Point cand = cross(*l2, axis);
      if (!is_null(cand) && !projectively_equal(cand, p)) {
        w = cand;
        found = true;
      }
    }
    if (!found) throw Error("no second point on the line");
    for (int i = 0; i < 3; ++i) r[i] = {p[i], w[i]};
    out.parameter = [p, w](const Point& x) -> std::pair<QuadExt, QuadExt> {
      // x = s p + t w: Cramer on a pair of coordinates where p, w are independent.
      for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) {
          QuadExt det = p[a] * w[b] - p[b] * w[a];
          if (det.is_zero()) continue;
          return {(x[a] * w[b] - x[b] * w[a]) / det, (p[a] * x[b] - p[b] * x[a]) / det};
        }
      throw Error("degenerate line parametrization");
    };
  } else {
    const Conic& c = std::get<Conic>(c2);
    if (!c.smooth()) throw DomainError("conic is degenerate");
    M3<QuadExt> m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m[i][j] = c.m[i][j];
    Param<QuadExt> prm = param_conic(m, as_v3(p));
    r = prm.r;
    int i0 = 0;
    while (p[i0].is_zero()) ++i0;
    const int j = (i0 + 1) % 3 < (i0 + 2) % 3 ? (i0 + 1) % 3 : (i0 + 2) % 3;
    const int k = 3 - i0 - j;
    QuadExt s0 = prm.s0, t0 = prm.t0;
    out.parameter = [p, i0, j, k, s0, t0](const Point& x) -> std::pair<QuadExt, QuadExt> {
      if (projectively_equal(x, p)) return {s0, t0};
      Line chart{QuadExt(i0 == 0 ? 1 : 0), QuadExt(i0 == 1 ? 1 : 0), QuadExt(i0 == 2 ? 1 : 0)};
      Point q = meet(join(p, x), chart);
      return {q[j], q[k]};
    };
  }
  if (auto l1 = std::get_if<Line>(&c1)) {
    out.form = restrict_line(as_v3(*l1), r);
  } else {
    const Conic& c = std::get<Conic>(c1);
    M3<QuadExt> n;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) n[i][j] = c.m[i][j];
    out.form = restrict_conic(n, r);
  }
  return out;
}

}  // namespace

int intersection_multiplicity(const Curve& c1, const Curve& c2, const Point& p) {
  Restricted rs = restrict_curve(c1, c2, p);
  auto [s0, t0] = rs.parameter(p);
  return vanishing_order(rs.form, s0, t0);
}

BezoutTally bezout_tally(const Curve& c1, const Curve& c2, const std::vector<Point>& points) {
  if (points.empty()) throw DomainError("bezout_tally needs at least one common point");
  Restricted rs = restrict_curve(c1, c2, points.front());
  BezoutTally t;
  t.degree = static_cast<int>(rs.form.size()) - 1;
  for (std::size_t a = 0; a < points.size(); ++a)
    for (std::size_t b = a + 1; b < points.size(); ++b)
      if (projectively_equal(points[a], points[b])) throw DomainError("repeated point in bezout_tally");
  for (const auto& p : points) {
    if (!incident(p, c1) || !incident(p, c2)) throw DomainError("point " + to_string(p) + " is not on both curves");
    auto [s, u] = rs.parameter(p);
    t.total += vanishing_order(rs.form, s, u);
  }
  t.exhausted = t.total == t.degree;
  return t;
}

// ---- the conic family ----

Conic family_t33(const Rational& u) {
  return Conic::from_coefficients(QuadExt(1), QuadExt(-1), QuadExt(0), QuadExt(0), QuadExt(0), QuadExt(u));
}

Conic family_e(const Rational& v) {
  // v(y^2 - x^2 - 2yz) - (z^2 - yz - xz)
  return Conic::from_coefficients(QuadExt(-v), QuadExt(v), QuadExt(-1), QuadExt(0), QuadExt(1), QuadExt(-2 * v + 1));
}

namespace {

std::vector<BigInt> divisors(BigInt n) {
  if (n < 0) n = -n;
  std::vector<BigInt> out;
  for (BigInt d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  return out;
}

std::vector<Rational> rational_roots(const UPoly& p) {
  if (is_zero(p)) throw DomainError("eliminant vanishes identically");
  BigInt l = 1;
  for (const auto& x : p.c) l = boost::multiprecision::lcm(l, denominator_of(x));
  std::vector<BigInt> ic;
  for (const auto& x : p.c) ic.push_back(numerator_of(x * l));
  std::vector<Rational> roots;
  std::size_t low = 0;
  while (ic[low] == 0) ++low;
  if (low > 0) roots.push_back(0);
  if (static_cast<int>(ic.size()) - 1 > static_cast<int>(low)) {
    for (const auto& a : divisors(ic[low]))
      for (const auto& b : divisors(ic.back()))
        for (int sg : {1, -1}) {
          Rational x(sg * a, b);
          if (p.at(x) == 0 && std::find(roots.begin(), roots.end(), x) == roots.end()) roots.push_back(x);
        }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

M3<UPoly> sym(const UPoly& xx, const UPoly& yy, const UPoly& zz, const UPoly& xy, const UPoly& xz,
              const UPoly& yz) {
  const UPoly half(Rational(1, 2));
  M3<UPoly> m;
  m[0][0] = xx;
  m[1][1] = yy;
  m[2][2] = zz;
  m[0][1] = m[1][0] = xy * half;
  m[0][2] = m[2][0] = xz * half;
  m[1][2] = m[2][1] = yz * half;
  return m;
}

}  // namespace

ConicFamilySolution conic_family_solve() {
  const UPoly u = UPoly::var();
  // T33(u): x^2 - y^2 + u yz
  M3<UPoly> t33 = sym(1, -1, 0, 0, 0, u);
  // E(v) = v * A + B with A = y^2 - x^2 - 2yz and B = -z^2 + yz + xz
  M3<UPoly> a = sym(-1, 1, 0, 0, 0, -2);
  M3<UPoly> b = sym(0, 0, -1, 0, 1, 1);
  V3<UPoly> p3{UPoly(1), UPoly(1), UPoly(0)};

  Param<UPoly> prm = param_conic(t33, p3);
  BForm<UPoly> ga = recenter(restrict_conic(a, prm.r), prm.s0, prm.t0);
  BForm<UPoly> gb = recenter(restrict_conic(b, prm.r), prm.s0, prm.t0);
  // Multiplicity >= 3 at P3: v ga[k] + gb[k] = 0 for k = 0, 1, 2.
  UPoly elim;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      UPoly minor = ga[i] * gb[j] - ga[j] * gb[i];
      elim += minor * minor;
    }

  ConicFamilySolution out;
  out.candidates = rational_roots(elim);
  const Point P3{QuadExt(1), QuadExt(1), QuadExt(0)};
  int found = 0;
  for (const auto& uu : out.candidates) {
    if (!family_t33(uu).smooth()) continue;
    std::optional<Rational> vv;
    for (int k = 0; k < 3 && !vv; ++k) {
      Rational ak = ga[k].at(uu);
      if (ak != 0) vv = -gb[k].at(uu) / ak;
    }
    if (!vv) continue;
    for (int k = 0; k < 3; ++k)
      if (ga[k].at(uu) * *vv + gb[k].at(uu) != 0) vv.reset();
    if (!vv || !family_e(*vv).smooth()) continue;
    if (intersection_multiplicity(family_e(*vv), family_t33(uu), P3) != 3) continue;
    out.u = uu;
    out.v = *vv;
    ++found;
  }
  if (found != 1) throw Error("conic family: expected a unique solution, found " + std::to_string(found));
  return out;
}

// ---- configurations ----

const Point& Configuration::point(const std::string& name) const {
  for (const auto& [n, p] : points)
    if (n == name) return p;
  throw DomainError("unknown point '" + name + "'");
}

Line Configuration::line(const std::string& name) const {
  for (const auto& [n, l] : lines)
    if (n == name) return l;
  for (const auto& j : joins)
    if (j[0] == name) return join(point(j[1]), point(j[2]));
  throw DomainError("unknown line '" + name + "'");
}

std::vector<std::string> Configuration::line_names() const {
  std::vector<std::string> out;
  for (const auto& [n, l] : lines) out.push_back(n);
  for (const auto& j : joins) out.push_back(j[0]);
  return out;
}

Configuration hesse_configuration() {
  Configuration c;
  auto pt = [&](const std::string& n, const char* s) { c.points.emplace_back(n, parse_point(s)); };
  auto ln = [&](const std::string& n, const char* s) { c.lines.emplace_back(n, std::get<Line>(parse_curve(s))); };
  pt("Q1", "[1,0,0]");
  pt("Q2", "[0,0,1]");
  pt("P1", "[0,1,1]");
  pt("P2", "[1,1,0]");
  pt("P3", "[1,e,e-1]");
  pt("Q3", "[1,1+e,e]");
  pt("R1", "[1,1,1]");
  pt("R2", "[e,e-1,0]");
  pt("R3", "[0,1,e]");
  pt("R4", "[1,e,e]");
  pt("R5", "[0,1,0]");
  pt("R6", "[1,1,e]");
  ln("T1_2", "y=z");
  ln("T3_2", "z=0");
  ln("T1_1", "x=0");
  ln("T3_1", "x=y");
  ln("E1", "z=ex");
  ln("E2", "(1-e)x+ey=z");
  ln("L", "y=x+z");
  c.joins.push_back({"T2_2", "Q1", "P3"});
  c.joins.push_back({"T2_1", "Q2", "P3"});
  c.claims = {{"Q1", "T1_2"}, {"Q1", "T3_2"}, {"Q2", "T1_1"}, {"Q2", "T3_1"}, {"P1", "T1_2"}, {"P1", "T1_1"},
              {"P2", "T3_2"}, {"P2", "T3_1"}, {"R1", "T1_2"}, {"R1", "T3_1"}, {"R1", "E2"},   {"R2", "T3_2"},
              {"R2", "T2_1"}, {"R2", "E2"},   {"R3", "T2_2"}, {"R3", "T1_1"}, {"R3", "E2"},   {"R4", "T1_2"},
              {"R4", "T2_1"}, {"R4", "E1"},   {"R5", "T3_2"}, {"R5", "T1_1"}, {"R5", "E1"},   {"R6", "T2_2"},
              {"R6", "T3_1"}, {"R6", "E1"},   {"Q3", "E1"},   {"Q3", "E2"},   {"Q3", "L"},    {"P1", "L"},
              {"P2", "L"},    {"P3", "L"}};
  return c;
}

std::vector<ClaimResult> evaluate_claims(const Configuration& c) {
  std::vector<ClaimResult> out;
  for (const auto& [p, l] : c.claims) {
    ClaimResult r{p, l, false};
    try {
      r.holds = eval(c.line(l), c.point(p)).is_zero();
    } catch (const DomainError&) {
      r.holds = false;
    }
    out.push_back(r);
  }
  return out;
}

bool HesseReport::passes() const {
  return distinct && point_degrees.size() == 12 && line_degrees.size() == 9 && incidences == 36 &&
         std::all_of(point_degrees.begin(), point_degrees.end(), [](const auto& x) { return x.second == 3; }) &&
         std::all_of(line_degrees.begin(), line_degrees.end(), [](const auto& x) { return x.second == 4; });
}

HesseReport dual_hesse_check(const Configuration& c) {
  HesseReport r;
  std::vector<Line> lines;
  auto names = c.line_names();
  for (const auto& n : names) lines.push_back(c.line(n));
  r.distinct = true;
  for (std::size_t a = 0; a < c.points.size(); ++a)
    for (std::size_t b = a + 1; b < c.points.size(); ++b)
      if (projectively_equal(c.points[a].second, c.points[b].second)) r.distinct = false;
  for (std::size_t a = 0; a < lines.size(); ++a)
    for (std::size_t b = a + 1; b < lines.size(); ++b)
      if (projectively_equal(lines[a], lines[b])) r.distinct = false;
  std::vector<int> ldeg(lines.size(), 0);
  for (const auto& [n, p] : c.points) {
    int d = 0;
    for (std::size_t k = 0; k < lines.size(); ++k)
      if (eval(lines[k], p).is_zero()) {
        ++d;
        ++ldeg[k];
      }
    r.point_degrees.emplace_back(n, d);
    r.incidences += d;
  }
  for (std::size_t k = 0; k < lines.size(); ++k) r.line_degrees.emplace_back(names[k], ldeg[k]);
  return r;
}

bool fixes(const Mat3& g, const Point& p) { return projectively_equal(apply(g, p), p); }
bool maps_to(const Mat3& g, const Point& from, const Point& to) { return projectively_equal(apply(g, from), to); }

bool permutes(const Mat3& g, const std::vector<Point>& set) {
  std::vector<bool> hit(set.size(), false);
  for (const auto& p : set) {
    Point q = apply(g, p);
    bool found = false;
    for (std::size_t k = 0; k < set.size(); ++k)
      if (!hit[k] && projectively_equal(q, set[k])) {
        hit[k] = true;
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

bool permutes_lines(const Mat3& g, const std::vector<Line>& set) {
  std::vector<Point> as_points(set.begin(), set.end());
  std::vector<Point> images;
  for (const auto& l : set) images.push_back(apply_to_line(g, l));
  std::vector<bool> hit(set.size(), false);
  for (const auto& q : images) {
    bool found = false;
    for (std::size_t k = 0; k < set.size(); ++k)
      if (!hit[k] && projectively_equal(q, as_points[k])) {
        hit[k] = true;
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

Mat3 multiply(const Mat3& a, const Mat3& b) {
  Mat3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) out[i][j] += a[i][k] * b[k][j];
  return out;
}

Mat3 parse_matrix(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
          s.end());
  if (s.size() < 4 || s.substr(0, 2) != "[[" || s.substr(s.size() - 2) != "]]")
    throw DomainError("matrix must look like [[a,b,c],[d,e,f],[g,h,i]]");
  s = s.substr(2, s.size() - 4);
  Mat3 m{};
  int row = 0;
  std::size_t start = 0;
  while (true) {
    std::size_t stop = s.find("],[", start);
    std::string r = s.substr(start, stop == std::string::npos ? std::string::npos : stop - start);
    if (row >= 3) throw DomainError("matrix has more than three rows");
    int col = 0;
    std::size_t b = 0;
    for (std::size_t i = 0; i <= r.size(); ++i) {
      if (i == r.size() || r[i] == ',') {
        if (col >= 3) throw DomainError("matrix row has more than three entries");
        m[row][col++] = parse_scalar(r.substr(b, i - b));
        b = i + 1;
      }
    }
    if (col != 3) throw DomainError("matrix row needs three entries");
    ++row;
    if (stop == std::string::npos) break;
    start = stop + 3;
  }
  if (row != 3) throw DomainError("matrix needs three rows");
  return m;
}

int projective_order(const Mat3& g, int max_order) {
  if (det3(g).is_zero()) throw DomainError("singular matrix has no projective order");
  Mat3 p = g;
  for (int k = 1; k <= max_order; ++k) {
    bool scalar = true;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if ((i == j && p[i][j] != p[0][0]) || (i != j && !p[i][j].is_zero())) scalar = false;
    if (scalar) return k;
    p = multiply(p, g);
  }
  return 0;
}

std::vector<ActionClaim> automorphism_action_check() {
  const QuadExt e = QuadExt::epsilon();
  std::vector<ActionClaim> out;
  auto claim = [&](std::string name, bool v) { out.push_back({std::move(name), v}); };

  Configuration hc = hesse_configuration();
  std::vector<Point> pts;
  for (const auto& [n, p] : hc.points) pts.push_back(p);
  std::vector<Line> lines;
  for (const auto& n : hc.line_names()) lines.push_back(hc.line(n));
  const Point& Q1 = hc.point("Q1");
  const Point& Q2 = hc.point("Q2");
  const Point& Q3 = hc.point("Q3");
  const Point& P1 = hc.point("P1");
  const Point& P2 = hc.point("P2");
  const Point& P3 = hc.point("P3");

  // sigma(x,y,z) = (x - y, -y, -y + z)
  Mat3 sigma{{{1, -1, 0}, {0, -1, 0}, {0, -1, 1}}};
  claim("sigma fixes Q1", fixes(sigma, Q1));
  claim("sigma fixes Q2", fixes(sigma, Q2));
  claim("sigma maps P1 to P2", maps_to(sigma, P1, P2));
  claim("sigma maps P2 to P1", maps_to(sigma, P2, P1));
  claim("sigma maps P3 to [1,1-e,-e]", maps_to(sigma, P3, parse_point("[1,1-e,-e]")));

  // (x,y,z) -> (x - y, -e y, -e y + z)
  Mat3 g{{{1, -1, 0}, {0, -e, 0}, {0, -e, 1}}};
  claim("z3 generator fixes Q1", fixes(g, Q1));
  claim("z3 generator fixes Q2", fixes(g, Q2));
  claim("z3 generator fixes Q3", fixes(g, Q3));
  claim("z3 generator maps P1 to P3", maps_to(g, P1, P3));
  claim("z3 generator maps P3 to P2", maps_to(g, P3, P2));
  claim("z3 generator maps P2 to P1", maps_to(g, P2, P1));
  claim("z3 generator permutes the twelve points", permutes(g, pts));
  claim("z3 generator permutes the nine lines", permutes_lines(g, lines));
  claim("z3 generator has order three", projective_order(g) == 3);

  // (x,y,z) -> (x,-y,z) on the conic data of the other surface
  Mat3 h{{{1, 0, 0}, {0, -1, 0}, {0, 0, 1}}};
  Curve t23 = parse_curve("2yz=y^2-x^2");
  Curve t33 = family_t33(-2);
  Curve ehat = family_e(Rational(1, 2));
  claim("z2 generator maps T2_3 to T3_3", same_curve(apply_to_curve(h, t23), t33));
  claim("z2 generator maps T3_3 to T2_3", same_curve(apply_to_curve(h, t33), t23));
  claim("z2 generator fixes E", same_curve(apply_to_curve(h, ehat), ehat));
  claim("z2 generator fixes [0,0,1]", fixes(h, parse_point("[0,0,1]")));
  claim("z2 generator swaps [1,-1,0] and [1,1,0]", maps_to(h, parse_point("[1,-1,0]"), parse_point("[1,1,0]")));
  return out;
}

}  // namespace snc
