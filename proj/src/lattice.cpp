#include "snc/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace snc {

std::size_t BlowupProgram::blowup_count() const {
  return static_cast<std::size_t>(std::count_if(steps.begin(), steps.end(), [](const ProgramStep& s) {
    return s.kind == ProgramStep::Kind::Blowup;
  }));
}

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

bool valid_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  });
}

}  // namespace

BlowupProgram parse_program(std::string_view text) {
  BlowupProgram p;
  std::set<std::string> seen;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    auto tok = split_ws(raw);
    if (tok.empty()) continue;
    ProgramStep st;
    st.line = line_no;
    if (tok[0] == "curve") {
      if (tok.size() != 3 || tok[2].rfind("degree=", 0) != 0)
        throw ParseError(line_no, "expected 'curve <name> degree=<d>'");
      st.kind = ProgramStep::Kind::Curve;
      try {
        std::size_t used = 0;
        st.degree = std::stoi(tok[2].substr(7), &used);
        if (used != tok[2].size() - 7) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ParseError(line_no, "bad degree '" + tok[2].substr(7) + "'");
      }
      if (st.degree < 1 || st.degree > 2) throw ParseError(line_no, "only lines and conics are supported");
    } else if (tok[0] == "blowup") {
      if (tok.size() != 4 || tok[2] != "at") throw ParseError(line_no, "expected 'blowup <name> at <name>,...'");
      st.kind = ProgramStep::Kind::Blowup;
      std::string item;
      std::istringstream cs(tok[3]);
      while (std::getline(cs, item, ',')) {
        if (!seen.count(item)) throw ParseError(line_no, "unknown curve '" + item + "' in center");
        if (std::find(st.center.begin(), st.center.end(), item) != st.center.end())
          throw ParseError(line_no, "curve '" + item + "' repeated in center");
        st.center.push_back(item);
      }
      if (st.center.empty()) throw ParseError(line_no, "empty center");
    } else {
      throw ParseError(line_no, "unknown directive '" + tok[0] + "'");
    }
    st.name = tok[1];
    if (!valid_name(st.name) || st.name == "K" || st.name == "H")
      throw ParseError(line_no, "invalid curve name '" + st.name + "'");
    if (!seen.insert(st.name).second) throw ParseError(line_no, "duplicate curve name '" + st.name + "'");
    p.steps.push_back(std::move(st));
  }
  return p;
}

BlowupProgram load_program_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open arrangement file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_program(ss.str());
}

SurfaceLattice::SurfaceLattice(std::size_t blowups) : rank_(blowups + 1) {}

IntVector SurfaceLattice::hyperplane() const {
  IntVector v(rank_);
  v[0] = 1;
  return v;
}

IntVector SurfaceLattice::exceptional(std::size_t k) const {
  if (k < 1 || k >= rank_) throw DomainError("exceptional class index out of range");
  IntVector v(rank_);
  v[k] = 1;
  return v;
}

IntVector SurfaceLattice::canonical() const {
  IntVector v(rank_, BigInt(1));
  v[0] = -3;
  return v;
}

BigInt SurfaceLattice::pair(const IntVector& a, const IntVector& b) const {
  if (a.size() != rank_ || b.size() != rank_) throw DomainError("class vector has wrong rank");
  BigInt s = a[0] * b[0];
  for (std::size_t i = 1; i < rank_; ++i) s -= a[i] * b[i];
  return s;
}

Rational SurfaceLattice::pair(const RatVector& a, const RatVector& b) const {
  if (a.size() != rank_ || b.size() != rank_) throw DomainError("class vector has wrong rank");
  Rational s = a[0] * b[0];
  for (std::size_t i = 1; i < rank_; ++i) s -= a[i] * b[i];
  return s;
}

BigInt SurfaceLattice::pair(std::string_view a, std::string_view b) const {
  return pair(class_of_expression(a), class_of_expression(b));
}

IntMatrix SurfaceLattice::gram() const {
  IntMatrix g(rank_, rank_);
  g(0, 0) = 1;
  for (std::size_t i = 1; i < rank_; ++i) g(i, i) = -1;
  return g;
}

const IntVector& SurfaceLattice::class_of(std::string_view name) const {
  auto it = classes_.find(std::string(name));
  if (it == classes_.end()) throw DomainError("unknown curve '" + std::string(name) + "'");
  return it->second;
}

void SurfaceLattice::add_class(const std::string& name, IntVector v) {
  if (has(name)) throw DomainError("curve '" + name + "' already named");
  order_.push_back(name);
  set_class(name, std::move(v));
}

void SurfaceLattice::set_class(const std::string& name, IntVector v) {
  if (v.size() != rank_) throw DomainError("class vector has wrong rank");
  if (pair(v, v) + pair(v, canonical()) != -2)
    throw DomainError("adjunction fails for '" + name + "': C^2 + C.K != -2");
  if (std::find(order_.begin(), order_.end(), name) == order_.end()) order_.push_back(name);
  classes_[name] = std::move(v);
}

IntVector SurfaceLattice::class_of_expression(std::string_view expr) const {
  IntVector out(rank_);
  std::size_t i = 0;
  bool any = false;
  auto skip = [&] {
    while (i < expr.size() && std::isspace(static_cast<unsigned char>(expr[i]))) ++i;
  };
  while (true) {
    skip();
    if (i >= expr.size()) break;
    int sgn = 1;
    if (expr[i] == '+' || expr[i] == '-') {
      sgn = expr[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (any) {
      throw DomainError("bad class expression '" + std::string(expr) + "'");
    }
    BigInt coef = 1;
    std::size_t j = i;
    while (j < expr.size() && std::isdigit(static_cast<unsigned char>(expr[j]))) ++j;
    if (j > i) {
      coef = BigInt(std::string(expr.substr(i, j - i)));
      i = j;
      skip();
      if (i < expr.size() && expr[i] == '*') {
        ++i;
        skip();
      }
    }
    j = i;
    while (j < expr.size() && (std::isalnum(static_cast<unsigned char>(expr[j])) || expr[j] == '_' || expr[j] == '\''))
      ++j;
    if (j == i) throw DomainError("bad class expression '" + std::string(expr) + "'");
    std::string name(expr.substr(i, j - i));
    i = j;
    IntVector v = name == "K" ? canonical() : name == "H" ? hyperplane() : class_of(name);
    for (std::size_t k = 0; k < rank_; ++k) out[k] += sgn * coef * v[k];
    any = true;
  }
  if (!any) throw DomainError("empty class expression");
  return out;
}

namespace {

template <class T>
std::string format_generic(const std::vector<T>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    std::string sym = i == 0 ? "H" : "e" + std::to_string(i);
    T c = v[i];
    bool neg = c < 0;
    if (neg) c = -c;
    if (!s.empty() || neg) s += neg ? "-" : "+";
    if (c != 1) s += snc::to_string(c);
    s += sym;
  }
  return s.empty() ? "0" : s;
}

}  // namespace

std::string format_class(const IntVector& v) { return format_generic(v); }
std::string format_class(const RatVector& v) { return format_generic(v); }

SurfaceLattice run_program(const BlowupProgram& p) {
  SurfaceLattice l(p.blowup_count());
  std::size_t k = 0;
  for (const auto& st : p.steps) {
    if (st.kind == ProgramStep::Kind::Curve) {
      IntVector v = l.zero();
      v[0] = st.degree;
      l.add_class(st.name, v);
    } else {
      for (std::size_t a = 0; a < st.center.size(); ++a)
        for (std::size_t b = a + 1; b < st.center.size(); ++b)
          if (l.pair(l.class_of(st.center[a]), l.class_of(st.center[b])) <= 0)
            throw DomainError("line " + std::to_string(st.line) + ": excess intersection, '" + st.center[a] +
                              "' and '" + st.center[b] + "' no longer meet");
      ++k;
      for (const auto& c : st.center) {
        IntVector v = l.class_of(c);
        v[k] -= 1;
        l.set_class(c, v);
      }
      l.add_class(st.name, l.exceptional(k));
    }
    for (const auto& n : l.names()) l.set_class(n, l.class_of(n));
  }
  return l;
}

DualGraph extract_boundary_graph(const SurfaceLattice& l, const std::vector<std::string>& names) {
  DualGraph g;
  for (const auto& n : names) {
    const auto& v = l.class_of(n);
    g.add_vertex(n, l.pair(v, v).convert_to<Weight>());
  }
  for (std::size_t a = 0; a < names.size(); ++a)
    for (std::size_t b = a + 1; b < names.size(); ++b) {
      BigInt p = l.pair(l.class_of(names[a]), l.class_of(names[b]));
      if (p == 1)
        g.add_edge(a, b);
      else if (p != 0)
        throw DomainError("not snc: " + names[a] + "." + names[b] + " = " + p.str());
    }
  if (!g.is_forest()) throw DomainError("boundary is not a tree: its dual graph has a cycle");
  return g;
}

RatVector k_plus_sharp_class(const SurfaceLattice& l, const std::vector<std::string>& boundary) {
  DualGraph g = extract_boundary_graph(l, boundary);
  QDivisor s = sharp(g);
  RatVector out(l.rank());
  IntVector k = l.canonical();
  for (std::size_t i = 0; i < l.rank(); ++i) out[i] = Rational(k[i]);
  for (const auto& [id, c] : s.terms()) {
    const auto& v = l.class_of(id);
    for (std::size_t i = 0; i < l.rank(); ++i) out[i] += c * v[i];
  }
  return out;
}

namespace {

BigInt euler_of_forest(const DualGraph& g) { return 2 * BigInt(g.vertex_count()) - BigInt(g.edge_count()); }

}  // namespace

EulerNumbers euler_numbers(const SurfaceLattice& l, const std::vector<std::string>& boundary,
                           const std::vector<std::string>& exceptional) {
  for (const auto& a : boundary)
    for (const auto& b : exceptional) {
      if (a == b) throw DomainError("euler_numbers: '" + a + "' is in both sets");
      if (l.pair(l.class_of(a), l.class_of(b)) != 0)
        throw DomainError("euler_numbers: " + a + " meets " + b);
    }
  EulerNumbers e;
  e.surface = 3 + BigInt(l.blowups());
  e.boundary = euler_of_forest(extract_boundary_graph(l, boundary));
  e.exceptional = euler_of_forest(extract_boundary_graph(l, exceptional));
  e.open = e.surface - e.boundary - e.exceptional;
  return e;
}

TorsionGroup h1_order(const SurfaceLattice& l, const std::vector<std::string>& boundary) {
  IntMatrix m(l.rank(), boundary.size());
  for (std::size_t j = 0; j < boundary.size(); ++j) {
    const auto& v = l.class_of(boundary[j]);
    for (std::size_t i = 0; i < l.rank(); ++i) m(i, j) = v[i];
  }
  return torsion_of_cokernel(m);
}

namespace {

// Unique rational mu with sum mu_i c_i = f, if any.
std::optional<RatVector> express(const std::vector<IntVector>& cols, const IntVector& f) {
  const std::size_t k = cols.size(), n = f.size();
  RatMatrix m(n, k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = Rational(cols[j][i]);
  if (rank(m) != k) return std::nullopt;
  RatMatrix mtm = m.transpose() * m;
  RatVector rhs(k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i) rhs[j] += m(i, j) * f[i];
  RatVector mu = solve_rational(mtm, rhs);
  RatVector back = multiply(m, mu);
  for (std::size_t i = 0; i < n; ++i)
    if (back[i] != Rational(f[i])) return std::nullopt;
  return mu;
}

}  // namespace

RulingDecomposition ruling_decompose(const SurfaceLattice& l, const IntVector& fiber,
                                     const std::vector<std::string>& curves,
                                     const std::vector<std::string>& boundary) {
  if (l.pair(fiber, fiber) != 0 || l.pair(fiber, l.canonical()) != -2)
    throw DomainError("not a fiber class: need F^2 = 0 and F.K = -2");
  std::set<std::string> bset(boundary.begin(), boundary.end());
  RulingDecomposition r;
  r.fiber_class = fiber;

  std::vector<std::string> vertical;
  for (const auto& c : curves) {
    BigInt deg = l.pair(l.class_of(c), fiber);
    if (deg < 0) throw DomainError("F is negative on '" + c + "', so it is not nef");
    if (deg > 0)
      r.horizontal.emplace_back(c, deg);
    else
      vertical.push_back(c);
  }

  // Connected groups of vertical curves under positive pairing.
  std::vector<int> group(vertical.size(), -1);
  int groups = 0;
  for (std::size_t s = 0; s < vertical.size(); ++s) {
    if (group[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    group[s] = groups;
    while (!stack.empty()) {
      auto a = stack.back();
      stack.pop_back();
      for (std::size_t b = 0; b < vertical.size(); ++b)
        if (group[b] < 0 && l.pair(l.class_of(vertical[a]), l.class_of(vertical[b])) > 0) {
          group[b] = groups;
          stack.push_back(b);
        }
    }
    ++groups;
  }

  for (int gi = 0; gi < groups; ++gi) {
    FiberReport fr;
    std::vector<IntVector> cols;
    for (std::size_t s = 0; s < vertical.size(); ++s)
      if (group[s] == gi) {
        fr.components.push_back(vertical[s]);
        cols.push_back(l.class_of(vertical[s]));
        if (!bset.count(vertical[s])) ++fr.sigma;
      }
    auto mu = express(cols, fiber);
    fr.complete = mu.has_value() && std::all_of(mu->begin(), mu->end(), [](const Rational& x) {
                    return is_integer(x) && x >= 1;
                  });
    if (fr.complete) {
      for (const auto& x : *mu) fr.multiplicities.push_back(numerator_of(x));
      fr.residual = l.zero();
    } else {
      fr.residual = fiber;
      for (const auto& c : cols)
        for (std::size_t i = 0; i < l.rank(); ++i) fr.residual[i] -= c[i];
      r.all_complete = false;
    }
    fr.in_boundary = fr.complete && fr.sigma == 0;
    r.fibers.push_back(std::move(fr));
  }
  if (r.fibers.empty()) {
    FiberReport fr;
    fr.general = true;
    fr.complete = true;
    fr.sigma = 1;
    fr.residual = fiber;
    r.fibers.push_back(std::move(fr));
  }

  auto& bk = r.bookkeeping;
  for (const auto& [name, deg] : r.horizontal)
    if (bset.count(name)) ++bk.h;
  for (const auto& fr : r.fibers) {
    if (fr.in_boundary)
      ++bk.nu;
    else if (fr.complete && fr.sigma > 0)
      bk.sigma_excess += fr.sigma - 1;
  }
  bk.b2_surface = static_cast<long long>(l.rank());
  bk.b2_boundary = static_cast<long long>(boundary.size());
  return r;
}

std::vector<IntVector> solve_curve_class(const SurfaceLattice& l, const std::vector<ClassConstraint>& constraints,
                                         long long self_sq) {
  const std::size_t n = l.rank();
  IntMatrix a(constraints.size() + 1, n);
  IntVector b(constraints.size() + 1);
  auto put_row = [&](std::size_t row, const IntVector& target, const BigInt& value) {
    if (target.size() != n) throw DomainError("constraint class has wrong rank");
    a(row, 0) = target[0];
    for (std::size_t i = 1; i < n; ++i) a(row, i) = -target[i];
    b[row] = value;
  };
  for (std::size_t r = 0; r < constraints.size(); ++r) put_row(r, constraints[r].target, constraints[r].product);
  put_row(constraints.size(), l.canonical(), BigInt(-self_sq - 2));

  auto sol = solve_integer(a, b);
  std::vector<IntVector> out;
  if (!sol) return out;
  const IntVector& p = sol->particular;
  const auto& ker = sol->kernel;
  const std::size_t r = ker.size();

  auto accept = [&](const IntVector& v) {
    if (l.pair(v, v) == self_sq) out.push_back(v);
  };
  if (r == 0) {
    accept(p);
    return out;
  }

  IntMatrix gk(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) gk(i, j) = l.pair(ker[i], ker[j]);
  if (!is_negative_definite(gk)) {
    std::string dirs;
    for (const auto& k : ker) dirs += (dirs.empty() ? "" : ", ") + format_class(k);
    throw DomainError("infinite solution family; free directions: " + dirs);
  }

  // v(t) = p + sum t_j k_j. With A = -gk: t'At - 2c.t = p^2 - self_sq, c_j = p.k_j.
  RatMatrix am = to_rational(-gk);
  RatVector c(r);
  for (std::size_t j = 0; j < r; ++j) c[j] = Rational(l.pair(p, ker[j]));
  RatVector t0 = solve_rational(am, c);
  Rational bound = Rational(l.pair(p, p) - self_sq);
  for (std::size_t j = 0; j < r; ++j) bound += c[j] * t0[j];
  if (bound < 0) return out;

  // Fincke-Pohst: Q(x) = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2.
  RatMatrix q = am;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      q(j, i) = q(i, j);
      q(i, j) /= q(i, i);
    }
    for (std::size_t k = i + 1; k < r; ++k)
      for (std::size_t m = k; m < r; ++m) q(k, m) -= q(k, i) * q(i, m);
  }

  std::vector<BigInt> t(r);
  RatVector x(r);
  std::size_t visited = 0;
  const std::size_t cap = 1000000;
  std::function<void(std::size_t, const Rational&)> descend = [&](std::size_t level, const Rational& budget) {
    if (++visited > cap) throw DomainError("solve_curve_class: more than 10^6 candidates");
    const std::size_t i = level - 1;
    Rational center = t0[i];
    for (std::size_t j = i + 1; j < r; ++j) center -= q(i, j) * x[j];
    double radius = std::sqrt(std::max(0.0, (budget / q(i, i)).convert_to<double>()));
    double mid = center.convert_to<double>();
    BigInt lo = BigInt(static_cast<long long>(std::floor(mid - radius)) - 1);
    BigInt hi = BigInt(static_cast<long long>(std::ceil(mid + radius)) + 1);
    for (BigInt ti = lo; ti <= hi; ++ti) {
      Rational d = Rational(ti) - center;
      Rational rest = budget - q(i, i) * d * d;
      if (rest < 0) continue;
      t[i] = ti;
      x[i] = Rational(ti) - t0[i];
      if (i == 0) {
        if (rest != 0) continue;
        IntVector v = p;
        for (std::size_t j = 0; j < r; ++j)
          for (std::size_t m = 0; m < n; ++m) v[m] += t[j] * ker[j][m];
        accept(v);
      } else {
        descend(i, rest);
      }
    }
  };
  descend(r, bound);

  for (const auto& v : out)
    for (const auto& cst : constraints)
      if (l.pair(v, cst.target) != cst.product) throw Error("solve_curve_class: constraint check failed");
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace snc
