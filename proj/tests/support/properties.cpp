#include "properties.hpp"

#include "snc/birational.hpp"
#include "snc/divisor.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace snc::testing {

namespace {

std::string describe(const DualGraph& g) {
  std::string s = serialize_graph(g);
  std::replace(s.begin(), s.end(), '\n', ';');
  return s;
}

void fail(SuiteResult& r, const std::string& what) {
  if (r.failures++ == 0) r.first_failure = what;
}

// Plain Gaussian elimination over Q.
Rational det_rational(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

// Fraction-free elimination in 64-bit integers; only for small matrices with small entries.
long long det_small(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<long long>> a(n, std::vector<long long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j).convert_to<long long>();
  long long sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::size_t rank_rational(std::vector<std::vector<Rational>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c] / a[r][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    ++r;
  }
  return r;
}

std::vector<std::vector<Rational>> to_rows(const IntMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = Rational(m(i, j));
  return a;
}

// Kernel vector of a corank-one symmetric matrix: cofactors along a row with nonzero cofactor.
std::vector<Rational> corank_one_kernel(const IntMatrix& q) {
  const std::size_t n = q.rows();
  if (n == 1) return {Rational(1)};
  for (std::size_t row = 0; row < n; ++row) {
    std::vector<Rational> v(n);
    bool nonzero = false;
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::vector<Rational>> minor;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == row) continue;
        std::vector<Rational> r;
        for (std::size_t k = 0; k < n; ++k)
          if (k != j) r.push_back(Rational(q(i, k)));
        minor.push_back(std::move(r));
      }
      Rational c = det_rational(minor);
      if ((row + j) % 2) c = -c;
      v[j] = c;
      if (c != 0) nonzero = true;
    }
    if (nonzero) return v;
  }
  return {};
}

}  // namespace

DualGraph random_tree(std::mt19937_64& rng, std::size_t n, Weight lo, Weight hi) {
  std::uniform_int_distribution<Weight> w(lo, hi);
  DualGraph g;
  for (std::size_t i = 0; i < n; ++i) {
    g.add_vertex("v" + std::to_string(i), w(rng));
    if (i > 0) {
      std::uniform_int_distribution<std::size_t> parent(0, i - 1);
      g.add_edge(parent(rng), i);
    }
  }
  return g;
}

Rational oracle_det(const IntMatrix& m) { return det_rational(to_rows(m)); }

bool oracle_negative_semidefinite(const IntMatrix& q) {
  const std::size_t n = q.rows();
  if (n > 10) throw DomainError("principal-minor oracle limited to 10 rows");
  for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t(1) << i)) idx.push_back(i);
    std::vector<std::vector<Rational>> a(idx.size(), std::vector<Rational>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) a[i][j] = Rational(-q(idx[i], idx[j]));
    if (det_rational(a) < 0) return false;
  }
  return true;
}

SuiteResult det_recursion_suite(std::uint64_t seed, std::size_t count, std::size_t max_vertices) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(1, max_vertices);
  SuiteResult r;
  for (std::size_t t = 0; t < count; ++t) {
    DualGraph g = random_tree(rng, size(rng), -6, 1);
    BigInt d = discriminant(g);
    ++r.cases;
    if (Rational(d) != oracle_det(-g.intersection_matrix())) {
      fail(r, "direct det disagrees with elimination: " + describe(g));
      continue;
    }
    std::uniform_int_distribution<std::size_t> pick(0, g.vertex_count() - 1);
    std::string c = g.id(pick(rng));
    if (det_branch_formula(g, c) != d) fail(r, "branch expansion at " + c + ": " + describe(g));
    auto edges = g.edges();
    if (!edges.empty()) {
      std::uniform_int_distribution<std::size_t> pe(0, edges.size() - 1);
      auto [a, b] = edges[pe(rng)];
      // side of a after cutting a-b
      std::vector<std::string> side;
      std::vector<bool> seen(g.vertex_count(), false);
      std::vector<std::size_t> stack{a};
      seen[a] = seen[b] = true;
      while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        side.push_back(g.id(v));
        for (std::size_t n : g.neighbors(v))
          if (!seen[n]) {
            seen[n] = true;
            stack.push_back(n);
          }
      }
      if (det_join_formula(g, side) != d) fail(r, "join expansion: " + describe(g));
    }
  }
  return r;
}

SuiteResult blowup_invariance_suite(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(1, 12);
  SuiteResult r;
  for (std::size_t t = 0; t < count; ++t) {
    DualGraph g = random_tree(rng, size(rng), -5, 0);
    BigInt d = discriminant(g);
    auto edges = g.edges();
    std::uniform_int_distribution<int> coin(0, 1);
    Center c = Center::vertex("");
    if (!edges.empty() && coin(rng)) {
      std::uniform_int_distribution<std::size_t> pe(0, edges.size() - 1);
      auto [a, b] = edges[pe(rng)];
      c = Center::edge(g.id(a), g.id(b));
    } else {
      std::uniform_int_distribution<std::size_t> pv(0, g.vertex_count() - 1);
      c = Center::vertex(g.id(pv(rng)));
    }
    DualGraph h = blowup_graph(g, c, "new");
    ++r.cases;
    if (discriminant(h) != d) {
      fail(r, "d changed under blow-up: " + describe(g));
      continue;
    }
    DualGraph back = contract_minus_one(h, "new");
    if (canonical_tree_form(back) != canonical_tree_form(g)) fail(r, "contraction does not undo blow-up: " + describe(g));
  }
  return r;
}

SuiteResult bark_fork_suite(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len(1, 4);
  std::uniform_int_distribution<Weight> tw(-5, -2);
  std::uniform_int_distribution<Weight> cw(-4, -1);
  std::uniform_int_distribution<int> short_twig(0, 2);
  SuiteResult r;
  for (std::size_t t = 0; t < count; ++t) {
    DualGraph g;
    Weight center = cw(rng);
    g.add_vertex("c", center);
    std::set<std::string> twig_ids;
    Rational delta = 0;
    for (int i = 0; i < 3; ++i) {
      // twig from its tip inwards; short (-2)-heavy twigs keep delta > 1 reachable
      int l = short_twig(rng) == 0 ? 1 : len(rng);
      std::vector<Weight> ws;
      for (int j = 0; j < l; ++j) ws.push_back(short_twig(rng) == 0 ? tw(rng) : -2);
      std::string prev = "c";
      for (int j = l; j-- > 0;) {
        std::string id = "t" + std::to_string(i) + "_" + std::to_string(j);
        g.add_vertex(id, ws[j]);
        g.add_edge(prev, id);
        twig_ids.insert(id);
        prev = id;
      }
      IntMatrix m(ws.size(), ws.size());
      for (std::size_t a = 0; a < ws.size(); ++a) {
        m(a, a) = -ws[a];
        if (a + 1 < ws.size()) m(a, a + 1) = m(a + 1, a) = -1;
      }
      delta += 1 / oracle_det(m);
    }
    // whole component exactly for quotient-singularity forks
    IntMatrix q = g.intersection_matrix();
    bool whole = center <= -2 && delta > 1 && oracle_negative_semidefinite(q) && oracle_det(q) != 0;
    ++r.cases;
    QDivisor bk;
    try {
      bk = bark(g);
    } catch (const std::exception& e) {
      fail(r, std::string("bark threw ") + e.what() + ": " + describe(g));
      continue;
    }
    RatVector res = bark_residuals(g, bk);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      const std::string& id = g.id(v);
      bool in_support = whole || twig_ids.count(id);
      Rational c = bk.coefficient(id);
      if (c < 0 || c > 1) {
        fail(r, "coefficient of " + id + " = " + to_string(c) + ": " + describe(g));
        break;
      }
      if (!in_support && c != 0) {
        fail(r, "coefficient off the support: " + describe(g));
        break;
      }
      if (in_support && res[v] != 0) {
        fail(r, "residual at " + id + " = " + to_string(res[v]) + ": " + describe(g));
        break;
      }
    }
  }
  return r;
}

SuiteResult smith_suite(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  std::uniform_int_distribution<int> entry(-9, 9);
  std::uniform_int_distribution<int> sparse(0, 3);
  SuiteResult r;
  for (std::size_t t = 0; t < count; ++t) {
    IntMatrix m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = sparse(rng) == 0 ? 0 : entry(rng);
    ++r.cases;
    SmithForm sf;
    try {
      sf = smith_normal_form(m);
    } catch (const std::exception& e) {
      fail(r, e.what());
      continue;
    }
    if (!(sf.u * m * sf.v == sf.s)) fail(r, "u m v != s");
    Rational du = oracle_det(sf.u), dv = oracle_det(sf.v);
    if ((du != 1 && du != -1) || (dv != 1 && dv != -1)) fail(r, "transform not unimodular");
    for (std::size_t i = 0; i < sf.s.rows(); ++i)
      for (std::size_t j = 0; j < sf.s.cols(); ++j)
        if (i != j && sf.s(i, j) != 0) fail(r, "s not diagonal");
    auto diag = sf.diagonal();
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
      if (diag[i] < 0) fail(r, "negative invariant factor");
      if (diag[i] == 0 && diag[i + 1] != 0) fail(r, "zero before nonzero");
      if (diag[i] != 0 && diag[i + 1] % diag[i] != 0) fail(r, "divisibility chain broken");
    }
    if (sf.rank() != rank_rational(to_rows(m))) fail(r, "rank mismatch");
  }
  return r;
}

std::vector<std::vector<int>> tree_shapes(std::size_t n) {
  std::vector<std::vector<int>> shapes;
  std::set<std::string> seen;
  std::vector<int> parent(n, 0);
  if (n == 0) return shapes;
  parent[0] = -1;
  // all parent arrays with parent[i] < i
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      DualGraph g;
      for (std::size_t v = 0; v < n; ++v) {
        g.add_vertex("v" + std::to_string(v), 0);
        if (v) g.add_edge(static_cast<std::size_t>(parent[v]), v);
      }
      if (seen.insert(canonical_tree_form(g)).second) shapes.push_back(parent);
      return;
    }
    for (std::size_t p = 0; p < i; ++p) {
      parent[i] = static_cast<int>(p);
      rec(i + 1);
    }
  };
  rec(1);
  return shapes;
}

FiberOracleResult fiber_oracle_suite(std::size_t max_vertices, Weight lo, Weight hi) {
  FiberOracleResult out;
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    for (const auto& parent : tree_shapes(n)) {
      std::vector<Weight> w(n, lo);
      while (true) {
        DualGraph g;
        for (std::size_t v = 0; v < n; ++v) {
          g.add_vertex("v" + std::to_string(v), w[v]);
          if (v) g.add_edge(static_cast<std::size_t>(parent[v]), v);
        }
        ++out.graphs;

        FiberSearch fs = is_valid_fiber(g);
        if (fs.valid) ++out.valid;

        IntMatrix q = g.intersection_matrix();
        bool criterion = false;
        bool genus_ok = false;
        std::vector<Rational> kernel;
        if (det_small(q) == 0 && rank_rational(to_rows(q)) + 1 == n && oracle_negative_semidefinite(q)) {
          kernel = corank_one_kernel(q);
          if (!kernel.empty() && kernel[0] < 0)
            for (auto& x : kernel) x = -x;
          bool positive = !kernel.empty() && std::all_of(kernel.begin(), kernel.end(), [](const Rational& x) { return x > 0; });
          bool has_minus_one = std::find(w.begin(), w.end(), Weight(-1)) != w.end();
          bool is_zero_curve = n == 1 && w[0] == 0;
          criterion = positive && (has_minus_one || is_zero_curve);
          if (criterion) {
            // primitive integer kernel vector, then K.F = sum mu (-2 - w)
            BigInt l = 1;
            for (const auto& x : kernel) l = boost::multiprecision::lcm(l, denominator_of(x));
            std::vector<BigInt> mu;
            BigInt gd = 0;
            for (const auto& x : kernel) {
              mu.push_back(numerator_of(x * Rational(l)));
              gd = boost::multiprecision::gcd(gd, mu.back());
            }
            BigInt kf = 0;
            for (std::size_t v = 0; v < n; ++v) kf += (mu[v] / gd) * (-2 - w[v]);
            genus_ok = kf == -2;
          }
        }

        ++out.kernel_criterion.cases;
        if (criterion != fs.valid) fail(out.kernel_criterion, describe(g));
        ++out.kernel_criterion_with_genus.cases;
        if ((criterion && genus_ok) != fs.valid) fail(out.kernel_criterion_with_genus, describe(g));

        if (fs.valid) {
          ++out.multiplicity_replay.cases;
          std::map<std::string, BigInt> mu;
          std::set<std::string> contracted;
          for (const auto& st : fs.trace) contracted.insert(st.vertex);
          for (const auto& v : g.vertices())
            if (!contracted.count(v.id)) mu[v.id] = 1;
          for (auto it = fs.trace.rbegin(); it != fs.trace.rend(); ++it) {
            BigInt m = 0;
            for (const auto& nb : it->neighbors) m += mu.at(nb);
            mu[it->vertex] = m;
          }
          FiberGraph f = fiber_multiplicities(g);
          for (const auto& v : g.vertices())
            if (f.multiplicity(v.id) != mu.at(v.id)) {
              fail(out.multiplicity_replay, describe(g));
              break;
            }
        }

        std::size_t i = 0;
        while (i < n && w[i] == hi) w[i++] = lo;
        if (i == n) break;
        ++w[i];
      }
    }
  }
  return out;
}

}  // namespace snc::testing
