#include "snc/divisor.hpp"

#include <algorithm>
#include <set>

namespace snc {

BigInt discriminant_at(const DualGraph& g, const std::vector<std::size_t>& support) {
  for (auto v : support)
    if (v >= g.vertex_count()) throw DomainError("discriminant: vertex index out of range");
  if (support.empty()) return 1;
  return det_exact(-g.intersection_matrix(support));
}

BigInt discriminant(const DualGraph& g) {
  std::vector<std::size_t> all(g.vertex_count());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return discriminant_at(g, all);
}

BigInt discriminant(const DualGraph& g, const std::vector<std::string>& support) {
  std::vector<std::size_t> idx;
  for (const auto& id : support) idx.push_back(g.index_of(id));
  return discriminant_at(g, idx);
}

BigInt det_branch_formula(const DualGraph& g, std::string_view c) {
  if (!g.is_tree()) throw DomainError("det_branch_formula: graph is not a tree");
  const std::size_t cv = g.index_of(c);
  DualGraph rest = g.without({cv});

  std::vector<BigInt> d_full, d_cut;
  for (const auto& comp : rest.components()) {
    std::size_t meet = rest.vertex_count();
    for (auto v : comp)
      if (g.adjacent(cv, g.index_of(rest.id(v)))) meet = v;
    std::vector<std::size_t> cut;
    for (auto v : comp)
      if (v != meet) cut.push_back(v);
    d_full.push_back(discriminant_at(rest, comp));
    d_cut.push_back(discriminant_at(rest, cut));
  }

  BigInt prod = 1;
  for (const auto& d : d_full) prod *= d;
  BigInt out = -BigInt(g.weight(cv)) * prod;
  for (std::size_t i = 0; i < d_full.size(); ++i) {
    BigInt term = d_cut[i];
    for (std::size_t j = 0; j < d_full.size(); ++j)
      if (j != i) term *= d_full[j];
    out -= term;
  }
  return out;
}

BigInt det_join_formula(const DualGraph& g, const std::vector<std::string>& d1) {
  std::set<std::size_t> in1;
  for (const auto& id : d1) in1.insert(g.index_of(id));
  std::vector<std::size_t> a(in1.begin(), in1.end()), b;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (!in1.count(v)) b.push_back(v);

  std::vector<std::pair<std::size_t, std::size_t>> joins;
  for (auto [x, y] : g.edges())
    if (in1.count(x) != in1.count(y)) joins.push_back(in1.count(x) ? std::pair{x, y} : std::pair{y, x});
  if (joins.size() != 1)
    throw DomainError("det_join_formula: expected exactly one joining edge, found " +
                      std::to_string(joins.size()));

  auto minus = [](std::vector<std::size_t> s, std::size_t v) {
    s.erase(std::remove(s.begin(), s.end(), v), s.end());
    return s;
  };
  auto [c1, c2] = joins.front();
  return discriminant_at(g, a) * discriminant_at(g, b) -
         discriminant_at(g, minus(a, c1)) * discriminant_at(g, minus(b, c2));
}

std::pair<BigInt, BigInt> chain_discriminants(const Chain& ch) {
  if (ch.empty()) throw DomainError("chain invariants of an empty chain");
  DualGraph g = graph_of_chain(ch);
  std::vector<std::size_t> tail;
  for (std::size_t i = 1; i < ch.size(); ++i) tail.push_back(i);
  return {discriminant(g), discriminant_at(g, tail)};
}

ChainInvariants chain_invariants(const Chain& ch) {
  if (!ch.admissible()) throw DomainError("chain " + ch.bracket() + " is not admissible");
  auto [d, dp] = chain_discriminants(ch);
  auto [d_rev, dp_rev] = chain_discriminants(ch.reversed());
  if (d != d_rev) throw Error("chain determinant changed under reversal");
  ChainInvariants out;
  out.d = d;
  out.d_prime = dp;
  out.e = make_rational(dp, d);
  out.e_tilde = make_rational(dp_rev, d_rev);
  out.delta = make_rational(1, d);
  return out;
}

TwigSums twig_sums(const DualGraph& g) {
  TwigSums s;
  for (const auto& t : maximal_twigs(g)) {
    auto inv = chain_invariants(t);
    s.delta += inv.delta;
    s.e += inv.e;
    s.e_tilde += inv.e_tilde;
  }
  return s;
}

bool is_snc_minimal(const DualGraph& g) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.weight(v) == -1 && g.degree(v) <= 2) return false;
  return true;
}

namespace {

bool admissible_vertices(const DualGraph& g, const std::vector<std::size_t>& vs) {
  return std::all_of(vs.begin(), vs.end(), [&](std::size_t v) { return g.weight(v) <= -2; });
}

// Tree with exactly one branching vertex, of degree three.
bool is_fork(const DualGraph& g, const std::vector<std::size_t>& comp) {
  std::size_t branching = 0;
  for (auto v : comp) {
    if (g.degree(v) > 3) return false;
    if (g.degree(v) == 3) ++branching;
  }
  return branching == 1;
}

// Resolution graph of a quotient singularity: all weights <= -2, delta > 1, negative definite.
bool is_admissible_fork(const DualGraph& g, const std::vector<std::size_t>& comp) {
  if (!is_fork(g, comp) || !admissible_vertices(g, comp)) return false;
  DualGraph sub = g.induced(comp);
  Rational delta = 0;
  for (const auto& t : maximal_twigs(sub)) delta += chain_invariants(t).delta;
  return delta > 1 && is_negative_definite(sub.intersection_matrix());
}

// Admissible end segments of a chain component, walking inwards from each tip.
std::vector<std::size_t> chain_end_segments(const DualGraph& g, const std::vector<std::size_t>& comp) {
  if (admissible_vertices(g, comp)) return comp;
  std::vector<std::size_t> order;
  std::size_t start = comp.front();
  for (auto v : comp)
    if (g.degree(v) <= 1) {
      start = v;
      break;
    }
  std::size_t prev = g.vertex_count(), cur = start;
  for (;;) {
    order.push_back(cur);
    std::size_t next = g.vertex_count();
    for (auto n : g.neighbors(cur))
      if (n != prev) next = n;
    if (next == g.vertex_count()) break;
    prev = cur;
    cur = next;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < order.size() && g.weight(order[i]) <= -2; ++i) out.push_back(order[i]);
  for (std::size_t i = order.size(); i-- > 0 && g.weight(order[i]) <= -2;) out.push_back(order[i]);
  return out;
}

std::vector<std::size_t> twig_support(const DualGraph& g, const std::vector<std::size_t>& comp) {
  DualGraph sub = g.induced(comp);
  std::vector<std::size_t> out;
  for (const auto& t : maximal_twigs(sub)) {
    if (!t.admissible())
      throw DomainError("bark: maximal twig " + t.bracket() + " is not admissible");
    for (const auto& id : t.ids) out.push_back(g.index_of(id));
  }
  return out;
}

}  // namespace

QDivisor bark(const DualGraph& g, BarkSupport kind) {
  if (!g.is_forest()) throw DomainError("bark: graph has a cycle");
  if (!is_snc_minimal(g)) throw DomainError("bark: divisor is not snc-minimal");

  std::vector<std::size_t> support;
  for (const auto& comp : g.components()) {
    const bool chain = g.induced(comp).is_chain();
    std::vector<std::size_t> part;
    if (kind == BarkSupport::WholeComponent) {
      part = comp;
    } else if (chain) {
      part = chain_end_segments(g, comp);
    } else if (kind == BarkSupport::Auto && is_admissible_fork(g, comp)) {
      part = comp;
    } else {
      part = twig_support(g, comp);
    }
    support.insert(support.end(), part.begin(), part.end());
  }

  QDivisor out(g);
  if (support.empty()) return out;
  RatMatrix q = to_rational(g.intersection_matrix(support));
  RatVector rhs(support.size());
  for (std::size_t i = 0; i < support.size(); ++i) rhs[i] = Rational(BigInt(g.degree(support[i])) - 2);
  RatVector x = solve_rational(q, rhs);
  for (std::size_t i = 0; i < support.size(); ++i) out.set(g.id(support[i]), x[i]);
  return out;
}

QDivisor bark_chain(const Chain& ch) {
  if (ch.empty() || !ch.admissible()) throw DomainError("bark_chain: chain is not admissible");
  DualGraph g = graph_of_chain(ch);
  RatVector rhs(ch.size());
  rhs[0] = -1;
  RatVector x = solve_rational(to_rational(g.intersection_matrix()), rhs);
  QDivisor out(g);
  for (std::size_t i = 0; i < ch.size(); ++i) out.set(ch.ids[i], x[i]);
  return out;
}

QDivisor sharp(const DualGraph& g, BarkSupport kind) {
  QDivisor bk = bark(g, kind);
  QDivisor out(g);
  for (const auto& v : g.vertices()) out.set(v.id, 1 - bk.coefficient(v.id));
  return out;
}

RatVector bark_residuals(const DualGraph& g, const QDivisor& bk) {
  RatVector res(g.vertex_count());
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    // K.D_i + D.D_i = (-2 - w) + (w + deg) = deg - 2
    Rational r = Rational(BigInt(g.degree(i)) - 2);
    r -= Rational(BigInt(g.weight(i))) * bk.coefficient(g.id(i));
    for (auto n : g.neighbors(i)) r -= bk.coefficient(g.id(n));
    res[i] = r;
  }
  return res;
}

std::string BoundaryType::to_string() const {
  switch (tag) {
    case Tag::NegativeDefinite: return "NegativeDefinite";
    case Tag::TypeX: return "X";
    case Tag::TypeH: return "H";
    case Tag::TypeY:
      return "Y(" + triple[0].str() + "," + triple[1].str() + "," + triple[2].str() + ")";
    case Tag::Other: return "Other";
  }
  return "Other";
}

namespace {

bool is_minus_two_tip(const DualGraph& g, std::size_t v) { return g.degree(v) == 1 && g.weight(v) == -2; }

bool matches_x(const DualGraph& g) {
  if (g.vertex_count() != 5) return false;
  for (std::size_t v = 0; v < 5; ++v)
    if (g.degree(v) == 4) {
      for (auto n : g.neighbors(v))
        if (!is_minus_two_tip(g, n)) return false;
      return true;
    }
  return false;
}

bool matches_h(const DualGraph& g) {
  std::vector<std::size_t> branching, tips;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > 3) return false;
    if (g.degree(v) == 3) branching.push_back(v);
  }
  if (branching.size() != 2) return false;
  for (auto b : branching) {
    std::size_t n_tips = 0;
    for (auto n : g.neighbors(b))
      if (is_minus_two_tip(g, n)) {
        ++n_tips;
        tips.push_back(n);
      }
    if (n_tips != 2) return false;
  }
  // The rest is a chain running from one branching vertex to the other.
  DualGraph core = g.without(tips);
  if (!core.is_tree() || !core.is_chain()) return false;
  for (auto b : branching)
    if (core.vertex_count() > 1 && core.degree(core.index_of(g.id(b))) != 1) return false;
  return true;
}

}  // namespace

BoundaryType classify_boundary(const DualGraph& g) {
  if (g.empty() || !g.connected()) throw DomainError("classify_boundary: graph is not connected");
  if (!g.is_forest()) throw DomainError("classify_boundary: graph is not a tree");
  BoundaryType t;
  if (is_negative_definite(g.intersection_matrix())) {
    t.tag = BoundaryType::Tag::NegativeDefinite;
    return t;
  }
  if (matches_x(g)) {
    t.tag = BoundaryType::Tag::TypeX;
    return t;
  }
  if (matches_h(g)) {
    t.tag = BoundaryType::Tag::TypeH;
    return t;
  }
  std::vector<std::size_t> all(g.vertex_count());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  if (is_fork(g, all)) {
    auto twigs = maximal_twigs(g);
    bool admissible = twigs.size() == 3 &&
                      std::all_of(twigs.begin(), twigs.end(), [](const Chain& c) { return c.admissible(); });
    if (admissible) {
      Rational delta = 0;
      for (const auto& tw : twigs) delta += chain_invariants(tw).delta;
      if (delta == 1) {
        t.tag = BoundaryType::Tag::TypeY;
        for (std::size_t i = 0; i < 3; ++i) t.triple[i] = chain_discriminants(twigs[i]).first;
        return t;
      }
    }
  }
  t.tag = BoundaryType::Tag::Other;
  return t;
}

KobayashiResult kobayashi_check(const BigInt& chi_open, const std::vector<BigInt>& group_orders,
                                const Rational& kd_sharp_sq) {
  Rational lhs = Rational(chi_open);
  for (const auto& o : group_orders) {
    if (o < 2) throw DomainError("kobayashi_check: group orders must be at least 2");
    lhs += make_rational(1, o);
  }
  Rational rhs = kd_sharp_sq / 3;
  return KobayashiResult{lhs >= rhs, lhs - rhs};
}

}  // namespace snc
