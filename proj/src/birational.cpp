#include "snc/birational.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_set>

namespace snc {

namespace {

std::string fresh_id(const DualGraph& g) {
  for (std::size_t k = 1;; ++k) {
    std::string id = "x" + std::to_string(k);
    if (!g.has_vertex(id)) return id;
  }
}

DualGraph copy_with_edges(const DualGraph& g, const std::vector<std::pair<std::size_t, std::size_t>>& skip) {
  DualGraph out;
  for (const auto& v : g.vertices()) out.add_vertex(v.id, v.weight);
  for (auto e : g.edges())
    if (std::find(skip.begin(), skip.end(), e) == skip.end()) out.add_edge(e.first, e.second);
  return out;
}

}  // namespace

DualGraph blowup_graph(const DualGraph& g, const Center& c, std::string new_id) {
  if (new_id.empty()) new_id = fresh_id(g);
  if (g.has_vertex(new_id)) throw DomainError("blow-up: id '" + new_id + "' already in use");
  const std::size_t a = g.index_of(c.a);
  if (!c.b) {
    DualGraph out = copy_with_edges(g, {});
    out.set_weight(a, out.weight(a) - 1);
    std::size_t n = out.add_vertex(new_id, -1);
    out.add_edge(a, n);
    return out;
  }
  const std::size_t b = g.index_of(*c.b);
  if (!g.adjacent(a, b)) throw DomainError("blow-up: " + c.a + " and " + *c.b + " do not meet");
  DualGraph out = copy_with_edges(g, {{std::min(a, b), std::max(a, b)}});
  out.set_weight(a, out.weight(a) - 1);
  out.set_weight(b, out.weight(b) - 1);
  std::size_t n = out.add_vertex(new_id, -1);
  out.add_edge(a, n);
  out.add_edge(b, n);
  return out;
}

DualGraph contract_minus_one(const DualGraph& g, std::string_view v) {
  const std::size_t x = g.index_of(v);
  if (g.weight(x) != -1) throw DomainError("contract: " + std::string(v) + " is not a (-1)-curve");
  if (g.degree(x) > 2) throw DomainError("contract: " + std::string(v) + " has branching number > 2");
  const auto nbrs = g.neighbors(x);
  if (nbrs.size() == 2 && g.adjacent(nbrs[0], nbrs[1]))
    throw DomainError("contract: image would not be snc");
  DualGraph out = g.without({x});
  std::vector<std::size_t> mapped;
  for (auto n : nbrs) {
    std::size_t m = out.index_of(g.id(n));
    out.set_weight(m, out.weight(m) + 1);
    mapped.push_back(m);
  }
  if (mapped.size() == 2) out.add_edge(mapped[0], mapped[1]);
  return out;
}

namespace {

std::string encode_rooted(const DualGraph& g, std::size_t v, std::size_t parent) {
  std::vector<std::string> kids;
  for (auto n : g.neighbors(v))
    if (n != parent) kids.push_back(encode_rooted(g, n, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(" + std::to_string(g.weight(v));
  for (const auto& k : kids) s += k;
  return s + ")";
}

}  // namespace

std::string canonical_tree_form(const DualGraph& g) {
  if (g.empty()) return "()";
  if (!g.is_tree()) throw DomainError("canonical form: graph is not a tree");
  // Peel leaves to find the center(s).
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> deg(n);
  std::vector<std::size_t> layer;
  for (std::size_t v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<std::size_t> next;
    for (auto v : layer)
      for (auto w : g.neighbors(v))
        if (--deg[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::string best;
  for (auto c : layer) {
    std::string s = encode_rooted(g, c, n);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

FiberSearch is_valid_fiber(const DualGraph& g) {
  FiberSearch out;
  if (g.empty() || !g.is_tree()) return out;
  std::unordered_set<std::string> dead;
  std::vector<ContractionStep> trace;

  std::function<bool(const DualGraph&)> search = [&](const DualGraph& cur) -> bool {
    if (cur.vertex_count() == 1 && cur.weight(0) == 0) return true;
    std::string key = canonical_tree_form(cur);
    if (dead.count(key)) return false;
    for (std::size_t v = 0; v < cur.vertex_count(); ++v) {
      if (cur.weight(v) != -1 || cur.degree(v) > 2 || cur.vertex_count() == 1) continue;
      ContractionStep step{cur.id(v), {}};
      for (auto n : cur.neighbors(v)) step.neighbors.push_back(cur.id(n));
      trace.push_back(step);
      if (search(contract_minus_one(cur, cur.id(v)))) return true;
      trace.pop_back();
    }
    dead.insert(key);
    return false;
  };

  if (search(g)) {
    out.valid = true;
    out.trace = std::move(trace);
  }
  return out;
}

FiberGraph fiber_multiplicities(const DualGraph& g) {
  if (!is_valid_fiber(g).valid) throw DomainError("not a valid fiber");
  auto ker = nullspace(to_rational(g.intersection_matrix()));
  if (ker.size() != 1) throw Error("fiber: intersection form kernel is not one-dimensional");
  RatVector k = ker.front();
  BigInt l = 1;
  for (const auto& x : k) l = boost::multiprecision::lcm(l, denominator_of(x));
  IntVector mu;
  BigInt gcd = 0;
  for (const auto& x : k) {
    mu.push_back(numerator_of(x * l));
    gcd = boost::multiprecision::gcd(gcd, mu.back());
  }
  if (mu.front() < 0) gcd = -gcd;
  for (auto& m : mu) {
    m /= gcd;
    if (m <= 0) throw Error("fiber: kernel vector is not positive");
  }
  return FiberGraph{g, std::move(mu)};
}

UniqueMinusOneReport unique_minus_one_checks(const FiberGraph& f) {
  const DualGraph& g = f.graph;
  std::vector<std::size_t> minus_ones;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.weight(v) == -1) minus_ones.push_back(v);
  if (minus_ones.size() != 1) throw DomainError("report not applicable: fiber needs exactly one (-1)-curve");
  FiberSearch fs = is_valid_fiber(g);
  if (!fs.valid) throw DomainError("not a valid fiber");

  const std::size_t c = minus_ones.front();
  const std::size_t n = g.vertex_count();
  UniqueMinusOneReport r;
  r.minus_one = g.id(c);
  r.minus_one_multiplicity_gt_1 = f.multiplicities[c] > 1;

  std::vector<std::size_t> ones;
  for (std::size_t v = 0; v < n; ++v)
    if (f.multiplicities[v] == 1) ones.push_back(v);
  r.two_multiplicity_one = ones.size() == 2;
  r.multiplicity_one_are_tips =
      std::all_of(ones.begin(), ones.end(), [&](std::size_t v) { return g.degree(v) == 1; });

  // Creation time: the k-th contracted curve was created at time (n - 1) - k; the survivor at 0.
  std::vector<std::size_t> created(n, 0);
  for (std::size_t k = 0; k < fs.trace.size(); ++k) created[g.index_of(fs.trace[k].vertex)] = (n - 1) - k;

  std::vector<std::size_t> branching;
  for (std::size_t v = 0; v < n; ++v)
    if (g.degree(v) >= 3) branching.push_back(v);
  std::sort(branching.begin(), branching.end(),
            [&](std::size_t a, std::size_t b) { return created[a] < created[b]; });
  branching.push_back(c);

  // T_1: created no later than B_1; T_i: created after B_{i-1} and no later than B_i.
  std::vector<std::size_t> by_time(n);
  std::iota(by_time.begin(), by_time.end(), 0);
  std::sort(by_time.begin(), by_time.end(), [&](std::size_t a, std::size_t b) { return created[a] < created[b]; });
  for (std::size_t i = 0; i < branching.size(); ++i) {
    std::vector<std::string> branch;
    for (auto v : by_time) {
      bool after_prev = i == 0 || created[v] > created[branching[i - 1]];
      if (after_prev && created[v] <= created[branching[i]]) branch.push_back(g.id(v));
    }
    r.branches.push_back(branch);
  }
  if (!r.branches.empty()) {
    const auto& first = r.branches.front();
    r.multiplicity_one_in_first_branch = std::all_of(ones.begin(), ones.end(), [&](std::size_t v) {
      return std::find(first.begin(), first.end(), g.id(v)) != first.end();
    });
  }

  DualGraph rest = g.without({c});
  r.residual_is_chain = true;
  for (const auto& comp : rest.components()) {
    bool has_one = std::any_of(comp.begin(), comp.end(), [&](std::size_t v) {
      return f.multiplicities[g.index_of(rest.id(v))] == 1;
    });
    if (!has_one && !rest.induced(comp).is_chain()) r.residual_is_chain = false;
  }
  return r;
}

bool fujita_check(const RulingBookkeeping& r) {
  return r.sigma_excess == r.h + r.nu + r.b2_surface - r.b2_boundary - 2;
}

}  // namespace snc
