#include "snc/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace snc {

std::size_t DualGraph::add_vertex(std::string id, Weight weight) {
  if (id.empty()) throw DomainError("empty vertex id");
  if (index_.count(id)) throw DomainError("duplicate vertex id '" + id + "'");
  const std::size_t v = vertices_.size();
  index_.emplace(id, v);
  vertices_.push_back(Vertex{std::move(id), weight});
  adj_.emplace_back();
  return v;
}

void DualGraph::add_edge(std::string_view a, std::string_view b) { add_edge(index_of(a), index_of(b)); }

void DualGraph::add_edge(std::size_t a, std::size_t b) {
  if (a >= vertices_.size() || b >= vertices_.size()) throw DomainError("edge endpoint out of range");
  if (a == b) throw DomainError("self-loop at '" + vertices_[a].id + "'");
  if (adjacent(a, b))
    throw DomainError("double edge between '" + vertices_[a].id + "' and '" + vertices_[b].id + "'");
  adj_[a].push_back(b);
  adj_[b].push_back(a);
}

std::size_t DualGraph::edge_count() const {
  std::size_t s = 0;
  for (const auto& n : adj_) s += n.size();
  return s / 2;
}

bool DualGraph::has_vertex(std::string_view id) const { return index_.count(std::string(id)) > 0; }

std::size_t DualGraph::index_of(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) throw DomainError("unknown vertex id '" + std::string(id) + "'");
  return it->second;
}

bool DualGraph::adjacent(std::size_t a, std::size_t b) const {
  const auto& n = adj_.at(a);
  return std::find(n.begin(), n.end(), b) != n.end();
}

std::vector<std::pair<std::size_t, std::size_t>> DualGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < adj_.size(); ++a)
    for (auto b : adj_[a])
      if (a < b) out.emplace_back(a, b);
  std::sort(out.begin(), out.end());
  return out;
}

IntMatrix DualGraph::intersection_matrix() const {
  std::vector<std::size_t> all(vertex_count());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return intersection_matrix(all);
}

IntMatrix DualGraph::intersection_matrix(const std::vector<std::size_t>& support) const {
  IntMatrix q(support.size(), support.size());
  for (std::size_t a = 0; a < support.size(); ++a) {
    q(a, a) = weight(support[a]);
    for (std::size_t b = a + 1; b < support.size(); ++b)
      if (adjacent(support[a], support[b])) q(a, b) = q(b, a) = 1;
  }
  return q;
}

DualGraph DualGraph::induced(const std::vector<std::size_t>& keep) const {
  DualGraph g;
  std::vector<std::size_t> map(vertex_count(), vertex_count());
  for (auto v : keep) map[v] = g.add_vertex(vertices_.at(v).id, vertices_[v].weight);
  for (auto v : keep)
    for (auto w : adj_[v])
      if (map[w] != vertex_count() && map[v] < map[w]) g.add_edge(map[v], map[w]);
  return g;
}

DualGraph DualGraph::without(const std::vector<std::size_t>& drop) const {
  std::vector<bool> gone(vertex_count(), false);
  for (auto v : drop) gone.at(v) = true;
  std::vector<std::size_t> keep;
  for (std::size_t v = 0; v < vertex_count(); ++v)
    if (!gone[v]) keep.push_back(v);
  return induced(keep);
}

std::vector<std::vector<std::size_t>> DualGraph::components() const {
  std::vector<std::vector<std::size_t>> comps;
  std::vector<bool> seen(vertex_count(), false);
  for (std::size_t s = 0; s < vertex_count(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp{s};
    seen[s] = true;
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (auto w : adj_[comp[k]])
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool DualGraph::is_chain() const {
  if (!is_tree()) return false;
  for (const auto& n : adj_)
    if (n.size() > 2) return false;
  return true;
}

bool DualGraph::operator==(const DualGraph& o) const {
  if (vertex_count() != o.vertex_count()) return false;
  for (std::size_t i = 0; i < vertex_count(); ++i)
    if (vertices_[i].id != o.vertices_[i].id || vertices_[i].weight != o.vertices_[i].weight) return false;
  return edges() == o.edges();
}

Chain Chain::reversed() const {
  Chain r{ids, weights};
  std::reverse(r.ids.begin(), r.ids.end());
  std::reverse(r.weights.begin(), r.weights.end());
  return r;
}

bool Chain::admissible() const {
  return std::all_of(weights.begin(), weights.end(), [](Weight w) { return w <= -2; });
}

std::string Chain::bracket() const {
  std::string s = "[";
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(-weights[i]);
  }
  return s + "]";
}

Chain chain_from_bracket(const std::vector<Weight>& negated, const std::string& prefix) {
  Chain c;
  for (std::size_t i = 0; i < negated.size(); ++i) {
    c.ids.push_back(prefix + std::to_string(i + 1));
    c.weights.push_back(-negated[i]);
  }
  return c;
}

DualGraph graph_of_chain(const Chain& c) {
  DualGraph g;
  for (std::size_t i = 0; i < c.size(); ++i) {
    g.add_vertex(c.ids[i], c.weights[i]);
    if (i) g.add_edge(i - 1, i);
  }
  return g;
}

Chain chain_of(const DualGraph& g, const std::vector<std::size_t>& order) {
  Chain c;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i && !g.adjacent(order[i - 1], order[i])) throw DomainError("chain: consecutive components not adjacent");
    c.ids.push_back(g.id(order[i]));
    c.weights.push_back(g.weight(order[i]));
  }
  return c;
}

std::vector<std::string> QDivisor::ids_of(const DualGraph& g) {
  std::vector<std::string> ids;
  for (const auto& v : g.vertices()) ids.push_back(v.id);
  return ids;
}

void QDivisor::set(const std::string& id, const Rational& c) {
  if (std::find(order_.begin(), order_.end(), id) == order_.end())
    throw DomainError("divisor: unknown component '" + id + "'");
  if (c == 0)
    coeffs_.erase(id);
  else
    coeffs_[id] = c;
}

Rational QDivisor::coefficient(const std::string& id) const {
  auto it = coeffs_.find(id);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

std::vector<std::pair<std::string, Rational>> QDivisor::terms() const {
  std::vector<std::pair<std::string, Rational>> out;
  for (const auto& id : order_) {
    auto it = coeffs_.find(id);
    if (it != coeffs_.end()) out.emplace_back(id, it->second);
  }
  return out;
}

std::string QDivisor::to_string() const {
  std::string s;
  for (const auto& [id, c] : terms()) {
    if (!s.empty()) s += " ";
    s += id + "=" + snc::to_string(c);
  }
  return s.empty() ? "0" : s;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

DualGraph parse_graph(std::string_view text) {
  DualGraph g;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = split_ws(line);
    if (tok.empty()) continue;
    try {
      if (tok[0] == "vertex") {
        if (tok.size() != 3 || tok[2].substr(0, 2) != "w=") throw ParseError(line_no, "expected 'vertex <id> w=<integer>'");
        std::string_view num = tok[2].substr(2);
        Weight w = 0;
        auto [p, ec] = std::from_chars(num.data(), num.data() + num.size(), w);
        if (ec != std::errc() || p != num.data() + num.size() || num.empty())
          throw ParseError(line_no, "bad weight '" + std::string(num) + "'");
        if (g.has_vertex(tok[1])) throw ParseError(line_no, "duplicate vertex id '" + std::string(tok[1]) + "'");
        g.add_vertex(std::string(tok[1]), w);
      } else if (tok[0] == "edge") {
        if (tok.size() != 3) throw ParseError(line_no, "expected 'edge <id> <id>'");
        for (int k = 1; k <= 2; ++k)
          if (!g.has_vertex(tok[k])) throw ParseError(line_no, "dangling edge endpoint '" + std::string(tok[k]) + "'");
        if (tok[1] == tok[2]) throw ParseError(line_no, "self-loop at '" + std::string(tok[1]) + "'");
        if (g.adjacent(g.index_of(tok[1]), g.index_of(tok[2])))
          throw ParseError(line_no, "double edge '" + std::string(tok[1]) + " " + std::string(tok[2]) + "'");
        g.add_edge(tok[1], tok[2]);
      } else {
        throw ParseError(line_no, "unknown directive '" + std::string(tok[0]) + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(line_no, e.what());
    }
    if (end == text.size()) break;
  }
  return g;
}

std::string serialize_graph(const DualGraph& g) {
  std::ostringstream out;
  for (const auto& v : g.vertices()) out << "vertex " << v.id << " w=" << v.weight << "\n";
  std::vector<std::pair<std::string, std::string>> named;
  for (auto [a, b] : g.edges()) {
    auto x = g.id(a), y = g.id(b);
    if (y < x) std::swap(x, y);
    named.emplace_back(x, y);
  }
  std::sort(named.begin(), named.end());
  for (const auto& [a, b] : named) out << "edge " << a << " " << b << "\n";
  return out.str();
}

DualGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open graph file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

std::size_t branching_number(const DualGraph& g, std::string_view id) { return g.degree(g.index_of(id)); }

std::vector<Chain> maximal_twigs(const DualGraph& g) {
  if (!g.is_forest()) throw DomainError("maximal_twigs: graph contains a cycle");
  if (g.is_chain()) throw DomainError("maximal_twigs: graph is a chain");
  std::vector<Chain> twigs;
  for (const auto& comp : g.components()) {
    bool has_branching = false;
    for (auto v : comp)
      if (g.degree(v) >= 3) has_branching = true;
    if (!has_branching) continue;
    for (auto tip : comp) {
      if (g.degree(tip) != 1) continue;
      std::vector<std::size_t> order{tip};
      std::size_t prev = tip, cur = g.neighbors(tip)[0];
      while (g.degree(cur) == 2) {
        order.push_back(cur);
        std::size_t next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
        prev = cur;
        cur = next;
      }
      twigs.push_back(chain_of(g, order));
    }
  }
  return twigs;
}

std::string emit_dot(const DualGraph& g) {
  std::ostringstream out;
  out << "graph dual {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    out << "  n" << v << " [label=\"" << g.id(v) << " (" << g.weight(v) << ")\"];\n";
  for (auto [a, b] : g.edges()) out << "  n" << a << " -- n" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace snc
