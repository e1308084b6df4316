#pragma once

#include "snc/matrix.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace snc {

using Weight = long long;

struct Vertex {
  std::string id;
  Weight weight = 0;  // self-intersection of the component
};

// Weighted dual graph of a reduced snc divisor with rational components.
// Simple graph: no loops, at most one edge per pair.
class DualGraph {
public:
  std::size_t add_vertex(std::string id, Weight weight);
  void add_edge(std::string_view a, std::string_view b);
  void add_edge(std::size_t a, std::size_t b);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const;
  bool empty() const { return vertices_.empty(); }

  bool has_vertex(std::string_view id) const;
  std::size_t index_of(std::string_view id) const;  // DomainError on unknown id
  const std::string& id(std::size_t v) const { return vertices_.at(v).id; }
  Weight weight(std::size_t v) const { return vertices_.at(v).weight; }
  void set_weight(std::size_t v, Weight w) { vertices_.at(v).weight = w; }
  const std::vector<Vertex>& vertices() const { return vertices_; }

  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_.at(v); }
  std::size_t degree(std::size_t v) const { return adj_.at(v).size(); }
  bool adjacent(std::size_t a, std::size_t b) const;

  // Unordered edges as index pairs (smaller index first), sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  // Q(D) in vertex order, or restricted to a vertex subset (in the order given).
  IntMatrix intersection_matrix() const;
  IntMatrix intersection_matrix(const std::vector<std::size_t>& support) const;

  // Induced subgraph; vertex order follows the order of `keep`.
  DualGraph induced(const std::vector<std::size_t>& keep) const;
  DualGraph without(const std::vector<std::size_t>& drop) const;

  std::vector<std::vector<std::size_t>> components() const;
  bool connected() const { return components().size() <= 1; }
  bool is_forest() const { return edge_count() + components().size() == vertex_count(); }
  bool is_tree() const { return connected() && is_forest() && !empty(); }
  bool is_chain() const;

  bool operator==(const DualGraph& o) const;

private:
  std::vector<Vertex> vertices_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<std::size_t>> adj_;
};

// Ordered chain of components; index 0 is the chosen tip.
// Weights are raw self-intersections; bracket() prints them negated.
struct Chain {
  std::vector<std::string> ids;
  std::vector<Weight> weights;

  std::size_t size() const { return ids.size(); }
  bool empty() const { return ids.empty(); }
  Chain reversed() const;
  bool admissible() const;  // all weights <= -2
  std::string bracket() const;
  bool operator==(const Chain&) const = default;
};

// Chain with the given negated weights, ids prefix+1..prefix+n.
Chain chain_from_bracket(const std::vector<Weight>& negated, const std::string& prefix = "R");
DualGraph graph_of_chain(const Chain& c);
Chain chain_of(const DualGraph& g, const std::vector<std::size_t>& order);

// Rational combination of components of a fixed graph; zero coefficients are never stored.
class QDivisor {
public:
  QDivisor() = default;
  explicit QDivisor(const DualGraph& g) : order_(ids_of(g)) {}

  void set(const std::string& id, const Rational& c);
  Rational coefficient(const std::string& id) const;
  // Nonzero entries in graph vertex order.
  std::vector<std::pair<std::string, Rational>> terms() const;
  bool zero() const { return coeffs_.empty(); }
  std::string to_string() const;

private:
  static std::vector<std::string> ids_of(const DualGraph& g);
  std::vector<std::string> order_;
  std::map<std::string, Rational> coeffs_;
};

// Line-based text format:
//   vertex <id> w=<integer>
//   edge <id> <id>
// '#' starts a comment.
DualGraph parse_graph(std::string_view text);
std::string serialize_graph(const DualGraph& g);
DualGraph load_graph_file(const std::string& path);

std::size_t branching_number(const DualGraph& g, std::string_view id);

// Maximal twigs of a forest whose components are not chains; each starts at a tip and stops
// before the first branching vertex. Chain components contribute nothing.
// DomainError if g has a cycle or g is a single chain.
std::vector<Chain> maximal_twigs(const DualGraph& g);

std::string emit_dot(const DualGraph& g);

}  // namespace snc
