#pragma once

#include "snc/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace snc {

// Center of a blow-up on the boundary: a vertex (sprouting) or an edge (subdivisional).
struct Center {
  std::string a;
  std::optional<std::string> b;

  static Center vertex(std::string v) { return Center{std::move(v), std::nullopt}; }
  static Center edge(std::string u, std::string v) { return Center{std::move(u), std::move(v)}; }
};

// New vertex of weight -1 named `new_id` (an unused "x<k>" id when empty).
DualGraph blowup_graph(const DualGraph& g, const Center& c, std::string new_id = {});

// Requires weight -1 and branching number <= 2; the neighbors gain +1 and are joined if there were two.
DualGraph contract_minus_one(const DualGraph& g, std::string_view v);

struct ContractionStep {
  std::string vertex;
  std::vector<std::string> neighbors;  // at the moment of contraction
};

struct FiberSearch {
  bool valid = false;
  std::vector<ContractionStep> trace;  // empty unless valid
};

// Depth-first search over all (-1)-choices with failure memoization on canonical tree forms.
FiberSearch is_valid_fiber(const DualGraph& g);

// Canonical string of a weighted tree up to isomorphism (ids ignored). DomainError on non-trees.
std::string canonical_tree_form(const DualGraph& g);

struct FiberGraph {
  DualGraph graph;
  IntVector multiplicities;  // in vertex order

  BigInt multiplicity(std::string_view id) const { return multiplicities.at(graph.index_of(id)); }
};

// Primitive positive integer kernel vector of Q(g); DomainError unless g is a valid fiber.
FiberGraph fiber_multiplicities(const DualGraph& g);

struct UniqueMinusOneReport {
  std::string minus_one;
  bool minus_one_multiplicity_gt_1 = false;
  bool two_multiplicity_one = false;
  bool multiplicity_one_are_tips = false;
  bool multiplicity_one_in_first_branch = false;
  bool residual_is_chain = false;  // component of F - C without multiplicity-one curves
  std::vector<std::vector<std::string>> branches;

  bool passes() const {
    return minus_one_multiplicity_gt_1 && two_multiplicity_one && multiplicity_one_are_tips &&
           multiplicity_one_in_first_branch && residual_is_chain;
  }
};

// DomainError when f does not have exactly one (-1)-vertex, or is not a valid fiber.
UniqueMinusOneReport unique_minus_one_checks(const FiberGraph& f);

struct RulingBookkeeping {
  long long h = 0;
  long long nu = 0;
  long long sigma_excess = 0;
  long long b2_surface = 0;
  long long b2_boundary = 0;
};

// Sigma = h + nu + b2(X) - b2(D) - 2.
bool fujita_check(const RulingBookkeeping& r);

}  // namespace snc
