#pragma once

#include "snc/graph.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace snc::testing {

struct SuiteResult {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;  // serialized graph or short description
  bool ok() const { return cases > 0 && failures == 0; }
};

// Random tree on n vertices with weights in [lo, hi]; ids v0..v{n-1}.
DualGraph random_tree(std::mt19937_64& rng, std::size_t n, Weight lo, Weight hi);

// d(D) by cofactor-free rational elimination written independently of the library.
Rational oracle_det(const IntMatrix& m);
// -Q positive semidefinite via all principal minors (n <= 10).
bool oracle_negative_semidefinite(const IntMatrix& q);

// Expansion around a random vertex and along a random edge vs the direct determinant.
SuiteResult det_recursion_suite(std::uint64_t seed, std::size_t count, std::size_t max_vertices);
// d unchanged by random sprouting / subdivisional blow-ups; contraction undoes them.
SuiteResult blowup_invariance_suite(std::uint64_t seed, std::size_t count);
// Bark on random forks with admissible twigs: coefficients in [0,1], residual zero on the support.
SuiteResult bark_fork_suite(std::uint64_t seed, std::size_t count);
// Random integer matrices through smith_normal_form; checks shape, divisibility and unimodularity.
SuiteResult smith_suite(std::uint64_t seed, std::size_t count);

// Every connected weighted tree with at most max_vertices vertices and weights in [lo, hi]
// (one representative per unweighted shape, all weightings).
struct FiberOracleResult {
  std::size_t graphs = 0;
  std::size_t valid = 0;
  // valid fiber <=> semidefinite, kernel of rank one spanned by a positive vector, and a (-1)-vertex or [0]
  SuiteResult kernel_criterion;
  // the same with K.F = -2 added
  SuiteResult kernel_criterion_with_genus;
  // multiplicities from the kernel vs replaying the contraction trace backwards
  SuiteResult multiplicity_replay;
};
FiberOracleResult fiber_oracle_suite(std::size_t max_vertices, Weight lo, Weight hi);

// Unweighted tree shapes up to isomorphism, as parent arrays (parent[0] = -1).
std::vector<std::vector<int>> tree_shapes(std::size_t n);

}  // namespace snc::testing
