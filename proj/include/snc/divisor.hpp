#pragma once

#include "snc/graph.hpp"

#include <array>
#include <string>
#include <vector>

namespace snc {

// d(D) = det(-Q(D)) on a subset of components; d of the empty set is 1.
BigInt discriminant(const DualGraph& g);
BigInt discriminant(const DualGraph& g, const std::vector<std::string>& support);
BigInt discriminant_at(const DualGraph& g, const std::vector<std::size_t>& support);

// Expansion of d(D) around a component c of a tree:
//   d(D) = -c^2 * prod d(D_i) - sum_i d(D_i - C_i) * prod_{j != i} d(D_j)
// where D_i are the connected components of D - c and C_i is the component of D_i meeting c.
BigInt det_branch_formula(const DualGraph& g, std::string_view c);

// d(D1 + D2) = d(D1) d(D2) - d(D1 - C1) d(D2 - C2) for connected D1, D2 joined by one edge C1-C2.
// `d1` lists the vertices of D1; D2 is the complement.
BigInt det_join_formula(const DualGraph& g, const std::vector<std::string>& d1);

struct ChainInvariants {
  BigInt d;
  BigInt d_prime;
  Rational e;
  Rational e_tilde;
  Rational delta;
};

// d and d' = d(R - R_1) are defined for any rational chain.
std::pair<BigInt, BigInt> chain_discriminants(const Chain& ch);
// All five invariants; DomainError unless the chain is admissible.
ChainInvariants chain_invariants(const Chain& ch);

// delta, e, e~ of a non-chain forest: sums over maximal twigs, all of which must be admissible.
struct TwigSums {
  Rational delta;
  Rational e;
  Rational e_tilde;
};
TwigSums twig_sums(const DualGraph& g);

// No (-1)-vertex whose contraction keeps the divisor snc (branching number <= 2).
bool is_snc_minimal(const DualGraph& g);

enum class BarkSupport {
  Auto,            // whole component for admissible chains and admissible forks (ND, delta > 1),
                   // maximal twigs otherwise
  WholeComponent,  // every connected component is the support
  Twigs,           // maximal twigs (admissible end segments for chains)
};

// Bk D: the Q-divisor on the support with (K + D - Bk D) . D_i = 0 for every support component,
// using K.C = -2 - C^2. DomainError on cycles, non-minimal trees, or non-admissible maximal twigs;
// SingularMatrixError when the system on the support is degenerate.
QDivisor bark(const DualGraph& g, BarkSupport kind = BarkSupport::Auto);

// Bk(R, R_1) of an admissible chain: R_1 . Bk = -1 and R_i . Bk = 0 for i > 1.
QDivisor bark_chain(const Chain& ch);

// D^# = D - Bk D.
QDivisor sharp(const DualGraph& g, BarkSupport kind = BarkSupport::Auto);

// Defining-equation residuals (K + D - Bk D) . D_i for every vertex of g, in vertex order.
RatVector bark_residuals(const DualGraph& g, const QDivisor& bk);

struct BoundaryType {
  enum class Tag { NegativeDefinite, TypeX, TypeH, TypeY, Other };
  Tag tag = Tag::Other;
  std::array<BigInt, 3> triple{};  // d(T_1), d(T_2), d(T_3) for TypeY, in twig order

  std::string to_string() const;
};

// Connected snc tree. NegativeDefinite when Q is; otherwise the X / H / Y shapes literally.
BoundaryType classify_boundary(const DualGraph& g);

struct KobayashiResult {
  bool holds = false;
  Rational slack;  // lhs - rhs
};

// chi(X - D) + sum 1/|G_P| >= (K + D^#)^2 / 3.
KobayashiResult kobayashi_check(const BigInt& chi_open, const std::vector<BigInt>& group_orders,
                                const Rational& kd_sharp_sq);

}  // namespace snc
