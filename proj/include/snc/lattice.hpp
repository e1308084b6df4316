#pragma once

#include "snc/birational.hpp"
#include "snc/divisor.hpp"
#include "snc/graph.hpp"

#include <map>
#include <string>
#include <vector>

namespace snc {

// One line of an arrangement file.
//   curve <name> degree=<d>
//   blowup <name> at <name>,<name>,...
struct ProgramStep {
  enum class Kind { Curve, Blowup };
  Kind kind = Kind::Curve;
  std::string name;
  int degree = 0;                   // curves only
  std::vector<std::string> center;  // blow-ups only
  int line = 0;
};

struct BlowupProgram {
  std::vector<ProgramStep> steps;
  std::size_t blowup_count() const;
};

BlowupProgram parse_program(std::string_view text);
BlowupProgram load_program_file(const std::string& path);

// NS lattice of an iterated blow-up of P^2 in the basis (H, e_1, ..., e_n), Gram diag(1, -1, ..., -1).
class SurfaceLattice {
public:
  explicit SurfaceLattice(std::size_t blowups);

  std::size_t rank() const { return rank_; }
  std::size_t blowups() const { return rank_ - 1; }

  IntVector zero() const { return IntVector(rank_); }
  IntVector hyperplane() const;
  IntVector exceptional(std::size_t k) const;  // e_k, 1-based
  IntVector canonical() const;                 // -3H + sum e_i

  BigInt pair(const IntVector& a, const IntVector& b) const;
  Rational pair(const RatVector& a, const RatVector& b) const;
  BigInt pair(std::string_view a, std::string_view b) const;
  IntMatrix gram() const;

  bool has(std::string_view name) const { return classes_.count(std::string(name)) > 0; }
  const IntVector& class_of(std::string_view name) const;
  const std::vector<std::string>& names() const { return order_; }

  // Named smooth rational curve; adjunction C^2 + C.K = -2 is enforced.
  void add_class(const std::string& name, IntVector v);
  void set_class(const std::string& name, IntVector v);

  // Integer combination of names plus the reserved symbols K and H, e.g. "T1+2B-K".
  IntVector class_of_expression(std::string_view expr) const;

private:
  std::size_t rank_;
  std::vector<std::string> order_;
  std::map<std::string, IntVector> classes_;
};

// "2H-e1-e4", "0"; rational coefficients print as p/q.
std::string format_class(const IntVector& v);
std::string format_class(const RatVector& v);

SurfaceLattice run_program(const BlowupProgram& p);

// Weights are self-pairings, edges where the pairing is 1. DomainError on pairings outside {0,1}
// and on cycles.
DualGraph extract_boundary_graph(const SurfaceLattice& l, const std::vector<std::string>& names);

// K + D - Bk D as a rational class.
RatVector k_plus_sharp_class(const SurfaceLattice& l, const std::vector<std::string>& boundary);

struct EulerNumbers {
  BigInt surface;
  BigInt boundary;
  BigInt exceptional;
  BigInt open;
};

EulerNumbers euler_numbers(const SurfaceLattice& l, const std::vector<std::string>& boundary,
                           const std::vector<std::string>& exceptional);

// Torsion of the cokernel of the boundary classes inside the unimodular lattice.
TorsionGroup h1_order(const SurfaceLattice& l, const std::vector<std::string>& boundary);

struct FiberReport {
  std::vector<std::string> components;
  IntVector multiplicities;  // empty when incomplete
  bool complete = false;
  bool general = false;  // no named vertical curves at all
  IntVector residual;    // F - sum of components (unit coefficients) when incomplete
  long long sigma = 0;   // components outside the boundary
  bool in_boundary = false;
};

struct RulingDecomposition {
  IntVector fiber_class;
  std::vector<std::pair<std::string, BigInt>> horizontal;  // name, F-degree
  std::vector<FiberReport> fibers;
  RulingBookkeeping bookkeeping;
  bool all_complete = true;
};

RulingDecomposition ruling_decompose(const SurfaceLattice& l, const IntVector& fiber,
                                     const std::vector<std::string>& curves,
                                     const std::vector<std::string>& boundary);

struct ClassConstraint {
  IntVector target;
  BigInt product;
};

// All v with v.target = product for every constraint, v^2 = self_sq and v.K = -self_sq - 2,
// sorted lexicographically. DomainError when the residual family is not finite.
std::vector<IntVector> solve_curve_class(const SurfaceLattice& l, const std::vector<ClassConstraint>& constraints,
                                         long long self_sq);

}  // namespace snc
