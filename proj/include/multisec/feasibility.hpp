#pragma once

// Exact-rational linear feasibility by Fourier–Motzkin elimination.

#include "multisec/lattice.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace multisec {

using RatVector = std::vector<Rational>;

RatVector to_rational(const IntVector& v);

/// coeffs · x  (== or >=)  rhs, depending on which list the constraint lives in.
struct LinearConstraint {
  RatVector coeffs;
  Rational rhs;
};

struct FeasibilityQuery {
  std::size_t variables = 0;
  std::vector<LinearConstraint> equalities;
  std::vector<LinearConstraint> inequalities;  // sense >=

  void validate() const;
  bool satisfied_by(const RatVector& x) const;
};

/// A point satisfying every constraint, or nullopt when the system is infeasible.
/// Any returned witness has been re-verified exactly.
std::optional<RatVector> feasible(const FeasibilityQuery& query);

/// The constraints on the first `kept` variables obtained by eliminating all
/// later variables (existential projection). Output rows are over `kept` variables.
struct Projection {
  std::vector<LinearConstraint> equalities;
  std::vector<LinearConstraint> inequalities;
  bool infeasible = false;
};

Projection project(const FeasibilityQuery& query, std::size_t kept);

}  // namespace multisec
