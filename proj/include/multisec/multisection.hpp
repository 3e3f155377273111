#pragma once

// Class groups and canonical modules of the multi-section rings
//
//   T(X; D_1..D_s) = sum over n in N_0^s of H^0(X, O_X(sum n_i D_i)) t^n
//   R(X; D_1..D_s) = sum over n in Z^s   of H^0(X, O_X(sum n_i D_i)) t^n
//
// computed from the cone/lattice data of X:
//   U       = { j : the divisors other than D_j reach "ample + effective" }
//   Cl(T)   = Cl(X) / <D_j : j not in U>,   Cl(R) = Cl(X) / <D_1..D_s>
//   [w_T]   = q(K_X + sum D_i),             [w_R] = p(K_X)
// and the canonical module is free exactly when its class vanishes.

#include "multisec/feasibility.hpp"
#include "multisec/geometry.hpp"
#include "multisec/lattice.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace multisec {

enum class Ring { T, R };

std::string to_string(Ring ring);

class HypothesisFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MultiSectionSetup {
  VarietyPresentation variety;
  std::vector<DivisorClass> divisors;  // D_1..D_s

  std::size_t s() const { return divisors.size(); }
  /// Validates the variety, s >= 1 and the divisor lengths.
  void validate() const;
};

/// Indices are 0-based internally; reports print them 1-based.
struct USet {
  std::vector<std::size_t> members;  // sorted

  bool contains(std::size_t j) const;
  bool operator==(const USet&) const = default;
};

/// Positive rationals lambda with sum lambda_i D_i strictly inside the ample
/// cone (ring T: lambda_i >= 1; ring R: lambda unrestricted), or nullopt.
std::optional<RatVector> ample_combination(const MultiSectionSetup& setup, Ring ring);

bool check_hypothesis_T(const MultiSectionSetup& setup);
bool check_hypothesis_R(const MultiSectionSetup& setup);

/// True when non-negative combinations of `divisors` reach a class of the form
/// ample + effective.
bool reaches_ample_plus_effective(const VarietyPresentation& variety, const std::vector<DivisorClass>& divisors);

USet compute_U(const MultiSectionSetup& setup);

/// Generators of the kernel of Cl(X) -> Cl(ring): D_j for j not in U (T) or all D_i (R).
std::vector<DivisorClass> kernel_generators(const MultiSectionSetup& setup, Ring ring, const USet& u);

QuotientPresentation class_group(const MultiSectionSetup& setup, Ring ring);

struct GradedModuleClass {
  Ring ring;
  DivisorClass class_vector;
  QuotientElement quotient_coords;
};

GradedModuleClass push_class(const MultiSectionSetup& setup, Ring ring, const DivisorClass& f);

struct CanonicalReport {
  Ring ring;
  DivisorClass omega_representative;  // K_X + sum D_i for T, K_X for R
  QuotientElement omega_class;
  bool free = false;
  /// When free: the graded shift v with omega = ring(v).
  std::optional<IntVector> shift;
  /// Columns span the integer solutions of the homogeneous shift system.
  IntMatrix shift_solution_lattice;
};

CanonicalReport canonical_report(const MultiSectionSetup& setup, Ring ring);

/// Element of p + (column span of kernel) minimizing (|v_1|, v_1, |v_2|, v_2, ...) lexicographically.
IntVector lex_min_abs(IntVector particular, IntMatrix kernel);

enum class Height { exactly_one, at_least_two };

struct HeightReport {
  std::vector<Height> heights;  // per index j of Q_j
};

HeightReport height_report(const MultiSectionSetup& setup);

}  // namespace multisec
