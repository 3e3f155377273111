#pragma once

// Input model for a normal projective variety X: a free class lattice Z^r with
// the canonical class, effective and ample cones, and an optional oracle for
// dim H^0(X, O_X(F)).

#include "multisec/cone.hpp"
#include "multisec/lattice.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace multisec {

/// Coordinates of a Weil divisor class in the chosen basis of Cl(X).
using DivisorClass = IntVector;

/// Rejected input; `field` names the offending card or presentation field.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

class NoOracle : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SectionOracle {
  enum class Kind { projective, product, blowup_p2_point };

  Kind kind = Kind::projective;
  long m = 0;  // product: first factor dimension
  long n = 0;  // projective: dimension; product: second factor dimension

  static SectionOracle projective(long n) { return {Kind::projective, 0, n}; }
  static SectionOracle product(long m, long n) { return {Kind::product, m, n}; }
  static SectionOracle blowup_p2_point() { return {Kind::blowup_p2_point, 0, 0}; }

  std::string tag() const;
  bool operator==(const SectionOracle&) const = default;
};

struct VarietyPresentation {
  std::string name;
  long dim = 0;
  std::size_t class_rank = 0;
  DivisorClass canonical_class;
  RationalCone eff_cone;
  RationalCone amp_cone;  // closure of the ample cone; ample = strict interior
  std::optional<SectionOracle> oracle;

  /// Throws ValidationError naming the first violated field.
  void validate() const;
};

VarietyPresentation build_projective(long n);
VarietyPresentation build_product(long m, long n);
/// The projective plane blown up at [1:1:1]; basis (E, A) with A the pulled-back line class.
VarietyPresentation build_blowup_p2_point();

/// dim_k H^0(X, O_X(F)) from the variety's oracle. Throws NoOracle.
Integer h0(const VarietyPresentation& variety, const DivisorClass& f);

/// Dimension of the space of ternary forms of the given degree vanishing to
/// at least `order` at [1:1:1], as monomial count minus the rank of the
/// matrix of partial derivatives of order < `order` evaluated at the point.
Integer vanishing_forms_dim(long degree, long order);

Integer binomial(long n, long k);

}  // namespace multisec
