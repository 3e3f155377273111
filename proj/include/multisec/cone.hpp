#pragma once

// Rational polyhedral cones in Q^r given by generators, with a lazily
// computed (and cached) facet description {v : F_k · v >= 0}.

#include "multisec/feasibility.hpp"
#include "multisec/lattice.hpp"

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <vector>

namespace multisec {

class ConeNotFullDimensional : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Scale a rational vector by the LCM of its denominators and divide by the
/// gcd of the result. The zero vector maps to itself.
IntVector primitive(const RatVector& v);
IntVector primitive(const IntVector& v);

class RationalCone {
 public:
  /// Generators are made primitive; zero and repeated generators are dropped.
  RationalCone(std::size_t ambient_dim, std::vector<IntVector> generators);

  std::size_t ambient_dim() const { return dim_; }
  const std::vector<IntVector>& generators() const { return generators_; }

  /// Primitive normals, sorted lexicographically; an implicit equality h·v = 0
  /// appears as the pair h, -h.
  const std::vector<IntVector>& facets() const;

  bool contains(const RatVector& v) const;
  bool contains(const IntVector& v) const { return contains(to_rational(v)); }
  /// Strict positivity on every facet. Throws ConeNotFullDimensional.
  bool contains_interior(const RatVector& v) const;
  bool contains_interior(const IntVector& v) const { return contains_interior(to_rational(v)); }

  bool is_pointed() const;
  bool is_full_dimensional() const;

 private:
  struct FacetCache;

  std::size_t dim_;
  std::vector<IntVector> generators_;
  std::shared_ptr<FacetCache> cache_;
};

}  // namespace multisec
