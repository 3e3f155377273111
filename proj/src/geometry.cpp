#include "multisec/geometry.hpp"

#include <string>

namespace multisec {

std::string SectionOracle::tag() const {
  switch (kind) {
    case Kind::projective:
      return "projective " + std::to_string(n);
    case Kind::product:
      return "product " + std::to_string(m) + " " + std::to_string(n);
    case Kind::blowup_p2_point:
      return "blowup_p2_point";
  }
  return "unknown";
}

void VarietyPresentation::validate() const {
  if (dim < 1) throw ValidationError("dim", "variety dimension must be positive, got " + std::to_string(dim));
  if (class_rank < 1) throw ValidationError("class_rank", "class lattice rank must be positive");
  if (canonical_class.size() != class_rank)
    throw ValidationError("canonical_class", "expected " + std::to_string(class_rank) + " coordinates, got " +
                                                 std::to_string(canonical_class.size()));
  if (eff_cone.ambient_dim() != class_rank)
    throw ValidationError("eff_generators", "cone dimension does not match class_rank");
  if (amp_cone.ambient_dim() != class_rank)
    throw ValidationError("amp_generators", "cone dimension does not match class_rank");
  if (!eff_cone.is_full_dimensional()) throw ValidationError("eff_generators", "effective cone is not full-dimensional");
  if (!eff_cone.is_pointed()) throw ValidationError("eff_generators", "effective cone contains a line");
  if (!amp_cone.is_full_dimensional()) throw ValidationError("amp_generators", "ample cone is not full-dimensional");
  if (!amp_cone.is_pointed()) throw ValidationError("amp_generators", "ample cone contains a line");
  for (const auto& g : amp_cone.generators())
    if (!eff_cone.contains(g))
      throw ValidationError("amp_generators", "ample generator " + to_string(g) + " is not effective");

  if (!oracle) return;
  auto expect_dim = [&](long d) {
    if (dim != d)
      throw ValidationError("oracle", oracle->tag() + " oracle describes a variety of dimension " + std::to_string(d) +
                                          ", card says " + std::to_string(dim));
  };
  switch (oracle->kind) {
    case SectionOracle::Kind::projective:
      if (oracle->n < 1) throw ValidationError("oracle", "projective oracle needs n >= 1");
      if (class_rank != 1) throw ValidationError("oracle", "projective oracle needs class_rank 1");
      expect_dim(oracle->n);
      break;
    case SectionOracle::Kind::product:
      if (oracle->m < 1 || oracle->n < 1) throw ValidationError("oracle", "product oracle needs m, n >= 1");
      if (class_rank != 2) throw ValidationError("oracle", "product oracle needs class_rank 2");
      expect_dim(oracle->m + oracle->n);
      break;
    case SectionOracle::Kind::blowup_p2_point:
      if (class_rank != 2) throw ValidationError("oracle", "blowup_p2_point oracle needs class_rank 2");
      expect_dim(2);
      break;
  }
}

VarietyPresentation build_projective(long n) {
  if (n < 1) throw ValidationError("n", "projective space dimension must be positive");
  return VarietyPresentation{
      .name = "P^" + std::to_string(n),
      .dim = n,
      .class_rank = 1,
      .canonical_class = make_int_vector({-(n + 1)}),
      .eff_cone = RationalCone(1, {make_int_vector({1})}),
      .amp_cone = RationalCone(1, {make_int_vector({1})}),
      .oracle = SectionOracle::projective(n),
  };
}

VarietyPresentation build_product(long m, long n) {
  if (m < 1) throw ValidationError("m", "factor dimension must be positive");
  if (n < 1) throw ValidationError("n", "factor dimension must be positive");
  const std::vector<IntVector> orthant{make_int_vector({1, 0}), make_int_vector({0, 1})};
  return VarietyPresentation{
      .name = "P^" + std::to_string(m) + " x P^" + std::to_string(n),
      .dim = m + n,
      .class_rank = 2,
      .canonical_class = make_int_vector({-(m + 1), -(n + 1)}),
      .eff_cone = RationalCone(2, orthant),
      .amp_cone = RationalCone(2, orthant),
      .oracle = SectionOracle::product(m, n),
  };
}

VarietyPresentation build_blowup_p2_point() {
  // Basis (E, A): E exceptional curve, A pullback of a line.
  return VarietyPresentation{
      .name = "Bl_[1:1:1] P^2",
      .dim = 2,
      .class_rank = 2,
      .canonical_class = make_int_vector({1, -3}),
      .eff_cone = RationalCone(2, {make_int_vector({1, 0}), make_int_vector({-1, 1})}),
      .amp_cone = RationalCone(2, {make_int_vector({0, 1}), make_int_vector({-1, 1})}),
      .oracle = SectionOracle::blowup_p2_point(),
  };
}

Integer binomial(long n, long k) {
  if (k < 0 || n < k) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

namespace {

Integer falling(long x, long k) {
  Integer r = 1;
  for (long i = 0; i < k; ++i) r *= (x - i);
  return r;
}

struct Exponent {
  long x, y, z;
};

std::vector<Exponent> exponents_of_degree(long d) {
  std::vector<Exponent> out;
  for (long i = d; i >= 0; --i)
    for (long j = d - i; j >= 0; --j) out.push_back({i, j, d - i - j});
  return out;
}

}  // namespace

Integer vanishing_forms_dim(long degree, long order) {
  if (degree < 0) return 0;
  const auto monomials = exponents_of_degree(degree);
  if (order <= 0) return Integer(static_cast<long>(monomials.size()));
  std::vector<Exponent> derivatives;
  for (long k = 0; k < order; ++k)
    for (const auto& e : exponents_of_degree(k)) derivatives.push_back(e);
  // Row: a derivative d^(a,b,c); column: a monomial; entry: its value at (1,1,1).
  IntMatrix m(derivatives.size(), monomials.size());
  for (std::size_t r = 0; r < derivatives.size(); ++r)
    for (std::size_t c = 0; c < monomials.size(); ++c) {
      const auto& d = derivatives[r];
      const auto& e = monomials[c];
      m(r, c) = falling(e.x, d.x) * falling(e.y, d.y) * falling(e.z, d.z);
    }
  return Integer(static_cast<long>(monomials.size() - rank(m)));
}

Integer h0(const VarietyPresentation& variety, const DivisorClass& f) {
  if (!variety.oracle) throw NoOracle("variety '" + variety.name + "' has no section oracle");
  if (f.size() != variety.class_rank)
    throw DimensionMismatch("h0: class has " + std::to_string(f.size()) + " coordinates, expected " +
                            std::to_string(variety.class_rank));
  for (const auto& x : f)
    if (!x.fits_slong_p()) throw std::out_of_range("h0: class coordinate out of oracle range");
  const SectionOracle& o = *variety.oracle;
  switch (o.kind) {
    case SectionOracle::Kind::projective: {
      if (f[0] < 0) return 0;
      return binomial(f[0].get_si() + o.n, o.n);
    }
    case SectionOracle::Kind::product: {
      if (f[0] < 0 || f[1] < 0) return 0;
      return binomial(f[0].get_si() + o.m, o.m) * binomial(f[1].get_si() + o.n, o.n);
    }
    case SectionOracle::Kind::blowup_p2_point: {
      // F = eE + aA. For e >= 0 the exceptional curve is a fixed component and
      // H^0 agrees with that of aA; for e < 0 sections are degree-a forms with
      // multiplicity >= -e at the blown-up point.
      const long e = f[0].get_si();
      const long a = f[1].get_si();
      if (a < 0) return 0;
      return vanishing_forms_dim(a, e < 0 ? -e : 0);
    }
  }
  throw std::logic_error("unhandled oracle kind");
}

}  // namespace multisec
