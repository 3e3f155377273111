#include "multisec/multisection.hpp"

#include <algorithm>

namespace multisec {

std::string to_string(Ring ring) { return ring == Ring::T ? "T" : "R"; }

void MultiSectionSetup::validate() const {
  variety.validate();
  if (divisors.empty()) throw ValidationError("divisors", "at least one divisor is required");
  for (std::size_t i = 0; i < divisors.size(); ++i)
    if (divisors[i].size() != variety.class_rank)
      throw ValidationError("divisors[" + std::to_string(i) + "]",
                            "expected " + std::to_string(variety.class_rank) + " coordinates, got " +
                                std::to_string(divisors[i].size()));
}

bool USet::contains(std::size_t j) const { return std::binary_search(members.begin(), members.end(), j); }

namespace {

Rational facet_dot(const IntVector& facet, const DivisorClass& d) {
  Rational s = 0;
  for (std::size_t k = 0; k < facet.size(); ++k) s += Rational(facet[k] * d[k]);
  return s;
}

}  // namespace

std::optional<RatVector> ample_combination(const MultiSectionSetup& setup, Ring ring) {
  setup.validate();
  // Strict positivity F . v > 0 on ample facets becomes F . v >= 1 (homogeneous).
  const std::size_t s = setup.s();
  FeasibilityQuery q;
  q.variables = s;
  for (const auto& f : setup.variety.amp_cone.facets()) {
    RatVector row(s);
    for (std::size_t i = 0; i < s; ++i) row[i] = facet_dot(f, setup.divisors[i]);
    q.inequalities.push_back({row, 1});
  }
  if (ring == Ring::T) {
    for (std::size_t i = 0; i < s; ++i) {
      RatVector row(s);
      row[i] = 1;
      q.inequalities.push_back({row, 1});
    }
  }
  return feasible(q);
}

bool check_hypothesis_T(const MultiSectionSetup& setup) { return ample_combination(setup, Ring::T).has_value(); }
bool check_hypothesis_R(const MultiSectionSetup& setup) { return ample_combination(setup, Ring::R).has_value(); }

bool reaches_ample_plus_effective(const VarietyPresentation& variety, const std::vector<DivisorClass>& divisors) {
  // Variables (lambda_1..lambda_k, alpha_1..alpha_r); the effective part is
  // sum lambda_i D_i - alpha.
  const std::size_t k = divisors.size();
  const std::size_t r = variety.class_rank;
  FeasibilityQuery q;
  q.variables = k + r;
  for (std::size_t i = 0; i < k; ++i) {
    RatVector row(k + r);
    row[i] = 1;
    q.inequalities.push_back({row, 0});
  }
  for (const auto& f : variety.amp_cone.facets()) {
    RatVector row(k + r);
    for (std::size_t c = 0; c < r; ++c) row[k + c] = Rational(f[c]);
    q.inequalities.push_back({row, 1});
  }
  for (const auto& f : variety.eff_cone.facets()) {
    RatVector row(k + r);
    for (std::size_t i = 0; i < k; ++i) row[i] = facet_dot(f, divisors[i]);
    for (std::size_t c = 0; c < r; ++c) row[k + c] = -Rational(f[c]);
    q.inequalities.push_back({row, 0});
  }
  return feasible(q).has_value();
}

USet compute_U(const MultiSectionSetup& setup) {
  if (!check_hypothesis_T(setup))
    throw HypothesisFailed("no positive combination of the divisors is ample");
  USet u;
  for (std::size_t j = 0; j < setup.s(); ++j) {
    std::vector<DivisorClass> others;
    for (std::size_t i = 0; i < setup.s(); ++i)
      if (i != j) others.push_back(setup.divisors[i]);
    if (reaches_ample_plus_effective(setup.variety, others)) u.members.push_back(j);
  }
  return u;
}

std::vector<DivisorClass> kernel_generators(const MultiSectionSetup& setup, Ring ring, const USet& u) {
  std::vector<DivisorClass> out;
  for (std::size_t j = 0; j < setup.s(); ++j)
    if (ring == Ring::R || !u.contains(j)) out.push_back(setup.divisors[j]);
  return out;
}

namespace {

struct RingData {
  USet u;
  QuotientPresentation group;
};

RingData ring_data(const MultiSectionSetup& setup, Ring ring) {
  RingData d;
  if (ring == Ring::T) {
    d.u = compute_U(setup);
  } else if (!check_hypothesis_R(setup)) {
    throw HypothesisFailed("no integer combination of the divisors is ample");
  }
  d.group = quotient(IntMatrix::from_columns(setup.variety.class_rank, kernel_generators(setup, ring, d.u)));
  return d;
}

IntVector add(IntVector a, const IntVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Integer mod_nonneg(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

QuotientPresentation class_group(const MultiSectionSetup& setup, Ring ring) { return ring_data(setup, ring).group; }

GradedModuleClass push_class(const MultiSectionSetup& setup, Ring ring, const DivisorClass& f) {
  const auto d = ring_data(setup, ring);
  return {ring, f, push_to_quotient(f, d.group)};
}

IntVector lex_min_abs(IntVector p, IntMatrix kernel) {
  for (std::size_t i = 0; i < p.size() && kernel.cols() > 0; ++i) {
    const IntVector row = kernel.row(i);
    Integer g = 0;
    for (const auto& x : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0) continue;
    // Reachable values of coordinate i: p_i + gZ. Prefer small |x|, then negative.
    const Integer low = mod_nonneg(p[i], g);
    const Integer high = low - g;
    const Integer target = (low == 0 || abs(high) > low) ? low : high;
    IntMatrix a(1, kernel.cols());
    for (std::size_t c = 0; c < kernel.cols(); ++c) a(0, c) = row[c];
    const auto w = solve_membership(IntVector{target - p[i]}, a);
    if (!w) throw std::logic_error("lex_min_abs: unreachable residue");
    p = add(p, kernel * *w);
    kernel = kernel * integer_kernel(a);
  }
  return p;
}

CanonicalReport canonical_report(const MultiSectionSetup& setup, Ring ring) {
  const auto data = ring_data(setup, ring);
  const auto& variety = setup.variety;
  const std::size_t s = setup.s();

  CanonicalReport rep{ring, variety.canonical_class, {}, false, std::nullopt, IntMatrix(s, 0)};
  if (ring == Ring::T)
    for (const auto& d : setup.divisors) rep.omega_representative = add(rep.omega_representative, d);
  rep.omega_class = push_to_quotient(rep.omega_representative, data.group);
  rep.free = rep.omega_class.is_zero();

  // Shift system. Ring R: sum v_i D_i = K_X. Ring T: v_i = -1 on U and
  // sum_{j not in U} v_j D_j = K_X + sum_{i in U} D_i.
  std::vector<std::size_t> open;
  DivisorClass target = variety.canonical_class;
  for (std::size_t j = 0; j < s; ++j) {
    if (ring == Ring::T && data.u.contains(j))
      target = add(target, setup.divisors[j]);
    else
      open.push_back(j);
  }
  std::vector<DivisorClass> cols;
  for (auto j : open) cols.push_back(setup.divisors[j]);
  const IntMatrix m = IntMatrix::from_columns(variety.class_rank, cols);
  const IntMatrix kernel = integer_kernel(m);

  rep.shift_solution_lattice = IntMatrix(s, kernel.cols());
  for (std::size_t c = 0; c < kernel.cols(); ++c)
    for (std::size_t k = 0; k < open.size(); ++k) rep.shift_solution_lattice(open[k], c) = kernel(k, c);

  const auto particular = solve_membership(target, m);
  if (particular.has_value() != rep.free)
    throw std::logic_error("canonical_report: quotient image and membership solver disagree");
  if (!rep.free) return rep;

  const IntVector best = lex_min_abs(*particular, kernel);
  IntVector v(s, Integer(-1));
  for (std::size_t k = 0; k < open.size(); ++k) v[open[k]] = best[k];
  rep.shift = std::move(v);
  return rep;
}

HeightReport height_report(const MultiSectionSetup& setup) {
  const USet u = compute_U(setup);
  HeightReport h;
  for (std::size_t j = 0; j < setup.s(); ++j)
    h.heights.push_back(u.contains(j) ? Height::exactly_one : Height::at_least_two);
  return h;
}

}  // namespace multisec
