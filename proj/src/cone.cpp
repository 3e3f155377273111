#include "multisec/cone.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>
#include <string>

namespace multisec {

IntVector primitive(const RatVector& v) {
  Integer lcm = 1;
  for (const auto& q : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  IntVector out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(Integer(q * lcm));
  return primitive(out);
}

IntVector primitive(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0 || g == 1) return v;
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x / g);
  return out;
}

struct RationalCone::FacetCache {
  std::once_flag once;
  std::vector<IntVector> facets;
};

RationalCone::RationalCone(std::size_t ambient_dim, std::vector<IntVector> generators)
    : dim_(ambient_dim), cache_(std::make_shared<FacetCache>()) {
  if (dim_ == 0) throw std::invalid_argument("cone ambient dimension must be positive");
  std::set<IntVector> seen;
  for (auto& g : generators) {
    if (g.size() != dim_)
      throw DimensionMismatch("cone generator " + to_string(g) + " has length " +
                              std::to_string(g.size()) + ", expected " + std::to_string(dim_));
    IntVector p = primitive(g);
    if (std::all_of(p.begin(), p.end(), [](const Integer& x) { return x == 0; })) continue;
    if (seen.insert(p).second) generators_.push_back(std::move(p));
  }
}

namespace {

Rational slack(const IntVector& normal, const RatVector& v) {
  Rational s = 0;
  for (std::size_t i = 0; i < normal.size(); ++i) s += Rational(normal[i]) * v[i];
  return s;
}

Integer l1(const IntVector& v) {
  Integer s = 0;
  for (const auto& x : v) s += abs(x);
  return s;
}

// True when f·v >= 0 follows from the other normals.
bool implied(const IntVector& f, const std::vector<IntVector>& others) {
  const std::size_t r = f.size();
  FeasibilityQuery q;
  q.variables = r;
  for (const auto& g : others) q.inequalities.push_back({to_rational(g), 0});
  RatVector neg;
  for (const auto& x : f) neg.emplace_back(-x);
  q.inequalities.push_back({neg, 1});
  return !feasible(q).has_value();
}

std::vector<IntVector> compute_facets(std::size_t r, const std::vector<IntVector>& gens) {
  // Variables (v_1..v_r, mu_1..mu_k); v = G mu, mu >= 0; eliminate mu.
  const std::size_t k = gens.size();
  FeasibilityQuery q;
  q.variables = r + k;
  for (std::size_t i = 0; i < r; ++i) {
    RatVector row(r + k);
    row[i] = 1;
    for (std::size_t j = 0; j < k; ++j) row[r + j] = -Rational(gens[j][i]);
    q.equalities.push_back({row, 0});
  }
  for (std::size_t j = 0; j < k; ++j) {
    RatVector row(r + k);
    row[r + j] = 1;
    q.inequalities.push_back({row, 0});
  }
  const Projection p = project(q, r);

  std::set<IntVector> candidates;
  auto add = [&](const RatVector& a) {
    IntVector n = primitive(a);
    if (std::any_of(n.begin(), n.end(), [](const Integer& x) { return x != 0; })) candidates.insert(n);
  };
  for (const auto& e : p.equalities) {
    add(e.coeffs);
    RatVector neg;
    for (const auto& x : e.coeffs) neg.push_back(-x);
    add(neg);
  }
  for (const auto& c : p.inequalities) add(c.coeffs);

  // Try to drop the most complicated normals first so simple ones survive.
  std::vector<IntVector> order(candidates.begin(), candidates.end());
  std::stable_sort(order.begin(), order.end(), [](const IntVector& a, const IntVector& b) {
    const Integer la = l1(a), lb = l1(b);
    if (la != lb) return la > lb;
    return a > b;
  });
  std::vector<IntVector> kept = order;
  for (const auto& f : order) {
    std::vector<IntVector> others;
    for (const auto& g : kept)
      if (g != f) others.push_back(g);
    if (implied(f, others)) kept = std::move(others);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace

const std::vector<IntVector>& RationalCone::facets() const {
  std::call_once(cache_->once, [this] { cache_->facets = compute_facets(dim_, generators_); });
  return cache_->facets;
}

bool RationalCone::contains(const RatVector& v) const {
  if (v.size() != dim_) throw DimensionMismatch("cone membership: dimension mismatch");
  for (const auto& f : facets())
    if (slack(f, v) < 0) return false;
  return true;
}

bool RationalCone::contains_interior(const RatVector& v) const {
  if (v.size() != dim_) throw DimensionMismatch("cone interior test: dimension mismatch");
  if (!is_full_dimensional()) throw ConeNotFullDimensional("cone is not full-dimensional");
  for (const auto& f : facets())
    if (slack(f, v) <= 0) return false;
  return true;
}

bool RationalCone::is_pointed() const {
  return rank(IntMatrix::from_columns(dim_, facets())) == dim_;
}

bool RationalCone::is_full_dimensional() const {
  return rank(IntMatrix::from_columns(dim_, generators_)) == dim_;
}

}  // namespace multisec
