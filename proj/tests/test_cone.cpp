#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "multisec/cone.hpp"
#include "multisec/feasibility.hpp"
#include "oracles.hpp"

#include <random>

using namespace multisec;

namespace {

std::vector<IntVector> vecs(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<IntVector> out;
  for (const auto& r : rows) out.push_back(make_int_vector(r));
  return out;
}

RatVector rat(std::initializer_list<long> v) { return to_rational(make_int_vector(v)); }

// One-sided oracle: search non-negative combinations with coefficients in {0, 1/den, ..., max/den}.
bool grid_combination(const RationalCone& c, const IntVector& v, long den, long max) {
  const auto& g = c.generators();
  std::vector<long> coef(g.size(), 0);
  std::vector<long> target(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) target[i] = v[i].get_si() * den;
  for (;;) {
    bool hit = true;
    for (std::size_t i = 0; i < v.size() && hit; ++i) {
      long s = 0;
      for (std::size_t j = 0; j < g.size(); ++j) s += coef[j] * g[j][i].get_si();
      hit = s == target[i];
    }
    if (hit) return true;
    std::size_t k = 0;
    while (k < coef.size() && coef[k] == max) coef[k++] = 0;
    if (k == coef.size()) return false;
    ++coef[k];
  }
}

}  // namespace

TEST_CASE("facets of simple cones") {
  CHECK(RationalCone(2, vecs({{1, 0}, {0, 1}})).facets() == vecs({{0, 1}, {1, 0}}));
  CHECK(RationalCone(2, vecs({{1, 0}, {-1, 1}})).facets() == vecs({{0, 1}, {1, 1}}));
  const RationalCone apex(2, {});
  CHECK(apex.facets() == vecs({{-1, 0}, {0, -1}, {0, 1}, {1, 0}}));
  CHECK(apex.contains(rat({0, 0})));
  CHECK_FALSE(apex.contains(rat({1, 0})));
}

TEST_CASE("generators are normalized") {
  const RationalCone c(2, vecs({{2, 4}, {0, 0}, {1, 2}, {0, -3}}));
  CHECK(c.generators() == vecs({{1, 2}, {0, -1}}));
  CHECK(primitive(RatVector{Rational(1, 2), Rational(-1, 3)}) == make_int_vector({3, -2}));
}

TEST_CASE("contains") {
  const RationalCone c(2, vecs({{1, 0}, {-1, 1}}));
  for (const auto& g : c.generators()) CHECK(c.contains(g));
  CHECK_FALSE(c.contains(rat({0, -1})));
  CHECK(c.contains(rat({0, 0})));
  CHECK(c.contains(RatVector{Rational(-1, 2), Rational(1, 2)}));
  CHECK_THROWS_AS(c.contains(rat({1})), DimensionMismatch);
}

TEST_CASE("contains_interior") {
  const RationalCone orthant(2, vecs({{1, 0}, {0, 1}}));
  CHECK(orthant.contains_interior(rat({1, 1})));
  CHECK_FALSE(orthant.contains_interior(rat({1, 0})));
  CHECK(RationalCone(2, vecs({{1, 0}, {-1, 1}})).contains_interior(rat({0, 1})));
  CHECK_THROWS_AS(RationalCone(2, vecs({{1, 0}})).contains_interior(rat({1, 0})), ConeNotFullDimensional);
}

TEST_CASE("is_pointed") {
  CHECK(RationalCone(2, vecs({{1, 0}, {0, 1}})).is_pointed());
  CHECK_FALSE(RationalCone(2, vecs({{1, 0}, {-1, 0}})).is_pointed());
  CHECK(RationalCone(2, vecs({{1, 0}, {-1, 1}})).is_pointed());
  const RationalCone plane(2, vecs({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}));
  CHECK(plane.facets().empty());
  CHECK_FALSE(plane.is_pointed());
}

TEST_CASE("non-pointed cone facets") {
  const RationalCone c(2, vecs({{1, 0}, {-1, 0}}));
  CHECK(c.facets() == vecs({{0, -1}, {0, 1}}));
  const RationalCone half(2, vecs({{1, 0}, {-1, 0}, {0, 1}}));
  CHECK(half.facets() == vecs({{0, 1}}));
}

TEST_CASE("feasibility") {
  SUBCASE("x >= 1, -x >= 0 is infeasible") {
    FeasibilityQuery q{1, {}, {{rat({1}), 1}, {rat({-1}), 0}}};
    CHECK_FALSE(feasible(q));
  }
  SUBCASE("x >= 1") {
    FeasibilityQuery q{1, {}, {{rat({1}), 1}}};
    const auto w = feasible(q);
    REQUIRE(w);
    CHECK(q.satisfied_by(*w));
  }
  SUBCASE("equalities with rational solutions") {
    FeasibilityQuery q{3, {{rat({2, 0, 1}), 1}, {rat({0, 3, -1}), 0}}, {{rat({0, 0, 1}), 1}}};
    const auto w = feasible(q);
    REQUIRE(w);
    CHECK(q.satisfied_by(*w));
  }
  SUBCASE("inconsistent equalities") {
    FeasibilityQuery q{2, {{rat({1, 1}), 1}, {rat({2, 2}), 3}}, {}};
    CHECK_FALSE(feasible(q));
  }
  SUBCASE("empty system") {
    FeasibilityQuery q{2, {}, {}};
    CHECK(feasible(q));
  }
  SUBCASE("malformed query") {
    FeasibilityQuery q{2, {}, {{rat({1}), 0}}};
    CHECK_THROWS_AS(feasible(q), DimensionMismatch);
  }
}

TEST_CASE("property: witnesses re-verify on random systems") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> coef(-4, 4);
  std::uniform_int_distribution<std::size_t> count(1, 6);
  int feasible_count = 0;
  for (int trial = 0; trial < 150; ++trial) {
    FeasibilityQuery q;
    q.variables = 1 + trial % 4;
    const std::size_t m = count(rng);
    for (std::size_t k = 0; k < m; ++k) {
      RatVector a(q.variables);
      for (auto& x : a) x = coef(rng);
      q.inequalities.push_back({a, Rational(coef(rng))});
    }
    if (trial % 3 == 0) {
      RatVector a(q.variables);
      for (auto& x : a) x = coef(rng);
      q.equalities.push_back({a, Rational(coef(rng))});
    }
    const auto w = feasible(q);
    if (w) {
      ++feasible_count;
      CHECK(q.satisfied_by(*w));
    } else {
      // Infeasible systems must reject every point of a small grid.
      std::vector<long> pt(q.variables, -3);
      for (;;) {
        RatVector x;
        for (long v : pt) x.emplace_back(v);
        CHECK_FALSE(q.satisfied_by(x));
        std::size_t k = 0;
        while (k < pt.size() && pt[k] == 3) pt[k++] = -3;
        if (k == pt.size()) break;
        ++pt[k];
      }
    }
  }
  CHECK(feasible_count > 30);
}

TEST_CASE("property: generators and facets round-trip on random cones") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> entry(-5, 5);
  int tested = 0;
  for (int trial = 0; trial < 400 && tested < 60; ++trial) {
    const std::size_t r = 2 + trial % 3;
    std::uniform_int_distribution<std::size_t> ngen(r, 6);
    std::vector<IntVector> gens(ngen(rng), IntVector(r));
    for (auto& g : gens)
      for (auto& x : g) x = entry(rng);
    const RationalCone c(r, gens);
    if (!c.is_full_dimensional() || !c.is_pointed()) continue;
    ++tested;
    for (const auto& f : c.facets()) CHECK(primitive(f) == f);
    for (const auto& g : c.generators()) CHECK(c.contains(g));
    // Rebuild from the dual description: the facets generate the dual cone,
    // whose facets are the extreme rays of the original.
    const RationalCone dual(r, c.facets());
    const RationalCone back(r, dual.facets());
    for (const auto& g : c.generators()) CHECK(back.contains(g));
    for (const auto& g : back.generators()) CHECK(c.contains(g));
    // contains_interior implies contains; v and -v both inside contradicts pointedness.
    for (int k = 0; k < 8; ++k) {
      IntVector v(r);
      for (auto& x : v) x = entry(rng);
      if (c.contains_interior(v)) CHECK(c.contains(v));
      IntVector neg;
      for (const auto& x : v) neg.push_back(-x);
      const bool zero = std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
      if (!zero) CHECK_FALSE((c.contains(v) && c.contains(neg)));
      if (grid_combination(c, v, 2, 4)) CHECK(c.contains(v));
    }
  }
  CHECK(tested >= 50);
}
