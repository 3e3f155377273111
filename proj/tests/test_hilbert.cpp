#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "multisec/hilbert.hpp"
#include "oracles.hpp"

using namespace multisec;

namespace {

DivisorClass cls(std::initializer_list<long> v) { return make_int_vector(v); }
MultiSectionSetup blowup_card() { return {build_blowup_p2_point(), {cls({-1, 0}), cls({0, 1})}}; }
DegreeWindow box(std::vector<long> lo, std::vector<long> hi) { return {std::move(lo), std::move(hi)}; }

}  // namespace

TEST_CASE("Hilbert tables of the blow-up card") {
  const auto card = blowup_card();
  const auto t = hilbert(card, HilbertMarker::T, box({0, 0}, {2, 2}));
  CHECK(t.entries.size() == 9);
  CHECK(t.entries.at({1, 1}) == 2);
  CHECK(t.entries.at({0, 0}) == 1);
  CHECK(t.entries.at({2, 1}) == 0);
  const auto w = hilbert(card, HilbertMarker::omega_T, box({1, 3}, {1, 3}));
  CHECK(w.entries.at({1, 3}) == 1);
  // omega_T lives on n_1 >= 1 only.
  const auto wide = hilbert(card, HilbertMarker::omega_T, box({-2, -2}, {4, 6}));
  for (const auto& [n, dim] : wide.entries) CHECK(n[0] >= 1);
}

TEST_CASE("T at degree zero is one-dimensional") {
  const std::vector<MultiSectionSetup> cards{
      blowup_card(),
      {build_product(1, 2), {cls({1, 1}), cls({1, 2})}},
      {build_projective(3), {cls({2})}},
  };
  for (const auto& c : cards) {
    const auto t = hilbert(c, HilbertMarker::T, box(std::vector<long>(c.s(), 0), std::vector<long>(c.s(), 0)));
    CHECK(t.entries.at(DegreeVector(c.s(), 0)) == 1);
  }
}

TEST_CASE("CSV export") {
  const auto card = blowup_card();
  const auto t = hilbert(card, HilbertMarker::T, box({0, 0}, {1, 1}));
  CHECK(t.to_csv() == "n_1,n_2,dim\n0,0,1\n0,1,3\n1,0,0\n1,1,2\n");
  const auto empty = hilbert(card, HilbertMarker::T, box({1, 0}, {0, 3}));
  CHECK(empty.to_csv() == "n_1,n_2,dim\n");
  const MultiSectionSetup product{build_product(1, 2), {cls({1, 1}), cls({1, 2})}};
  const auto p = hilbert(product, HilbertMarker::T, box({0, 0}, {1, 1}));
  CHECK(p.entries.size() == 4);
  // Degree (1,1) is the bidegree (a + c, b + d) = (2, 3) of k[x_0, x_1, y_0, y_1, y_2].
  CHECK(p.entries.at({1, 1}) == oracle::binomial(3, 1) * oracle::binomial(5, 2));
}

TEST_CASE("errors") {
  MultiSectionSetup card = blowup_card();
  CHECK_THROWS_AS(hilbert(card, HilbertMarker::T, box({0}, {1})), DimensionMismatch);
  card.variety.oracle.reset();
  CHECK_THROWS_AS(hilbert(card, HilbertMarker::R, box({0, 0}, {1, 1})), NoOracle);
  const MultiSectionSetup p2{build_projective(2), {cls({2})}};
  CHECK_THROWS_AS(verify_free_shift(p2, canonical_report(p2, Ring::T), box({0}, {3})), ReportNotFree);
  CHECK(parse_marker("omegaT") == HilbertMarker::omega_T);
  CHECK_FALSE(parse_marker("omega"));
}

TEST_CASE("free shift verification on the blow-up card") {
  const auto card = blowup_card();
  const auto rep_t = canonical_report(card, Ring::T);
  const auto t = verify_free_shift(card, rep_t, box({1, -2}, {6, 8}));
  CHECK(t.passed);
  CHECK(t.degrees_checked == 6 * 11);
  const auto rep_r = canonical_report(card, Ring::R);
  CHECK(verify_free_shift(card, rep_r, box({-4, -4}, {6, 6})).passed);

  const auto wrong = verify_shift(card, Ring::T, make_int_vector({-1, -2}), box({1, -2}, {6, 8}));
  CHECK_FALSE(wrong.passed);
  REQUIRE(wrong.counterexample);
  CHECK(wrong.omega_dim != wrong.ring_dim);
  for (int i = 0; i < 2; ++i)
    for (int delta : {-1, 1}) {
      for (Ring ring : {Ring::T, Ring::R}) {
        IntVector v = make_int_vector({-1, -3});
        v[i] += delta;
        const auto w = ring == Ring::T ? box({1, -2}, {6, 8}) : box({-4, -4}, {6, 6});
        CHECK_FALSE(verify_shift(card, ring, v, w).passed);
      }
    }
}

TEST_CASE("free shift verification on Fano products and Veronese rings") {
  const MultiSectionSetup fano{build_product(1, 2), {cls({1, 1}), cls({1, 2})}};
  const auto rep = canonical_report(fano, Ring::T);
  REQUIRE(rep.free);
  CHECK(verify_free_shift(fano, rep, default_window(HilbertMarker::omega_T, compute_U(fano), 2)).passed);

  const MultiSectionSetup p3{build_projective(3), {cls({2})}};
  const auto rep3 = canonical_report(p3, Ring::T);
  REQUIRE(rep3.free);
  CHECK(verify_free_shift(p3, rep3, default_window(HilbertMarker::omega_T, compute_U(p3), 1)).passed);
}

TEST_CASE("bruteforce oracles") {
  CHECK(bruteforce_product_dim(1, 2, 2, 1) == 9);
  CHECK(bruteforce_product_dim(1, 1, 0, 0) == 1);
  CHECK(bruteforce_product_dim(2, 1, 1, 3) == 12);
  CHECK_THROWS_AS(bruteforce_product_dim(6, 6, 30, 30), BoundExceeded);
  CHECK(bruteforce_vanishing_dim(2, 1) == 5);
  for (long d = 0; d <= 6; ++d) CHECK(bruteforce_vanishing_dim(d, 0) == oracle::binomial(d + 2, 2));
  CHECK(bruteforce_vanishing_dim(1, 2) == 0);
  CHECK_THROWS_AS(bruteforce_vanishing_dim(40, 1), BoundExceeded);
}

TEST_CASE("property: superadditivity of the T table") {
  const std::vector<MultiSectionSetup> cards{
      blowup_card(),
      {build_product(2, 1), {cls({1, 2}), cls({3, 1})}},
  };
  for (const auto& c : cards) {
    const auto t = hilbert(c, HilbertMarker::T, box({0, 0}, {6, 6}));
    for (const auto& [n, a] : t.entries)
      for (const auto& [m, b] : t.entries) {
        if (a < 1 || b < 1) continue;
        const DegreeVector sum{n[0] + m[0], n[1] + m[1]};
        const auto it = t.entries.find(sum);
        if (it != t.entries.end()) CHECK(it->second >= std::max(a, b));
      }
  }
}

TEST_CASE("property: product Hilbert tables agree with monomial enumeration") {
  const MultiSectionSetup card{build_product(1, 2), {cls({1, 0}), cls({0, 1})}};
  const auto t = hilbert(card, HilbertMarker::R, box({-2, -2}, {8, 8}));
  for (const auto& [n, dim] : t.entries) {
    const long expected = (n[0] < 0 || n[1] < 0) ? 0 : bruteforce_product_dim(1, 2, n[0], n[1]);
    CHECK(dim == expected);
  }
}
