#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "holofloer/alexander.hpp"

using namespace holofloer;

namespace {

AlexanderPoly trefoil() {
  return AlexanderPoly::symmetrize(
      LaurentPoly::from_pairs({{-1, 1}, {0, -1}, {1, 1}}));
}

AlexanderPoly figure_eight() {
  return AlexanderPoly::symmetrize(
      LaurentPoly::from_pairs({{-1, 1}, {0, -3}, {1, 1}}));
}

AlexanderPoly unknot() {
  return AlexanderPoly::symmetrize(LaurentPoly::constant(1));
}

}  // namespace

TEST_CASE("symmetrize centers, orients, and validates") {
  // A shifted trefoil representative normalizes to q^-1 - 1 + q.
  LaurentPoly raw = LaurentPoly::from_pairs({{3, -1}, {4, 1}, {5, -1}});
  AlexanderPoly a = AlexanderPoly::symmetrize(raw);
  CHECK(a.symmetric() == LaurentPoly::from_pairs({{-1, 1}, {0, -1}, {1, 1}}));
  CHECK(a.degree() == 1);
  CHECK(a.positive_form() == LaurentPoly::from_pairs({{0, 1}, {1, -1}, {2, 1}}));

  CHECK_THROWS_WITH_AS(
      AlexanderPoly::symmetrize(LaurentPoly::from_pairs({{0, 1}, {1, 1}, {2, 2}})),
      doctest::Contains("palindromic"), std::domain_error);
  CHECK_THROWS_WITH_AS(
      AlexanderPoly::symmetrize(LaurentPoly::from_pairs({{0, 1}, {1, 1}})),
      doctest::Contains("span"), std::domain_error);
  CHECK_THROWS_AS(AlexanderPoly::symmetrize(LaurentPoly()), std::domain_error);
}

TEST_CASE("torus knot polynomials: frozen small cases") {
  CHECK(torus_knot_alexander(2, 3).symmetric() ==
        LaurentPoly::from_pairs({{-1, 1}, {0, -1}, {1, 1}}));
  CHECK(torus_knot_alexander(2, 5).positive_form() ==
        LaurentPoly::from_pairs({{0, 1}, {1, -1}, {2, 1}, {3, -1}, {4, 1}}));
  CHECK(torus_knot_alexander(2, 7).positive_form() ==
        LaurentPoly::from_pairs(
            {{0, 1}, {1, -1}, {2, 1}, {3, -1}, {4, 1}, {5, -1}, {6, 1}}));
  // T(3,4): 1 - q + q^3 - q^5 + q^6 in positive form.
  CHECK(torus_knot_alexander(3, 4).positive_form() ==
        LaurentPoly::from_pairs({{0, 1}, {1, -1}, {3, 1}, {5, -1}, {6, 1}}));
  // Unknots: either index 1.
  CHECK(torus_knot_alexander(1, 5).symmetric() == LaurentPoly::constant(1));
  CHECK_THROWS_AS(torus_knot_alexander(2, 4), std::domain_error);
  CHECK_THROWS_AS(torus_knot_alexander(0, 3), std::domain_error);
}

TEST_CASE("cable formula: cables of the unknot are torus knots") {
  for (long r : {2L, 3L})
    for (long s : {3L, 5L, 7L}) {
      if (r == 3 && s == 3) continue;
      CHECK(cable_alexander(unknot(), r, s) == torus_knot_alexander(r, s));
    }
  // Frozen: the (2,7)-cable of the trefoil, expanded by hand.
  AlexanderPoly c = cable_alexander(trefoil(), 2, 7);
  CHECK(c.positive_form() ==
        LaurentPoly::from_pairs(
            {{0, 1}, {1, -1}, {4, 1}, {5, -1}, {6, 1}, {9, -1}, {10, 1}}));
  CHECK(c.degree() == 5);
}

TEST_CASE("colored reduced and unreduced forms") {
  AlexanderPoly t = trefoil();
  for (long r = 1; r <= 8; ++r) {
    CHECK(colored_reduced(t, r) ==
          LaurentPoly::from_pairs({{0, 1}, {r, -1}, {2 * r, 1}}));
  }
  // Unreduced at r = 2 to order 8: 1 - q + q^4 - q^5 + q^6 - q^7.
  TruncatedSeries s = colored_unreduced(t, 2, 8);
  TruncatedSeries expect = TruncatedSeries::from_poly(
      LaurentPoly::from_pairs({{0, 1}, {1, -1}, {4, 1}, {5, -1}, {6, 1}, {7, -1}}),
      8);
  CHECK(s == expect);
  CHECK_THROWS_AS(colored_unreduced(t, 0, 8), std::domain_error);
  CHECK_THROWS_AS(colored_reduced(t, 0), std::domain_error);
}

TEST_CASE("unreduced series times (1 - q^r) recovers the polynomial part") {
  for (const AlexanderPoly& k : {unknot(), trefoil(), figure_eight()})
    for (long r : {1L, 2L, 3L, 4L}) {
      TruncatedSeries s = colored_unreduced(k, r, 48);
      TruncatedSeries lhs = s * LaurentPoly::from_pairs({{0, 1}, {r, -1}});
      LaurentPoly rhs = substitute_power(k.positive_form(), r) *
                        LaurentPoly::from_pairs({{0, 1}, {1, -1}});
      CHECK(lhs == TruncatedSeries::from_poly(rhs, lhs.order()));
    }
}

TEST_CASE("unknot colored series has period-r sign pattern") {
  for (long r : {2L, 3L, 5L}) {
    TruncatedSeries s = colored_unreduced(unknot(), r, 64);
    for (long e = 0; e < 64; ++e) {
      Int expect = (e % r == 0) ? 1 : (e % r == 1 ? -1 : 0);
      CHECK(s.coeff(e) == expect);
    }
  }
}

TEST_CASE("convergence defect meets the cabling bound") {
  // Frozen sample: unknot, r = 2, n = 2 disagrees first at q^5 = q^(rn+1).
  CHECK(convergence_defect(unknot(), 2, 2, 64) == 5);
  for (long r : {2L, 3L})
    for (long n = 2; n <= 6; ++n) {
      const long defect = convergence_defect(trefoil(), r, n, 64);
      CHECK(defect >= r * n + 1);
    }
}
