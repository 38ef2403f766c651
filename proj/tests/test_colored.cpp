#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "holofloer/colored.hpp"

using namespace holofloer;

namespace {

/// Head-and-theta shadow of the positive form: summing the signed chain
/// spans plus the distinguished term must reproduce the polynomial itself.
LaurentPoly head_shadow(const KnotData& k) {
  LaurentPoly total;
  for (const HeadChain& c : k.head) {
    const Int sign = (c.base.t.offset % 2 == 0) ? 1 : -1;
    total += LaurentPoly::monomial(c.base.q.slope, sign);
    total -= LaurentPoly::monomial(c.base.q.slope + c.length, sign);
  }
  const Int sign = (k.theta.t.offset % 2 == 0) ? 1 : -1;
  total += LaurentPoly::monomial(k.theta.q.slope, sign);
  return total;
}

}  // namespace

TEST_CASE("the built-in table carries the five expected knots") {
  const std::vector<KnotData>& table = knot_table();
  REQUIRE(table.size() == 5);
  CHECK(find_knot("unknot").genus == 0);
  CHECK(find_knot("3_1").tau == 1);
  CHECK(find_knot("4_1").tau == 0);
  CHECK(find_knot("T(2,5)").genus == 2);
  CHECK(find_knot("T(2,7)").genus == 3);
  CHECK_THROWS_AS(find_knot("5_2"), std::out_of_range);
}

TEST_CASE("trefoil head and theta derive from the basis") {
  const KnotData& k = find_knot("3_1");
  REQUIRE(k.head.size() == 1);
  CHECK(k.head[0].base == AffineBidegree::constant(0, 0));
  CHECK(k.head[0].length == 1);
  CHECK(k.head[0].label == "c");
  CHECK(k.theta == AffineBidegree{{4, -2}, {2, 0}});
  CHECK(k.distinguished == "a");
}

TEST_CASE("figure-eight and torus heads carry the expected anchors") {
  const KnotData& f8 = find_knot("4_1");
  REQUIRE(f8.head.size() == 2);
  CHECK(f8.head[0].base == AffineBidegree{{2, -1}, {1, 0}});
  CHECK(f8.head[1].base == AffineBidegree::constant(0, 0));
  CHECK(f8.theta == AffineBidegree{{2, -1}, {1, 0}});

  const KnotData& t5 = find_knot("T(2,5)");
  REQUIRE(t5.head.size() == 2);
  CHECK(t5.head[0].base == AffineBidegree{{4, -2}, {2, 0}});
  CHECK(t5.head[1].base == AffineBidegree::constant(0, 0));
  CHECK(t5.theta == AffineBidegree{{8, -4}, {4, 0}});

  const KnotData& t7 = find_knot("T(2,7)");
  REQUIRE(t7.head.size() == 3);
  CHECK(t7.head[0].base == AffineBidegree{{8, -4}, {4, 0}});
  CHECK(t7.head[1].base == AffineBidegree{{4, -2}, {2, 0}});
  CHECK(t7.head[2].base == AffineBidegree::constant(0, 0));
  CHECK(t7.theta == AffineBidegree{{12, -6}, {6, 0}});
}

TEST_CASE("the signed head shadow recovers the positive form") {
  for (const KnotData& k : knot_table())
    CHECK(head_shadow(k) == k.alexander.positive_form());
}

TEST_CASE("color one reproduces the basis complex") {
  const KnotData& k = find_knot("3_1");
  SplitComplex c = build_colored_complex(k, 1);
  REQUIRE(c.pairs.size() == 1);
  REQUIRE(c.frees.size() == 1);
  CHECK_FALSE(c.tail.has_value());
  CHECK(c.generator_count_finite() == 3);
  // Normalized to the bottom generator: c at (0,0), b at (1,1), a at (2,2).
  CHECK(c.pairs[0].base == AffineBidegree::constant(0, 0));
  CHECK(c.pairs[0].q_len == 1);
  CHECK(c.frees[0].label == "a");
  CHECK(c.frees[0].degree == AffineBidegree::constant(2, 2));

  SplitComplex u1 = build_colored_complex(find_knot("unknot"), 1);
  CHECK(u1.pairs.empty());
  REQUIRE(u1.frees.size() == 1);
  CHECK(u1.frees[0].degree == AffineBidegree::constant(0, 0));

  CHECK_THROWS_AS(build_colored_complex(k, 0), std::domain_error);
  CHECK_THROWS_AS(build_colored_complex(k, -2), std::domain_error);
}

TEST_CASE("the symbolic body is the subdivided head plus the tail") {
  const KnotData& k = find_knot("T(2,7)");
  SplitComplex s = symbolic_complex(k);
  REQUIRE(s.pairs.size() == 3);
  CHECK(s.pairs[0].label == "b:1");
  CHECK(s.pairs[1].label == "d:1");
  CHECK(s.pairs[2].label == "f:1");
  for (const PairSummand& p : s.pairs) CHECK(p.q_len == 1);
  REQUIRE(s.tail.has_value());
  CHECK(s.tail->theta == k.theta);
  CHECK(s.tail->u_deg == tail_u_degree());

  // Head generator count is 2 * (total chain length), independent of r.
  for (long r : {2L, 3L, 4L})
    CHECK(build_colored_complex(k, r).generator_count_finite() == 6);
}

TEST_CASE("longer chains subdivide into unit pairs spaced by u") {
  KnotData k = KnotData::from_head_spec(
      "cable-like", torus_knot_alexander(2, 3), 1, 1,
      {{AffineBidegree::constant(0, 0), 2, ""}}, AffineBidegree{{4, -2}, {2, 0}});
  REQUIRE(k.head.size() == 1);
  CHECK(k.head[0].label == "c1");
  SplitComplex s = symbolic_complex(k);
  REQUIRE(s.pairs.size() == 2);
  CHECK(s.pairs[1].base - s.pairs[0].base == tail_u_degree());
  CHECK(s.pairs[0].label == "c1:1");
  CHECK(s.pairs[1].label == "c1:2");
}

TEST_CASE("unknot poincare series is the pure tail expansion") {
  const KnotData& u = find_knot("unknot");
  for (long r : {2L, 3L, 4L}) {
    BigradedPoly actual = poincare(build_colored_complex(u, r), r, 48);
    BigradedPoly expected;
    expected.q_order = 48;
    for (long n = 0; n * r < 48; ++n) {
      expected.add({(2 * r - 2) * n, r * n}, 1);
      expected.add({(2 * r - 2) * n + 1, r * n + 1}, 1);
    }
    CHECK(actual == expected);
  }
}

TEST_CASE("trefoil poincare has the unit head and the shifted tail") {
  const KnotData& k = find_knot("3_1");
  for (long r : {2L, 3L, 4L}) {
    BigradedPoly p = poincare(build_colored_complex(k, r), r, 4 * r + 2);
    CHECK(p.coeff({0, 0}) == 1);
    CHECK(p.coeff({1, 1}) == 1);
    // Tail head generator at t^(4r-2) q^(2r)...
    CHECK(p.coeff({4 * r - 2, 2 * r}) == 1);
    // ...and nothing at the alternative q-degree 4r in the same t-degree.
    CHECK(p.coeff({4 * r - 2, 4 * r}) == 0);
  }
}

TEST_CASE("euler characteristics match the colored polynomials") {
  for (const KnotData& k : knot_table()) {
    for (long r : {2L, 3L, 4L}) {
      EulerCheckReport rep = colored_euler_check(k, r, 64);
      CHECK(rep.match);
      CHECK(rep.shift == 0);
      CHECK_FALSE(rep.first_mismatch.has_value());
    }
  }
  CHECK_THROWS_AS(colored_euler_check(find_knot("unknot"), 1, 32),
                  std::domain_error);
}

TEST_CASE("the trefoil euler series splits as head plus tail") {
  TruncatedSeries actual = euler(build_colored_complex(find_knot("3_1"), 2), 2, 32);
  TruncatedSeries expected =
      TruncatedSeries::from_poly(
          LaurentPoly::from_pairs({{0, 1}, {1, -1}}), 32) +
      series_from_rational(LaurentPoly::from_pairs({{4, 1}, {5, -1}}), {2}, 32);
  CHECK(actual == expected);
  CHECK(actual == colored_unreduced(find_knot("3_1").alexander, 2, 32));
}

TEST_CASE("basis validation rejects malformed data") {
  CfkBasis good;
  good.generators = {{"a", 0, 1}, {"b", -1, 0}, {"c", -2, -1}};
  good.arrows = {{"b", "c"}};
  CHECK_NOTHROW(good.validate());

  CfkBasis up = good;
  up.arrows = {{"c", "b"}};
  CHECK_THROWS_AS(up.validate(), std::invalid_argument);

  CfkBasis skip = good;
  skip.arrows = {{"a", "c"}};  // Maslov drop 2
  CHECK_THROWS_AS(skip.validate(), std::invalid_argument);

  CfkBasis twice = good;
  twice.generators.push_back({"d", 0, 1});
  twice.arrows = {{"b", "c"}, {"d", "c"}};
  CHECK_THROWS_AS(twice.validate(), std::invalid_argument);

  CfkBasis loose = good;
  loose.generators.push_back({"d", 0, 0});
  CHECK_THROWS_AS(loose.validate(), std::invalid_argument);

  CHECK_THROWS_AS(
      KnotData::from_cfk("bad", torus_knot_alexander(2, 3), 2, 1, good),
      std::domain_error);
  CHECK_THROWS_AS(
      KnotData::from_cfk("bad", torus_knot_alexander(2, 3), 1, 0, good),
      std::domain_error);
}

TEST_CASE("knot validation runs the euler cross-check") {
  for (const KnotData& k : knot_table()) CHECK_NOTHROW(k.validate());

  // A head spec whose theta disagrees with the polynomial must be caught.
  KnotData broken = KnotData::from_head_spec(
      "broken", torus_knot_alexander(2, 3), 1, 1,
      {{AffineBidegree::constant(0, 0), 1, "c"}}, AffineBidegree{{4, -2}, {3, 0}});
  CHECK_THROWS_AS(broken.validate(), std::domain_error);
  CHECK_NOTHROW(broken.validate(true));

  // Wrong polynomial degree for the declared genus.
  KnotData wrong = KnotData::from_head_spec(
      "wrong", torus_knot_alexander(2, 5), 1, 1,
      {{AffineBidegree::constant(0, 0), 1, "c"}}, AffineBidegree{{4, -2}, {2, 0}});
  CHECK_THROWS_AS(wrong.validate(), std::domain_error);
}

TEST_CASE("a head spec can stand in for a basis") {
  const KnotData& builtin = find_knot("3_1");
  KnotData spec = KnotData::from_head_spec(
      "trefoil-by-hand", torus_knot_alexander(2, 3), 1, 1,
      {{AffineBidegree::constant(0, 0), 1, "c"}}, AffineBidegree{{4, -2}, {2, 0}});
  CHECK_NOTHROW(spec.validate());
  for (long r : {2L, 3L})
    CHECK(is_equivalent(build_colored_complex(spec, r),
                        build_colored_complex(builtin, r)));
}
