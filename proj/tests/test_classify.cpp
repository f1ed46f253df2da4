#include <doctest.h>

#include "support.hpp"

using namespace testing;

TEST_CASE("degree ratio examples") {
  CHECK(degree_ratio({1, 9}) == 9);
  CHECK(degree_ratio({1, 1}) == 1);
  CHECK(degree_ratio({2, 6}) == 3);
  CHECK(degree_ratio({4, 6}) == Rational(3, 2));
  CHECK_THROWS_AS(degree_ratio({0, 6}), Error);
}

TEST_CASE("combine examples and algebra") {
  CHECK(combine(2, 3) == 6);
  CHECK(combine(Rational(5, 7), 1) == Rational(5, 7));
  CHECK(combine(9, Rational(1, 3)) == 3);
  CHECK_THROWS_AS(combine(0, 3), Error);
  CHECK_THROWS_AS(combine(2, -3), Error);
  Rng rng(71);
  for (int i = 0; i < 200; ++i) {
    Rational a(uniform(rng, 1, 50), uniform(rng, 1, 50)), b(uniform(rng, 1, 50), uniform(rng, 1, 50)),
        c(uniform(rng, 1, 50), uniform(rng, 1, 50));
    a.canonicalize();
    b.canonicalize();
    c.canonicalize();
    REQUIRE(combine(a, b) == combine(b, a));
    REQUIRE(combine(combine(a, b), c) == combine(a, combine(b, c)));
  }
}

TEST_CASE("subgroup constraint examples and exact powers") {
  CHECK(subgroup_constraint(9, 1, 3, 2));
  CHECK_FALSE(subgroup_constraint(9, 1, 2, 2));
  for (unsigned long m = 1; m <= 5; ++m)
    for (unsigned long n = 1; n <= 5; ++n) CHECK(subgroup_constraint(1, m, 1, n));
  CHECK_THROWS_AS(subgroup_constraint(0, 1, 1, 1), Error);
  Rng rng(72);
  for (int i = 0; i < 500; ++i) {
    const long xb = uniform(rng, 1, 6), yb = uniform(rng, 1, 6);
    const unsigned long m = uniform(rng, 1, 6), n = uniform(rng, 1, 6);
    Integer xm = 1, yn = 1;
    for (unsigned long k = 0; k < m; ++k) xm *= xb;
    for (unsigned long k = 0; k < n; ++k) yn *= yb;
    REQUIRE(subgroup_constraint(Rational(xb), m, Rational(yb), n) == (xm == yn));
  }
}

TEST_CASE("rationality exponent examples") {
  CHECK(rationality_exponent(9) == 2);
  CHECK(rationality_exponent(12) == 1);
  CHECK(rationality_exponent(Rational(64, 729)) == 6);
  CHECK_THROWS_AS(rationality_exponent(1), Error);
  CHECK_THROWS_AS(rationality_exponent(-4), Error);
  try {
    rationality_exponent(1);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RatioOne);
  }
}

TEST_CASE("rationality exponent is the largest rational root index") {
  Rng rng(73);
  for (int i = 0; i < 300; ++i) {
    Rational x(uniform(rng, 1, 40), uniform(rng, 1, 40));
    x.canonicalize();
    x = pow(x, uniform(rng, 1, 6));
    if (x == 1) continue;
    const unsigned long s = rationality_exponent(x);
    REQUIRE(rational_nth_root(x, s).has_value());
    for (unsigned long k = s + 1; k <= 2 * s; ++k) REQUIRE_FALSE(rational_nth_root(x, k).has_value());
  }
}

TEST_CASE("rank bound from ratio examples") {
  CHECK(rank_bound_from_ratio(9) == 2UL);
  CHECK_FALSE(rank_bound_from_ratio(1).has_value());
  CHECK(rank_bound_from_ratio(2) == 1UL);
  CHECK_THROWS_AS(rank_bound_from_ratio(0), Error);
}

TEST_CASE("fixed field rank rules") {
  auto r = fixed_field_rank({1, 3, 5});
  CHECK(r.kind == RankReport::Kind::Finite);
  CHECK(r.value == 3);
  CHECK(r.method == RankReport::Method::FixedFieldRule);
  CHECK(fixed_field_rank({Rational(1, 2), 0, 7}).kind == RankReport::Kind::Undefined);
  CHECK(fixed_field_rank({Rational(1, 2), 0, 0}).kind == RankReport::Kind::Undefined);
  CHECK(fixed_field_rank({1, -4, 3}).value == 4);
  try {
    fixed_field_rank({1, 2, 0});
    FAIL("expected FrobeniusInCharZero");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FrobeniusInCharZero);
  }
  CHECK_THROWS_AS(fixed_field_rank({0, 2, 5}), Error);
  CHECK_THROWS_AS(fixed_field_rank({1, 2, 6}), Error);
}

TEST_CASE("fixed field lattice") {
  CHECK(fixed_field_subfield(1, 2));
  CHECK_FALSE(fixed_field_subfield(2, 3));
  CHECK(fixed_field_subfield(Rational(1, 2), Rational(3, 2)));
  CHECK(fixed_field_subfield(2, -4));
  CHECK_THROWS_AS(fixed_field_subfield(0, 1), Error);
  CHECK(intersection_degree(Rational(1, 3), 5) == 5);
  CHECK_THROWS_AS(intersection_degree(0, 5), Error);
  Rng rng(74);
  for (int i = 0; i < 300; ++i) {
    Rational a(uniform(rng, 1, 12) * (uniform(rng, 0, 1) ? 1 : -1), uniform(rng, 1, 6));
    a.canonicalize();
    const Rational b = a * uniform(rng, 1, 5) * (i % 3 == 0 ? Rational(1, 2) : Rational(1));
    const Rational c = b * uniform(rng, 1, 5);
    REQUIRE(fixed_field_subfield(a, a));
    if (fixed_field_subfield(a, b) && fixed_field_subfield(b, c)) REQUIRE(fixed_field_subfield(a, c));
  }
}
