#include "kodaira/families.hpp"

#include <random>

#include "doctest.h"

using namespace kodaira;

TEST_CASE("order-5 family model coefficients") {
  WeierstrassModel<Rational> E = x1_5_model(Rational(3), Rational(1));
  CHECK(E.a1() == Rational(-2));
  CHECK(E.a2() == Rational(-3));
  CHECK(E.a3() == Rational(-3));
  CHECK(E.a4() == Rational(0));
  CHECK(E.a6() == Rational(0));
}

TEST_CASE("closed invariant forms match the model invariants") {
  for (long s = -5; s <= 5; ++s) {
    for (long t = -5; t <= 5; ++t) {
      Rational rs(s), rt(t);
      if (x1_5_disc(rs, rt).is_zero()) continue;
      WeierstrassModel<Rational> E = x1_5_model(rs, rt);
      CAPTURE(s);
      CAPTURE(t);
      CHECK(E.invariants().c4 == x1_5_c4(rs, rt));
      CHECK(E.invariants().c6 == x1_5_c6(rs, rt));
      CHECK(E.invariants().disc == x1_5_disc(rs, rt));
    }
  }
  CHECK(x1_5_disc(Rational(1), Rational(1)) == Rational(-11));
}

TEST_CASE("closed forms hold at random rational parameters") {
  std::mt19937 rng(51413u);
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 7);
  int checked = 0;
  while (checked < 100) {
    Rational s(num(rng), den(rng)), t(num(rng), den(rng));
    if (x1_5_disc(s, t).is_zero()) continue;
    WeierstrassModel<Rational> E = x1_5_model(s, t);
    CHECK(E.invariants().c4 == x1_5_c4(s, t));
    CHECK(E.invariants().c6 == x1_5_c6(s, t));
    CHECK(E.invariants().disc == x1_5_disc(s, t));
    ++checked;
  }
}

TEST_CASE("order-5 members sit on the diagonal of the normal form") {
  for (long v = 2; v <= 6; ++v) {
    Rational lambda(v);
    WeierstrassModel<Rational> A = tate_normal(lambda, lambda);
    WeierstrassModel<Rational> B = x1_5_model(lambda, Rational(1));
    CHECK(A.a1() == B.a1());
    CHECK(A.a2() == B.a2());
    CHECK(A.a3() == B.a3());
    CHECK(A.a4() == B.a4());
    CHECK(A.a6() == B.a6());
  }
}

TEST_CASE("marked point orders across normal-form members") {
  CurvePoint<Rational> origin(Rational(0), Rational(0));
  CHECK(*point_order(x1_5_model(Rational(3), Rational(1)), origin) == 5);
  CHECK(*point_order(x1_5_model(Rational(18), Rational(1)), origin) == 5);
  // c = 0 pins order 4, b = c + c^2 pins order 6, the cubic pair pins order 7
  CHECK(*point_order(tate_normal(Rational(1), Rational(0)), origin) == 4);
  CHECK(*point_order(tate_normal(Rational(2), Rational(1)), origin) == 6);
  CHECK(*point_order(tate_normal(Rational(4), Rational(2)), origin) == 7);
  CHECK_FALSE(point_order(tate_normal(Rational(2), Rational(3)), origin, 24).has_value());
}

TEST_CASE("order-11 members live over a quadratic field") {
  QuadraticFamilyMember m = x1_11_model(Rational(8));
  CHECK(m.field->p1() == Rational(-1));
  CHECK(m.field->p0() == Rational(-448));
  CHECK(m.model.a1() == QuadraticElement(m.field, Rational(-440), Rational(7)));
  CHECK(m.model.a4().is_zero());
  CHECK(m.model.a6().is_zero());

  QuadraticElement zero(m.field, Rational(0));
  CurvePoint<QuadraticElement> origin(zero, zero);
  REQUIRE(m.model.contains(origin));
  CHECK(*point_order(m.model, origin) == 11);
}

TEST_CASE("order-11 construction rejects split parameters") {
  CHECK_THROWS_WITH_AS(x1_11_model(Rational(1)),
                       "reducible quadratic: s = 1 or s = 0", std::domain_error);
  CHECK_THROWS_WITH_AS(x1_11_model(Rational(0)),
                       "reducible quadratic: s = 1 or s = 0", std::domain_error);
}

TEST_CASE("order-13 members live over a quadratic field") {
  QuadraticFamilyMember m = x1_13_model(Rational(10));
  CHECK(m.field->p1() == Rational(0));
  CHECK(m.field->p0() == Rational(-808561));

  QuadraticElement zero(m.field, Rational(0));
  CurvePoint<QuadraticElement> origin(zero, zero);
  REQUIRE(m.model.contains(origin));
  CHECK(*point_order(m.model, origin) == 13);
}

TEST_CASE("order-13 construction rejects degenerate parameters") {
  CHECK_THROWS_WITH_AS(x1_13_model(Rational(0)),
                       "t = 0 not allowed: coefficients divide by t", std::domain_error);
  CHECK_THROWS_WITH_AS(x1_13_model(Rational(1)),
                       "reducible quadratic: s = 1 or s = -1", std::domain_error);
}
