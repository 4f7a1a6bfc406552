#include "kodaira/families.hpp"

namespace kodaira {

WeierstrassModel<Rational> x1_5_model(const Rational& s, const Rational& t) {
  return WeierstrassModel<Rational>(t - s, -(s * t), -(s * t * t), Rational(0),
                                    Rational(0));
}

Rational x1_5_c4(const Rational& s, const Rational& t) {
  Rational q = s * s - 6 * (s * t) + t * t;
  return 24 * (s * t * t) * (t - s) + q * q;
}

Rational x1_5_c6(const Rational& s, const Rational& t) {
  Rational s2 = s * s, t2 = t * t;
  Rational quart = s2 * s2 - 18 * (s2 * s * t) + 74 * (s2 * t2) + 18 * (s * t2 * t) +
                   t2 * t2;
  return -((s2 + t2) * quart);
}

Rational x1_5_disc(const Rational& s, const Rational& t) {
  return s.pow(5) * t.pow(5) * (s * s - 11 * (s * t) - t * t);
}

QuadraticFamilyMember x1_11_model(const Rational& t) {
  Rational p0 = -(t * t * (t - 1));  // s^2 - s - (t^3 - t^2) = 0
  Rational disc = Rational(1) - 4 * p0;
  if (disc.is_square()) {
    Rational r = disc.sqrt();
    Rational half(1, 2);
    throw std::domain_error("reducible quadratic: s = " + ((Rational(1) + r) * half).str() +
                            " or s = " + ((Rational(1) - r) * half).str());
  }
  auto field = make_quadratic_field(Rational(-1), p0);
  QuadraticElement s(field, Rational(0), Rational(1));
  QuadraticElement tq(field, t);
  QuadraticElement one(field, Rational(1));
  QuadraticElement a1 = s * tq + tq - s * s;
  QuadraticElement cubic = s * (s - one) * (s - tq);
  QuadraticElement a2 = cubic * tq;
  QuadraticElement a3 = a2 * tq;
  QuadraticElement zero(field, Rational(0));
  return {field, WeierstrassModel<QuadraticElement>(a1, a2, a3, zero, zero)};
}

QuadraticFamilyMember x1_13_model(const Rational& t) {
  if (t.is_zero()) throw std::domain_error("t = 0 not allowed: coefficients divide by t");
  Rational t2 = t * t, t3 = t2 * t, t4 = t2 * t2, t5 = t4 * t, t6 = t3 * t3;
  Rational t7 = t6 * t, t8 = t4 * t4;
  Rational D = t6 - 2 * t5 + t4 - 2 * t3 + 6 * t2 - 4 * t + Rational(1);
  if (D.is_square()) {
    Rational r = D.sqrt();
    throw std::domain_error("reducible quadratic: s = " + r.str() + " or s = " +
                            (-r).str());
  }
  auto field = make_quadratic_field(Rational(0), -D);  // s^2 = D

  Rational sq = (t - 1) * (t - 1);
  Rational den_a = (2 * t5).inverse();
  Rational a_theta = sq * (t2 + t - Rational(1)) * den_a;
  Rational a_rat = (-t7 + 2 * t6 + 3 * t5 - 2 * t4 - 5 * t3 + 9 * t2 - 5 * t +
                    Rational(1)) * den_a;
  QuadraticElement a(field, a_rat, a_theta);

  Rational den_b = (2 * t.pow(9)).inverse();
  Rational b_theta = sq * (t5 + 2 * t4 - 5 * t2 + 4 * t - Rational(1)) * den_b;
  Rational b_rat = sq * (-t8 - t7 + 4 * t6 + 2 * t5 + t4 - 13 * t3 + 14 * t2 -
                         6 * t + Rational(1)) * den_b;
  QuadraticElement b(field, b_rat, b_theta);

  QuadraticElement zero(field, Rational(0));
  // y^2 + a xy + b y = x^3 + b x^2, plus signs unlike Tate normal form
  return {field, WeierstrassModel<QuadraticElement>(a, b, b, zero, zero)};
}

}  // namespace kodaira
