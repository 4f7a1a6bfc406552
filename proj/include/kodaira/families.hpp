#pragma once

#include "kodaira/quadratic.hpp"
#include "kodaira/weierstrass.hpp"

namespace kodaira {

// y^2 + (1-c)xy - by = x^3 - bx^2, with (0, 0) on the curve
template <class K>
WeierstrassModel<K> tate_normal(const K& b, const K& c) {
  K one = k_from_int(b, 1);
  K zero = k_from_int(b, 0);
  return WeierstrassModel<K>(one - c, -b, -b, zero, zero);
}

// y^2 + (t-s)xy - st^2 y = x^3 - st x^2; (0, 0) has order 5
WeierstrassModel<Rational> x1_5_model(const Rational& s, const Rational& t);

// closed forms for the invariants of x1_5_model
Rational x1_5_c4(const Rational& s, const Rational& t);
Rational x1_5_c6(const Rational& s, const Rational& t);
Rational x1_5_disc(const Rational& s, const Rational& t);

struct QuadraticFamilyMember {
  QuadraticFieldPtr field;
  WeierstrassModel<QuadraticElement> model;
};

// s^2 - s = t^3 - t^2 with s the abstract root; (0, 0) has order 11
QuadraticFamilyMember x1_11_model(const Rational& t);

// s^2 = t^6 - 2t^5 + t^4 - 2t^3 + 6t^2 - 4t + 1; (0, 0) has order 13
QuadraticFamilyMember x1_13_model(const Rational& t);

}  // namespace kodaira
