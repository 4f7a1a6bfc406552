#pragma once

#include <memory>
#include <string>

#include "kodaira/rational.hpp"

namespace kodaira {

/**
 * Quadratic number field presented as Q[th]/(th^2 + p1*th + p0).
 *
 * The minimal polynomial must be irreducible over Q, i.e. the
 * discriminant p1^2 - 4*p0 is not a rational square (0 included).
 */
class QuadraticField {
 public:
  QuadraticField(const Rational& p1, const Rational& p0);

  const Rational& p1() const { return p1_; }
  const Rational& p0() const { return p0_; }
  const Rational& discriminant() const { return disc_; }

  bool operator==(const QuadraticField& o) const {
    return p1_ == o.p1_ && p0_ == o.p0_;
  }

  // "x^2 + p1*x + p0" with signs folded in
  std::string str() const;

 private:
  Rational p1_, p0_, disc_;
};

using QuadraticFieldPtr = std::shared_ptr<const QuadraticField>;

QuadraticFieldPtr make_quadratic_field(const Rational& p1, const Rational& p0);

/**
 * Element a + b*th of a quadratic field. Arithmetic reduces th^2
 * via the minimal polynomial. Mixed-field arithmetic throws.
 */
class QuadraticElement {
 public:
  QuadraticElement(QuadraticFieldPtr field, const Rational& a, const Rational& b);
  QuadraticElement(QuadraticFieldPtr field, const Rational& a);

  const QuadraticFieldPtr& field() const { return field_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  QuadraticElement operator+(const QuadraticElement& o) const;
  QuadraticElement operator-(const QuadraticElement& o) const;
  QuadraticElement operator*(const QuadraticElement& o) const;
  QuadraticElement operator/(const QuadraticElement& o) const;
  QuadraticElement operator-() const;

  bool operator==(const QuadraticElement& o) const;
  bool operator!=(const QuadraticElement& o) const { return !(*this == o); }

  QuadraticElement conjugate() const;
  // norm(a + b*th) = a^2 - a*b*p1 + b^2*p0
  Rational norm() const;
  // trace(a + b*th) = 2a - b*p1
  Rational trace() const;
  QuadraticElement inverse() const;

  std::string str() const;

 private:
  void check_same_field(const QuadraticElement& o) const;

  QuadraticFieldPtr field_;
  Rational a_, b_;
};

inline QuadraticElement operator*(long k, const QuadraticElement& x) {
  return QuadraticElement(x.field(), k * x.a(), k * x.b());
}

inline QuadraticElement k_from_int(const QuadraticElement& like, long n) {
  return QuadraticElement(like.field(), Rational(n));
}

enum class SplittingType { ramified, inert, split };

std::string splitting_type_name(SplittingType s);

/**
 * Behaviour of an odd prime p in the field. Requires p >= 3 prime and
 * p not dividing the denominator of the discriminant.
 *
 * Ramified iff val_p(disc) is odd or p divides the squarefree part of
 * the discriminant (equivalent conditions for odd p); otherwise split or
 * inert according to the Euler criterion on the p-free part of the
 * discriminant.
 */
SplittingType splitting_type(const QuadraticField& field, const Integer& p);

/**
 * Valuation at the prime of the field above p, normalized so the value
 * group is Z. Ramified (e=2, f=1): val_p(norm). Inert (e=1, f=2):
 * val_p(norm)/2. Split primes are rejected: a + b*th does not determine
 * which of the two places is meant.
 */
Valuation quad_val(const QuadraticElement& x, const Integer& p);

/**
 * Image of x in the residue field F_p at a ramified prime: a + b*r mod p,
 * where r is the unique double root of the minimal polynomial mod p.
 * Requires quad_val(x) >= 0 and val_p(a), val_p(b) >= 0.
 */
Integer residue_reduce(const QuadraticElement& x, const Integer& p);

}  // namespace kodaira
