#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "kodaira/rational.hpp"

namespace kodaira {

// dense univariate polynomial over the rationals, coefficient of x^i at
// index i, normalized so the leading coefficient is nonzero
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Rational> coeffs);
  explicit Polynomial(std::vector<Rational> coeffs);
  explicit Polynomial(const Rational& c);

  static Polynomial x();

  // -1 for the zero polynomial
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const Rational& coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational leading() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Rational eval(const Rational& x) const;
  Polynomial monic() const;
  std::string str() const;

 private:
  std::vector<Rational> coeffs_;
  void trim();
};

// quotient and remainder with deg r < deg divisor
std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den);

struct ExtendedGcd {
  Polynomial gcd;  // monic unless both inputs are zero
  Polynomial a;    // a*f + b*g = gcd
  Polynomial b;
};

// extended Euclid; when gcd = 1 the cofactors are canonical:
// deg a < deg g and deg b < deg f
ExtendedGcd poly_ext_gcd(const Polynomial& f, const Polynomial& g);

// homogeneous bivariate polynomial in (s, t): coefficient of s^i t^(d-i)
// at index i, with zero represented as an all-zero vector of length d+1
struct HomPoly {
  int total_degree = 0;
  std::vector<Rational> coeffs;

  HomPoly() : coeffs{Rational(0)} {}
  HomPoly(int degree, std::vector<Rational> cs);

  // homogenize a univariate polynomial of degree <= d to total degree d
  static HomPoly from_univariate(const Polynomial& f, int d);

  const Rational& coeff(int i) const { return coeffs.at(static_cast<size_t>(i)); }
  bool is_integral() const;

  HomPoly operator+(const HomPoly& o) const;
  HomPoly operator*(const HomPoly& o) const;
  HomPoly operator*(const Rational& c) const;
  bool operator==(const HomPoly& o) const;

  Rational eval(const Rational& s, const Rational& t) const;
  std::string str() const;
};

}  // namespace kodaira
