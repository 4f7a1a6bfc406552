#include "kodaira/quadratic.hpp"

namespace kodaira {

QuadraticField::QuadraticField(const Rational& p1, const Rational& p0)
    : p1_(p1), p0_(p0), disc_(p1 * p1 - 4 * p0) {
  if (disc_.is_square())
    throw std::domain_error("reducible quadratic: discriminant " + disc_.str() +
                            " is a rational square");
}

std::string QuadraticField::str() const {
  std::string s = "x^2";
  auto term = [&](const Rational& c, const std::string& mon) {
    if (c.is_zero()) return;
    if (c.sign() > 0)
      s += " + " + c.str() + mon;
    else
      s += " - " + (-c).str() + mon;
  };
  term(p1_, "*x");
  term(p0_, "");
  return s;
}

QuadraticFieldPtr make_quadratic_field(const Rational& p1, const Rational& p0) {
  return std::make_shared<const QuadraticField>(p1, p0);
}

QuadraticElement::QuadraticElement(QuadraticFieldPtr field, const Rational& a,
                                   const Rational& b)
    : field_(std::move(field)), a_(a), b_(b) {
  if (!field_) throw std::invalid_argument("null quadratic field");
}

QuadraticElement::QuadraticElement(QuadraticFieldPtr field, const Rational& a)
    : QuadraticElement(std::move(field), a, Rational(0)) {}

void QuadraticElement::check_same_field(const QuadraticElement& o) const {
  if (field_ == o.field_) return;
  if (*field_ == *o.field_) return;
  throw std::domain_error("quadratic elements from different fields");
}

QuadraticElement QuadraticElement::operator+(const QuadraticElement& o) const {
  check_same_field(o);
  return QuadraticElement(field_, a_ + o.a_, b_ + o.b_);
}

QuadraticElement QuadraticElement::operator-(const QuadraticElement& o) const {
  check_same_field(o);
  return QuadraticElement(field_, a_ - o.a_, b_ - o.b_);
}

QuadraticElement QuadraticElement::operator*(const QuadraticElement& o) const {
  check_same_field(o);
  // (a + b*th)(c + d*th) with th^2 = -p1*th - p0
  const Rational& p1 = field_->p1();
  const Rational& p0 = field_->p0();
  Rational bd = b_ * o.b_;
  return QuadraticElement(field_, a_ * o.a_ - bd * p0,
                          a_ * o.b_ + b_ * o.a_ - bd * p1);
}

QuadraticElement QuadraticElement::operator/(const QuadraticElement& o) const {
  return *this * o.inverse();
}

QuadraticElement QuadraticElement::operator-() const {
  return QuadraticElement(field_, -a_, -b_);
}

bool QuadraticElement::operator==(const QuadraticElement& o) const {
  check_same_field(o);
  return a_ == o.a_ && b_ == o.b_;
}

QuadraticElement QuadraticElement::conjugate() const {
  // th -> -p1 - th
  return QuadraticElement(field_, a_ - b_ * field_->p1(), -b_);
}

Rational QuadraticElement::norm() const {
  return a_ * a_ - a_ * b_ * field_->p1() + b_ * b_ * field_->p0();
}

Rational QuadraticElement::trace() const { return 2 * a_ - b_ * field_->p1(); }

QuadraticElement QuadraticElement::inverse() const {
  Rational n = norm();
  if (n.is_zero()) throw std::domain_error("division by zero");
  QuadraticElement c = conjugate();
  return QuadraticElement(field_, c.a() / n, c.b() / n);
}

std::string QuadraticElement::str() const {
  if (b_.is_zero()) return a_.str();
  std::string s;
  if (!a_.is_zero()) s = a_.str();
  if (b_.sign() < 0)
    s += (s.empty() ? "-" : " - ") + (b_ == Rational(-1) ? "" : (-b_).str() + "*") + "th";
  else
    s += (s.empty() ? "" : " + ") + (b_ == Rational(1) ? "" : b_.str() + "*") + "th";
  return s;
}

std::string splitting_type_name(SplittingType s) {
  switch (s) {
    case SplittingType::ramified: return "ramified";
    case SplittingType::inert: return "inert";
    case SplittingType::split: return "split";
  }
  throw std::logic_error("unreachable");
}

SplittingType splitting_type(const QuadraticField& field, const Integer& p) {
  if (p == 2) throw std::domain_error("p = 2 not supported");
  if (p < 3 || !is_prime(p)) throw std::domain_error("p must be an odd prime");
  const Rational& disc = field.discriminant();
  if (val_p(disc.denominator(), p).value() > 0)
    throw std::domain_error("p divides the discriminant denominator");
  // disc = (n/d) = n*d / d^2, so parity and residue questions reduce to n*d
  Integer nd = disc.numerator() * disc.denominator();
  long v = val_p(nd, p).value();
  if (v % 2 != 0) return SplittingType::ramified;
  // even p-power removed, the rest differs from the squarefree part by a square
  Integer rest;
  mpz_remove(rest.get_mpz_t(), nd.get_mpz_t(), p.get_mpz_t());
  rest %= p;
  if (sgn(rest) < 0) rest += p;
  Integer half = (p - 1) / 2, euler;
  mpz_powm(euler.get_mpz_t(), rest.get_mpz_t(), half.get_mpz_t(), p.get_mpz_t());
  return euler == 1 ? SplittingType::split : SplittingType::inert;
}

Valuation quad_val(const QuadraticElement& x, const Integer& p) {
  SplittingType s = splitting_type(*x.field(), p);
  if (s == SplittingType::split)
    throw std::domain_error("ambiguous prime: p splits in the field");
  if (x.is_zero()) return Valuation::infinity();
  long vn = val_p(x.norm(), p).value();
  if (s == SplittingType::ramified) return Valuation(vn);
  if (vn % 2 != 0) throw std::logic_error("odd norm valuation at an inert prime");
  return Valuation(vn / 2);
}

Integer residue_reduce(const QuadraticElement& x, const Integer& p) {
  if (splitting_type(*x.field(), p) != SplittingType::ramified)
    throw std::domain_error("residue reduction requires a ramified prime");
  Valuation v = quad_val(x, p);
  if (!v.is_infinite() && v.value() < 0)
    throw std::domain_error("negative valuation, no residue");
  const Rational& p1 = x.field()->p1();
  if (val_p(p1, p) < Valuation(0) || val_p(x.field()->p0(), p) < Valuation(0))
    throw std::domain_error("minimal polynomial not integral at p");
  // a + b*r is the residue only when a and b are themselves p-integral
  if (val_p(x.a(), p) < Valuation(0) || val_p(x.b(), p) < Valuation(0))
    throw std::domain_error("component valuations negative, residue formula inapplicable");
  // double root of x^2 + p1*x + p0 mod p
  Rational r(mod_p(-p1 / Rational(2), p));
  return mod_p(x.a() + x.b() * r, p);
}

}  // namespace kodaira
