#include "kodaira/polynomial.hpp"

#include <sstream>

namespace kodaira {

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) {
  trim();
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

Polynomial::Polynomial(const Rational& c) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

Polynomial Polynomial::x() { return Polynomial{Rational(0), Rational(1)}; }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Rational& Polynomial::coeff(int i) const {
  static const Rational zero(0);
  if (i < 0 || i > degree()) return zero;
  return coeffs_[static_cast<size_t>(i)];
}

Rational Polynomial::leading() const {
  if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
  std::vector<Rational> out(coeffs_);
  for (auto& c : out) c = -c;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial();
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * o.coeffs_[j];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Rational& c) const {
  std::vector<Rational> out(coeffs_);
  for (auto& v : out) v *= c;
  return Polynomial(std::move(out));
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeff(i);
    if (c.is_zero()) continue;
    if (!first) out << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) out << "-";
    Rational mag = c.sign() < 0 ? -c : c;
    bool unit = mag == Rational(1);
    if (i == 0 || !unit) out << mag.str();
    if (i >= 1) {
      if (!unit) out << "*";
      out << "x";
      if (i >= 2) out << "^" << i;
    }
    first = false;
  }
  return out.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem(num.coeffs());
  std::vector<Rational> quot;
  int dq = num.degree() - den.degree();
  if (dq < 0) return {Polynomial(), num};
  quot.assign(static_cast<size_t>(dq) + 1, Rational(0));
  Rational lead_inv = den.leading().inverse();
  for (int k = dq; k >= 0; --k) {
    Rational c = rem[static_cast<size_t>(k + den.degree())] * lead_inv;
    quot[static_cast<size_t>(k)] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= den.degree(); ++j)
      rem[static_cast<size_t>(k + j)] -= c * den.coeff(j);
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

ExtendedGcd poly_ext_gcd(const Polynomial& f, const Polynomial& g) {
  Polynomial r0 = f, r1 = g;
  Polynomial s0{Rational(1)}, s1;
  Polynomial t0, t1{Rational(1)};
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Polynomial s = s0 - q * s1;
    Polynomial t = t0 - q * t1;
    r0 = r1; r1 = r;
    s0 = s1; s1 = s;
    t0 = t1; t1 = t;
  }
  ExtendedGcd out{r0, s0, t0};
  if (!out.gcd.is_zero()) {
    Rational inv = out.gcd.leading().inverse();
    out.gcd = out.gcd * inv;
    out.a = out.a * inv;
    out.b = out.b * inv;
  }
  // canonical cofactors: reduce a modulo g/gcd, recompute b exactly
  if (!out.gcd.is_zero() && !g.is_zero()) {
    auto [gq, gr] = divmod(g, out.gcd);
    (void)gr;
    if (gq.degree() >= 1) {
      out.a = divmod(out.a, gq).second;
      auto [bq, br] = divmod(out.gcd - out.a * f, g);
      if (!br.is_zero()) throw std::logic_error("cofactor reduction not exact");
      out.b = bq;
    }
  }
  return out;
}

HomPoly::HomPoly(int degree, std::vector<Rational> cs)
    : total_degree(degree), coeffs(std::move(cs)) {
  if (degree < 0 || coeffs.size() != static_cast<size_t>(degree) + 1)
    throw std::invalid_argument("homogeneous coefficient vector has wrong length");
}

HomPoly HomPoly::from_univariate(const Polynomial& f, int d) {
  if (f.degree() > d)
    throw std::invalid_argument("degree exceeds requested homogenization degree");
  std::vector<Rational> cs(static_cast<size_t>(d) + 1, Rational(0));
  for (int i = 0; i <= f.degree(); ++i) cs[static_cast<size_t>(i)] = f.coeff(i);
  return HomPoly(d, std::move(cs));
}

bool HomPoly::is_integral() const {
  for (const auto& c : coeffs)
    if (!c.is_integer()) return false;
  return true;
}

HomPoly HomPoly::operator+(const HomPoly& o) const {
  if (total_degree != o.total_degree)
    throw std::invalid_argument("homogeneous degrees differ under addition");
  std::vector<Rational> out(coeffs);
  for (size_t i = 0; i < out.size(); ++i) out[i] += o.coeffs[i];
  return HomPoly(total_degree, std::move(out));
}

HomPoly HomPoly::operator*(const HomPoly& o) const {
  std::vector<Rational> out(coeffs.size() + o.coeffs.size() - 1, Rational(0));
  for (size_t i = 0; i < coeffs.size(); ++i)
    for (size_t j = 0; j < o.coeffs.size(); ++j)
      out[i + j] += coeffs[i] * o.coeffs[j];
  return HomPoly(total_degree + o.total_degree, std::move(out));
}

HomPoly HomPoly::operator*(const Rational& c) const {
  std::vector<Rational> out(coeffs);
  for (auto& v : out) v *= c;
  return HomPoly(total_degree, std::move(out));
}

bool HomPoly::operator==(const HomPoly& o) const {
  return total_degree == o.total_degree && coeffs == o.coeffs;
}

Rational HomPoly::eval(const Rational& s, const Rational& t) const {
  Rational acc(0);
  Rational spow(1);
  for (size_t i = 0; i < coeffs.size(); ++i) {
    Rational term = coeffs[i] * spow;
    for (size_t j = i; j + 1 <= static_cast<size_t>(total_degree); ++j) term *= t;
    acc += term;
    spow *= s;
  }
  return acc;
}

std::string HomPoly::str() const {
  std::ostringstream out;
  bool first = true;
  for (int i = total_degree; i >= 0; --i) {
    const Rational& c = coeffs[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    if (!first) out << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) out << "-";
    Rational mag = c.sign() < 0 ? -c : c;
    bool unit = mag == Rational(1);
    int tdeg = total_degree - i;
    if (!unit || (i == 0 && tdeg == 0)) out << mag.str();
    if (i > 0) {
      if (!unit) out << "*";
      out << "s";
      if (i > 1) out << "^" << i;
    }
    if (tdeg > 0) {
      if (!unit || i > 0) out << "*";
      out << "t";
      if (tdeg > 1) out << "^" << tdeg;
    }
    first = false;
  }
  if (first) return "0";
  return out.str();
}

}  // namespace kodaira
