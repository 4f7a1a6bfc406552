#include "kodaira/rational.hpp"

namespace kodaira {

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  // mpq_class accepts whitespace and bases we do not want; vet the shape first
  auto digits = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  std::string num = text, den = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!digits(num) || !digits(den))
    throw std::invalid_argument("malformed rational literal: " + text);
  Integer n(num, 10), d(den, 10);
  return Rational(n, d);
}

bool Rational::is_square() const {
  if (sgn(q_) < 0) return false;
  return mpz_perfect_square_p(q_.get_num().get_mpz_t()) &&
         mpz_perfect_square_p(q_.get_den().get_mpz_t());
}

Rational Rational::sqrt() const {
  if (!is_square()) throw std::domain_error("not a rational square");
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), q_.get_num().get_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q_.get_den().get_mpz_t());
  return Rational(n, d);
}

Rational Rational::pow(unsigned long k) const {
  mpq_class r;
  mpz_pow_ui(r.get_num_mpz_t(), q_.get_num().get_mpz_t(), k);
  mpz_pow_ui(r.get_den_mpz_t(), q_.get_den().get_mpz_t(), k);
  // num/den coprime implies their powers are coprime
  return Rational(r);
}

bool is_prime(const Integer& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

Valuation val_p(const Integer& n, const Integer& p) {
  if (p < 2 || !is_prime(p)) throw std::domain_error("valuation prime must be prime");
  if (sgn(n) == 0) return Valuation::infinity();
  Integer rest;
  auto k = mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
  return Valuation(static_cast<long>(k));
}

Valuation val_p(const Rational& x, const Integer& p) {
  if (x.is_zero()) return Valuation::infinity();
  Valuation vn = val_p(x.numerator(), p);
  Valuation vd = val_p(x.denominator(), p);
  return Valuation(vn.value() - vd.value());
}

Integer mod_p(const Rational& x, const Integer& p) {
  Valuation v = val_p(x, p);
  if (v.is_infinite()) return Integer(0);
  if (v.value() < 0) throw std::domain_error("negative valuation, no residue mod p");
  Integer num = x.numerator() % p;
  if (sgn(num) < 0) num += p;
  Integer deninv;
  if (!mpz_invert(deninv.get_mpz_t(), x.denominator().get_mpz_t(), p.get_mpz_t()))
    throw std::domain_error("denominator not invertible mod p");
  Integer r = (num * deninv) % p;
  if (sgn(r) < 0) r += p;
  return r;
}

}  // namespace kodaira
