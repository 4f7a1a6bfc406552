#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>

namespace kodaira {

using Integer = mpz_class;

/**
 * Value of a discrete valuation: an integer or +infinity.
 *
 * Infinity is absorbing under addition and scaling and compares
 * greater than every finite value.
 */
class Valuation {
 public:
  Valuation(long v) : infinite_(false), v_(v) {}

  static Valuation infinity() {
    Valuation w(0);
    w.infinite_ = true;
    return w;
  }

  bool is_infinite() const { return infinite_; }

  // finite value; throws on infinity
  long value() const {
    if (infinite_) throw std::domain_error("valuation is infinite");
    return v_;
  }

  Valuation operator+(const Valuation& o) const {
    if (infinite_ || o.infinite_) return infinity();
    return Valuation(v_ + o.v_);
  }

  Valuation operator*(long k) const {
    if (infinite_) return infinity();
    return Valuation(v_ * k);
  }

  bool operator==(const Valuation& o) const {
    if (infinite_ != o.infinite_) return false;
    return infinite_ || v_ == o.v_;
  }

  bool operator<(const Valuation& o) const {
    if (infinite_) return false;
    if (o.infinite_) return true;
    return v_ < o.v_;
  }
  bool operator<=(const Valuation& o) const { return *this < o || *this == o; }
  bool operator>(const Valuation& o) const { return o < *this; }
  bool operator>=(const Valuation& o) const { return o <= *this; }

  std::string str() const { return infinite_ ? "inf" : std::to_string(v_); }

 private:
  bool infinite_;
  long v_;
};

inline Valuation min(const Valuation& a, const Valuation& b) { return a < b ? a : b; }

/**
 * Arbitrary-precision rational number.
 *
 * Invariants: always stored in lowest terms with denominator > 0;
 * equality is canonical-form equality. Construction from a zero
 * denominator throws std::domain_error.
 */
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}
  Rational(long n, long d) { init(Integer(n), Integer(d)); }
  explicit Rational(const Integer& n) : q_(n) {}
  Rational(const Integer& n, const Integer& d) { init(n, d); }

  // accepts "n" or "n/d", base 10, optional leading minus
  static Rational parse(const std::string& text);

  const Integer numerator() const { return q_.get_num(); }
  const Integer denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  // true iff this is the square of a rational
  bool is_square() const;
  // exact square root; throws unless is_square()
  Rational sqrt() const;

  Rational operator+(const Rational& o) const { return Rational(q_ + o.q_); }
  Rational operator-(const Rational& o) const { return Rational(q_ - o.q_); }
  Rational operator*(const Rational& o) const { return Rational(q_ * o.q_); }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero");
    return Rational(q_ / o.q_);
  }
  Rational operator-() const { return Rational(-q_); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

  bool operator==(const Rational& o) const { return q_ == o.q_; }
  bool operator!=(const Rational& o) const { return q_ != o.q_; }
  bool operator<(const Rational& o) const { return q_ < o.q_; }
  bool operator<=(const Rational& o) const { return q_ <= o.q_; }
  bool operator>(const Rational& o) const { return q_ > o.q_; }
  bool operator>=(const Rational& o) const { return q_ >= o.q_; }

  Rational pow(unsigned long k) const;
  Rational inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    return Rational(1) / *this;
  }

  // "n" when integral, else "n/d"
  std::string str() const { return q_.get_str(); }

 private:
  explicit Rational(const mpq_class& q) : q_(q) {}
  void init(const Integer& n, const Integer& d) {
    if (sgn(d) == 0) throw std::domain_error("zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
  }

  mpq_class q_;
};

inline Rational operator*(long k, const Rational& x) { return Rational(k) * x; }

// constant in the same field as the exemplar; the rational overload ignores it
inline Rational k_from_int(const Rational&, long n) { return Rational(n); }

// probabilistic primality with enough rounds to be exact for every in-scope p
bool is_prime(const Integer& n);

// exponent of the exact power of prime p dividing n; val_p(0) = infinity
Valuation val_p(const Integer& n, const Integer& p);

// extends val_p to Q by val(num) - val(den); requires p prime
Valuation val_p(const Rational& x, const Integer& p);

// residue of x mod p in [0, p); requires val_p(x) >= 0
Integer mod_p(const Rational& x, const Integer& p);

}  // namespace kodaira
