#pragma once

#include <optional>
#include <stdexcept>
#include <utility>

#include "kodaira/quadratic.hpp"
#include "kodaira/rational.hpp"

namespace kodaira {

/**
 * Point on a Weierstrass model: affine (x, y) or the point at infinity.
 * Coordinate access on the point at infinity throws.
 */
template <class K>
class CurvePoint {
 public:
  CurvePoint(K x, K y) : xy_(std::make_pair(std::move(x), std::move(y))) {}

  static CurvePoint infinity() { return CurvePoint(); }

  bool is_infinity() const { return !xy_.has_value(); }

  const K& x() const {
    if (!xy_) throw std::domain_error("point at infinity has no coordinates");
    return xy_->first;
  }
  const K& y() const {
    if (!xy_) throw std::domain_error("point at infinity has no coordinates");
    return xy_->second;
  }

  bool operator==(const CurvePoint& o) const {
    if (is_infinity() || o.is_infinity()) return is_infinity() == o.is_infinity();
    return x() == o.x() && y() == o.y();
  }
  bool operator!=(const CurvePoint& o) const { return !(*this == o); }

 private:
  CurvePoint() = default;
  std::optional<std::pair<K, K>> xy_;
};

template <class K>
struct Invariants {
  K b2, b4, b6, b8, c4, c6, disc, j;
};

/**
 * Long Weierstrass model y^2 + a1*xy + a3*y = x^3 + a2*x^2 + a4*x + a6
 * over Q or a quadratic field. Construction computes the standard
 * invariants and rejects singular models (disc = 0).
 */
template <class K>
class WeierstrassModel {
 public:
  WeierstrassModel(K a1, K a2, K a3, K a4, K a6)
      : a1_(std::move(a1)), a2_(std::move(a2)), a3_(std::move(a3)),
        a4_(std::move(a4)), a6_(std::move(a6)), inv_(compute_invariants()) {
    if (inv_.disc.is_zero())
      throw std::domain_error("singular model: discriminant is zero");
  }

  const K& a1() const { return a1_; }
  const K& a2() const { return a2_; }
  const K& a3() const { return a3_; }
  const K& a4() const { return a4_; }
  const K& a6() const { return a6_; }

  const Invariants<K>& invariants() const { return inv_; }

  bool contains(const CurvePoint<K>& P) const {
    if (P.is_infinity()) return true;
    const K& x = P.x();
    const K& y = P.y();
    K lhs = y * y + a1_ * x * y + a3_ * y;
    K rhs = x * x * x + a2_ * x * x + a4_ * x + a6_;
    return lhs == rhs;
  }

 private:
  Invariants<K> compute_invariants() const {
    Invariants<K> v{a1_, a1_, a1_, a1_, a1_, a1_, a1_, a1_};
    v.b2 = a1_ * a1_ + 4 * a2_;
    v.b4 = 2 * a4_ + a1_ * a3_;
    v.b6 = a3_ * a3_ + 4 * a6_;
    v.b8 = a1_ * a1_ * a6_ + 4 * (a2_ * a6_) - a1_ * a3_ * a4_ + a2_ * (a3_ * a3_) -
           a4_ * a4_;
    v.c4 = v.b2 * v.b2 - 24 * v.b4;
    v.c6 = -(v.b2 * v.b2 * v.b2) + 36 * (v.b2 * v.b4) - 216 * v.b6;
    v.disc = -(v.b2 * v.b2 * v.b8) - 8 * (v.b4 * v.b4 * v.b4) - 27 * (v.b6 * v.b6) +
             9 * (v.b2 * v.b4 * v.b6);
    if (!v.disc.is_zero()) v.j = v.c4 * v.c4 * v.c4 / v.disc;
    return v;
  }

  K a1_, a2_, a3_, a4_, a6_;
  Invariants<K> inv_;
};

template <class K>
const Invariants<K>& invariants(const WeierstrassModel<K>& E) {
  return E.invariants();
}

/**
 * Change of coordinates x = u^2 x' + r, y = u^3 y' + s u^2 x' + t
 * with u invertible. Composition law: apply `first`, then `second`
 * in the new coordinates.
 */
template <class K>
struct ModelTransformation {
  K u, r, s, t;

  ModelTransformation(K u_, K r_, K s_, K t_)
      : u(std::move(u_)), r(std::move(r_)), s(std::move(s_)), t(std::move(t_)) {
    if (u.is_zero()) throw std::domain_error("transformation with u = 0");
  }

  static ModelTransformation identity(const K& like) {
    return ModelTransformation(k_from_int(like, 1), k_from_int(like, 0),
                               k_from_int(like, 0), k_from_int(like, 0));
  }

  static ModelTransformation scaling(const K& u) {
    return ModelTransformation(u, k_from_int(u, 0), k_from_int(u, 0), k_from_int(u, 0));
  }

  ModelTransformation then(const ModelTransformation& o) const {
    return ModelTransformation(u * o.u, u * u * o.r + r, u * o.s + s,
                               u * u * u * o.t + s * (u * u) * o.r + t);
  }

  ModelTransformation inverse() const {
    K ui = k_from_int(u, 1) / u;
    K ui2 = ui * ui;
    K ui3 = ui2 * ui;
    return ModelTransformation(ui, -(r * ui2), -(s * ui), (r * s - t) * ui3);
  }
};

template <class K>
WeierstrassModel<K> transform(const WeierstrassModel<K>& E,
                              const ModelTransformation<K>& T) {
  const K &u = T.u, &r = T.r, &s = T.s, &t = T.t;
  K u2 = u * u;
  K u3 = u2 * u;
  K a1 = (E.a1() + 2 * s) / u;
  K a2 = (E.a2() - s * E.a1() + 3 * r - s * s) / u2;
  K a3 = (E.a3() + r * E.a1() + 2 * t) / u3;
  K a4 = (E.a4() - s * E.a3() + 2 * (r * E.a2()) - (t + r * s) * E.a1() + 3 * (r * r) -
          2 * (s * t)) /
         (u2 * u2);
  K a6 = (E.a6() + r * E.a4() + r * r * E.a2() + r * r * r - t * E.a3() - t * t -
          r * t * E.a1()) /
         (u3 * u3);
  return WeierstrassModel<K>(a1, a2, a3, a4, a6);
}

template <class K>
CurvePoint<K> transform_point(const ModelTransformation<K>& T, const CurvePoint<K>& P) {
  if (P.is_infinity()) return CurvePoint<K>::infinity();
  const K &u = T.u, &r = T.r, &s = T.s, &t = T.t;
  K u2 = u * u;
  K xr = P.x() - r;
  K x = xr / u2;
  K y = (P.y() - s * xr - t) / (u2 * u);
  return CurvePoint<K>(x, y);
}

template <class K>
CurvePoint<K> negate(const WeierstrassModel<K>& E, const CurvePoint<K>& P) {
  if (!E.contains(P)) throw std::domain_error("point not on curve");
  if (P.is_infinity()) return P;
  return CurvePoint<K>(P.x(), -P.y() - E.a1() * P.x() - E.a3());
}

/**
 * Chord-tangent addition on a long Weierstrass model. Inputs are
 * validated against the curve equation; off-curve points throw.
 */
template <class K>
CurvePoint<K> add(const WeierstrassModel<K>& E, const CurvePoint<K>& P,
                  const CurvePoint<K>& Q) {
  if (!E.contains(P) || !E.contains(Q)) throw std::domain_error("point not on curve");
  if (P.is_infinity()) return Q;
  if (Q.is_infinity()) return P;

  const K &x1 = P.x(), &y1 = P.y(), &x2 = Q.x(), &y2 = Q.y();
  if (x1 == x2 && y2 == -y1 - E.a1() * x1 - E.a3()) return CurvePoint<K>::infinity();

  K lambda = k_from_int(x1, 0), nu = k_from_int(x1, 0);
  if (x1 == x2) {
    // tangent case; the denominator is nonzero because Q != -P
    K d = 2 * y1 + E.a1() * x1 + E.a3();
    lambda = (3 * (x1 * x1) + 2 * (E.a2() * x1) + E.a4() - E.a1() * y1) / d;
    nu = (-(x1 * x1 * x1) + E.a4() * x1 + 2 * E.a6() - E.a3() * y1) / d;
  } else {
    K d = x2 - x1;
    lambda = (y2 - y1) / d;
    nu = (y1 * x2 - y2 * x1) / d;
  }
  K x3 = lambda * lambda + E.a1() * lambda - E.a2() - x1 - x2;
  K y3 = -(lambda + E.a1()) * x3 - nu - E.a3();
  return CurvePoint<K>(x3, y3);
}

template <class K>
CurvePoint<K> multiply(const WeierstrassModel<K>& E, long n, const CurvePoint<K>& P) {
  if (!E.contains(P)) throw std::domain_error("point not on curve");
  if (n < 0) return multiply(E, -n, negate(E, P));
  CurvePoint<K> acc = CurvePoint<K>::infinity();
  CurvePoint<K> base = P;
  while (n > 0) {
    if (n & 1) acc = add(E, acc, base);
    n >>= 1;
    if (n > 0) base = add(E, base, base);
  }
  return acc;
}

/**
 * Order of P by repeated addition, or nullopt when the order exceeds
 * max_order. Point orders in scope are tiny, so no structure theory
 * is used.
 */
template <class K>
std::optional<long> point_order(const WeierstrassModel<K>& E, const CurvePoint<K>& P,
                                long max_order = 200) {
  if (max_order < 1) throw std::invalid_argument("max_order must be >= 1");
  if (!E.contains(P)) throw std::domain_error("point not on curve");
  if (P.is_infinity()) return 1;
  CurvePoint<K> acc = P;
  for (long k = 2; k <= max_order; ++k) {
    acc = add(E, acc, P);
    if (acc.is_infinity()) return k;
  }
  return std::nullopt;
}

}  // namespace kodaira
