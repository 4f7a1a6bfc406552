#include "kodaira/localization.hpp"

#include <algorithm>
#include <array>

namespace kodaira {

std::string KodairaType::str() const {
  switch (kind) {
    case KodairaKind::I0: return "I0";
    case KodairaKind::In: return "I" + std::to_string(n);
    case KodairaKind::II: return "II";
    case KodairaKind::III: return "III";
    case KodairaKind::IV: return "IV";
    case KodairaKind::I0Star: return "I0*";
    case KodairaKind::InStar: return "I" + std::to_string(n) + "*";
    case KodairaKind::IVStar: return "IV*";
    case KodairaKind::IIIStar: return "III*";
    case KodairaKind::IIStar: return "II*";
  }
  throw std::logic_error("unreachable");
}

std::string KodairaType::family_str() const { return kind_name(kind); }

std::string kind_name(KodairaKind k) {
  switch (k) {
    case KodairaKind::I0: return "I0";
    case KodairaKind::In: return "In";
    case KodairaKind::II: return "II";
    case KodairaKind::III: return "III";
    case KodairaKind::IV: return "IV";
    case KodairaKind::I0Star: return "I0*";
    case KodairaKind::InStar: return "In*";
    case KodairaKind::IVStar: return "IV*";
    case KodairaKind::IIIStar: return "III*";
    case KodairaKind::IIStar: return "II*";
  }
  throw std::logic_error("unreachable");
}

KodairaKind parse_kind(const std::string& name) {
  if (name == "I0") return KodairaKind::I0;
  if (name == "In") return KodairaKind::In;
  if (name == "II") return KodairaKind::II;
  if (name == "III") return KodairaKind::III;
  if (name == "IV") return KodairaKind::IV;
  if (name == "I0*") return KodairaKind::I0Star;
  if (name == "In*") return KodairaKind::InStar;
  if (name == "IV*") return KodairaKind::IVStar;
  if (name == "III*") return KodairaKind::IIIStar;
  if (name == "II*") return KodairaKind::IIStar;
  // display forms I<n> and I<n>*
  if (name.size() >= 2 && name[0] == 'I' && (name[1] >= '0' && name[1] <= '9')) {
    bool star = name.back() == '*';
    std::string digits = name.substr(1, name.size() - 1 - (star ? 1 : 0));
    if (!digits.empty() &&
        digits.find_first_not_of("0123456789") == std::string::npos) {
      long n = std::stol(digits);
      if (star) return n == 0 ? KodairaKind::I0Star : KodairaKind::InStar;
      return n == 0 ? KodairaKind::I0 : KodairaKind::In;
    }
  }
  throw std::invalid_argument("unknown reduction type: " + name);
}

namespace {

Integer pow_int(const Integer& p, unsigned long k) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), k);
  return r;
}

void require_nonnegative(const ValuationTriple& t) {
  auto bad = [](const Valuation& v) { return !v.is_infinite() && v.value() < 0; };
  if (bad(t.vc4) || bad(t.vc6) || t.vdelta < 0)
    throw std::invalid_argument("triple " + t.str() + " has a negative entry");
}

// 1728*disc = c4^3 - c6^2 pins vdelta to min(3*vc4, 2*vc6) unless the
// leading terms can cancel (exact tie), where only a lower bound remains
void check_consistent(const ValuationTriple& t) {
  Valuation A = t.vc4 * 3;
  Valuation B = t.vc6 * 2;
  bool ok;
  if (A == B)
    ok = !A.is_infinite() && Valuation(t.vdelta) >= A;
  else
    ok = Valuation(t.vdelta) == min(A, B);
  if (!ok)
    throw std::domain_error("impossible triple " + t.str() +
                            ": violates 1728*disc = c4^3 - c6^2");
}

bool is_minimal(const ValuationTriple& t) {
  return t.vc4 < Valuation(4) || t.vc6 < Valuation(6) || t.vdelta < 12;
}

long component_group_order(const KodairaType& ty) {
  switch (ty.kind) {
    case KodairaKind::I0: return 1;
    case KodairaKind::In: return ty.n;
    case KodairaKind::II:
    case KodairaKind::IIStar: return 1;
    case KodairaKind::III:
    case KodairaKind::IIIStar: return 2;
    case KodairaKind::IV:
    case KodairaKind::IVStar: return 3;
    case KodairaKind::I0Star:
    case KodairaKind::InStar: return 4;
  }
  throw std::logic_error("unreachable");
}

int semistability_degree(KodairaKind k) {
  switch (k) {
    case KodairaKind::I0:
    case KodairaKind::In: return 1;
    case KodairaKind::I0Star:
    case KodairaKind::InStar: return 2;
    case KodairaKind::IV:
    case KodairaKind::IVStar: return 3;
    case KodairaKind::III:
    case KodairaKind::IIIStar: return 4;
    case KodairaKind::II:
    case KodairaKind::IIStar: return 6;
  }
  throw std::logic_error("unreachable");
}

bool potentially_good(const KodairaType& ty) {
  return !(ty.kind == KodairaKind::In || (ty.kind == KodairaKind::InStar && ty.n >= 1));
}

ClassificationRecord make_record(KodairaType ty, const ValuationTriple& minimal,
                                 long u_valuation) {
  return ClassificationRecord{ty, minimal, u_valuation, component_group_order(ty),
                              semistability_degree(ty.kind), potentially_good(ty)};
}

}  // namespace

std::pair<long, ValuationTriple> minimalize(const ValuationTriple& t) {
  require_nonnegative(t);
  long k = t.vdelta / 12;
  if (!t.vc4.is_infinite()) k = std::min(k, t.vc4.value() / 4);
  if (!t.vc6.is_infinite()) k = std::min(k, t.vc6.value() / 6);
  ValuationTriple reduced{t.vc4 + Valuation(-4 * k), t.vc6 + Valuation(-6 * k),
                          t.vdelta - 12 * k};
  return {k, reduced};
}

ClassificationRecord classify(const ValuationTriple& t) {
  require_nonnegative(t);
  check_consistent(t);
  if (!is_minimal(t))
    throw std::invalid_argument("triple " + t.str() + " not minimal");

  const long c = t.vdelta;
  const Valuation& a = t.vc4;
  KodairaType ty{KodairaKind::I0, 0};
  if (c == 0)
    ty = {KodairaKind::I0, 0};
  else if (a == Valuation(0))
    ty = {KodairaKind::In, c};
  else if (c == 2)
    ty = {KodairaKind::II, 0};
  else if (c == 3)
    ty = {KodairaKind::III, 0};
  else if (c == 4)
    ty = {KodairaKind::IV, 0};
  else if (c == 6)
    ty = {KodairaKind::I0Star, 0};
  else if (c >= 7 && a == Valuation(2))
    ty = {KodairaKind::InStar, c - 6};
  else if (c == 8 && a >= Valuation(3))
    ty = {KodairaKind::IVStar, 0};
  else if (c == 9 && a >= Valuation(3))
    ty = {KodairaKind::IIIStar, 0};
  else if (c == 10 && a >= Valuation(3))
    ty = {KodairaKind::IIStar, 0};
  else
    throw std::domain_error("impossible triple " + t.str());
  return make_record(ty, t, 0);
}

ClassificationRecord classify_triple(const ValuationTriple& t) {
  auto [k, reduced] = minimalize(t);
  ClassificationRecord rec = classify(reduced);
  rec.u_valuation = k;
  return rec;
}

ClassificationRecord base_change(const ValuationTriple& minimal, long d,
                                 const Integer& p) {
  if (d < 1) throw std::invalid_argument("base-change degree must be >= 1");
  if (p < 5 || !is_prime(p)) throw std::domain_error("context prime must be a prime >= 5");
  if (mpz_divisible_p(Integer(d).get_mpz_t(), p.get_mpz_t()))
    throw std::domain_error("wild base change unsupported: p divides the degree");
  require_nonnegative(minimal);
  check_consistent(minimal);
  if (!is_minimal(minimal))
    throw std::invalid_argument("triple " + minimal.str() + " not minimal");
  ValuationTriple scaled{minimal.vc4 * d, minimal.vc6 * d, minimal.vdelta * d};
  return classify_triple(scaled);
}

namespace {

// context-normalized valuation of the base-field element
Valuation rational_context_val(const Rational& x, const LocalContext& ctx) {
  return val_p(x, ctx.p) * ctx.e;
}

struct QuadContextVal {
  const LocalContext& ctx;
  long scale;

  QuadContextVal(const QuadraticField& field, const LocalContext& ctx_) : ctx(ctx_) {
    SplittingType s = splitting_type(field, ctx.p);
    if (s == SplittingType::split)
      throw std::domain_error("ambiguous prime: p splits in the base field");
    if (s == SplittingType::inert)
      throw std::domain_error("quadratic base must be ramified at p");
    if (ctx.e % 2 != 0)
      throw std::domain_error(
          "ramified quadratic base forces an even ramification index");
    scale = ctx.e / 2;
  }

  Valuation operator()(const QuadraticElement& x) const {
    return quad_val(x, ctx.p) * scale;
  }
};

template <class K, class VF>
ValuationTriple valuations_with(const WeierstrassModel<K>& E, VF&& v) {
  // least k with every v(a_i) + i*k >= 0; scaling by a uniformizer power
  // leaves the curve unchanged and shifts (vc4, vc6, vdelta) by (4k, 6k, 12k)
  long k = 0;
  const std::array<std::pair<const K*, long>, 5> weighted = {
      {{&E.a1(), 1}, {&E.a2(), 2}, {&E.a3(), 3}, {&E.a4(), 4}, {&E.a6(), 6}}};
  for (const auto& [a, w] : weighted) {
    Valuation va = v(*a);
    if (!va.is_infinite() && va.value() < 0)
      k = std::max(k, (-va.value() + w - 1) / w);
  }
  const auto& inv = E.invariants();
  return ValuationTriple{v(inv.c4) + Valuation(4 * k), v(inv.c6) + Valuation(6 * k),
                         (v(inv.disc) + Valuation(12 * k)).value()};
}

}  // namespace

ValuationTriple local_valuations(const WeierstrassModel<Rational>& E,
                                 const LocalContext& ctx) {
  return valuations_with(E, [&](const Rational& x) { return rational_context_val(x, ctx); });
}

ValuationTriple local_valuations(const WeierstrassModel<QuadraticElement>& E,
                                 const LocalContext& ctx) {
  QuadContextVal v(*E.a1().field(), ctx);
  return valuations_with(E, v);
}

ClassificationRecord classify_model(const WeierstrassModel<Rational>& E,
                                    const LocalContext& ctx) {
  return classify_triple(local_valuations(E, ctx));
}

ClassificationRecord classify_model(const WeierstrassModel<QuadraticElement>& E,
                                    const LocalContext& ctx) {
  return classify_triple(local_valuations(E, ctx));
}

namespace {

template <class K, class VF>
PointReduction point_reduction_with(const WeierstrassModel<K>& E,
                                    const CurvePoint<K>& P, VF&& v) {
  const std::array<const K*, 5> as = {&E.a1(), &E.a2(), &E.a3(), &E.a4(), &E.a6()};
  for (const K* a : as)
    if (v(*a) < Valuation(0))
      throw std::domain_error("model not integral at the context prime");
  ValuationTriple t{v(E.invariants().c4), v(E.invariants().c6),
                    v(E.invariants().disc).value()};
  if (minimalize(t).first != 0)
    throw std::domain_error("model not minimal at the context prime");
  if (!E.contains(P)) throw std::domain_error("point not on curve");

  if (P.is_infinity()) return {true, true};
  if (v(P.x()) < Valuation(0)) return {true, true};

  // integral x forces integral y, so both partials are integral; the
  // image is singular iff both reduce to zero
  const K &x = P.x(), &y = P.y();
  K dy = 2 * y + E.a1() * x + E.a3();
  K dx = E.a1() * y - 3 * (x * x) - 2 * (E.a2() * x) - E.a4();
  bool singular = v(dy) > Valuation(0) && v(dx) > Valuation(0);
  return {false, !singular};
}

}  // namespace

PointReduction point_reduction(const WeierstrassModel<Rational>& E,
                               const LocalContext& ctx, const CurvePoint<Rational>& P) {
  if (ctx.e != 1)
    throw std::domain_error("coordinate reduction over Q requires e = 1");
  return point_reduction_with(E, P,
                              [&](const Rational& x) { return val_p(x, ctx.p); });
}

PointReduction point_reduction(const WeierstrassModel<QuadraticElement>& E,
                               const LocalContext& ctx,
                               const CurvePoint<QuadraticElement>& P) {
  if (ctx.e != 2)
    throw std::domain_error("coordinate reduction over a quadratic base requires e = 2");
  QuadContextVal v(*E.a1().field(), ctx);
  return point_reduction_with(E, P, v);
}

std::pair<Rational, Rational> kernel_coordinate_valuations(long vdelta_min) {
  if (vdelta_min < 0 || vdelta_min % 12 != 0)
    throw std::invalid_argument("12 does not divide the minimal discriminant valuation");
  return {Rational(-vdelta_min, 6), Rational(-vdelta_min, 4)};
}

bool torsion_not_in_kernel(long vLp, long vdelta_min, const Integer& p, long n) {
  if (p < 5 || !is_prime(p)) throw std::domain_error("p must be a prime >= 5");
  if (n < 1) throw std::invalid_argument("torsion exponent must be >= 1");
  if (vLp < 1) throw std::invalid_argument("v_L(p) must be >= 1");
  if (vdelta_min < 0) throw std::invalid_argument("negative discriminant valuation");
  Integer lhs = Integer(vLp) * 12;
  Integer rhs = (pow_int(p, n) - pow_int(p, n - 1)) * vdelta_min;
  return lhs < rhs;
}

bool injective_on_torsion(long vLp, const Integer& p, long n) {
  if (p < 5 || !is_prime(p)) throw std::domain_error("p must be a prime >= 5");
  if (n < 1) throw std::invalid_argument("torsion exponent must be >= 1");
  if (vLp < 1) throw std::invalid_argument("v_L(p) must be >= 1");
  return Integer(vLp) < pow_int(p, n - 1) * (p - 1);
}

}  // namespace kodaira
