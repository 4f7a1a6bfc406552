#include "kodaira/theorems.hpp"

#include <sstream>

namespace kodaira {

namespace {

Integer pow_int(const Integer& p, unsigned long k) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), k);
  return r;
}

void require_context_prime(const Integer& p) {
  if (p < 5 || !is_prime(p)) throw std::domain_error("p must be a prime >= 5");
}

}  // namespace

bool purely_additive_excluded(const Integer& p, long vKp, long m) {
  require_context_prime(p);
  if (vKp < 1) throw std::invalid_argument("v_K(p) must be >= 1");
  if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
  return Integer(vKp) * m < p - 1;
}

AllowedTypes allowed_additive_types(const Integer& p, long n, long vKp) {
  require_context_prime(p);
  if (n < 1) throw std::invalid_argument("torsion exponent must be >= 1");
  if (vKp < 1) throw std::invalid_argument("v_K(p) must be >= 1");

  const Integer Q = pow_int(p, static_cast<unsigned long>(n - 1)) * (p - 1);
  const Integer v(vKp);

  AllowedTypes out;
  if (6 * v < Q) {
    // semistable only
  } else if (4 * v < Q) {
    out.additive = {KodairaKind::II};
  } else if (3 * v < Q) {
    out.additive = {KodairaKind::II, KodairaKind::III};
  } else if (2 * v < Q) {
    out.additive = {KodairaKind::II, KodairaKind::III, KodairaKind::IV};
  } else {
    out.additive = {KodairaKind::II,     KodairaKind::III,    KodairaKind::IV,
                    KodairaKind::I0Star, KodairaKind::InStar, KodairaKind::IVStar,
                    KodairaKind::IIIStar, KodairaKind::IIStar};
  }

  // starred potentially-good exclusions, strongest applicable threshold
  if (3 * v < 2 * Q) {
    out.additive.erase(KodairaKind::IIStar);
    out.additive.erase(KodairaKind::IIIStar);
    out.additive.erase(KodairaKind::IVStar);
  } else if (4 * v < 3 * Q) {
    out.additive.erase(KodairaKind::IIStar);
    out.additive.erase(KodairaKind::IIIStar);
  } else if (6 * v < 5 * Q) {
    out.additive.erase(KodairaKind::IIStar);
  }

  out.theorem_silent = 6 * v >= 5 * Q;
  return out;
}

Integer l_function(const Integer& x) {
  if (x < 0) throw std::invalid_argument("argument must be nonnegative");
  Integer n = x;
  unsigned long ord2 = 0;
  while (n > 1) {
    ord2 = mpz_scan1(n.get_mpz_t(), 0);
    if (ord2 != 1) break;
    n >>= 1;
  }
  if (n <= 1) return 0;

  Integer sum = 0;
  if (ord2 >= 2) {
    sum += pow_int(2, ord2 - 1);
    n >>= ord2;
  }
  for (Integer d = 3; d * d <= n; d += 2) {
    if (!mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) continue;
    unsigned long a = 0;
    while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      n /= d;
      ++a;
    }
    sum += pow_int(d, a - 1) * (d - 1);
  }
  if (n > 1) sum += n - 1;
  return sum;
}

std::string surface_feasibility_name(SurfaceFeasibility f) {
  switch (f) {
    case SurfaceFeasibility::no_purely_additive: return "no_purely_additive";
    case SurfaceFeasibility::purely_additive_implies_pot_good:
      return "purely_additive_implies_pot_good";
    case SurfaceFeasibility::unrestricted: return "unrestricted";
  }
  throw std::logic_error("unreachable");
}

SurfaceReport surface_feasibility(const Integer& p) {
  require_context_prime(p);

  // tame degrees m needing l_function(m) <= 4 (resp. <= 3) all lie below
  // 16: any larger m has either a 2-power part or an odd part pushing the
  // sum past 4, so the scan window is generous
  const long window = 64;
  long max4 = 1, max3 = 1;
  bool all4_excluded = true, all3_excluded = true;
  for (long m = 2; m <= window; ++m) {
    Integer l = l_function(m);
    if (l <= 4) {
      max4 = m;
      if (!purely_additive_excluded(p, 1, m)) all4_excluded = false;
    }
    if (l <= 3) {
      max3 = m;
      if (!purely_additive_excluded(p, 1, m)) all3_excluded = false;
    }
  }

  SurfaceFeasibility derived =
      all4_excluded ? SurfaceFeasibility::no_purely_additive
      : all3_excluded ? SurfaceFeasibility::purely_additive_implies_pot_good
                      : SurfaceFeasibility::unrestricted;

  SurfaceFeasibility stated =
      p > 13  ? SurfaceFeasibility::no_purely_additive
      : p > 7 ? SurfaceFeasibility::purely_additive_implies_pot_good
              : SurfaceFeasibility::unrestricted;

  if (derived != stated)
    throw std::logic_error("surface feasibility cross-check failed at p = " + p.get_str());

  return SurfaceReport{derived, max4, max3, 8};
}

std::string tristate_name(Tristate t) {
  switch (t) {
    case Tristate::yes: return "true";
    case Tristate::no: return "false";
    case Tristate::indeterminate: return "indeterminate";
  }
  throw std::logic_error("unreachable");
}

Tristate potentially_supersingular(const KodairaType& type, const Integer& p) {
  require_context_prime(p);
  switch (type.kind) {
    case KodairaKind::II:
    case KodairaKind::IIStar:
    case KodairaKind::IV:
    case KodairaKind::IVStar:
      return p % 3 == 2 ? Tristate::yes : Tristate::no;
    case KodairaKind::III:
    case KodairaKind::IIIStar:
      return p % 4 == 3 ? Tristate::yes : Tristate::no;
    default:
      return Tristate::indeterminate;
  }
}

Polynomial bezout_f() {
  return Polynomial{Rational(1), Rational(12), Rational(14), Rational(-12), Rational(1)};
}

Polynomial bezout_g() {
  Polynomial quadratic{Rational(1), Rational(0), Rational(1)};
  Polynomial quartic{Rational(1), Rational(18), Rational(74), Rational(-18), Rational(1)};
  return -(quadratic * quartic);
}

namespace {

const Integer kCertConstant = Integer(4096) * 729 * 5;  // 2^12 3^6 5

// integer cofactors pinned by a*f + b*g = 1 for the canonical pair,
// re-checked by the identity below on every run
const std::vector<Integer> kRefA = {698035968,   4900020480, -472780800,
                                    4965235200, -1171065600, 64717056};
const std::vector<Integer> kRefB = {683106048, 980543232, -782763264, 64717056};

HomPoly hom_c4() {
  return HomPoly::from_univariate(bezout_f(), 4);
}

HomPoly hom_c6() {
  return HomPoly::from_univariate(bezout_g(), 6);
}

void compare_cofactor(const Polynomial& scaled, const std::vector<Integer>& ref,
                      const char* label, std::vector<std::string>& out) {
  size_t n = std::max(ref.size(), static_cast<size_t>(scaled.degree() + 1));
  for (size_t i = 0; i < n; ++i) {
    Rational got = scaled.coeff(static_cast<int>(i));
    Rational want = i < ref.size() ? Rational(ref[i]) : Rational(0);
    if (got != want) {
      std::ostringstream msg;
      msg << label << "[" << i << "]: expected " << want.str() << ", got " << got.str();
      out.push_back(msg.str());
    }
  }
}

}  // namespace

BezoutCertificateReport bezout_certificate_report(const Polynomial& f,
                                                  const Polynomial& g) {
  BezoutCertificateReport rep;
  rep.constant = kCertConstant;

  ExtendedGcd ext = poly_ext_gcd(f, g);
  rep.gcd_is_one = ext.gcd == Polynomial{Rational(1)};
  rep.deg_a = ext.a.degree();
  rep.deg_b = ext.b.degree();

  Polynomial scaled_a = ext.a * Rational(kCertConstant);
  Polynomial scaled_b = ext.b * Rational(kCertConstant);
  compare_cofactor(scaled_a, kRefA, "a", rep.cofactor_mismatches);
  compare_cofactor(scaled_b, kRefB, "b", rep.cofactor_mismatches);

  if (!rep.gcd_is_one || rep.deg_a > 5 || rep.deg_b > 3) {
    rep.first_violation = "cofactors out of certificate shape";
    rep.pass = false;
    return rep;
  }

  HomPoly A = HomPoly::from_univariate(scaled_a, 5);
  HomPoly B = HomPoly::from_univariate(scaled_b, 3);
  rep.integral = A.is_integral() && B.is_integral();

  HomPoly lhs = A * hom_c4() + B * hom_c6();
  std::vector<Rational> rhs_coeffs(10, Rational(0));
  rhs_coeffs[0] = Rational(kCertConstant);  // constant * t^9
  HomPoly rhs(9, std::move(rhs_coeffs));

  rep.identity_holds = lhs == rhs;
  if (!rep.identity_holds) {
    for (int i = 0; i <= 9; ++i) {
      if (lhs.coeff(i) != rhs.coeff(i)) {
        std::ostringstream msg;
        msg << "coefficient of s^" << i << " t^" << (9 - i) << ": expected "
            << rhs.coeff(i).str() << ", got " << lhs.coeff(i).str();
        rep.first_violation = msg.str();
        break;
      }
    }
  }

  rep.pass = rep.gcd_is_one && rep.integral && rep.identity_holds &&
             rep.cofactor_mismatches.empty();
  return rep;
}

BezoutCertificateReport verify_bezout_certificate() {
  return bezout_certificate_report(bezout_f(), bezout_g());
}

}  // namespace kodaira
