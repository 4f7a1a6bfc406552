#pragma once

#include <string>
#include <utility>

#include "kodaira/local_context.hpp"
#include "kodaira/weierstrass.hpp"

namespace kodaira {

/**
 * Valuations (v(c4), v(c6), v(disc)) of a model, normalized to the
 * context so the value group is Z. v(c4) and v(c6) may be infinite;
 * v(disc) is always finite because models are nonsingular.
 */
struct ValuationTriple {
  Valuation vc4;
  Valuation vc6;
  long vdelta;

  bool operator==(const ValuationTriple& o) const {
    return vc4 == o.vc4 && vc6 == o.vc6 && vdelta == o.vdelta;
  }
  std::string str() const {
    return "(" + vc4.str() + ", " + vc6.str() + ", " + std::to_string(vdelta) + ")";
  }
};

enum class KodairaKind { I0, In, II, III, IV, I0Star, InStar, IVStar, IIIStar, IIStar };

/**
 * Reduction type. `n` is meaningful for kinds In (n >= 1) and
 * InStar (n >= 1) and is 0 otherwise.
 */
struct KodairaType {
  KodairaKind kind;
  long n = 0;

  bool operator==(const KodairaType& o) const { return kind == o.kind && n == o.n; }

  // display form: "I0", "I7", "II", "I2*", "II*", ...
  std::string str() const;
  // family form: In and In* collapse to "In" / "In*"
  std::string family_str() const;
};

std::string kind_name(KodairaKind k);
// parses both display and family forms ("I7", "In", "IV*", ...)
KodairaKind parse_kind(const std::string& name);

struct ClassificationRecord {
  KodairaType type;
  ValuationTriple minimal_triple;
  long u_valuation;             // k used by minimalize; 0 when input was already minimal
  long component_group_order;   // order of the geometric component group
  int semistability_degree;     // least tame base-change degree reaching I0/In
  bool potentially_good;
};

/**
 * Context-normalized valuations of (c4, c6, disc). Implicitly clears
 * denominators through an integral scaling transformation, so models
 * with non-integral coefficients are admitted. Over a quadratic base
 * the prime must be ramified and e must be even (the base already
 * contributes e = 2).
 */
ValuationTriple local_valuations(const WeierstrassModel<Rational>& E,
                                 const LocalContext& ctx);
ValuationTriple local_valuations(const WeierstrassModel<QuadraticElement>& E,
                                 const LocalContext& ctx);

/**
 * Reduces a triple by the largest k with (4k, 6k, 12k) componentwise
 * below it; returns (k, reduced triple). Infinite entries do not
 * constrain k. The result satisfies vc4 < 4 or vc6 < 6 or vdelta < 12.
 */
std::pair<long, ValuationTriple> minimalize(const ValuationTriple& t);

/**
 * Kodaira type from a minimal triple, residue characteristic >= 5.
 * Rejects triples violating 1728*disc = c4^3 - c6^2 as "impossible
 * triple" and non-minimal triples as "triple not minimal".
 */
ClassificationRecord classify(const ValuationTriple& minimal);

// classify after minimalize, recording the u valuation used
ClassificationRecord classify_triple(const ValuationTriple& t);

ClassificationRecord classify_model(const WeierstrassModel<Rational>& E,
                                    const LocalContext& ctx);
ClassificationRecord classify_model(const WeierstrassModel<QuadraticElement>& E,
                                    const LocalContext& ctx);

/**
 * Classification after tame base change of degree d (p must not divide
 * d): scales the minimal triple by d, re-minimalizes, classifies.
 */
ClassificationRecord base_change(const ValuationTriple& minimal, long d,
                                 const Integer& p);

struct PointReduction {
  bool in_kernel;           // reduces to the identity of the special fibre
  bool nonsingular_image;   // lands outside the singular locus
};

/**
 * Reduction diagnostics for a point on a model that is integral and
 * minimal at the context. Supported bases: Q with e = 1, and a
 * quadratic field ramified at p with e = 2.
 */
PointReduction point_reduction(const WeierstrassModel<Rational>& E,
                               const LocalContext& ctx, const CurvePoint<Rational>& P);
PointReduction point_reduction(const WeierstrassModel<QuadraticElement>& E,
                               const LocalContext& ctx,
                               const CurvePoint<QuadraticElement>& P);

/**
 * Coordinate valuations (v(x), v(y)) = (-vdelta/6, -vdelta/4) forced on
 * a nontrivial point of the formal-group kernel, for 12 | vdelta_min.
 */
std::pair<Rational, Rational> kernel_coordinate_valuations(long vdelta_min);

// v_L(p) < (p^n - p^(n-1)) * vdelta_min / 12, exactly
bool torsion_not_in_kernel(long vLp, long vdelta_min, const Integer& p, long n);

// v_L(p) < p^(n-1) * (p - 1), exactly
bool injective_on_torsion(long vLp, const Integer& p, long n);

}  // namespace kodaira
