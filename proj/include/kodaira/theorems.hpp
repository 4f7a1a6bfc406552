#pragma once

#include <set>
#include <string>
#include <vector>

#include "kodaira/localization.hpp"
#include "kodaira/polynomial.hpp"

namespace kodaira {

// type families, so In covers every n >= 1 and In* every n >= 1
using TypeSet = std::set<KodairaKind>;

// true iff vKp < (p-1)/m exactly, where m is the degree of L/K
bool purely_additive_excluded(const Integer& p, long vKp, long m);

struct AllowedTypes {
  TypeSet additive;           // additive families not excluded; empty = semistable only
  bool theorem_silent = false;  // no restriction applied at all
};

// additive reduction types compatible with a point of order p^n over K
AllowedTypes allowed_additive_types(const Integer& p, long n, long vKp);

// minimal semistabilizing-degree weight: 0 for x <= 1, L(x/2) when
// ord_2(x) = 1, otherwise sum of p^(a-1)(p-1) over the factorization
Integer l_function(const Integer& x);

enum class SurfaceFeasibility {
  no_purely_additive,
  purely_additive_implies_pot_good,
  unrestricted,
};

std::string surface_feasibility_name(SurfaceFeasibility f);

struct SurfaceReport {
  SurfaceFeasibility verdict;
  // largest tame degrees m with l_function(m) <= 4 resp. <= 3, from the scan
  long max_degree_l_le_4;
  long max_degree_l_le_3;
  // weaker degree bound kept for reference; the verdict never relies on it
  long coarse_degree_bound;
};

// feasibility of purely additive reduction for an abelian surface with a
// point of p-power order, at vKp = 1
SurfaceReport surface_feasibility(const Integer& p);

enum class Tristate { yes, no, indeterminate };

std::string tristate_name(Tristate t);

// for the potentially good additive types the reduction of a twist is
// forced: j = 0 needs p = 2 mod 3, j = 1728 needs p = 3 mod 4
Tristate potentially_supersingular(const KodairaType& type, const Integer& p);

// dehomogenized invariants of the order-5 family: f = c4(x,1), g = c6(x,1)
Polynomial bezout_f();
Polynomial bezout_g();

struct BezoutCertificateReport {
  bool pass = false;
  bool gcd_is_one = false;
  bool integral = false;
  bool identity_holds = false;
  std::vector<std::string> cofactor_mismatches;  // vs the pinned reference table
  std::string first_violation;                   // empty when the identity holds
  Integer constant;                              // 2^12 3^6 5
  int deg_a = -1;
  int deg_b = -1;
};

// recompute the cofactors for the given pair, homogenize, and check
// A(s,t) c4(s,t) + B(s,t) c6(s,t) = 2^12 3^6 5 t^9 against the true
// order-5 family invariants
BezoutCertificateReport bezout_certificate_report(const Polynomial& f,
                                                  const Polynomial& g);

BezoutCertificateReport verify_bezout_certificate();

}  // namespace kodaira
