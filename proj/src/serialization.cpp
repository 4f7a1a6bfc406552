#include "kodaira/serialization.hpp"

namespace kodaira {

Json rational_to_json(const Rational& x) { return x.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw std::invalid_argument("expected a rational as string or integer");
}

Json quadratic_to_json(const QuadraticElement& x) {
  return Json{{"a", x.a().str()}, {"b", x.b().str()}};
}

Json valuation_to_json(const Valuation& v) {
  if (v.is_infinite()) return nullptr;
  return v.value();
}

Json triple_to_json(const ValuationTriple& t) {
  return Json::array({valuation_to_json(t.vc4), valuation_to_json(t.vc6), t.vdelta});
}

namespace {

template <class K, class F>
Json invariants_json_with(const Invariants<K>& inv, F&& enc) {
  return Json{{"b2", enc(inv.b2)}, {"b4", enc(inv.b4)}, {"b6", enc(inv.b6)},
              {"b8", enc(inv.b8)}, {"c4", enc(inv.c4)}, {"c6", enc(inv.c6)},
              {"disc", enc(inv.disc)}, {"j", enc(inv.j)}};
}

}  // namespace

Json invariants_to_json(const Invariants<Rational>& inv) {
  return invariants_json_with(inv, [](const Rational& x) { return rational_to_json(x); });
}

Json invariants_to_json(const Invariants<QuadraticElement>& inv) {
  return invariants_json_with(inv,
                              [](const QuadraticElement& x) { return quadratic_to_json(x); });
}

Json curve_to_json(const WeierstrassModel<Rational>& E) {
  return Json{{"base", Json{{"kind", "rational"}}},
              {"ainv", Json::array({rational_to_json(E.a1()), rational_to_json(E.a2()),
                                    rational_to_json(E.a3()), rational_to_json(E.a4()),
                                    rational_to_json(E.a6())})}};
}

Json curve_to_json(const WeierstrassModel<QuadraticElement>& E) {
  const auto& f = *E.a1().field();
  return Json{{"base", Json{{"kind", "quadratic"},
                            {"minpoly", Json::array({f.p1().str(), f.p0().str()})}}},
              {"ainv", Json::array({quadratic_to_json(E.a1()), quadratic_to_json(E.a2()),
                                    quadratic_to_json(E.a3()), quadratic_to_json(E.a4()),
                                    quadratic_to_json(E.a6())})}};
}

CurveDoc curve_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("base") || !j.contains("ainv"))
    throw std::invalid_argument("curve document needs base and ainv fields");
  const Json& ainv = j.at("ainv");
  if (!ainv.is_array() || ainv.size() != 5)
    throw std::invalid_argument("ainv must list [a1, a2, a3, a4, a6]");
  const Json& base = j.at("base");
  std::string kind = base.at("kind").get<std::string>();
  if (kind == "rational") {
    std::array<Rational, 5> a;
    for (size_t i = 0; i < 5; ++i) a[i] = rational_from_json(ainv[i]);
    return WeierstrassModel<Rational>(a[0], a[1], a[2], a[3], a[4]);
  }
  if (kind == "quadratic") {
    const Json& mp = base.at("minpoly");
    if (!mp.is_array() || mp.size() != 2)
      throw std::invalid_argument("minpoly must list [p1, p0]");
    auto field = make_quadratic_field(rational_from_json(mp[0]), rational_from_json(mp[1]));
    std::array<QuadraticElement, 5> a = {
        QuadraticElement(field, Rational(0)), QuadraticElement(field, Rational(0)),
        QuadraticElement(field, Rational(0)), QuadraticElement(field, Rational(0)),
        QuadraticElement(field, Rational(0))};
    for (size_t i = 0; i < 5; ++i) {
      const Json& e = ainv[i];
      if (e.is_object())
        a[i] = QuadraticElement(field, rational_from_json(e.at("a")),
                                rational_from_json(e.at("b")));
      else
        a[i] = QuadraticElement(field, rational_from_json(e));
    }
    return WeierstrassModel<QuadraticElement>(a[0], a[1], a[2], a[3], a[4]);
  }
  throw std::invalid_argument("unknown base kind: " + kind);
}

Json point_to_json(const CurvePoint<Rational>& P) {
  if (P.is_infinity()) return "infinity";
  return Json{{"x", rational_to_json(P.x())}, {"y", rational_to_json(P.y())}};
}

Json point_to_json(const CurvePoint<QuadraticElement>& P) {
  if (P.is_infinity()) return "infinity";
  return Json{{"x", quadratic_to_json(P.x())}, {"y", quadratic_to_json(P.y())}};
}

Json classification_to_json(const ClassificationRecord& rec) {
  bool in_family = rec.type.kind == KodairaKind::In || rec.type.kind == KodairaKind::InStar;
  return Json{{"type", rec.type.family_str()},
              {"n", in_family ? Json(rec.type.n) : Json(nullptr)},
              {"triple", triple_to_json(rec.minimal_triple)},
              {"u_valuation", rec.u_valuation},
              {"component_group", rec.component_group_order},
              {"semistability_degree", rec.semistability_degree},
              {"potentially_good", rec.potentially_good}};
}

Json type_set_to_json(const TypeSet& s) {
  Json arr = Json::array();
  for (KodairaKind k : s) arr.push_back(kind_name(k));
  return arr;
}

Json point_reduction_to_json(const PointReduction& r) {
  return Json{{"in_kernel", r.in_kernel}, {"nonsingular_image", r.nonsingular_image}};
}

Json surface_report_to_json(const SurfaceReport& rep) {
  return Json{{"verdict", surface_feasibility_name(rep.verdict)},
              {"max_degree_l_le_4", rep.max_degree_l_le_4},
              {"max_degree_l_le_3", rep.max_degree_l_le_3},
              {"coarse_degree_bound", rep.coarse_degree_bound}};
}

Json bezout_report_to_json(const BezoutCertificateReport& rep) {
  return Json{{"pass", rep.pass},
              {"gcd_is_one", rep.gcd_is_one},
              {"integral", rep.integral},
              {"identity_holds", rep.identity_holds},
              {"cofactor_mismatches", rep.cofactor_mismatches},
              {"first_violation", rep.first_violation},
              {"constant", rep.constant.get_str()},
              {"deg_a", rep.deg_a},
              {"deg_b", rep.deg_b}};
}

Json error_json(const std::string& message) { return Json{{"error", message}}; }

}  // namespace kodaira
