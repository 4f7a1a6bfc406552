#pragma once

#include <string>
#include <variant>

#include "json.hpp"
#include "kodaira/localization.hpp"
#include "kodaira/quadratic.hpp"
#include "kodaira/theorems.hpp"
#include "kodaira/weierstrass.hpp"

namespace kodaira {

// nlohmann::json keeps keys sorted, so emitted documents are byte-stable
using Json = nlohmann::json;

Json rational_to_json(const Rational& x);
Rational rational_from_json(const Json& j);

Json quadratic_to_json(const QuadraticElement& x);

// valuations serialize as numbers, infinity as null
Json valuation_to_json(const Valuation& v);
Json triple_to_json(const ValuationTriple& t);

Json invariants_to_json(const Invariants<Rational>& inv);
Json invariants_to_json(const Invariants<QuadraticElement>& inv);

Json curve_to_json(const WeierstrassModel<Rational>& E);
Json curve_to_json(const WeierstrassModel<QuadraticElement>& E);

// a parsed curve document: rational base or quadratic base
using CurveDoc =
    std::variant<WeierstrassModel<Rational>, WeierstrassModel<QuadraticElement>>;

CurveDoc curve_from_json(const Json& j);

Json point_to_json(const CurvePoint<Rational>& P);
Json point_to_json(const CurvePoint<QuadraticElement>& P);

Json classification_to_json(const ClassificationRecord& rec);

Json type_set_to_json(const TypeSet& s);

Json point_reduction_to_json(const PointReduction& r);

Json surface_report_to_json(const SurfaceReport& rep);

Json bezout_report_to_json(const BezoutCertificateReport& rep);

Json error_json(const std::string& message);

}  // namespace kodaira
