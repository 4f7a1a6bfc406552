#include <fstream>
#include <iostream>
#include <string>
#include <type_traits>

#include "CLI11.hpp"
#include "kodaira/families.hpp"
#include "kodaira/serialization.hpp"
#include "kodaira/sweep.hpp"
#include "kodaira/theorems.hpp"

namespace {

using namespace kodaira;

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

Valuation parse_valuation_arg(const std::string& s) {
  if (s == "inf") return Valuation::infinity();
  size_t pos = 0;
  long v = std::stol(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("bad valuation: " + s);
  return Valuation(v);
}

std::pair<Rational, Rational> parse_point_arg(const std::string& s) {
  size_t comma = s.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("point must be given as X,Y");
  return {Rational::parse(s.substr(0, comma)), Rational::parse(s.substr(comma + 1))};
}

void emit(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

template <class K>
CurvePoint<K> lift_point(const WeierstrassModel<K>& E,
                         const std::pair<Rational, Rational>& xy) {
  if constexpr (std::is_same_v<K, Rational>) {
    return CurvePoint<K>(xy.first, xy.second);
  } else {
    auto field = E.a1().field();
    return CurvePoint<K>(K(field, xy.first), K(field, xy.second));
  }
}

int run(int argc, char** argv) {
  CLI::App app{"exact reduction-type toolkit for elliptic curves over local fields"};
  app.require_subcommand(1);
  bool csv = false;

  std::string curve_path, point_arg, vc4_arg, vc6_arg, type_arg, spec_path;
  std::string s_arg, t_arg, b_arg, c_arg;
  // e_arg = 0 means "not given"; classify defaults it to 1, point-analysis
  // picks 1 or 2 from the base kind
  long p_arg = 5, e_arg = 0, vdelta_arg = 0, degree_arg = 1, max_arg = 200;
  long n_arg = 1, vkp_arg = 1, m_arg = 1, x_arg = 0;
  long n_max = 0, s_max = 0, t_max = 0, b_max = 0, c_max = 0, threads_arg = 0;

  auto* cmd_invariants = app.add_subcommand("invariants", "invariants of a curve document");
  cmd_invariants->add_option("curve", curve_path)->required();

  auto* cmd_classify = app.add_subcommand("classify", "reduction type of a curve document");
  cmd_classify->add_option("curve", curve_path)->required();
  cmd_classify->add_option("--p", p_arg)->required();
  cmd_classify->add_option("--e", e_arg, "ramification index, default 1");

  auto* cmd_triple = app.add_subcommand("classify-triple", "classify a valuation triple");
  cmd_triple->add_option("--vc4", vc4_arg, "integer or inf")->required();
  cmd_triple->add_option("--vc6", vc6_arg, "integer or inf")->required();
  cmd_triple->add_option("--vdelta", vdelta_arg)->required();

  auto* cmd_base = app.add_subcommand("basechange", "tame base change of a minimal triple");
  cmd_base->add_option("--vc4", vc4_arg)->required();
  cmd_base->add_option("--vc6", vc6_arg)->required();
  cmd_base->add_option("--vdelta", vdelta_arg)->required();
  cmd_base->add_option("--degree", degree_arg)->required();
  cmd_base->add_option("--p", p_arg)->required();

  auto* cmd_order = app.add_subcommand("order", "order of a point by repeated addition");
  cmd_order->add_option("curve", curve_path)->required();
  cmd_order->add_option("--point", point_arg, "X,Y")->required();
  cmd_order->add_option("--max", max_arg, "search bound, default 200");

  auto* cmd_point = app.add_subcommand("point-analysis", "reduction of a point");
  cmd_point->add_option("curve", curve_path)->required();
  cmd_point->add_option("--p", p_arg)->required();
  cmd_point->add_option("--point", point_arg, "X,Y")->required();
  cmd_point->add_option("--e", e_arg, "default: 1 rational base, 2 quadratic base");

  auto* cmd_family = app.add_subcommand("family", "construct a family member");
  std::string family_arg;
  cmd_family->add_option("name", family_arg, "x1-5 | x1-11 | x1-13 | tate-normal")
      ->required();
  cmd_family->add_option("--s", s_arg);
  cmd_family->add_option("--t", t_arg);
  cmd_family->add_option("--b", b_arg);
  cmd_family->add_option("--c", c_arg);

  auto* cmd_sweep = app.add_subcommand("sweep", "run a family sweep against an assertion");
  cmd_sweep->add_option("spec", spec_path)->required();
  cmd_sweep->add_option("--n-max", n_max, "override the n range upper bound");
  cmd_sweep->add_option("--s-max", s_max, "override the s range upper bound");
  cmd_sweep->add_option("--t-max", t_max, "override the t range upper bound");
  cmd_sweep->add_option("--b-max", b_max, "override the b range upper bound");
  cmd_sweep->add_option("--c-max", c_max, "override the c range upper bound");
  cmd_sweep->add_option("--threads", threads_arg, "worker threads, default hardware");
  cmd_sweep->add_flag("--csv", csv, "emit CSV rows instead of the JSON report");

  auto* cmd_allowed = app.add_subcommand("allowed-types", "additive types allowed with p^n torsion");
  cmd_allowed->add_option("--p", p_arg)->required();
  cmd_allowed->add_option("--n", n_arg)->required();
  cmd_allowed->add_option("--vkp", vkp_arg)->required();

  auto* cmd_thm1 = app.add_subcommand("theorem1", "purely additive exclusion bound");
  cmd_thm1->add_option("--p", p_arg)->required();
  cmd_thm1->add_option("--vkp", vkp_arg)->required();
  cmd_thm1->add_option("--m", m_arg)->required();

  auto* cmd_surface = app.add_subcommand("surface-bound", "abelian surface feasibility");
  cmd_surface->add_option("--p", p_arg)->required();

  auto* cmd_ss = app.add_subcommand("supersingular", "potential supersingularity by congruence");
  cmd_ss->add_option("--type", type_arg)->required();
  cmd_ss->add_option("--p", p_arg)->required();

  auto* cmd_lfun = app.add_subcommand("lfunction", "semistabilizing-degree weight");
  cmd_lfun->add_option("--x", x_arg)->required();

  auto* cmd_claim = app.add_subcommand("verify-claim-gcd", "check the cofactor certificate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit(error_json(e.what()));
    return 2;
  }

  if (*cmd_invariants) {
    CurveDoc doc = curve_from_json(read_json_file(curve_path));
    emit(std::visit([](const auto& E) { return invariants_to_json(E.invariants()); }, doc));
    return 0;
  }

  if (*cmd_classify) {
    CurveDoc doc = curve_from_json(read_json_file(curve_path));
    LocalContext ctx(Integer(p_arg), e_arg == 0 ? 1 : e_arg);
    emit(std::visit(
        [&](const auto& E) { return classification_to_json(classify_model(E, ctx)); }, doc));
    return 0;
  }

  if (*cmd_triple) {
    ValuationTriple t{parse_valuation_arg(vc4_arg), parse_valuation_arg(vc6_arg),
                      vdelta_arg};
    emit(classification_to_json(classify_triple(t)));
    return 0;
  }

  if (*cmd_base) {
    ValuationTriple t{parse_valuation_arg(vc4_arg), parse_valuation_arg(vc6_arg),
                      vdelta_arg};
    emit(classification_to_json(base_change(t, degree_arg, Integer(p_arg))));
    return 0;
  }

  if (*cmd_order) {
    CurveDoc doc = curve_from_json(read_json_file(curve_path));
    auto xy = parse_point_arg(point_arg);
    Json out = std::visit(
        [&](const auto& E) {
          auto P = lift_point(E, xy);
          auto ord = point_order(E, P, max_arg);
          return Json{{"order", ord ? Json(*ord) : Json(nullptr)}};
        },
        doc);
    emit(out);
    return 0;
  }

  if (*cmd_point) {
    CurveDoc doc = curve_from_json(read_json_file(curve_path));
    auto xy = parse_point_arg(point_arg);
    Json out = std::visit(
        [&](const auto& E) {
          using K = std::decay_t<decltype(E.a1())>;
          long e = e_arg != 0 ? e_arg : (std::is_same_v<K, Rational> ? 1 : 2);
          LocalContext ctx(Integer(p_arg), e);
          auto P = lift_point(E, xy);
          return point_reduction_to_json(point_reduction(E, ctx, P));
        },
        doc);
    emit(out);
    return 0;
  }

  if (*cmd_family) {
    auto need = [](const std::string& v, const char* name) {
      if (v.empty())
        throw std::invalid_argument(std::string("missing required option --") + name);
      return Rational::parse(v);
    };
    Family fam = parse_family(family_arg);
    Json out;
    Json provenance{{"family", family_arg}};
    switch (fam) {
      case Family::x1_5: {
        Rational s = need(s_arg, "s"), t = need(t_arg, "t");
        out = curve_to_json(x1_5_model(s, t));
        provenance["s"] = s.str();
        provenance["t"] = t.str();
        break;
      }
      case Family::tate_normal: {
        Rational b = need(b_arg, "b"), c = need(c_arg, "c");
        out = curve_to_json(tate_normal(b, c));
        provenance["b"] = b.str();
        provenance["c"] = c.str();
        break;
      }
      case Family::x1_11:
      case Family::x1_13: {
        Rational t = need(t_arg, "t");
        QuadraticFamilyMember m =
            fam == Family::x1_11 ? x1_11_model(t) : x1_13_model(t);
        out = curve_to_json(m.model);
        out["field"] = Json{{"minpoly", Json::array({m.field->p1().str(), m.field->p0().str()})},
                            {"discriminant", m.field->discriminant().str()}};
        provenance["t"] = t.str();
        break;
      }
    }
    out["provenance"] = provenance;
    emit(out);
    return 0;
  }

  if (*cmd_sweep) {
    SweepSpec spec = sweep_spec_from_json(read_json_file(spec_path));
    if (n_max > 0) spec.n_hi = n_max;
    if (s_max > 0) spec.s_hi = s_max;
    if (t_max > 0) spec.t_hi = t_max;
    if (b_max > 0) spec.b_hi = b_max;
    if (c_max > 0) spec.c_hi = c_max;
    spec.validate();
    SweepReport rep = run_sweep(spec, static_cast<unsigned>(threads_arg));
    if (csv)
      std::cout << sweep_report_to_csv(rep);
    else
      emit(sweep_report_to_json(rep));
    return rep.pass ? 0 : 1;
  }

  if (*cmd_allowed) {
    AllowedTypes allowed = allowed_additive_types(Integer(p_arg), n_arg, vkp_arg);
    emit(type_set_to_json(allowed.additive));
    return 0;
  }

  if (*cmd_thm1) {
    emit(Json{{"excluded", purely_additive_excluded(Integer(p_arg), vkp_arg, m_arg)}});
    return 0;
  }

  if (*cmd_surface) {
    emit(surface_report_to_json(surface_feasibility(Integer(p_arg))));
    return 0;
  }

  if (*cmd_ss) {
    KodairaType ty{parse_kind(type_arg), 0};
    emit(Json{{"potentially_supersingular",
               tristate_name(potentially_supersingular(ty, Integer(p_arg)))}});
    return 0;
  }

  if (*cmd_lfun) {
    emit(Json{{"value", l_function(Integer(x_arg)).get_si()}});
    return 0;
  }

  if (*cmd_claim) {
    BezoutCertificateReport rep = verify_bezout_certificate();
    emit(bezout_report_to_json(rep));
    return rep.pass ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& ex) {
    emit(error_json(ex.what()));
    return 2;
  }
}
