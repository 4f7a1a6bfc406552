#include "kodaira/sweep.hpp"

#include <sstream>
#include <thread>

namespace kodaira {

std::string family_name(Family f) {
  switch (f) {
    case Family::x1_5: return "x1-5";
    case Family::x1_11: return "x1-11";
    case Family::x1_13: return "x1-13";
    case Family::tate_normal: return "tate-normal";
  }
  throw std::logic_error("unreachable");
}

Family parse_family(const std::string& name) {
  if (name == "x1-5") return Family::x1_5;
  if (name == "x1-11") return Family::x1_11;
  if (name == "x1-13") return Family::x1_13;
  if (name == "tate-normal") return Family::tate_normal;
  throw std::invalid_argument("unknown family: " + name);
}

std::string assertion_name(SweepAssertion a) {
  switch (a) {
    case SweepAssertion::prop41i: return "prop4.1.i";
    case SweepAssertion::prop41ii: return "prop4.1.ii";
    case SweepAssertion::prop41iii: return "prop4.1.iii";
    case SweepAssertion::prop41iv: return "prop4.1.iv";
    case SweepAssertion::remark_x1_11: return "remark-x1-11";
    case SweepAssertion::remark_x1_13: return "remark-x1-13";
    case SweepAssertion::thm_generic: return "thm1.2-1.3-generic";
  }
  throw std::logic_error("unreachable");
}

SweepAssertion parse_assertion(const std::string& name) {
  if (name == "prop4.1.i") return SweepAssertion::prop41i;
  if (name == "prop4.1.ii") return SweepAssertion::prop41ii;
  if (name == "prop4.1.iii") return SweepAssertion::prop41iii;
  if (name == "prop4.1.iv") return SweepAssertion::prop41iv;
  if (name == "remark-x1-11") return SweepAssertion::remark_x1_11;
  if (name == "remark-x1-13") return SweepAssertion::remark_x1_13;
  if (name == "thm1.2-1.3-generic") return SweepAssertion::thm_generic;
  throw std::invalid_argument("unknown assertion: " + name);
}

void SweepSpec::validate() const {
  LocalContext ctx(p, e);
  auto need = [](bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
  };
  switch (family) {
    case Family::x1_5:
      need(s_lo <= s_hi && t_lo <= t_hi, "empty s or t range");
      break;
    case Family::tate_normal:
      need(b_lo <= b_hi && c_lo <= c_hi, "empty b or c range");
      break;
    case Family::x1_11:
    case Family::x1_13:
      need(n_lo <= n_hi, "empty n range");
      need(n_lo >= 1, "n must be >= 1");
      need(e % 2 == 0, "quadratic families need an even ramification index");
      break;
  }
  switch (assertion) {
    case SweepAssertion::prop41i:
      need(family == Family::x1_5 && p == 5 && e == 1,
           "assertion prop4.1.i needs family x1-5 at p = 5, e = 1");
      break;
    case SweepAssertion::prop41ii:
      need(family == Family::x1_5 && p == 5 && e == 2,
           "assertion prop4.1.ii needs family x1-5 at p = 5, e = 2");
      break;
    case SweepAssertion::prop41iii:
      need(family == Family::x1_5 && p == 5 && e == 3,
           "assertion prop4.1.iii needs family x1-5 at p = 5, e = 3");
      break;
    case SweepAssertion::prop41iv:
      need((family == Family::x1_5 || family == Family::tate_normal) && p == 5 && e == 1,
           "assertion prop4.1.iv needs family x1-5 or tate-normal at p = 5, e = 1");
      break;
    case SweepAssertion::remark_x1_11:
      need(family == Family::x1_11 && p == 11 && e == 2,
           "assertion remark-x1-11 needs family x1-11 at p = 11, e = 2");
      break;
    case SweepAssertion::remark_x1_13:
      need(family == Family::x1_13 && p == 13 && e == 2,
           "assertion remark-x1-13 needs family x1-13 at p = 13, e = 2");
      break;
    case SweepAssertion::thm_generic:
      break;
  }
}

namespace {

std::pair<long, long> range_from_json(const Json& j, const char* name) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
      !j[1].is_number_integer())
    throw std::invalid_argument(std::string("range ") + name + " must be [lo, hi]");
  return {j[0].get<long>(), j[1].get<long>()};
}

}  // namespace

SweepSpec sweep_spec_from_json(const Json& j) {
  SweepSpec spec;
  spec.family = parse_family(j.at("family").get<std::string>());
  spec.assertion = parse_assertion(j.at("assertion").get<std::string>());
  if (j.contains("p")) {
    if (j.at("p").is_number_integer()) spec.p = Integer(j.at("p").get<long>());
    else spec.p = Integer(j.at("p").get<std::string>(), 10);
  }
  if (j.contains("e")) spec.e = j.at("e").get<long>();
  if (j.contains("s")) std::tie(spec.s_lo, spec.s_hi) = range_from_json(j.at("s"), "s");
  if (j.contains("t")) std::tie(spec.t_lo, spec.t_hi) = range_from_json(j.at("t"), "t");
  if (j.contains("n")) std::tie(spec.n_lo, spec.n_hi) = range_from_json(j.at("n"), "n");
  if (j.contains("b")) std::tie(spec.b_lo, spec.b_hi) = range_from_json(j.at("b"), "b");
  if (j.contains("c")) std::tie(spec.c_lo, spec.c_hi) = range_from_json(j.at("c"), "c");
  spec.validate();
  return spec;
}

Json sweep_spec_to_json(const SweepSpec& spec) {
  Json out{{"family", family_name(spec.family)},
           {"assertion", assertion_name(spec.assertion)},
           {"p", spec.p.get_si()},
           {"e", spec.e}};
  switch (spec.family) {
    case Family::x1_5:
      out["s"] = Json::array({spec.s_lo, spec.s_hi});
      out["t"] = Json::array({spec.t_lo, spec.t_hi});
      break;
    case Family::tate_normal:
      out["b"] = Json::array({spec.b_lo, spec.b_hi});
      out["c"] = Json::array({spec.c_lo, spec.c_hi});
      break;
    case Family::x1_11:
    case Family::x1_13:
      out["n"] = Json::array({spec.n_lo, spec.n_hi});
      break;
  }
  return out;
}

std::pair<WeierstrassModel<Rational>, ModelTransformation<Rational>> minimal_model_at(
    const WeierstrassModel<Rational>& E, const LocalContext& ctx) {
  long k = minimalize(local_valuations(E, ctx)).first;
  Integer pk;
  mpz_pow_ui(pk.get_mpz_t(), ctx.p.get_mpz_t(), static_cast<unsigned long>(k));
  // one transformation to the short form y^2 = x^3 - 27c4' x - 54c6'
  // scaled so the result is p-integral and p-minimal
  Rational u = Rational(pk) / Rational(6);
  Rational s = -E.a1() / Rational(2);
  Rational r = -E.invariants().b2 / Rational(12);
  Rational t = -(E.a3() + r * E.a1()) / Rational(2);
  ModelTransformation<Rational> T{u, r, s, t};
  return {transform(E, T), T};
}

namespace {

constexpr long kSweepOrderCap = 24;  // covers all torsion orders that occur

long vp_of_long(long x, const Integer& p) {
  long v = 0;
  Integer n(x);
  while (n != 0 && mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
    n /= p;
    ++v;
  }
  return v;
}

bool is_additive(const ClassificationRecord& rec) {
  return rec.type.kind != KodairaKind::I0 && rec.type.kind != KodairaKind::In;
}

template <class K>
std::optional<long> marked_point_order(const WeierstrassModel<K>& E) {
  CurvePoint<K> origin(k_from_int(E.a1(), 0), k_from_int(E.a1(), 0));
  return point_order(E, origin, kSweepOrderCap);
}

void check_order_ten_mechanism(const SweepSpec& spec, SweepRow& row,
                               const WeierstrassModel<Rational>& E) {
  const ClassificationRecord& rec = *row.record;
  if (rec.type.kind != KodairaKind::III) {
    row.status = RowStatus::counterexample;
    row.note = "order 10 with additive type " + rec.type.str() + ", expected III";
    return;
  }
  LocalContext ctx(spec.p, spec.e);
  CurvePoint<Rational> origin{Rational(0), Rational(0)};
  CurvePoint<Rational> half = multiply(E, 5, origin);
  auto [Emin, T] = minimal_model_at(E, ctx);
  PointReduction pr = point_reduction(Emin, ctx, transform_point(T, half));
  if (pr.nonsingular_image) {
    row.status = RowStatus::counterexample;
    row.note = "2-torsion multiple reduces to a nonsingular point";
  }
}

}  // namespace

void evaluate_row(const SweepSpec& spec, SweepRow& row,
                  const WeierstrassModel<Rational>* rational_model,
                  const WeierstrassModel<QuadraticElement>* quadratic_model) {
  LocalContext ctx(spec.p, spec.e);
  try {
    row.record = rational_model ? classify_model(*rational_model, ctx)
                                : classify_model(*quadratic_model, ctx);
  } catch (const std::exception& ex) {
    row.status = RowStatus::error;
    row.note = ex.what();
    return;
  }
  const ClassificationRecord& rec = *row.record;

  if (row.multiplicative_by_valuation && rec.type.kind != KodairaKind::In) {
    row.status = RowStatus::counterexample;
    row.note = "valuation predicts multiplicative reduction, classified " + rec.type.str();
    return;
  }

  bool needs_order = spec.assertion == SweepAssertion::prop41iv ||
                     spec.assertion == SweepAssertion::thm_generic;
  if (needs_order) {
    try {
      row.marked_order = rational_model ? marked_point_order(*rational_model)
                                        : marked_point_order(*quadratic_model);
    } catch (const std::exception& ex) {
      row.status = RowStatus::error;
      row.note = ex.what();
      return;
    }
  }

  switch (spec.assertion) {
    case SweepAssertion::prop41i: {
      if (!is_additive(rec)) { row.status = RowStatus::exempt; return; }
      if (rec.type.kind != KodairaKind::II && rec.type.kind != KodairaKind::III) {
        row.status = RowStatus::counterexample;
        row.note = "additive type " + rec.type.str() + " outside {II, III}";
      }
      return;
    }
    case SweepAssertion::prop41ii: {
      if (!is_additive(rec)) { row.status = RowStatus::exempt; return; }
      switch (rec.type.kind) {
        case KodairaKind::II:
        case KodairaKind::III:
        case KodairaKind::IV:
        case KodairaKind::I0Star:
        case KodairaKind::InStar:
          return;
        default:
          row.status = RowStatus::counterexample;
          row.note = "additive type " + rec.type.str() + " outside {II, III, IV, I0*, In*}";
          return;
      }
    }
    case SweepAssertion::prop41iii: {
      if (rec.type.kind == KodairaKind::IIStar) {
        row.status = RowStatus::counterexample;
        row.note = "type II* row";
      }
      return;
    }
    case SweepAssertion::prop41iv: {
      if (row.marked_order != 10 || !is_additive(rec)) {
        row.status = RowStatus::exempt;
        return;
      }
      check_order_ten_mechanism(spec, row, *rational_model);
      return;
    }
    case SweepAssertion::remark_x1_11:
    case SweepAssertion::remark_x1_13: {
      if (rec.type.kind != KodairaKind::II) {
        row.status = RowStatus::counterexample;
        row.note = "type " + rec.type.str() + ", expected II";
      }
      return;
    }
    case SweepAssertion::thm_generic: {
      long n = row.marked_order ? vp_of_long(*row.marked_order, spec.p) : 0;
      if (n == 0 || !is_additive(rec)) { row.status = RowStatus::exempt; return; }
      AllowedTypes allowed = allowed_additive_types(spec.p, n, spec.e);
      row.theorem_silent = allowed.theorem_silent;
      if (allowed.additive.find(rec.type.kind) == allowed.additive.end()) {
        row.status = RowStatus::counterexample;
        row.note = "additive type " + rec.type.str() +
                   " excluded by the torsion bound at n = " + std::to_string(n);
      }
      return;
    }
  }
}

namespace {

struct GridJob {
  long s = 0, t = 0, n = 0, b = 0, c = 0;
};

SweepRow compute_row(const SweepSpec& spec, const GridJob& job) {
  SweepRow row;
  try {
    switch (spec.family) {
      case Family::x1_5: {
        row.params = {{"s", std::to_string(job.s)}, {"t", std::to_string(job.t)}};
        Rational lambda = Rational(job.s, job.t);
        row.multiplicative_by_valuation =
            val_p(lambda.numerator(), spec.p) > Valuation(0) ||
            val_p(lambda.denominator(), spec.p) > Valuation(0);
        WeierstrassModel<Rational> E = x1_5_model(Rational(job.s), Rational(job.t));
        evaluate_row(spec, row, &E, nullptr);
        return row;
      }
      case Family::tate_normal: {
        row.params = {{"b", std::to_string(job.b)}, {"c", std::to_string(job.c)}};
        WeierstrassModel<Rational> E =
            tate_normal(Rational(job.b), Rational(job.c));
        evaluate_row(spec, row, &E, nullptr);
        return row;
      }
      case Family::x1_11: {
        long t = 11 * job.n - 3;
        row.params = {{"n", std::to_string(job.n)}, {"t", std::to_string(t)}};
        QuadraticFamilyMember m = x1_11_model(Rational(t));
        evaluate_row(spec, row, nullptr, &m.model);
        return row;
      }
      case Family::x1_13: {
        long t = 13 * job.n - 3;
        row.params = {{"n", std::to_string(job.n)}, {"t", std::to_string(t)}};
        QuadraticFamilyMember m = x1_13_model(Rational(t));
        evaluate_row(spec, row, nullptr, &m.model);
        return row;
      }
    }
    throw std::logic_error("unreachable");
  } catch (const std::exception& ex) {
    row.status = RowStatus::error;
    row.note = ex.what();
    return row;
  }
}

std::vector<GridJob> build_grid(const SweepSpec& spec) {
  std::vector<GridJob> jobs;
  switch (spec.family) {
    case Family::x1_5:
      for (long s = spec.s_lo; s <= spec.s_hi; ++s)
        for (long t = spec.t_lo; t <= spec.t_hi; ++t)
          jobs.push_back(GridJob{.s = s, .t = t});
      break;
    case Family::tate_normal:
      for (long b = spec.b_lo; b <= spec.b_hi; ++b)
        for (long c = spec.c_lo; c <= spec.c_hi; ++c)
          jobs.push_back(GridJob{.b = b, .c = c});
      break;
    case Family::x1_11:
    case Family::x1_13:
      for (long n = spec.n_lo; n <= spec.n_hi; ++n)
        jobs.push_back(GridJob{.n = n});
      break;
  }
  return jobs;
}

}  // namespace

SweepReport run_sweep(const SweepSpec& spec, unsigned threads) {
  spec.validate();
  std::vector<GridJob> jobs = build_grid(spec);

  SweepReport rep;
  rep.spec = spec;
  rep.rows.resize(jobs.size());

  unsigned workers = threads ? threads : std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  if (workers > jobs.size()) workers = static_cast<unsigned>(jobs.size());
  if (workers <= 1) {
    for (size_t i = 0; i < jobs.size(); ++i) rep.rows[i] = compute_row(spec, jobs[i]);
  } else {
    // strided ownership of preallocated slots keeps output order independent
    // of scheduling
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w]() {
        for (size_t i = w; i < jobs.size(); i += workers)
          rep.rows[i] = compute_row(spec, jobs[i]);
      });
    }
    for (auto& th : pool) th.join();
  }

  for (size_t i = 0; i < rep.rows.size(); ++i) {
    if (rep.rows[i].status == RowStatus::counterexample) rep.counterexamples.push_back(i);
    if (rep.rows[i].theorem_silent) ++rep.theorem_silent_rows;
  }
  rep.pass = rep.counterexamples.empty();
  return rep;
}

namespace {

const char* row_status_name(RowStatus s) {
  switch (s) {
    case RowStatus::ok: return "ok";
    case RowStatus::counterexample: return "counterexample";
    case RowStatus::exempt: return "exempt";
    case RowStatus::error: return "error";
  }
  throw std::logic_error("unreachable");
}

}  // namespace

Json sweep_report_to_json(const SweepReport& rep) {
  Json rows = Json::array();
  for (const SweepRow& row : rep.rows) {
    Json params = Json::object();
    for (const auto& [k, v] : row.params) params[k] = v;
    Json jr{{"params", params},
            {"classification",
             row.record ? classification_to_json(*row.record) : Json(nullptr)},
            {"marked_order", row.marked_order ? Json(*row.marked_order) : Json(nullptr)},
            {"multiplicative_by_valuation", row.multiplicative_by_valuation},
            {"theorem_silent", row.theorem_silent},
            {"status", row_status_name(row.status)},
            {"note", row.note}};
    rows.push_back(std::move(jr));
  }
  Json ce = Json::array();
  for (size_t i : rep.counterexamples) ce.push_back(i);
  return Json{{"spec", sweep_spec_to_json(rep.spec)},
              {"pass", rep.pass},
              {"row_count", rep.rows.size()},
              {"counterexamples", ce},
              {"theorem_silent_rows", rep.theorem_silent_rows},
              {"rows", rows}};
}

std::string sweep_report_to_csv(const SweepReport& rep) {
  std::ostringstream out;
  std::vector<std::string> param_names;
  switch (rep.spec.family) {
    case Family::x1_5: param_names = {"s", "t"}; break;
    case Family::tate_normal: param_names = {"b", "c"}; break;
    case Family::x1_11:
    case Family::x1_13: param_names = {"n", "t"}; break;
  }
  out << "family";
  for (const auto& name : param_names) out << "," << name;
  out << ",vc4,vc6,vdelta,type,type_n,component_group,verdict\n";
  for (const SweepRow& row : rep.rows) {
    out << family_name(rep.spec.family);
    for (const auto& [k, v] : row.params) out << "," << v;
    if (row.record) {
      const ClassificationRecord& rec = *row.record;
      out << "," << rec.minimal_triple.vc4.str() << "," << rec.minimal_triple.vc6.str()
          << "," << rec.minimal_triple.vdelta << "," << rec.type.family_str() << ",";
      if (rec.type.kind == KodairaKind::In || rec.type.kind == KodairaKind::InStar)
        out << rec.type.n;
      out << "," << rec.component_group_order;
    } else {
      out << ",,,,,,";
    }
    out << "," << row_status_name(row.status) << "\n";
  }
  return out.str();
}

}  // namespace kodaira
