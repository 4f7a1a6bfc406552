#include "kodaira/sweep.hpp"

#include <algorithm>

#include "doctest.h"

using namespace kodaira;

namespace {

SweepSpec grid_spec(Family fam, SweepAssertion a, long p, long e) {
  SweepSpec spec;
  spec.family = fam;
  spec.assertion = a;
  spec.p = Integer(p);
  spec.e = e;
  return spec;
}

const SweepRow* find_row(const SweepReport& rep, const std::string& key,
                         const std::string& value) {
  for (const SweepRow& row : rep.rows)
    for (const auto& [k, v] : row.params)
      if (k == key && v == value) return &row;
  return nullptr;
}

}  // namespace

TEST_CASE("family and assertion names round-trip") {
  for (Family f : {Family::x1_5, Family::x1_11, Family::x1_13, Family::tate_normal})
    CHECK(parse_family(family_name(f)) == f);
  for (SweepAssertion a :
       {SweepAssertion::prop41i, SweepAssertion::prop41ii, SweepAssertion::prop41iii,
        SweepAssertion::prop41iv, SweepAssertion::remark_x1_11,
        SweepAssertion::remark_x1_13, SweepAssertion::thm_generic})
    CHECK(parse_assertion(assertion_name(a)) == a);
  CHECK_THROWS_AS(parse_family("x1-7"), std::invalid_argument);
  CHECK_THROWS_AS(parse_assertion("nope"), std::invalid_argument);
}

TEST_CASE("spec validation ties assertions to their configuration") {
  CHECK_NOTHROW(grid_spec(Family::x1_5, SweepAssertion::prop41i, 5, 1).validate());
  CHECK_THROWS_AS(grid_spec(Family::x1_5, SweepAssertion::prop41i, 5, 2).validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS(grid_spec(Family::x1_5, SweepAssertion::prop41ii, 5, 1).validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      grid_spec(Family::tate_normal, SweepAssertion::remark_x1_11, 11, 2).validate(),
      std::invalid_argument);
  // quadratic families carry their own ramification already
  CHECK_THROWS_AS(grid_spec(Family::x1_11, SweepAssertion::thm_generic, 11, 1).validate(),
                  std::invalid_argument);
  CHECK_NOTHROW(grid_spec(Family::x1_11, SweepAssertion::thm_generic, 11, 2).validate());

  SweepSpec empty = grid_spec(Family::x1_5, SweepAssertion::thm_generic, 5, 1);
  empty.s_lo = 3;
  empty.s_hi = 2;
  CHECK_THROWS_AS(empty.validate(), std::invalid_argument);
}

TEST_CASE("spec json parsing applies defaults and validates") {
  Json j{{"family", "x1-5"}, {"assertion", "prop4.1.i"}};
  SweepSpec spec = sweep_spec_from_json(j);
  CHECK(spec.family == Family::x1_5);
  CHECK(spec.p == 5);
  CHECK(spec.e == 1);
  CHECK(spec.s_lo == 1);
  CHECK(spec.s_hi == 50);
  CHECK(spec.t_hi == 50);

  Json ranged{{"family", "x1-11"},
              {"assertion", "remark-x1-11"},
              {"p", 11},
              {"e", 2},
              {"n", Json::array({2, 9})}};
  SweepSpec r = sweep_spec_from_json(ranged);
  CHECK(r.n_lo == 2);
  CHECK(r.n_hi == 9);

  Json round = sweep_spec_to_json(r);
  SweepSpec back = sweep_spec_from_json(round);
  CHECK(back.family == r.family);
  CHECK(back.assertion == r.assertion);
  CHECK(back.n_lo == r.n_lo);
  CHECK(back.n_hi == r.n_hi);

  CHECK_THROWS_AS(sweep_spec_from_json(Json{{"family", "x1-5"}}), Json::exception);
  Json badrange{{"family", "x1-5"}, {"assertion", "prop4.1.i"}, {"s", Json::array({1})}};
  CHECK_THROWS_AS(sweep_spec_from_json(badrange), std::invalid_argument);
  Json wrong{{"family", "x1-11"}, {"assertion", "prop4.1.i"}};
  CHECK_THROWS_AS(sweep_spec_from_json(wrong), std::invalid_argument);
}

TEST_CASE("small additive sweep classifies and exempts as expected") {
  SweepSpec spec = grid_spec(Family::x1_5, SweepAssertion::prop41i, 5, 1);
  spec.s_hi = 6;
  spec.t_hi = 6;
  SweepReport rep = run_sweep(spec, 2);
  CHECK(rep.pass);
  CHECK(rep.rows.size() == 36);
  CHECK(rep.counterexamples.empty());
  for (const SweepRow& row : rep.rows) {
    CHECK((row.status == RowStatus::ok || row.status == RowStatus::exempt));
    if (row.status == RowStatus::ok) {
      REQUIRE(row.record.has_value());
      CHECK((row.record->type.kind == KodairaKind::II ||
             row.record->type.kind == KodairaKind::III));
    }
  }

  const SweepRow* pivot = nullptr;
  for (const SweepRow& row : rep.rows)
    if (row.params == decltype(row.params){{"s", "3"}, {"t", "1"}}) pivot = &row;
  REQUIRE(pivot != nullptr);
  CHECK(pivot->status == RowStatus::ok);
  CHECK(pivot->record->type.kind == KodairaKind::II);

  const SweepRow* diag = nullptr;
  for (const SweepRow& row : rep.rows)
    if (row.params == decltype(row.params){{"s", "5"}, {"t", "1"}}) diag = &row;
  REQUIRE(diag != nullptr);
  CHECK(diag->multiplicative_by_valuation);
  CHECK(diag->status == RowStatus::exempt);
  CHECK(diag->record->type.kind == KodairaKind::In);
  CHECK(diag->record->type.n == 5);
}

TEST_CASE("construction failures become error rows, not counterexamples") {
  SweepSpec spec = grid_spec(Family::x1_5, SweepAssertion::thm_generic, 5, 1);
  spec.s_lo = 0;
  spec.s_hi = 1;
  spec.t_lo = 1;
  spec.t_hi = 1;
  SweepReport rep = run_sweep(spec, 1);
  CHECK(rep.pass);
  REQUIRE(rep.rows.size() == 2);
  CHECK(rep.rows[0].status == RowStatus::error);
  CHECK_FALSE(rep.rows[0].note.empty());
  CHECK_FALSE(rep.rows[0].record.has_value());
  CHECK(rep.rows[1].status == RowStatus::exempt);  // good reduction at (1, 1)
}

TEST_CASE("quadratic remark sweeps pin the parameter to the residue class") {
  SweepSpec spec = grid_spec(Family::x1_11, SweepAssertion::remark_x1_11, 11, 2);
  spec.n_lo = 1;
  spec.n_hi = 3;
  SweepReport rep = run_sweep(spec, 0);
  CHECK(rep.pass);
  REQUIRE(rep.rows.size() == 3);
  const char* expected_t[3] = {"8", "19", "30"};
  for (int i = 0; i < 3; ++i) {
    const SweepRow& row = rep.rows[static_cast<size_t>(i)];
    CHECK(row.status == RowStatus::ok);
    CHECK(row.params == decltype(row.params){{"n", std::to_string(i + 1)},
                                             {"t", expected_t[i]}});
    REQUIRE(row.record.has_value());
    CHECK(row.record->type.kind == KodairaKind::II);
    CHECK_FALSE(row.marked_order.has_value());  // remark rows skip the order
  }

  SweepSpec spec13 = grid_spec(Family::x1_13, SweepAssertion::remark_x1_13, 13, 2);
  spec13.n_hi = 2;
  SweepReport rep13 = run_sweep(spec13, 0);
  CHECK(rep13.pass);
  REQUIRE(rep13.rows.size() == 2);
  CHECK(find_row(rep13, "t", "10") != nullptr);
  CHECK(find_row(rep13, "t", "23") != nullptr);
  for (const SweepRow& row : rep13.rows) {
    CHECK(row.status == RowStatus::ok);
    REQUIRE(row.record.has_value());
    CHECK(row.record->type.kind == KodairaKind::II);
  }
}

TEST_CASE("torsion-order gate feeds the allowed-type check") {
  SweepSpec spec = grid_spec(Family::x1_5, SweepAssertion::thm_generic, 5, 1);
  spec.s_hi = 6;
  spec.t_hi = 6;
  SweepReport rep = run_sweep(spec, 3);
  CHECK(rep.pass);
  CHECK(rep.theorem_silent_rows == 0);
  for (const SweepRow& row : rep.rows) {
    REQUIRE(row.record.has_value());
    REQUIRE(row.marked_order.has_value());
    CHECK(*row.marked_order == 5);
    bool additive = row.record->type.kind != KodairaKind::I0 &&
                    row.record->type.kind != KodairaKind::In;
    if (additive) {
      CHECK(row.status == RowStatus::ok);
      CHECK((row.record->type.kind == KodairaKind::II ||
             row.record->type.kind == KodairaKind::III));
    } else {
      CHECK(row.status == RowStatus::exempt);
    }
  }
}

TEST_CASE("row evaluation flags valuation-predicted multiplicative rows") {
  SweepSpec spec = grid_spec(Family::x1_5, SweepAssertion::prop41i, 5, 1);
  WeierstrassModel<Rational> good = x1_5_model(Rational(1), Rational(1));
  SweepRow row;
  row.multiplicative_by_valuation = true;  // contradicts the I0 classification
  evaluate_row(spec, row, &good, nullptr);
  CHECK(row.status == RowStatus::counterexample);
  CHECK(row.note.find("multiplicative") != std::string::npos);
}

TEST_CASE("order-ten rows must pair type III with a singular two-torsion image") {
  // integral coordinates of a curve with the order-ten point at the origin;
  // rescaling by 15 lands on the normal-form member with rational parameters
  WeierstrassModel<Rational> E(Rational(17), Rational(24), Rational(360), Rational(0),
                               Rational(0));
  WeierstrassModel<Rational> member = tate_normal(Rational(-8, 75), Rational(-2, 15));
  WeierstrassModel<Rational> scaled =
      transform(E, ModelTransformation<Rational>::scaling(Rational(15)));
  CHECK(scaled.a1() == member.a1());
  CHECK(scaled.a2() == member.a2());
  CHECK(scaled.a3() == member.a3());
  CHECK(scaled.a4() == member.a4());
  CHECK(scaled.a6() == member.a6());

  CurvePoint<Rational> origin(Rational(0), Rational(0));
  REQUIRE(point_order(E, origin, 24).has_value());
  REQUIRE(*point_order(E, origin, 24) == 10);

  SweepSpec spec = grid_spec(Family::tate_normal, SweepAssertion::prop41iv, 5, 1);
  SweepRow row;
  evaluate_row(spec, row, &E, nullptr);
  CHECK(row.status == RowStatus::ok);
  REQUIRE(row.record.has_value());
  CHECK(row.record->type.kind == KodairaKind::III);
  CHECK(row.marked_order == 10);
}

TEST_CASE("integer normal-form grids have no order-ten members, so the check exempts") {
  SweepSpec spec = grid_spec(Family::tate_normal, SweepAssertion::prop41iv, 5, 1);
  spec.b_hi = 6;
  spec.c_hi = 6;
  SweepReport rep = run_sweep(spec, 2);
  CHECK(rep.pass);
  for (const SweepRow& row : rep.rows)
    if (row.status != RowStatus::error) CHECK(row.marked_order != 10);
}

TEST_CASE("minimal models stay minimal and carry points along") {
  WeierstrassModel<Rational> E(Rational(1), Rational(1), Rational(1), Rational(-3),
                               Rational(1));
  LocalContext at5(Integer(5), 1);
  auto [Emin, T] = minimal_model_at(E, at5);
  CHECK(Emin.a1().is_zero());
  CHECK(Emin.a2().is_zero());
  CHECK(Emin.a3().is_zero());
  CHECK(Emin.a4() == Rational(-3915));
  CHECK(Emin.a6() == Rational(113670));
  CHECK(minimalize(local_valuations(Emin, at5)).first == 0);

  CurvePoint<Rational> P(Rational(-1), Rational(2));
  CurvePoint<Rational> Q = transform_point(T, P);
  CHECK(Emin.contains(Q));
  CHECK(*point_order(Emin, Q) == 5);

  WeierstrassModel<Rational> blown =
      transform(E, ModelTransformation<Rational>::scaling(Rational(1, 5)));
  auto [Emin2, T2] = minimal_model_at(blown, at5);
  CHECK(minimalize(local_valuations(Emin2, at5)).first == 0);
  CHECK(classify_model(Emin2, at5).type.kind == KodairaKind::II);
}

TEST_CASE("report serialization is stable across thread counts") {
  SweepSpec spec = grid_spec(Family::x1_5, SweepAssertion::prop41i, 5, 1);
  spec.s_hi = 8;
  spec.t_hi = 8;
  Json one = sweep_report_to_json(run_sweep(spec, 1));
  Json four = sweep_report_to_json(run_sweep(spec, 4));
  CHECK(one == four);
  CHECK(one.at("row_count") == 64);
  CHECK(one.at("pass") == true);
  CHECK(one.at("rows").size() == 64);
  CHECK(one.at("spec").at("family") == "x1-5");
}

TEST_CASE("csv rendering uses one line per row with stable columns") {
  SweepSpec spec = grid_spec(Family::x1_5, SweepAssertion::prop41i, 5, 1);
  spec.s_hi = 2;
  spec.t_hi = 2;
  std::string csv = sweep_report_to_csv(run_sweep(spec, 1));
  CHECK(csv.find("family,s,t,vc4,vc6,vdelta,type,type_n,component_group,verdict\n") == 0);
  CHECK(csv.find("x1-5,1,2,1,1,2,II,,1,ok\n") != std::string::npos);
  CHECK(csv.find("x1-5,1,1,0,0,0,I0,,1,exempt\n") != std::string::npos);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);

  SweepSpec err = grid_spec(Family::x1_5, SweepAssertion::thm_generic, 5, 1);
  err.s_lo = 0;
  err.s_hi = 0;
  err.t_lo = 1;
  err.t_hi = 1;
  std::string ecsv = sweep_report_to_csv(run_sweep(err, 1));
  CHECK(ecsv.find("x1-5,0,1,,,,,,,error\n") != std::string::npos);
}
