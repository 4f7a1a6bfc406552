#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kodaira/families.hpp"
#include "kodaira/serialization.hpp"

namespace kodaira {

enum class Family { x1_5, x1_11, x1_13, tate_normal };

std::string family_name(Family f);
Family parse_family(const std::string& name);

enum class SweepAssertion {
  prop41i,       // additive rows must be II or III
  prop41ii,      // additive rows within {II, III, IV, I0*, In*}
  prop41iii,     // no II* row
  prop41iv,      // marked order 10 forces III and a singular 2-torsion image
  remark_x1_11,  // every row type II
  remark_x1_13,  // every row type II
  thm_generic,   // additive rows within allowed_additive_types(p, n, e)
};

std::string assertion_name(SweepAssertion a);
SweepAssertion parse_assertion(const std::string& name);

struct SweepSpec {
  Family family = Family::x1_5;
  Integer p = 5;
  long e = 1;
  // inclusive grids; which ones apply depends on the family
  long s_lo = 1, s_hi = 50;
  long t_lo = 1, t_hi = 50;
  long n_lo = 1, n_hi = 50;
  long b_lo = 1, b_hi = 10;
  long c_lo = 1, c_hi = 10;
  SweepAssertion assertion = SweepAssertion::thm_generic;

  void validate() const;
};

SweepSpec sweep_spec_from_json(const Json& j);
Json sweep_spec_to_json(const SweepSpec& spec);

enum class RowStatus { ok, counterexample, exempt, error };

struct SweepRow {
  std::vector<std::pair<std::string, std::string>> params;
  std::optional<ClassificationRecord> record;
  std::optional<long> marked_order;
  bool multiplicative_by_valuation = false;
  bool theorem_silent = false;
  RowStatus status = RowStatus::ok;
  std::string note;
};

struct SweepReport {
  SweepSpec spec;
  std::vector<SweepRow> rows;
  bool pass = true;
  std::vector<size_t> counterexamples;
  long theorem_silent_rows = 0;
};

// rows are evaluated concurrently but reported in grid order
SweepReport run_sweep(const SweepSpec& spec, unsigned threads = 0);

Json sweep_report_to_json(const SweepReport& rep);
std::string sweep_report_to_csv(const SweepReport& rep);

// p-minimal integral model at the context prime, together with the
// transformation mapping points of E onto it
std::pair<WeierstrassModel<Rational>, ModelTransformation<Rational>> minimal_model_at(
    const WeierstrassModel<Rational>& E, const LocalContext& ctx);

// single-row assertion logic, exposed for direct testing
void evaluate_row(const SweepSpec& spec, SweepRow& row,
                  const WeierstrassModel<Rational>* rational_model,
                  const WeierstrassModel<QuadraticElement>* quadratic_model);

}  // namespace kodaira
