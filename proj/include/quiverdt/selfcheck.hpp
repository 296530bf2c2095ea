#pragma once
// The verification suite: one function per acceptance criterion, each
// returning a pass/fail result with a short diagnostic. Default arguments
// pin the normative bounds; the CLI `verify` command can scale some of
// them down for quick runs.

#include <map>
#include <string>
#include <vector>

#include "quiverdt/wallcrossing.hpp"

namespace quiverdt {
namespace selfcheck {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/// Caches Kronecker factorization tables across criteria.
class Context {
 public:
  const DTTable& kronecker_table(long m, int bound);

 private:
  std::map<std::pair<long, int>, DTTable> tables_;
};

CriterionResult catalan_pipeline(Context& ctx);
CriterionResult fuss_catalan_forests(Context& ctx);
CriterionResult oracle_equivalence(Context& ctx, int threads = 2);
CriterionResult trivial_stability_reduction(Context& ctx);
CriterionResult pentagon(Context& ctx);
CriterionResult diagonal_formula(Context& ctx);
CriterionResult dt_integrality(Context& ctx);
CriterionResult duality_integrality_sweep(Context& ctx, int trials = 200);
CriterionResult lagrange_identity(Context& ctx, int trials = 100);
CriterionResult stable_chi_extraction(Context& ctx);
CriterionResult bracket_preservation(Context& ctx);
CriterionResult congruence_and_symmetric_strata(Context& ctx);

/// Runs every criterion in order.
std::vector<CriterionResult> run_all(Context& ctx, int threads = 2,
                                     int duality_trials = 200,
                                     int lagrange_trials = 100);

}  // namespace selfcheck
}  // namespace quiverdt
