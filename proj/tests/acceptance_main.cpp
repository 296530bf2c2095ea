// Acceptance suite: runs every criterion at its normative bounds and
// prints one pass/fail line per criterion. Exits nonzero if any fails.
//
// Usage: acceptance [--threads N]

#include <cstdio>
#include <cstring>
#include <functional>
#include <vector>

#include "quiverdt/selfcheck.hpp"

int main(int argc, char** argv) {
  int threads = 2;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--threads") == 0 && i + 1 < argc)
      threads = std::max(1, std::atoi(argv[++i]));
  }

  namespace sc = quiverdt::selfcheck;
  sc::Context ctx;
  std::vector<std::function<sc::CriterionResult()>> criteria = {
      [&] { return sc::catalan_pipeline(ctx); },
      [&] { return sc::fuss_catalan_forests(ctx); },
      [&] { return sc::oracle_equivalence(ctx, threads); },
      [&] { return sc::trivial_stability_reduction(ctx); },
      [&] { return sc::pentagon(ctx); },
      [&] { return sc::diagonal_formula(ctx); },
      [&] { return sc::dt_integrality(ctx); },
      [&] { return sc::duality_integrality_sweep(ctx); },
      [&] { return sc::lagrange_identity(ctx); },
      [&] { return sc::stable_chi_extraction(ctx); },
      [&] { return sc::bracket_preservation(ctx); },
      [&] { return sc::congruence_and_symmetric_strata(ctx); },
  };

  int failures = 0;
  for (const auto& run : criteria) {
    sc::CriterionResult r = run();
    std::printf("[%s] %2d %-42s (%7.2f s) %s\n", r.pass ? "PASS" : "FAIL",
                r.index, r.name.c_str(), r.seconds, r.detail.c_str());
    std::fflush(stdout);
    if (!r.pass) ++failures;
  }
  if (failures == 0)
    std::printf("all %zu criteria passed\n", criteria.size());
  else
    std::printf("%d of %zu criteria FAILED\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
