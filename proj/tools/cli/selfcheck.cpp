#include "cli/selfcheck.hpp"

#include "cli/random_spaces.hpp"
#include "ghsimplex/borsuk.hpp"
#include "ghsimplex/gh_solver.hpp"

namespace ghsimplex::cli {

SelfcheckReport run_selfcheck(std::uint64_t seed, int trials, int n_max) {
  SelfcheckReport report;
  report.seed = seed;
  report.trials = trials;
  report.n_max = n_max;

  const auto instances = seeded_instances(seed, trials, 2, n_max);
  report.instances = instances.size();

  for (const ValidatedSpace& space : instances) {
    const int n = space.size();
    const double diam = space.diam();

    for (int m = 1; m <= n; ++m) {
      for (const double frac : {0.25, 0.5, 0.75}) {
        const double lambda = frac * diam;
        const GHResult exact = brute_force_min(space, m, lambda);
        const GHResult bnb = branch_and_bound(space, m, lambda, 0, 1);
        ++report.oracle_checks;
        if (bnb.twice_distance != exact.twice_distance ||
            !(bnb.witness.has_value() && exact.witness.has_value() &&
              *bnb.witness == *exact.witness))
          ++report.mismatches;
      }

      const BorsukAnswer coloring = borsuk_decision(space, m);
      for (int k = 1; k <= 9; ++k) {
        const double lambda = diam * static_cast<double>(k) / 10.0;
        ++report.theorem_checks;
        if (borsuk_via_gh(space, m, lambda) != coloring.answer) ++report.mismatches;
      }
    }
  }
  return report;
}

}  // namespace ghsimplex::cli
