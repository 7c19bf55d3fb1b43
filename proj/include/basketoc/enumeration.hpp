// Outcome-space enumeration with symmetry reduction.
//
// Baskets that are exchangeable (same true response rate, and at stage two
// also the same interim history) can be permuted without changing the trial's
// distribution, so only one representative per equivalence class is visited,
// together with the number of distinct permutations it stands for.
#pragma once

#include <functional>
#include <vector>

#include "basketoc/types.hpp"

namespace basketoc {

/// One equivalence class: a representative outcome vector and the number of
/// distinct basket-permutations (within exchangeability groups) it covers.
struct OutcomeClass {
    std::vector<int> rep;
    double multiplicity = 1.0;
};

/// Visits one representative per class. `groups` partitions basket indices
/// into exchangeability groups; each basket's outcome ranges over 0..m.
/// Within a group the representative is non-decreasing. The union of all
/// classes, expanded by their multiplicities, covers {0..m}^k exactly once.
void for_each_outcome_class(const std::vector<std::vector<int>>& groups, int m,
                            const std::function<void(const OutcomeClass&)>& visit);

/// Convenience: materializes the class stream for one stage of size m under
/// the scenario's exchangeability structure (baskets grouped by equal true p).
std::vector<OutcomeClass> enumerate_outcomes(int m, const TrueScenario& scenario);

/// Partition of basket indices by equal true response rate.
std::vector<std::vector<int>> scenario_groups(const TrueScenario& scenario);

/// Number of distinct permutations of a within-group representative:
/// g! / prod(count of each repeated value)!.
double class_multiplicity(const std::vector<int>& sorted_values);

}  // namespace basketoc
