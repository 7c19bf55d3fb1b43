// Shared posteriors and rejection decisions.
#pragma once

#include <vector>

#include "basketoc/types.hpp"
#include "basketoc/weights.hpp"

namespace basketoc {

/// Posterior of each basket after information sharing.
/// Power prior mode:   Beta(s1 + sum_i w_ki r_i,        s2 + sum_i w_ki (n_i - r_i))
/// Prior-sharing mode: Beta(sum_i w_ki (s1 + r_i),      sum_i w_ki (s2 + n_i - r_i))
/// with w_kk = 1 in both.
std::vector<BetaParams> shared_posterior(const TrialState& state, const WeightMatrix& weights,
                                         const DesignSpec& design, const WeightConfig& config);

/// Reject flag per basket: active baskets are rejected iff the shared
/// posterior tail above p0 reaches lambda; efficacy-stopped baskets are
/// rejected and futility-stopped baskets are not, regardless of the tail.
std::vector<bool> final_decision(const TrialState& state, const DesignSpec& design,
                                 const WeightConfig& config, double lambda);

}  // namespace basketoc
