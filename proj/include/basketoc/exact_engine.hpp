// Exact (enumeration-based) operating characteristics for single-stage and
// two-stage designs.
#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "basketoc/types.hpp"

namespace basketoc {

/// Operating characteristics of one design under one true scenario. All
/// expectations are exact sums over the outcome space.
struct OCResult {
    std::vector<double> rejection_prob;  // per basket
    double fwer = 0.0;      // P(reject >= 1 true null); 0 when there is no true null
    double fw_power = 0.0;  // P(reject >= 1 true alternative); 0 when there is none
    double ecd = 0.0;       // expected number of correct decisions
    std::vector<double> ess;  // per-basket expected sample size
    double ess_total = 0.0;
    struct BasketEstimate {
        double mean_post_mean = 0.0;  // E[shared posterior mean]
        double mse = 0.0;             // E[(posterior mean - true p)^2]
    };
    std::vector<BasketEstimate> estim;
    double outcome_mass = 0.0;  // accumulated probability; 1 up to rounding
};

struct EngineOptions {
    int threads = 0;                 // 0 = hardware concurrency
    bool symmetry_reduction = true;  // false enumerates every outcome (exercised by tests)
};

enum class InterimDecision : uint8_t { Continue, StopFutility, StopEfficacy };

/// Evaluator bound to one design/layout/weight configuration. Posterior tails
/// are memoized across calls, so scanning lambda (threshold calibration) or
/// several scenarios with one engine is much cheaper than fresh evaluations.
class ExactEngine {
  public:
    ExactEngine(const DesignSpec& design, const StageLayout& layout, const WeightConfig& config,
                std::optional<InterimConfig> interim = std::nullopt, const EngineOptions& options = {});
    ~ExactEngine();
    ExactEngine(ExactEngine&&) noexcept;
    ExactEngine& operator=(ExactEngine&&) noexcept;

    /// Exact OCResult at threshold lambda under the given true scenario.
    OCResult evaluate(double lambda, const TrueScenario& scenario);

    const DesignSpec& design() const;
    const StageLayout& layout() const;

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Single-stage operating characteristics (layout must have no interim).
OCResult single_stage_oc(const DesignSpec& design, const StageLayout& layout, double lambda,
                         const WeightConfig& config, const TrueScenario& scenario,
                         const EngineOptions& options = {});

/// Two-stage operating characteristics (layout must carry n1).
OCResult two_stage_oc(const DesignSpec& design, const StageLayout& layout, double lambda,
                      const WeightConfig& config, const InterimConfig& interim,
                      const TrueScenario& scenario, const EngineOptions& options = {});

/// Posterior predictive probability that basket `basket` ends in rejection:
/// future responses are drawn from the basket's shared interim posterior, and
/// a hypothetical final result counts as a rejection when the basket's own
/// (unshared) posterior at n_final reaches lambda, i.e. when the final
/// response count reaches the no-sharing critical value.
double posterior_predictive_prob(int basket, const TrialState& state, const DesignSpec& design,
                                 int n_final, double lambda, const WeightConfig& config);

/// Interim decision per basket. Posterior kind compares the shared interim
/// posterior tail with the stop boundaries, PostPred kind compares the
/// posterior predictive probability; both boundaries are strict.
std::vector<InterimDecision> interim_decision(const TrialState& state, const DesignSpec& design,
                                              const StageLayout& layout, double lambda,
                                              const WeightConfig& config, const InterimConfig& interim);

/// Smallest response count whose individual (no sharing) posterior tail above
/// p0 reaches lambda; n+1 when no count does.
int critical_value(const DesignSpec& design, int n, double lambda);

}  // namespace basketoc
