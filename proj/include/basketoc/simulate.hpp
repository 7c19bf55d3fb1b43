// Seeded Monte Carlo simulator of the same designs. Decisions run through the
// identical code path as the exact engine; only the outcomes are simulated.
// Used as an independent check of the enumeration.
#pragma once

#include <cstdint>
#include <optional>

#include "basketoc/exact_engine.hpp"
#include "basketoc/types.hpp"

namespace basketoc {

struct SimConfig {
    uint64_t replicates = 1;
    uint64_t seed = 0;
};

/// Empirical operating characteristics plus the standard error of each field.
/// Bitwise reproducible for a fixed (seed, replicates): every replicate draws
/// from its own stream derived from (seed, replicate index), so the result
/// does not depend on the worker count.
struct SimResult {
    OCResult estimate;
    OCResult std_error;
    uint64_t replicates = 0;
    uint64_t seed = 0;
};

SimResult simulate_oc(const DesignSpec& design, const StageLayout& layout, double lambda,
                      const WeightConfig& config, std::optional<InterimConfig> interim,
                      const TrueScenario& scenario, const SimConfig& sim,
                      const EngineOptions& options = {});

}  // namespace basketoc
