// Threshold calibration, scenario generation and ECD-based design ranking.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "basketoc/exact_engine.hpp"
#include "basketoc/types.hpp"

namespace basketoc {

struct CalibrationRequest {
    double alpha = 0.05;  // FWER budget, in (0,1)
    int prec_digits = 3;  // decimal places of lambda, >= 1
};

struct AdjustResult {
    double lambda = 0.0;
    double fwer = 0.0;  // global-null FWER at that lambda
};

/// Response-rate scenarios with an increasing number of truly active baskets:
/// k rows (baskets) x (k+1) columns; column j has the last j baskets at p1 and
/// the rest at p0.
class ScenarioMatrix {
  public:
    ScenarioMatrix(int k, double p0, double p1);
    int baskets() const { return k_; }
    int scenarios() const { return k_ + 1; }
    double at(int row, int col) const { return values_[static_cast<size_t>(row) * (k_ + 1) + col]; }
    TrueScenario column(int col) const;
    std::string label(int col) const;  // "0 Active" .. "k Active"

  private:
    int k_;
    std::vector<double> values_;
};

ScenarioMatrix get_scenarios(const DesignSpec& design, double p1);

/// Smallest lambda on the grid {10^-d, 2*10^-d, ..., 1 - 10^-d} whose
/// global-null FWER does not exceed alpha, found by bisection (the FWER is
/// non-increasing in lambda). Throws infeasible_error when even the largest
/// grid value exceeds alpha.
AdjustResult adjust_lambda(const DesignSpec& design, const StageLayout& layout,
                           const WeightConfig& config, std::optional<InterimConfig> interim,
                           const CalibrationRequest& request, const EngineOptions& options = {});

/// Same search on an existing engine (reuses its posterior-tail cache).
AdjustResult adjust_lambda(ExactEngine& engine, const CalibrationRequest& request);

struct OptDesignRow {
    WeightConfig config;
    double lambda = 0.0;
    double fwer = 0.0;
    std::vector<double> ecd;  // one entry per scenario column
    double mean_ecd = 0.0;
};

struct FailedDesignRow {
    WeightConfig config;
    std::string reason;
};

/// Grid-point rows sorted by mean ECD, best first; ties keep grid input order.
/// Grid points whose calibration is infeasible are excluded from the ranking
/// and reported in `failed`.
struct RankedDesignTable {
    std::vector<OptDesignRow> rows;
    std::vector<FailedDesignRow> failed;
};

/// For each candidate weight configuration: calibrate lambda under the global
/// null, then compute the exact ECD for every scenario column at that lambda,
/// and rank by the mean ECD across scenarios.
RankedDesignTable opt_design(const DesignSpec& design, const StageLayout& layout,
                             const std::vector<WeightConfig>& grid,
                             std::optional<InterimConfig> interim, const ScenarioMatrix& scenarios,
                             const CalibrationRequest& request, const EngineOptions& options = {});

}  // namespace basketoc
