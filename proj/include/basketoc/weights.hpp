// Pairwise sharing weights and the k x k weight matrix.
#pragma once

#include <array>
#include <utility>
#include <vector>

#include "basketoc/types.hpp"

namespace basketoc {

/// Symmetric k x k matrix with unit diagonal, entries in [0,1].
class WeightMatrix {
  public:
    explicit WeightMatrix(int k) : k_(k) { w_.fill(0.0); for (int i = 0; i < k; ++i) at(i, i) = 1.0; }
    int size() const { return k_; }
    double& at(int i, int j) { return w_[static_cast<size_t>(i) * kMaxBaskets + j]; }
    double at(int i, int j) const { return w_[static_cast<size_t>(i) * kMaxBaskets + j]; }

  private:
    int k_;
    std::array<double, kMaxBaskets * kMaxBaskets> w_;
};

/// Calibrated-power-prior weight. d is the absolute difference in observed
/// response rates; d = 0 returns 1 (the limit of the formula as log d -> -inf).
double cpp_weight(int r_k, int n_k, int r_i, int n_i, double a, double b);

/// (1 - JSD)^epsilon between two individual posteriors, zeroed at or below tau.
double jsd_weight(const BetaParams& post_k, const BetaParams& post_i, double epsilon, double tau);

/// Pairwise weights for every basket pair of the state, by the configured
/// method. Diagonal is 1, matrix is symmetric by construction.
WeightMatrix weight_matrix(const TrialState& state, const DesignSpec& design, const WeightConfig& config);

/// Weight between a basket with (n, r1) responses and one with (n, r2), for
/// r2 = 0..n. This is the curve plotted by the plot-weights command.
std::vector<std::pair<int, double>> weight_curve(int n, int r1, const DesignSpec& design,
                                                 const WeightConfig& config);

}  // namespace basketoc
