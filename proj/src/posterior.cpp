#include "basketoc/posterior.hpp"

#include "basketoc/special_functions.hpp"

namespace basketoc {

std::vector<BetaParams> shared_posterior(const TrialState& state, const WeightMatrix& weights,
                                         const DesignSpec& design, const WeightConfig& config) {
    check(state, design);
    const int k = design.k;
    std::vector<BetaParams> post(k);
    for (int i = 0; i < k; ++i) {
        double a = config.share_prior ? 0.0 : design.prior.alpha;
        double b = config.share_prior ? 0.0 : design.prior.beta;
        for (int j = 0; j < k; ++j) {
            const double w = (i == j) ? 1.0 : weights.at(i, j);
            const auto& d = state.baskets[j];
            if (config.share_prior) {
                a += w * (design.prior.alpha + d.r);
                b += w * (design.prior.beta + d.n - d.r);
            } else {
                a += w * d.r;
                b += w * (d.n - d.r);
            }
        }
        post[i] = BetaParams{a, b};
    }
    return post;
}

std::vector<bool> final_decision(const TrialState& state, const DesignSpec& design,
                                 const WeightConfig& config, double lambda) {
    if (!(lambda > 0.0 && lambda < 1.0)) throw std::invalid_argument("lambda must lie in (0,1)");
    const auto weights = weight_matrix(state, design, config);
    const auto post = shared_posterior(state, weights, design, config);
    std::vector<bool> reject(design.k);
    for (int i = 0; i < design.k; ++i) {
        switch (state.baskets[i].status) {
            case BasketStatus::StoppedEfficacy: reject[i] = true; break;
            case BasketStatus::StoppedFutility: reject[i] = false; break;
            case BasketStatus::Active: reject[i] = beta_tail(post[i], design.p0) >= lambda; break;
        }
    }
    return reject;
}

}  // namespace basketoc
