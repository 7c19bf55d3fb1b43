#include "basketoc/weights.hpp"

#include <algorithm>
#include <cmath>

#include "basketoc/special_functions.hpp"

namespace basketoc {

namespace {

double stable_logistic_of_minus(double t) {
    // 1 / (1 + exp(t)) without overflow for large |t|
    if (t >= 0.0) {
        const double e = std::exp(-t);
        return e / (1.0 + e);
    }
    return 1.0 / (1.0 + std::exp(t));
}

BetaParams individual_posterior(const BetaParams& prior, int n, int r) {
    return BetaParams{prior.alpha + r, prior.beta + (n - r)};
}

double pair_weight(const BasketData& x, const BasketData& y, const DesignSpec& design,
                   const WeightConfig& config) {
    if (const auto* c = std::get_if<CppWeights>(&config.method))
        return cpp_weight(x.r, x.n, y.r, y.n, c->a, c->b);
    const auto& j = std::get<JsdWeights>(config.method);
    return jsd_weight(individual_posterior(design.prior, x.n, x.r),
                      individual_posterior(design.prior, y.n, y.r), j.epsilon, j.tau);
}

}  // namespace

double cpp_weight(int r_k, int n_k, int r_i, int n_i, double a, double b) {
    if (n_k < 1 || n_i < 1) throw std::domain_error("cpp_weight requires n >= 1");
    if (r_k < 0 || r_k > n_k || r_i < 0 || r_i > n_i)
        throw std::domain_error("cpp_weight requires 0 <= r <= n");
    const double d = std::fabs(static_cast<double>(r_k) / n_k - static_cast<double>(r_i) / n_i);
    if (d == 0.0) return 1.0;
    const double scale = std::pow(static_cast<double>(std::max(n_k, n_i)), 0.25);
    return stable_logistic_of_minus(a + b * std::log(d * scale));
}

double jsd_weight(const BetaParams& post_k, const BetaParams& post_i, double epsilon, double tau) {
    if (!(epsilon >= 0.0)) throw std::invalid_argument("epsilon must be >= 0");
    if (!(tau >= 0.0 && tau < 1.0)) throw std::invalid_argument("tau must lie in [0,1)");
    double w = 1.0;
    if (epsilon != 0.0) {
        const double base = std::clamp(1.0 - jsd_beta(post_k, post_i), 0.0, 1.0);
        w = std::pow(base, epsilon);
    }
    return w > tau ? w : 0.0;
}

WeightMatrix weight_matrix(const TrialState& state, const DesignSpec& design,
                           const WeightConfig& config) {
    check(design);
    check(config);
    check(state, design);
    const int k = design.k;
    WeightMatrix w(k);
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            const double v = pair_weight(state.baskets[i], state.baskets[j], design, config);
            w.at(i, j) = v;
            w.at(j, i) = v;
        }
    }
    return w;
}

std::vector<std::pair<int, double>> weight_curve(int n, int r1, const DesignSpec& design,
                                                 const WeightConfig& config) {
    check(design);
    check(config);
    if (n < 1 || r1 < 0 || r1 > n) throw std::invalid_argument("weight_curve requires 0 <= r1 <= n");
    std::vector<std::pair<int, double>> curve;
    curve.reserve(n + 1);
    const BasketData fixed{n, r1, BasketStatus::Active};
    for (int r2 = 0; r2 <= n; ++r2) {
        const BasketData other{n, r2, BasketStatus::Active};
        curve.emplace_back(r2, pair_weight(fixed, other, design, config));
    }
    return curve;
}

}  // namespace basketoc
