#include "basketoc/types.hpp"

#include <cmath>
#include <string>

namespace basketoc {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

bool finite(double x) { return std::isfinite(x); }

}  // namespace

void check_probability(double x, const char* name) {
    if (!finite(x) || x < 0.0 || x > 1.0) fail(std::string(name) + " must lie in [0,1]");
}

void check(const BetaParams& prior) {
    if (!finite(prior.alpha) || prior.alpha <= 0.0) fail("beta shape1 must be positive");
    if (!finite(prior.beta) || prior.beta <= 0.0) fail("beta shape2 must be positive");
}

void check(const DesignSpec& design) {
    if (design.k < 2 || design.k > kMaxBaskets) fail("k must be between 2 and 5");
    check(design.prior);
    if (!finite(design.p0) || design.p0 <= 0.0 || design.p0 >= 1.0) fail("p0 must lie in (0,1)");
}

void check(const WeightConfig& config) {
    if (const auto* j = std::get_if<JsdWeights>(&config.method)) {
        if (!finite(j->epsilon) || j->epsilon < 0.0) fail("epsilon must be >= 0");
        if (!finite(j->tau) || j->tau < 0.0 || j->tau >= 1.0) fail("tau must lie in [0,1)");
    } else {
        const auto& c = std::get<CppWeights>(config.method);
        if (!finite(c.a) || !finite(c.b)) fail("cpp weight parameters must be finite");
    }
}

void check(const StageLayout& layout) {
    if (layout.n < 1) fail("n must be >= 1");
    if (layout.n1 && (*layout.n1 < 1 || *layout.n1 >= layout.n)) fail("n1 must satisfy 1 <= n1 < n");
}

void check(const InterimConfig& interim) {
    check_probability(interim.prob_futstop, "prob_futstop");
    check_probability(interim.prob_effstop, "prob_effstop");
    if (interim.prob_futstop > interim.prob_effstop) fail("prob_futstop must not exceed prob_effstop");
}

void check(const TrialState& state, const DesignSpec& design) {
    if (static_cast<int>(state.baskets.size()) != design.k)
        fail("trial state must have one entry per basket");
    for (const auto& b : state.baskets) {
        if (b.n < 0 || b.r < 0 || b.r > b.n) fail("basket data must satisfy 0 <= r <= n");
    }
}

void check(const TrueScenario& scenario, const DesignSpec& design) {
    if (static_cast<int>(scenario.p.size()) != design.k)
        fail("scenario must have one response rate per basket");
    for (double p : scenario.p) check_probability(p, "true response rate");
}

}  // namespace basketoc
