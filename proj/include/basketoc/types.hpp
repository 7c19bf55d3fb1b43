// Core domain types for basket trial designs with empirical Bayes borrowing.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace basketoc {

constexpr int kMaxBaskets = 5;

/// Shape parameters of a beta distribution; both must be positive.
struct BetaParams {
    double alpha = 1.0;
    double beta = 1.0;
};

/// Thrown when a quadrature routine cannot deliver its accuracy contract.
class accuracy_error : public std::runtime_error {
  public:
    explicit accuracy_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Thrown by threshold calibration when no grid value controls the error rate.
class infeasible_error : public std::runtime_error {
  public:
    explicit infeasible_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Immutable trial design: number of baskets, shared beta prior, null rate.
/// Equal priors and equal planned sample sizes across baskets are assumed
/// throughout; that is what makes exact enumeration tractable.
struct DesignSpec {
    int k = 2;                 // number of baskets, 2..5
    BetaParams prior{1.0, 1.0};
    double p0 = 0.2;           // null response rate, in (0,1)
};

struct CppWeights {
    double a = 1.0;
    double b = 1.0;
};

struct JsdWeights {
    double epsilon = 1.0;  // >= 0
    double tau = 0.0;      // in [0,1); weights at or below tau are zeroed
};

/// Weight method plus prior-sharing mode. share_prior = false is the power
/// prior design (only data are weighted); share_prior = true additionally
/// puts the prior parameters into the weighted sums (Fujikawa-style).
struct WeightConfig {
    std::variant<CppWeights, JsdWeights> method = CppWeights{};
    bool share_prior = false;

    static WeightConfig cpp(double a, double b, bool share_prior = false) {
        return WeightConfig{CppWeights{a, b}, share_prior};
    }
    static WeightConfig jsd(double epsilon, double tau = 0.0, bool share_prior = true) {
        return WeightConfig{JsdWeights{epsilon, tau}, share_prior};
    }
    bool is_cpp() const { return std::holds_alternative<CppWeights>(method); }
};

enum class BasketStatus : uint8_t { Active, StoppedFutility, StoppedEfficacy };

/// Observed data of one basket at an analysis point.
struct BasketData {
    int n = 0;  // observations so far
    int r = 0;  // responses so far, 0 <= r <= n
    BasketStatus status = BasketStatus::Active;
};

/// Per-basket sample sizes, response counts and stop status.
struct TrialState {
    std::vector<BasketData> baskets;
};

/// Planned per-basket sample sizes: n total, n1 at the interim (if any).
struct StageLayout {
    int n = 1;
    std::optional<int> n1;  // 1 <= n1 < n when present
};

enum class InterimKind : uint8_t { Posterior, PostPred };

/// Interim rule: stop for futility when the interim statistic falls below
/// prob_futstop, for efficacy when it exceeds prob_effstop (both strict).
struct InterimConfig {
    InterimKind kind = InterimKind::PostPred;
    double prob_futstop = 0.0;
    double prob_effstop = 1.0;
};

/// True response rates per basket. Baskets with p <= p0 are true nulls.
struct TrueScenario {
    std::vector<double> p;
};

// Validation helpers; each throws std::invalid_argument on violation.
void check(const BetaParams& prior);
void check(const DesignSpec& design);
void check(const WeightConfig& config);
void check(const StageLayout& layout);
void check(const InterimConfig& interim);
void check(const TrialState& state, const DesignSpec& design);
void check(const TrueScenario& scenario, const DesignSpec& design);
void check_probability(double x, const char* name);

}  // namespace basketoc
