#include "basketoc/enumeration.hpp"

#include <algorithm>
#include <cstdint>

namespace basketoc {

namespace {

constexpr double kFactorial[] = {1, 1, 2, 6, 24, 120};

// all non-decreasing sequences of length g over 0..m, with multiplicities
void per_group_classes(int g, int m, std::vector<std::pair<std::vector<int>, double>>& out) {
    std::vector<int> v(g, 0);
    while (true) {
        out.emplace_back(v, class_multiplicity(v));
        int i = g - 1;
        while (i >= 0 && v[i] == m) --i;
        if (i < 0) break;
        const int next = v[i] + 1;
        for (int j = i; j < g; ++j) v[j] = next;
    }
}

}  // namespace

double class_multiplicity(const std::vector<int>& sorted_values) {
    const int g = static_cast<int>(sorted_values.size());
    double mult = kFactorial[g];
    int run = 1;
    for (int i = 1; i <= g; ++i) {
        if (i < g && sorted_values[i] == sorted_values[i - 1]) {
            ++run;
        } else {
            mult /= kFactorial[run];
            run = 1;
        }
    }
    return mult;
}

void for_each_outcome_class(const std::vector<std::vector<int>>& groups, int m,
                            const std::function<void(const OutcomeClass&)>& visit) {
    const size_t ng = groups.size();
    std::vector<std::vector<std::pair<std::vector<int>, double>>> per(ng);
    size_t total_baskets = 0;
    for (size_t g = 0; g < ng; ++g) {
        per_group_classes(static_cast<int>(groups[g].size()), m, per[g]);
        total_baskets += groups[g].size();
    }
    OutcomeClass cls;
    cls.rep.assign(total_baskets, 0);
    std::vector<size_t> idx(ng, 0);
    while (true) {
        cls.multiplicity = 1.0;
        for (size_t g = 0; g < ng; ++g) {
            const auto& [values, mult] = per[g][idx[g]];
            cls.multiplicity *= mult;
            for (size_t j = 0; j < values.size(); ++j) cls.rep[groups[g][j]] = values[j];
        }
        visit(cls);
        size_t g = 0;
        while (g < ng && ++idx[g] == per[g].size()) {
            idx[g] = 0;
            ++g;
        }
        if (g == ng) break;
    }
}

std::vector<std::vector<int>> scenario_groups(const TrueScenario& scenario) {
    std::vector<std::vector<int>> groups;
    for (int i = 0; i < static_cast<int>(scenario.p.size()); ++i) {
        bool placed = false;
        for (auto& g : groups) {
            if (scenario.p[g.front()] == scenario.p[i]) {
                g.push_back(i);
                placed = true;
                break;
            }
        }
        if (!placed) groups.push_back({i});
    }
    return groups;
}

std::vector<OutcomeClass> enumerate_outcomes(int m, const TrueScenario& scenario) {
    if (m < 0) throw std::invalid_argument("stage size must be >= 0");
    std::vector<OutcomeClass> classes;
    for_each_outcome_class(scenario_groups(scenario), m,
                           [&](const OutcomeClass& c) { classes.push_back(c); });
    return classes;
}

}  // namespace basketoc
