#pragma once

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include <duelist/core/types.hpp>

namespace duelist::benchmarks {

struct OracleResult {
    double best_value = 0.0;
    std::vector<double> best_point;
};

/// Brute-force maximizer used to verify claimed optima: evaluate a uniform
/// resolution^n grid over the closed box, then polish the best cell with a
/// fixed budget of 1000 coordinate-wise bisection steps.  The returned value
/// can only improve on the raw grid maximum.  Refuses more than 3 variables;
/// exhaustive grids are only sensible at desk scale.
inline OracleResult grid_oracle(const core::Objective& objective,
                                const core::SearchDomain& domain,
                                std::size_t resolution) {
    domain.validate();
    const std::size_t n = domain.n_vars();
    if (resolution < 2)
        throw core::ConfigError("oracle.resolution", "must be at least 2");
    if (n > 3)
        throw core::ConfigError("oracle.domain",
                                "grid oracle supports at most 3 variables, got " +
                                    std::to_string(n));

    std::vector<double> step(n);
    for (std::size_t d = 0; d < n; ++d)
        step[d] = (domain.upper[d] - domain.lower[d]) / static_cast<double>(resolution - 1);

    // Exhaustive sweep via an odometer over grid indices.
    std::vector<std::size_t> index(n, 0);
    std::vector<double> point(n);
    OracleResult best;
    best.best_value = -std::numeric_limits<double>::infinity();
    for (;;) {
        for (std::size_t d = 0; d < n; ++d) {
            point[d] = (index[d] + 1 == resolution)
                           ? domain.upper[d]
                           : domain.lower[d] + static_cast<double>(index[d]) * step[d];
        }
        const double value = objective(point);
        if (value > best.best_value ||
            (value == best.best_value && point < best.best_point)) {
            best.best_value = value;
            best.best_point = point;
        }
        std::size_t d = 0;
        while (d < n && ++index[d] == resolution) {
            index[d] = 0;
            ++d;
        }
        if (d == n)
            break;
    }

    // Polish: try +/- h along each coordinate in turn, halving h whenever a
    // full pass yields no improvement.  Always stays inside the box.
    std::vector<double> h = step;
    std::vector<double> current = best.best_point;
    double current_value = best.best_value;
    for (std::size_t iter = 0; iter < 1000; ++iter) {
        bool improved = false;
        for (std::size_t d = 0; d < n; ++d) {
            for (const double direction : {+1.0, -1.0}) {
                std::vector<double> trial = current;
                trial[d] = std::clamp(trial[d] + direction * h[d], domain.lower[d],
                                      domain.upper[d]);
                const double value = objective(trial);
                if (value > current_value) {
                    current = trial;
                    current_value = value;
                    improved = true;
                }
            }
        }
        if (!improved) {
            for (auto& hd : h)
                hd *= 0.5;
        }
    }
    if (current_value > best.best_value) {
        best.best_value = current_value;
        best.best_point = current;
    }
    return best;
}

} // namespace duelist::benchmarks
