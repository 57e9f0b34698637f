#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include <duelist/core/codec.hpp>
#include <duelist/core/random.hpp>
#include <duelist/core/types.hpp>
#include <duelist/engine/engine.hpp>
#include <duelist/engine/trace.hpp>

namespace duelist::baselines {

inline constexpr std::uint64_t kIcaOpsStreamTag = 0x6963615f6f707321ULL; // "ica_ops"

/// Imperialist competitive algorithm over real vectors.  Internally
/// minimizes cost = -fitness, the classical formulation.
struct IcaConfig {
    std::size_t country_count = 100;
    std::size_t initial_imperialists = 8;
    std::size_t decades = 200;
    double revolution_rate = 0.3;
    double assimilation_coefficient = 2.0; // beta: pull toward the imperialist
    double assimilation_angle = 0.5;       // gamma: sideways deviation
    double zeta = 0.02;
    double damp_ratio = 0.99;
    std::uint64_t seed = 1;

    void validate() const {
        if (country_count < 2)
            throw core::ConfigError("country_count", "must be at least 2");
        if (initial_imperialists < 1)
            throw core::ConfigError("initial_imperialists", "must be at least 1");
        if (initial_imperialists >= country_count)
            throw core::ConfigError("initial_imperialists", "must be below country_count");
        if (decades < 1)
            throw core::ConfigError("decades", "must be at least 1");
        if (revolution_rate < 0.0 || revolution_rate > 1.0)
            throw core::ConfigError("revolution_rate", "must be in [0, 1]");
        if (assimilation_coefficient < 0.0)
            throw core::ConfigError("assimilation_coefficient", "must be non-negative");
        if (assimilation_angle < 0.0)
            throw core::ConfigError("assimilation_angle", "must be non-negative");
        if (zeta <= 0.0 || zeta >= 1.0)
            throw core::ConfigError("zeta", "must be in (0, 1)");
        if (damp_ratio <= 0.0 || damp_ratio > 1.0)
            throw core::ConfigError("damp_ratio", "must be in (0, 1]");
    }
};

struct Country {
    std::vector<double> position;
    double cost = 0.0;
};

struct Empire {
    Country imperialist;
    std::vector<Country> colonies;
};

/// Called after each decade with the surviving empires.
using DecadeObserver =
    std::function<void(const engine::GenerationRecord&, const std::vector<Empire>&)>;

namespace detail {

/// Promote any colony that has overtaken its imperialist.
inline void swap_better_colonies(std::vector<Empire>& empires) {
    for (auto& empire : empires) {
        if (empire.colonies.empty())
            continue;
        std::size_t best = 0;
        for (std::size_t c = 1; c < empire.colonies.size(); ++c)
            if (empire.colonies[c].cost < empire.colonies[best].cost)
                best = c;
        if (empire.colonies[best].cost < empire.imperialist.cost)
            std::swap(empire.imperialist, empire.colonies[best]);
    }
}

inline double empire_total_cost(const Empire& empire, double zeta) {
    double total = empire.imperialist.cost;
    if (!empire.colonies.empty()) {
        double sum = 0.0;
        for (const auto& c : empire.colonies)
            sum += c.cost;
        total += zeta * sum / static_cast<double>(empire.colonies.size());
    }
    return total;
}

} // namespace detail

inline engine::RunResult run_ica(const IcaConfig& config, const core::Objective& objective,
                                 const core::SearchDomain& domain,
                                 const DecadeObserver& observer = nullptr) {
    config.validate();
    domain.validate();

    core::RandomStream init_rng(core::derive_seed(config.seed, engine::kInitStreamTag));
    core::RandomStream ops_rng(core::derive_seed(config.seed, kIcaOpsStreamTag));
    core::EvalCounter counter;

    const std::size_t n = domain.n_vars();
    auto random_position = [&](core::RandomStream& rng) {
        std::vector<double> p(n);
        for (std::size_t d = 0; d < n; ++d)
            p[d] = domain.lower[d] + rng.next_unit() * (domain.upper[d] - domain.lower[d]);
        return p;
    };

    std::vector<Country> countries(config.country_count);
    for (auto& c : countries) {
        c.position = random_position(init_rng);
        c.cost = -core::evaluate_point(objective, c.position, counter);
    }

    // The strongest countries found the empires; the rest are shared out in
    // proportion to normalized imperialist power.
    std::vector<std::size_t> order(countries.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return countries[a].cost < countries[b].cost;
    });

    std::vector<Empire> empires(config.initial_imperialists);
    for (std::size_t e = 0; e < empires.size(); ++e)
        empires[e].imperialist = countries[order[e]];

    const std::size_t colony_total = config.country_count - config.initial_imperialists;
    double max_imp_cost = empires.front().imperialist.cost;
    for (const auto& e : empires)
        max_imp_cost = std::max(max_imp_cost, e.imperialist.cost);
    std::vector<double> power(empires.size());
    double power_sum = 0.0;
    for (std::size_t e = 0; e < empires.size(); ++e) {
        power[e] = max_imp_cost - empires[e].imperialist.cost;
        power_sum += power[e];
    }
    std::vector<std::size_t> colony_counts(empires.size(), 0);
    if (power_sum > 0.0) {
        std::size_t assigned = 0;
        for (std::size_t e = 0; e < empires.size(); ++e) {
            colony_counts[e] =
                static_cast<std::size_t>(power[e] / power_sum * static_cast<double>(colony_total));
            assigned += colony_counts[e];
        }
        for (std::size_t e = 0; assigned < colony_total; e = (e + 1) % empires.size()) {
            ++colony_counts[e];
            ++assigned;
        }
    } else {
        for (std::size_t i = 0; i < colony_total; ++i)
            ++colony_counts[i % empires.size()];
    }

    std::vector<std::size_t> deal = core::shuffled_indices(colony_total, ops_rng);
    std::size_t cursor = 0;
    for (std::size_t e = 0; e < empires.size(); ++e)
        for (std::size_t k = 0; k < colony_counts[e]; ++k)
            empires[e].colonies.push_back(
                countries[order[config.initial_imperialists + deal[cursor++]]]);

    engine::RunResult result;
    result.trace.reserve(config.decades);
    double revolution_rate = config.revolution_rate;

    for (std::size_t decade = 1; decade <= config.decades; ++decade) {
        // Assimilation: each colony steps toward its imperialist by a random
        // fraction of beta per dimension, with a symmetric sideways wobble of
        // up to gamma of the same gap.
        for (auto& empire : empires) {
            for (auto& colony : empire.colonies) {
                for (std::size_t d = 0; d < n; ++d) {
                    const double gap = empire.imperialist.position[d] - colony.position[d];
                    const double u = ops_rng.next_unit();
                    const double w = ops_rng.next_unit();
                    colony.position[d] += u * config.assimilation_coefficient * gap +
                                          (2.0 * w - 1.0) * config.assimilation_angle * gap;
                    colony.position[d] =
                        std::clamp(colony.position[d], domain.lower[d], domain.upper[d]);
                }
            }
        }

        // Revolution: some colonies abandon their heritage entirely.
        for (auto& empire : empires)
            for (auto& colony : empire.colonies)
                if (ops_rng.next_bernoulli(revolution_rate))
                    colony.position = random_position(ops_rng);

        for (auto& empire : empires)
            for (auto& colony : empire.colonies)
                colony.cost = -core::evaluate_point(objective, colony.position, counter);

        detail::swap_better_colonies(empires);

        // Imperialist competition: the weakest empire loses its weakest
        // colony to a power-weighted rival; empires with nothing left fall.
        if (empires.size() > 1) {
            std::vector<double> totals(empires.size());
            for (std::size_t e = 0; e < empires.size(); ++e)
                totals[e] = detail::empire_total_cost(empires[e], config.zeta);
            std::size_t weakest = 0;
            for (std::size_t e = 1; e < empires.size(); ++e)
                if (totals[e] > totals[weakest])
                    weakest = e;

            double weight_sum = 0.0;
            std::vector<double> weights(empires.size(), 0.0);
            for (std::size_t e = 0; e < empires.size(); ++e) {
                if (e == weakest)
                    continue;
                weights[e] = totals[weakest] - totals[e];
                weight_sum += weights[e];
            }
            std::size_t winner = weakest == 0 ? 1 : 0;
            if (weight_sum > 0.0) {
                double r = ops_rng.next_unit() * weight_sum;
                for (std::size_t e = 0; e < empires.size(); ++e) {
                    if (e == weakest)
                        continue;
                    if (r < weights[e]) {
                        winner = e;
                        break;
                    }
                    r -= weights[e];
                }
            } else {
                std::size_t pick =
                    static_cast<std::size_t>(ops_rng.next_below(empires.size() - 1));
                winner = pick < weakest ? pick : pick + 1;
            }

            Empire& losing = empires[weakest];
            if (!losing.colonies.empty()) {
                std::size_t worst = 0;
                for (std::size_t c = 1; c < losing.colonies.size(); ++c)
                    if (losing.colonies[c].cost > losing.colonies[worst].cost)
                        worst = c;
                empires[winner].colonies.push_back(std::move(losing.colonies[worst]));
                losing.colonies.erase(losing.colonies.begin() +
                                      static_cast<std::ptrdiff_t>(worst));
            }
            if (losing.colonies.empty()) {
                empires[winner].colonies.push_back(std::move(losing.imperialist));
                empires.erase(empires.begin() + static_cast<std::ptrdiff_t>(weakest));
            }
        }

        revolution_rate *= config.damp_ratio;

        // A freshly reassigned colony (or a fallen imperialist) can outclass
        // its new ruler; promoting it keeps the best imperialist monotone.
        detail::swap_better_colonies(empires);

        std::size_t best = 0;
        for (std::size_t e = 1; e < empires.size(); ++e)
            if (empires[e].imperialist.cost < empires[best].imperialist.cost)
                best = e;

        engine::GenerationRecord record;
        record.generation = decade;
        record.best_fitness = -empires[best].imperialist.cost;
        double sum = 0.0;
        std::size_t count = 0;
        for (const auto& empire : empires) {
            sum += -empire.imperialist.cost;
            ++count;
            for (const auto& colony : empire.colonies) {
                sum += -colony.cost;
                ++count;
            }
        }
        record.mean_fitness = sum / static_cast<double>(count);
        record.best_point = empires[best].imperialist.position;
        record.evaluations = counter.count;
        result.trace.push_back(record);

        if (observer)
            observer(result.trace.back(), empires);
    }

    std::size_t best = 0;
    for (std::size_t e = 1; e < empires.size(); ++e)
        if (empires[e].imperialist.cost < empires[best].imperialist.cost)
            best = e;
    result.best_fitness = -empires[best].imperialist.cost;
    result.best_point = empires[best].imperialist.position;
    result.generations_to_best = engine::generations_to_best(result.trace);
    return result;
}

} // namespace duelist::baselines
