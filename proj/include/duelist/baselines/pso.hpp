#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include <duelist/core/codec.hpp>
#include <duelist/core/random.hpp>
#include <duelist/core/types.hpp>
#include <duelist/engine/engine.hpp>
#include <duelist/engine/trace.hpp>

namespace duelist::baselines {

inline constexpr std::uint64_t kPsoOpsStreamTag = 0x70736f5f6f707321ULL; // "pso_ops"

/// Continuous particle swarm: inertia theta decays linearly from
/// theta_start to theta_end; c1 pulls toward the particle's own best,
/// c2 toward the swarm's best.
struct PsoConfig {
    std::size_t swarm_size = 100;
    std::size_t max_iterations = 200;
    double c1 = 0.4;
    double c2 = 0.6;
    double theta_start = 0.9;
    double theta_end = 0.5;
    double velocity_clamp_fraction = 0.2;
    std::uint64_t seed = 1;

    void validate() const {
        if (swarm_size < 1)
            throw core::ConfigError("swarm_size", "must be at least 1");
        if (max_iterations < 1)
            throw core::ConfigError("max_iterations", "must be at least 1");
        if (c1 < 0.0)
            throw core::ConfigError("c1", "must be non-negative");
        if (c2 < 0.0)
            throw core::ConfigError("c2", "must be non-negative");
        if (!(theta_end > 0.0))
            throw core::ConfigError("theta_end", "must be positive");
        if (theta_start < theta_end)
            throw core::ConfigError("theta_start", "must be at least theta_end");
        if (velocity_clamp_fraction <= 0.0 || velocity_clamp_fraction > 1.0)
            throw core::ConfigError("velocity_clamp_fraction", "must be in (0, 1]");
    }
};

inline engine::RunResult run_pso(const PsoConfig& config, const core::Objective& objective,
                                 const core::SearchDomain& domain) {
    config.validate();
    domain.validate();

    core::RandomStream init_rng(core::derive_seed(config.seed, engine::kInitStreamTag));
    core::RandomStream ops_rng(core::derive_seed(config.seed, kPsoOpsStreamTag));
    core::EvalCounter counter;

    const std::size_t n = domain.n_vars();
    std::vector<double> vmax(n);
    for (std::size_t d = 0; d < n; ++d)
        vmax[d] = config.velocity_clamp_fraction * (domain.upper[d] - domain.lower[d]);

    // Particles start uniformly in the box, at rest.
    std::vector<std::vector<double>> position(config.swarm_size, std::vector<double>(n));
    std::vector<std::vector<double>> velocity(config.swarm_size, std::vector<double>(n, 0.0));
    std::vector<double> fitness(config.swarm_size);
    for (auto& p : position)
        for (std::size_t d = 0; d < n; ++d)
            p[d] = domain.lower[d] + init_rng.next_unit() * (domain.upper[d] - domain.lower[d]);
    for (std::size_t i = 0; i < config.swarm_size; ++i)
        fitness[i] = core::evaluate_point(objective, position[i], counter);

    std::vector<std::vector<double>> pbest = position;
    std::vector<double> pbest_fitness = fitness;
    std::size_t gbest = 0;
    for (std::size_t i = 1; i < config.swarm_size; ++i)
        if (pbest_fitness[i] > pbest_fitness[gbest])
            gbest = i;
    std::vector<double> gbest_point = pbest[gbest];
    double gbest_fitness = pbest_fitness[gbest];

    engine::RunResult result;
    result.trace.reserve(config.max_iterations);

    for (std::size_t iter = 1; iter <= config.max_iterations; ++iter) {
        const double progress =
            config.max_iterations > 1
                ? static_cast<double>(iter - 1) / static_cast<double>(config.max_iterations - 1)
                : 0.0;
        const double theta =
            config.theta_start + progress * (config.theta_end - config.theta_start);

        // Synchronous update: everyone moves against the same gbest.
        for (std::size_t i = 0; i < config.swarm_size; ++i) {
            for (std::size_t d = 0; d < n; ++d) {
                const double r1 = ops_rng.next_unit();
                const double r2 = ops_rng.next_unit();
                double v = theta * velocity[i][d] +
                           config.c1 * r1 * (pbest[i][d] - position[i][d]) +
                           config.c2 * r2 * (gbest_point[d] - position[i][d]);
                v = std::clamp(v, -vmax[d], vmax[d]);
                velocity[i][d] = v;
                position[i][d] =
                    std::clamp(position[i][d] + v, domain.lower[d], domain.upper[d]);
            }
            fitness[i] = core::evaluate_point(objective, position[i], counter);
        }
        for (std::size_t i = 0; i < config.swarm_size; ++i) {
            if (fitness[i] > pbest_fitness[i]) {
                pbest_fitness[i] = fitness[i];
                pbest[i] = position[i];
            }
        }
        for (std::size_t i = 0; i < config.swarm_size; ++i) {
            if (pbest_fitness[i] > gbest_fitness) {
                gbest_fitness = pbest_fitness[i];
                gbest_point = pbest[i];
            }
        }

        engine::GenerationRecord record;
        record.generation = iter;
        record.best_fitness = gbest_fitness;
        double sum = 0.0;
        for (double f : fitness)
            sum += f;
        record.mean_fitness = sum / static_cast<double>(config.swarm_size);
        record.best_point = gbest_point;
        record.evaluations = counter.count;
        result.trace.push_back(std::move(record));
    }

    result.best_fitness = gbest_fitness;
    result.best_point = gbest_point;
    result.generations_to_best = engine::generations_to_best(result.trace);
    return result;
}

} // namespace duelist::baselines
